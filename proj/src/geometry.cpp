#include "cylscat/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cylscat/error.hpp"

namespace cylscat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kPolygonSamples = 2048;

// Curves of the form r(t) (cos t, sin t).
class PolarCurve : public CurveShape {
public:
    struct Radius {
        double r, dr, ddr;
    };

    Point position(double t) const override {
        const Radius r = radius(t);
        return r.r * Point(std::cos(t), std::sin(t));
    }
    Point first_derivative(double t) const override {
        const Radius r = radius(t);
        const double c = std::cos(t), s = std::sin(t);
        return Point(r.dr * c - r.r * s, r.dr * s + r.r * c);
    }
    Point second_derivative(double t) const override {
        const Radius r = radius(t);
        const double c = std::cos(t), s = std::sin(t);
        return Point(r.ddr * c - 2.0 * r.dr * s - r.r * c, r.ddr * s + 2.0 * r.dr * c - r.r * s);
    }

protected:
    virtual Radius radius(double t) const = 0;
};

class Circle final : public CurveShape {
public:
    Circle(double radius, Point center) : radius_(radius), center_(std::move(center)) {}
    Point position(double t) const override {
        return center_ + radius_ * Point(std::cos(t), std::sin(t));
    }
    Point first_derivative(double t) const override {
        return radius_ * Point(-std::sin(t), std::cos(t));
    }
    Point second_derivative(double t) const override {
        return -radius_ * Point(std::cos(t), std::sin(t));
    }
    std::string name() const override { return "circle"; }

private:
    double radius_;
    Point center_;
};

class Peanut final : public PolarCurve {
public:
    std::string name() const override { return "peanut"; }

protected:
    // r^2 = g = 0.1 cos^2 t + 0.02 sin^2 t = 0.06 + 0.04 cos 2t
    Radius radius(double t) const override {
        const double g = 0.06 + 0.04 * std::cos(2.0 * t);
        const double dg = -0.08 * std::sin(2.0 * t);
        const double ddg = -0.16 * std::cos(2.0 * t);
        const double r = std::sqrt(g);
        const double dr = dg / (2.0 * r);
        return {r, dr, (0.5 * ddg - dr * dr) / r};
    }
};

class Apple final : public PolarCurve {
public:
    std::string name() const override { return "apple"; }

protected:
    Radius radius(double t) const override {
        const double c = std::cos(t), s = std::sin(t);
        const double num = 0.45 + 0.3 * c - 0.1 * std::sin(2.0 * t);
        const double dnum = -0.3 * s - 0.2 * std::cos(2.0 * t);
        const double ddnum = -0.3 * c + 0.4 * std::sin(2.0 * t);
        const double den = 1.0 + 0.7 * c;
        const double dden = -0.7 * s;
        const double ddden = -0.7 * c;
        const double r = num / den;
        const double dr = (dnum - r * dden) / den;
        const double ddr = (ddnum - 2.0 * dr * dden - r * ddden) / den;
        return {r, dr, ddr};
    }
};

class Kite final : public CurveShape {
public:
    Point position(double t) const override {
        return Point(0.15 * std::cos(t) + 0.1 * std::cos(2.0 * t) - 0.2, 0.15 * std::sin(t) + 0.15);
    }
    Point first_derivative(double t) const override {
        return Point(-0.15 * std::sin(t) - 0.2 * std::sin(2.0 * t), 0.15 * std::cos(t));
    }
    Point second_derivative(double t) const override {
        return Point(-0.15 * std::cos(t) - 0.4 * std::cos(2.0 * t), -0.15 * std::sin(t));
    }
    std::string name() const override { return "kite"; }
};

class FourierCurve final : public CurveShape {
public:
    explicit FourierCurve(FourierCoefficients c) : c_(std::move(c)) {}

    Point position(double t) const override { return eval(t, 0); }
    Point first_derivative(double t) const override { return eval(t, 1); }
    Point second_derivative(double t) const override { return eval(t, 2); }
    std::string name() const override { return "fourier"; }

private:
    static double series(const std::vector<double>& cos_c, const std::vector<double>& sin_c,
                         double t, int order) {
        double sum = 0.0;
        const std::size_t terms = std::max(cos_c.size(), sin_c.size());
        for (std::size_t m = 0; m < terms; ++m) {
            const double a = m < cos_c.size() ? cos_c[m] : 0.0;
            const double b = (m > 0 && m < sin_c.size()) ? sin_c[m] : 0.0;
            const double mt = static_cast<double>(m) * t;
            const double fm = static_cast<double>(m);
            const double c = std::cos(mt), s = std::sin(mt);
            switch (order) {
                case 0: sum += a * c + b * s; break;
                case 1: sum += fm * (-a * s + b * c); break;
                default: sum += -fm * fm * (a * c + b * s); break;
            }
        }
        return sum;
    }

    Point eval(double t, int order) const {
        return Point(series(c_.x_cos, c_.x_sin, t, order), series(c_.y_cos, c_.y_sin, t, order));
    }

    FourierCoefficients c_;
};

Eigen::Matrix2Xd sample_polygon(const BoundaryCurve& curve, int samples) {
    Eigen::Matrix2Xd poly(2, samples);
    for (int j = 0; j < samples; ++j) poly.col(j) = curve.position(kTwoPi * j / samples);
    return poly;
}

double cross(const Point& a, const Point& b) { return a.x() * b.y() - a.y() * b.x(); }

bool segments_intersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
    const double d1 = cross(q2 - q1, p1 - q1);
    const double d2 = cross(q2 - q1, p2 - q1);
    const double d3 = cross(p2 - p1, q1 - p1);
    const double d4 = cross(p2 - p1, q2 - p1);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 &&
           d4 != 0;
}

double segment_distance(const Point& p, const Point& a, const Point& b) {
    const Point ab = b - a;
    const double len2 = ab.squaredNorm();
    double s = len2 > 0.0 ? (p - a).dot(ab) / len2 : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    return (a + s * ab - p).norm();
}

}  // namespace

BoundaryCurve::BoundaryCurve(std::shared_ptr<const CurveShape> shape) : shape_(std::move(shape)) {
    if (!shape_) throw GeometryError("null curve shape");
}

Point BoundaryCurve::normal(double t) const {
    const Point d = first_derivative(t);
    return Point(d.y(), -d.x()) / d.norm();
}

Point BoundaryCurve::tangent(double t) const {
    const Point d = first_derivative(t);
    return d / d.norm();
}

double BoundaryCurve::signed_area(int samples) const {
    // Trapezoid rule, spectrally accurate for smooth periodic curves.
    double sum = 0.0;
    for (int j = 0; j < samples; ++j) {
        const double t = kTwoPi * j / samples;
        sum += cross(position(t), first_derivative(t));
    }
    return 0.5 * sum * kTwoPi / samples;
}

BoundaryCurve make_circle(double radius, const Point& center) {
    if (!(radius > 0.0)) throw GeometryError("circle radius must be positive");
    return BoundaryCurve(std::make_shared<Circle>(radius, center));
}

BoundaryCurve make_peanut() { return BoundaryCurve(std::make_shared<Peanut>()); }
BoundaryCurve make_kite() { return BoundaryCurve(std::make_shared<Kite>()); }
BoundaryCurve make_apple() { return BoundaryCurve(std::make_shared<Apple>()); }

BoundaryCurve make_fourier_curve(const FourierCoefficients& coeffs) {
    if (coeffs.x_cos.empty() && coeffs.x_sin.empty() && coeffs.y_cos.empty() &&
        coeffs.y_sin.empty()) {
        throw GeometryError("fourier curve: no coefficients");
    }
    BoundaryCurve curve(std::make_shared<FourierCurve>(coeffs));

    constexpr int samples = 4096;
    Eigen::Matrix2Xd poly(2, samples);
    double max_speed = 0.0, min_speed = std::numeric_limits<double>::infinity();
    for (int j = 0; j < samples; ++j) {
        const double t = kTwoPi * j / samples;
        poly.col(j) = curve.position(t);
        const double speed = curve.jacobian(t);
        max_speed = std::max(max_speed, speed);
        min_speed = std::min(min_speed, speed);
    }
    if (!(max_speed > 0.0) || min_speed <= 1e-10 * max_speed) {
        throw GeometryError("fourier curve: degenerate parametrization (|x'| ~ 0)");
    }
    if (curve.signed_area() <= 0.0) {
        throw GeometryError("fourier curve: orientation must be counter-clockwise");
    }
    for (int a = 0; a < samples; ++a) {
        const Point p1 = poly.col(a), p2 = poly.col((a + 1) % samples);
        for (int b = a + 2; b < samples; ++b) {
            if (a == 0 && b == samples - 1) continue;
            if (segments_intersect(p1, p2, poly.col(b), poly.col((b + 1) % samples))) {
                throw GeometryError("fourier curve: self-intersection");
            }
        }
    }
    return curve;
}

CollocationGrid::CollocationGrid(const BoundaryCurve& curve, int n, Boundary which)
    : curve_(curve), n_(n), which_(which) {
    if (n < 1) throw GeometryError("collocation grid needs n >= 1");
    const int size = 2 * n;
    t_.resize(size);
    pos_.resize(2, size);
    d1_.resize(2, size);
    d2_.resize(2, size);
    normal_.resize(2, size);
    tangent_.resize(2, size);
    jac_.resize(size);
    for (int j = 0; j < size; ++j) {
        const double t = j * std::numbers::pi / n;
        t_[j] = t;
        pos_.col(j) = curve.position(t);
        d1_.col(j) = curve.first_derivative(t);
        d2_.col(j) = curve.second_derivative(t);
        jac_[j] = d1_.col(j).norm();
        if (!(jac_[j] > 0.0)) throw GeometryError("curve is not regular at a collocation node");
        tangent_.col(j) = d1_.col(j) / jac_[j];
        normal_.col(j) = Point(tangent_(1, j), -tangent_(0, j));
    }
}

std::string region_name(Region r) {
    switch (r) {
        case Region::Exterior: return "Omega0";
        case Region::Layer: return "Omega1";
        case Region::Core: return "Omega2";
        case Region::NearBoundary: return "NearBoundary";
    }
    return "unknown";
}

int winding_number(const Point& p, const Eigen::Matrix2Xd& vertices) {
    auto is_left = [&p](const Point& a, const Point& b) { return cross(b - a, p - a); };
    int wn = 0;
    const Eigen::Index count = vertices.cols();
    for (Eigen::Index i = 0; i < count; ++i) {
        const Point a = vertices.col(i);
        const Point b = vertices.col((i + 1) % count);
        if (a.y() <= p.y()) {
            if (b.y() > p.y() && is_left(a, b) > 0.0) ++wn;
        } else if (b.y() <= p.y() && is_left(a, b) < 0.0) {
            --wn;
        }
    }
    return wn;
}

double polygon_distance(const Point& p, const Eigen::Matrix2Xd& vertices) {
    double best = std::numeric_limits<double>::infinity();
    const Eigen::Index count = vertices.cols();
    for (Eigen::Index i = 0; i < count; ++i) {
        best = std::min(best, segment_distance(p, vertices.col(i), vertices.col((i + 1) % count)));
    }
    return best;
}

Scatterer::Scatterer(BoundaryCurve outer, BoundaryCurve inner)
    : outer_(std::move(outer)),
      inner_(std::move(inner)),
      outer_poly_(sample_polygon(outer_, kPolygonSamples)),
      inner_poly_(sample_polygon(inner_, kPolygonSamples)) {
    if (outer_.signed_area() <= 0.0 || inner_.signed_area() <= 0.0) {
        throw GeometryError("boundary curves must be counter-clockwise");
    }
    for (Eigen::Index j = 0; j < inner_poly_.cols(); ++j) {
        const Point p = inner_poly_.col(j);
        if (winding_number(p, outer_poly_) == 0) {
            throw GeometryError("inner curve is not nested inside the outer curve");
        }
    }
    for (Eigen::Index j = 0; j < inner_poly_.cols(); j += 8) {
        if (polygon_distance(inner_poly_.col(j), outer_poly_) <= 0.0) {
            throw GeometryError("inner and outer curves touch");
        }
    }
    for (int j = 0; j < kPolygonSamples; ++j) {
        const double t = kTwoPi * j / kPolygonSamples;
        max_speed_ = std::max({max_speed_, outer_.jacobian(t), inner_.jacobian(t)});
    }
}

double Scatterer::boundary_distance(const Point& p) const {
    return std::min(polygon_distance(p, outer_poly_), polygon_distance(p, inner_poly_));
}

Region Scatterer::classify(const Point& p, double near_distance) const {
    if (near_distance > 0.0 && boundary_distance(p) < near_distance) return Region::NearBoundary;
    if (winding_number(p, outer_poly_) == 0) return Region::Exterior;
    if (winding_number(p, inner_poly_) == 0) return Region::Layer;
    return Region::Core;
}

double Scatterer::default_near_distance(int n) const { return kTwoPi * max_speed_ / (2.0 * n); }

Region classify_point(const Point& p, const BoundaryCurve& gamma0, const BoundaryCurve& gamma1,
                      double near_distance) {
    return Scatterer(gamma0, gamma1).classify(p, near_distance);
}

}  // namespace cylscat
