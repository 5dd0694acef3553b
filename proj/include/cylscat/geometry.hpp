#pragma once

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace cylscat {

using Point = Eigen::Vector2d;

/// A smooth 2 pi-periodic parametrization t -> x(t) with analytic derivatives.
class CurveShape {
public:
    virtual ~CurveShape() = default;
    virtual Point position(double t) const = 0;
    virtual Point first_derivative(double t) const = 0;
    virtual Point second_derivative(double t) const = 0;
    virtual std::string name() const = 0;
};

/// Immutable handle to a closed boundary curve. Cheap to copy.
class BoundaryCurve {
public:
    explicit BoundaryCurve(std::shared_ptr<const CurveShape> shape);

    Point position(double t) const { return shape_->position(t); }
    Point first_derivative(double t) const { return shape_->first_derivative(t); }
    Point second_derivative(double t) const { return shape_->second_derivative(t); }
    std::string name() const { return shape_->name(); }

    double jacobian(double t) const { return first_derivative(t).norm(); }
    /// Unit normal (x2', -x1') / |x'|; outward for counter-clockwise curves.
    Point normal(double t) const;
    /// Unit tangent x' / |x'|.
    Point tangent(double t) const;

    /// Enclosed signed area, positive for counter-clockwise orientation.
    double signed_area(int samples = 4096) const;

private:
    std::shared_ptr<const CurveShape> shape_;
};

BoundaryCurve make_circle(double radius, const Point& center = Point::Zero());
/// sqrt(0.1 cos^2 t + 0.02 sin^2 t) (cos t, sin t)
BoundaryCurve make_peanut();
/// (0.15 cos t + 0.1 cos 2t - 0.2, 0.15 sin t + 0.15)
BoundaryCurve make_kite();
/// (0.45 + 0.3 cos t - 0.1 sin 2t) / (1 + 0.7 cos t) (cos t, sin t)
BoundaryCurve make_apple();

/// Truncated Fourier series x_1(t) = sum_m x_cos[m] cos(mt) + x_sin[m] sin(mt),
/// and likewise for x_2. Index 0 of each vector is the m = 0 term (the sin
/// entry is ignored there).
struct FourierCoefficients {
    std::vector<double> x_cos;
    std::vector<double> x_sin;
    std::vector<double> y_cos;
    std::vector<double> y_sin;
};

/// Throws GeometryError for empty coefficients, a degenerate curve
/// (|x'| ~ 0 at one of 4096 samples), a clockwise orientation, or a
/// self-intersection detected on the 4096-gon.
BoundaryCurve make_fourier_curve(const FourierCoefficients& coeffs);

enum class Boundary { Outer = 0, Inner = 1 };

/// The 2n equispaced nodes t_j = j pi / n on a curve with cached geometry.
class CollocationGrid {
public:
    CollocationGrid(const BoundaryCurve& curve, int n, Boundary which);

    int n() const { return n_; }
    int size() const { return 2 * n_; }
    Boundary which() const { return which_; }
    const BoundaryCurve& curve() const { return curve_; }

    double t(int j) const { return t_[j]; }
    const Eigen::VectorXd& nodes() const { return t_; }
    /// Columns are x(t_j), x'(t_j), x''(t_j), n(t_j), tau(t_j).
    const Eigen::Matrix2Xd& position() const { return pos_; }
    const Eigen::Matrix2Xd& first_derivative() const { return d1_; }
    const Eigen::Matrix2Xd& second_derivative() const { return d2_; }
    const Eigen::Matrix2Xd& normal() const { return normal_; }
    const Eigen::Matrix2Xd& tangent() const { return tangent_; }
    const Eigen::VectorXd& jacobian() const { return jac_; }

private:
    BoundaryCurve curve_;
    int n_;
    Boundary which_;
    Eigen::VectorXd t_;
    Eigen::Matrix2Xd pos_, d1_, d2_, normal_, tangent_;
    Eigen::VectorXd jac_;
};

enum class Region { Exterior, Layer, Core, NearBoundary };

/// Omega0 / Omega1 / Omega2 / NearBoundary, as written to CSV files.
std::string region_name(Region r);

/// Winding number of the closed polygon `vertices` (columns) around p.
int winding_number(const Point& p, const Eigen::Matrix2Xd& vertices);

/// Distance from p to the closed polygon `vertices`.
double polygon_distance(const Point& p, const Eigen::Matrix2Xd& vertices);

/// The nested pair of interfaces: Gamma_0 (outer) encloses Gamma_1 (inner).
/// Region queries use fine polygonal approximations of both curves.
class Scatterer {
public:
    /// Throws GeometryError unless `inner` lies strictly inside `outer`.
    Scatterer(BoundaryCurve outer, BoundaryCurve inner);

    const BoundaryCurve& outer() const { return outer_; }
    const BoundaryCurve& inner() const { return inner_; }
    const BoundaryCurve& curve(Boundary b) const { return b == Boundary::Outer ? outer_ : inner_; }

    /// Region of p; points closer than `near_distance` to either curve are
    /// reported as NearBoundary.
    Region classify(const Point& p, double near_distance = 0.0) const;

    /// Distance from p to the nearer of the two curves.
    double boundary_distance(const Point& p) const;

    /// One arclength grid spacing, 2 pi max|x'| / (2n), over both curves.
    double default_near_distance(int n) const;

private:
    BoundaryCurve outer_, inner_;
    Eigen::Matrix2Xd outer_poly_, inner_poly_;
    double max_speed_ = 0.0;
};

/// Free-function form of Scatterer::classify. Throws GeometryError if the
/// curves are not nested.
Region classify_point(const Point& p, const BoundaryCurve& gamma0, const BoundaryCurve& gamma1,
                      double near_distance = 0.0);

}  // namespace cylscat
