#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "cylscat/error.hpp"
#include "cylscat/geometry.hpp"

using namespace cylscat;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<BoundaryCurve> catalog() {
    return {make_circle(0.5), make_circle(0.3, Point(0.1, -0.2)), make_peanut(), make_kite(),
            make_apple()};
}

}  // namespace

TEST_CASE("circle") {
    const BoundaryCurve c = make_circle(0.5);
    CHECK((c.position(kPi / 2) - Point(0.0, 0.5)).norm() < 1e-15);
    CHECK(c.signed_area() == doctest::Approx(kPi * 0.25).epsilon(1e-13));
    for (double t : {0.0, 0.3, 2.0, 5.5}) CHECK(c.jacobian(t) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(make_circle(0.0), GeometryError);
    CHECK_THROWS_AS(make_circle(-1.0), GeometryError);
}

TEST_CASE("catalog curve values") {
    CHECK((make_peanut().position(0.0) - Point(std::sqrt(0.1), 0.0)).norm() < 1e-15);
    CHECK((make_peanut().position(kPi / 2) - Point(0.0, std::sqrt(0.02))).norm() < 1e-15);
    CHECK((make_kite().position(0.0) - Point(0.05, 0.15)).norm() < 1e-15);
    CHECK((make_apple().position(kPi) - Point(-0.5, 0.0)).norm() < 1e-14);
    CHECK(make_kite().signed_area() > 0.0);
}

TEST_CASE("analytic derivatives match central differences") {
    const double h = 1e-6;
    for (const BoundaryCurve& c : catalog()) {
        for (int j = 0; j < 64; ++j) {
            const double t = j * kPi / 32;
            const Point fd1 = (c.position(t + h) - c.position(t - h)) / (2 * h);
            const Point fd2 = (c.first_derivative(t + h) - c.first_derivative(t - h)) / (2 * h);
            CHECK((fd1 - c.first_derivative(t)).norm() < 1e-8);
            CHECK((fd2 - c.second_derivative(t)).norm() < 1e-8);
        }
    }
}

TEST_CASE("periodicity, regularity and orientation") {
    for (const BoundaryCurve& c : catalog()) {
        for (double t : {0.0, 0.77, 3.1, 4.9}) {
            CHECK((c.position(t + 2 * kPi) - c.position(t)).norm() < 1e-13);
            CHECK(c.jacobian(t) > 0.0);
        }
        CHECK(c.signed_area() > 0.0);
    }
}

TEST_CASE("collocation grid frames") {
    for (const BoundaryCurve& c : catalog()) {
        const CollocationGrid g(c, 16, Boundary::Outer);
        CHECK(g.size() == 32);
        for (int j = 0; j < g.size(); ++j) {
            CHECK(g.t(j) == doctest::Approx(j * kPi / 16));
            const Point n = g.normal().col(j), tau = g.tangent().col(j);
            CHECK(std::abs(n.dot(tau)) < 1e-14);
            CHECK(std::abs(n.norm() - 1.0) < 1e-14);
            CHECK(std::abs(tau.norm() - 1.0) < 1e-14);
            // tau = (-n2, n1)
            CHECK((tau - Point(-n.y(), n.x())).norm() < 1e-15);
        }
    }
}

TEST_CASE("outward normal on a circle") {
    const CollocationGrid g(make_circle(0.5), 8, Boundary::Outer);
    for (int j = 0; j < g.size(); ++j) {
        CHECK((g.normal().col(j) - g.position().col(j) / 0.5).norm() < 1e-14);
    }
}

TEST_CASE("fourier curves") {
    const FourierCoefficients circle{{0.0, 0.5}, {}, {}, {0.0, 0.5}};
    const BoundaryCurve f = make_fourier_curve(circle);
    const BoundaryCurve c = make_circle(0.5);
    for (double t : {0.0, 1.0, 2.5, 4.0}) {
        CHECK((f.position(t) - c.position(t)).norm() < 1e-15);
        CHECK((f.first_derivative(t) - c.first_derivative(t)).norm() < 1e-15);
        CHECK((f.second_derivative(t) - c.second_derivative(t)).norm() < 1e-15);
    }
    const BoundaryCurve ellipse = make_fourier_curve({{0.0, 0.7}, {}, {}, {0.0, 0.3}});
    CHECK(ellipse.signed_area() == doctest::Approx(kPi * 0.7 * 0.3).epsilon(1e-13));

    CHECK_THROWS_AS(make_fourier_curve({}), GeometryError);
    CHECK_THROWS_AS(make_fourier_curve({{1.0}, {}, {2.0}, {}}), GeometryError);  // a point
    CHECK_THROWS_AS(make_fourier_curve({{0.0, 0.5}, {}, {}, {0.0, -0.5}}), GeometryError);  // clockwise
    // Figure eight (cos t, sin 2t) crosses itself at the origin.
    CHECK_THROWS_AS(make_fourier_curve({{0.0, 1.0}, {}, {}, {0.0, 0.0, 0.5}}), GeometryError);
}

TEST_CASE("region classification for the circle/peanut pair") {
    const Scatterer s(make_circle(0.5), make_peanut());
    CHECK(s.classify(Point(0.0, -0.3)) == Region::Layer);
    CHECK(s.classify(Point(0.2, 0.0)) == Region::Core);
    CHECK(s.classify(Point(0.2, 0.7)) == Region::Exterior);
    CHECK(classify_point(Point(0.0, -0.3), make_circle(0.5), make_peanut()) == Region::Layer);
    CHECK(s.classify(Point(0.5, 0.001), 0.01) == Region::NearBoundary);
    CHECK(s.classify(Point(0.0, std::sqrt(0.02) - 0.001), 0.01) == Region::NearBoundary);
    CHECK(region_name(Region::Exterior) == "Omega0");
    CHECK(region_name(Region::Layer) == "Omega1");
    CHECK(region_name(Region::Core) == "Omega2");
    CHECK(region_name(Region::NearBoundary) == "NearBoundary");
    CHECK(s.default_near_distance(64) == doctest::Approx(2 * kPi * 0.5 / 128).epsilon(1e-3));
}

TEST_CASE("ray midpoints between the curves lie in the layer") {
    const std::vector<std::pair<BoundaryCurve, BoundaryCurve>> pairs = {
        {make_circle(0.5), make_peanut()}, {make_apple(), make_kite()}};
    for (const auto& [outer, inner] : pairs) {
        const Scatterer s(outer, inner);
        // Centre of the inner polygon, then march outward along rays.
        Point centre = Point::Zero();
        for (int j = 0; j < 256; ++j) centre += inner.position(2 * kPi * j / 256) / 256.0;
        for (int m = 0; m < 32; ++m) {
            const Point dir(std::cos(2 * kPi * m / 32), std::sin(2 * kPi * m / 32));
            // First radius at which pred stops holding, to 1e-6.
            auto boundary = [&](auto pred) {
                double lo = 0.0, hi = 0.0;
                while (pred(s.classify(centre + hi * dir))) hi += 0.01;
                lo = hi - 0.01;
                while (hi - lo > 1e-6) {
                    const double mid = 0.5 * (lo + hi);
                    (pred(s.classify(centre + mid * dir)) ? lo : hi) = mid;
                }
                return hi;
            };
            const double r_in = boundary([](Region r) { return r == Region::Core; });
            const double r_out = boundary([](Region r) { return r != Region::Exterior; });
            CHECK(s.classify(centre + 0.5 * (r_in + r_out) * dir) == Region::Layer);
        }
    }
}

TEST_CASE("nesting is enforced") {
    CHECK_THROWS_AS(Scatterer(make_peanut(), make_circle(0.5)), GeometryError);
    CHECK_THROWS_AS(Scatterer(make_circle(0.2, Point(2.0, 0.0)), make_peanut()), GeometryError);
    CHECK_THROWS_AS(classify_point(Point::Zero(), make_circle(0.3), make_circle(0.5)), GeometryError);
}

TEST_CASE("winding number and polygon distance") {
    Eigen::Matrix2Xd square(2, 4);
    square << 0, 1, 1, 0, 0, 0, 1, 1;
    CHECK(winding_number(Point(0.5, 0.5), square) == 1);
    CHECK(winding_number(Point(1.5, 0.5), square) == 0);
    Eigen::Matrix2Xd cw = square.rowwise().reverse();
    CHECK(winding_number(Point(0.5, 0.5), cw) == -1);
    CHECK(polygon_distance(Point(0.5, 0.25), square) == doctest::Approx(0.25));
    CHECK(polygon_distance(Point(2.0, 2.0), square) == doctest::Approx(std::sqrt(2.0)));
}
