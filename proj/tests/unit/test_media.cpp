#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cylscat/error.hpp"
#include "cylscat/media.hpp"

using namespace cylscat;

namespace {

MediumConfig layered(double omega, double theta) {
    MediumConfig c;
    c.eps = {1.0, 2.0, 3.0};
    c.mu = {1.0, 2.0, 3.0};
    c.omega = omega;
    c.theta = theta;
    return c;
}

}  // namespace

TEST_CASE("derived wavenumbers for the circle/peanut materials") {
    const DerivedParams p = derive_params(layered(1.0, std::numbers::pi / 3));
    CHECK(p.k[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.k[1] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(p.k[2] == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(p.beta == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p.kappa_sq[0] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(p.kappa_sq[1] == doctest::Approx(3.75).epsilon(1e-15));
    CHECK(p.kappa_sq[2] == doctest::Approx(8.75).epsilon(1e-15));
    CHECK(p.mu_t[1] * p.omega == doctest::Approx(2.0 / 3.75).epsilon(1e-15));
}

TEST_CASE("derived wavenumbers for the apple/kite materials") {
    MediumConfig c;
    c.eps = {1.0, 3.0, 4.0};
    c.mu = {1.0, 2.0, 3.0};
    c.omega = 2.0;
    c.theta = std::numbers::pi / 6;
    const DerivedParams p = derive_params(c);
    CHECK(p.k[0] == doctest::Approx(2.0));
    CHECK(p.beta == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(p.kappa_sq[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p.kappa_sq[1] == doctest::Approx(21.0).epsilon(1e-14));
    CHECK(p.kappa_sq[2] == doctest::Approx(45.0).epsilon(1e-14));
}

TEST_CASE("normal incidence gives beta exactly zero") {
    const DerivedParams p = derive_params(layered(1.7, std::numbers::pi / 2));
    CHECK(p.beta == 0.0);
    for (double b : p.beta_t) CHECK(b == 0.0);
}

TEST_CASE("kappa^2 + beta^2 = k^2") {
    for (double theta : {0.1, 0.7, 1.3, 2.0, 3.0}) {
        const DerivedParams p = derive_params(layered(1.3, theta));
        for (int j = 0; j < 3; ++j) {
            CHECK(std::abs(p.kappa_sq[j] + p.beta * p.beta - p.k[j] * p.k[j]) <=
                  4e-16 * p.k[j] * p.k[j]);
        }
    }
}

TEST_CASE("invalid materials and angles are rejected") {
    MediumConfig c = layered(1.0, 1.0);
    c.mu[2] = c.mu[1];
    CHECK_THROWS_AS(derive_params(c), InvalidMaterialError);
    c = layered(1.0, 1.0);
    c.eps[1] = -1.0;
    CHECK_THROWS_AS(derive_params(c), InvalidMaterialError);
    c = layered(1.0, 0.0);
    CHECK_THROWS_AS(derive_params(c), InvalidMaterialError);
    c = layered(1.0, std::numbers::pi);
    CHECK_THROWS_AS(derive_params(c), InvalidMaterialError);
    c = layered(-1.0, 1.0);
    CHECK_THROWS_AS(derive_params(c), InvalidMaterialError);
    c = layered(1.0, 1.0);
    c.phi = 7.0;
    CHECK_THROWS_AS(derive_params(c), InvalidMaterialError);
}

TEST_CASE("a slower layer than the exterior can stop propagation") {
    MediumConfig c;
    c.eps = {4.0, 1.0, 3.0};
    c.mu = {1.0, 1.0, 2.0};
    c.omega = 1.0;
    c.theta = 0.2;  // beta^2 = 4 cos^2(0.2) > k_1^2 = 1
    CHECK_THROWS_AS(derive_params(c), NonPropagatingError);
}

TEST_CASE("interface symbol determinant") {
    const MediumConfig c = layered(1.0, std::numbers::pi / 3);
    // 1 / (3.75 * 8.75) * (2 - 3) * (2 + 3)
    CHECK(sl_determinant(c, 1.0) == doctest::Approx(-5.0 / 32.8125).epsilon(1e-14));
    CHECK(sl_determinant(c, 1.0) == doctest::Approx(-0.152381).epsilon(1e-6));
    CHECK(sl_determinant(c, 2.0) == doctest::Approx(4.0 * sl_determinant(c, 1.0)).epsilon(1e-14));
    CHECK(sl_determinant(c, -1.0) == doctest::Approx(sl_determinant(c, 1.0)).epsilon(1e-14));

    MediumConfig equal = c;
    equal.mu[2] = equal.mu[1];
    CHECK(sl_determinant(equal, 0.7) == 0.0);

    MediumConfig flipped = c;
    flipped.mu = {1.0, 3.0, 2.0};
    CHECK(sl_determinant(flipped, 0.3) > 0.0);
}

TEST_CASE("plane wave value and gradient") {
    MediumConfig c = layered(1.0, std::numbers::pi / 3);
    c.phi = std::numbers::pi / 6;
    const DerivedParams p = derive_params(c);
    const PlaneWave w(c, p);
    const std::complex<double> at0 = w.value(Eigen::Vector2d::Zero());
    CHECK(at0.real() == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
    CHECK(at0.imag() == doctest::Approx(0.0));

    const Eigen::Vector2d x(0.3, -0.2);
    const Eigen::Vector2cd g = w.gradient(x);
    const double h = 1e-6;
    for (int d = 0; d < 2; ++d) {
        Eigen::Vector2d e = Eigen::Vector2d::Zero();
        e[d] = h;
        const std::complex<double> fd = (w.value(x + e) - w.value(x - e)) / (2 * h);
        CHECK(std::abs(fd - g[d]) < 1e-9);
    }
    const std::complex<double> i(0.0, 1.0);
    const Eigen::Vector2d n(std::cos(0.4), std::sin(0.4));
    const std::complex<double> dn = g[0] * n[0] + g[1] * n[1];
    CHECK(std::abs(dn - i * p.kappa[0] * n.dot(w.direction()) * w.value(x)) < 1e-14);
}
