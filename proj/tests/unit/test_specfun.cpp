#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bessel_oracle.hpp"
#include "cylscat/error.hpp"
#include "cylscat/specfun.hpp"

using namespace cylscat;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("values at 0 and 1") {
    CHECK(bessel_j0(0.0) == 1.0);
    CHECK(bessel_j1(0.0) == 0.0);
    CHECK(bessel_j0(1.0) == doctest::Approx(0.7651976866).epsilon(1e-10));
    CHECK(bessel_y0(1.0) == doctest::Approx(0.0882569642).epsilon(1e-9));
    CHECK(bessel_j1(1.0) == doctest::Approx(0.4400505857).epsilon(1e-10));
    CHECK(bessel_y1(1.0) == doctest::Approx(-0.7812128213).epsilon(1e-10));
    const HankelValue h = hankel1_0(1.0);
    CHECK(h.real() == doctest::Approx(0.7651976866).epsilon(1e-10));
    CHECK(h.imag() == doctest::Approx(0.0882569642).epsilon(1e-9));
}

TEST_CASE("agreement with the high-precision series oracle up to x = 8") {
    for (int i = 1; i <= 400; ++i) {
        const double x = 0.02 * i;
        const oracle::Values o = oracle::bessel(x);
        const BesselSet b = bessel_all(x);
        // Skip the immediate neighbourhood of zeros where relative error is ill-posed.
        if (std::abs(o.j0) > 1e-3) CHECK(rel(b.j0, o.j0) <= 1e-13);
        if (std::abs(o.j1) > 1e-3) CHECK(rel(b.j1, o.j1) <= 1e-13);
        if (std::abs(o.y0) > 1e-3) CHECK(rel(b.y0, o.y0) <= 1e-13);
        if (std::abs(o.y1) > 1e-3) CHECK(rel(b.y1, o.y1) <= 1e-13);
        CHECK(bessel_j0(x) == b.j0);
        CHECK(bessel_y1(x) == b.y1);
    }
}

TEST_CASE("agreement with the oracle beyond the switchover") {
    for (double x : {8.5, 10.0, 13.7, 20.0, 35.0, 50.0}) {
        const oracle::Values o = oracle::bessel(x);
        const BesselSet b = bessel_all(x);
        // Absolute error against the unit-scale envelope sqrt(2/(pi x)).
        const double env = std::sqrt(2.0 / (std::numbers::pi * x));
        CHECK(std::abs(b.j0 - o.j0) / env <= 1e-13);
        CHECK(std::abs(b.j1 - o.j1) / env <= 1e-13);
        CHECK(std::abs(b.y0 - o.y0) / env <= 1e-13);
        CHECK(std::abs(b.y1 - o.y1) / env <= 1e-13);
    }
}

TEST_CASE("Wronskian") {
    for (int i = 0; i <= 1000; ++i) {
        const double x = 1e-2 * std::pow(1e4, i / 1000.0);
        const BesselSet b = bessel_all(x);
        const double w = b.j1 * b.y0 - b.j0 * b.y1;
        CHECK(rel(w, 2.0 / (std::numbers::pi * x)) <= 1e-11);
    }
}

TEST_CASE("J0' = -J1") {
    const double h = 1e-5;
    for (double x : {0.3, 1.0, 2.5, 7.9, 8.1, 15.0}) {
        const double fd = (bessel_j0(x + h) - bessel_j0(x - h)) / (2 * h);
        CHECK(std::abs(fd + bessel_j1(x)) < 1e-8);
    }
}

TEST_CASE("continuity across the switchover") {
    const double lo = std::nextafter(8.0, 0.0), hi = std::nextafter(8.0, 16.0);
    CHECK(std::abs(bessel_j0(lo) - bessel_j0(hi)) <= 1e-12);
    CHECK(std::abs(bessel_j1(lo) - bessel_j1(hi)) <= 1e-12);
    CHECK(std::abs(bessel_y0(lo) - bessel_y0(hi)) <= 1e-12);
    CHECK(std::abs(bessel_y1(lo) - bessel_y1(hi)) <= 1e-12);
    CHECK(std::abs(y0_regular_part(lo) - y0_regular_part(hi)) <= 1e-12);
    CHECK(std::abs(y1_regular_part(lo) - y1_regular_part(hi)) <= 1e-12);
}

TEST_CASE("Hankel function behaviour") {
    CHECK(bessel_y0(1e-8) < -10.0);
    CHECK(std::abs(hankel1_0(50.0)) == doctest::Approx(std::sqrt(2.0 / (std::numbers::pi * 50.0))).epsilon(0.01));
    const HankelValue h1 = hankel1_1(2.0);
    CHECK(h1.real() == bessel_j1(2.0));
    CHECK(h1.imag() == bessel_y1(2.0));
}

TEST_CASE("regular parts") {
    const double gamma = 0.57721566490153286;
    CHECK(y0_regular_part(0.0) == doctest::Approx(2 * gamma / std::numbers::pi).epsilon(1e-15));
    CHECK(y0_regular_part(0.0) == doctest::Approx(0.3674669).epsilon(1e-7));
    CHECK(y1_regular_part(0.0) == 0.0);
    CHECK(y0_regular_part(1.0) ==
          doctest::Approx(0.0882569642 - 2.0 / std::numbers::pi * std::log(0.5) * 0.7651976866).epsilon(1e-9));
    for (int i = 0; i <= 200; ++i) {
        const double x = 1e-3 * std::pow(2e4, i / 200.0);
        const double lg = 2.0 / std::numbers::pi * std::log(x / 2.0);
        CHECK(std::abs(lg * bessel_j0(x) + y0_regular_part(x) - bessel_y0(x)) <= 1e-12);
        CHECK(std::abs(lg * bessel_j1(x) - 2.0 / (std::numbers::pi * x) + y1_regular_part(x) -
                       bessel_y1(x)) <= 1e-12 * std::max(1.0, std::abs(bessel_y1(x))));
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(bessel_y0(0.0), DomainError);
    CHECK_THROWS_AS(bessel_y1(-1.0), DomainError);
    CHECK_THROWS_AS(hankel1_0(0.0), DomainError);
    CHECK_THROWS_AS(hankel1_1(-2.0), DomainError);
    CHECK_THROWS_AS(bessel_j0(-1.0), DomainError);
    CHECK_THROWS_AS(bessel_j1(std::nan("")), DomainError);
}
