#pragma once

// Slow reference Bessel functions: ascending series summed with 100 decimal
// digits. Independent of the double-precision implementation under test.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_100;

struct Values {
    double j0, j1, y0, y1;
};

inline Values bessel(double xd) {
    const Real x = xd;
    const Real h = x / 2;
    const Real q = h * h;
    const Real gamma = boost::math::constants::euler<Real>();
    const Real pi = boost::math::constants::pi<Real>();
    const Real eps = Real(1e-90);

    Real term0 = 1, term1 = h, harm = 0;
    Real j0 = 0, j1 = 0, s0 = 0, s1 = 0;
    for (int k = 0; k < 2000; ++k) {
        const Real harm_next = harm + Real(1) / (k + 1);
        j0 += term0;
        j1 += term1;
        s0 += ((k % 2 == 0) ? -1 : 1) * harm * abs(term0);
        s1 += (harm + harm_next - 2 * gamma) * term1;
        if (k > 5 && abs(term0) < eps && abs(term1) < eps) break;
        term0 *= -q / ((k + 1) * (k + 1));
        term1 *= -q / ((k + 1) * (k + 2));
        harm = harm_next;
    }
    const Real lg = 2 / pi * log(h);
    const Real y0 = lg * j0 + 2 / pi * (gamma * j0 + s0);
    const Real y1 = lg * j1 - 2 / (pi * x) - s1 / pi;
    return {static_cast<double>(j0), static_cast<double>(j1), static_cast<double>(y0),
            static_cast<double>(y1)};
}

}  // namespace oracle
