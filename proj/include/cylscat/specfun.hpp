#pragma once

#include <complex>

namespace cylscat {

/// H_nu^(1)(x) = J_nu(x) + i Y_nu(x).
using HankelValue = std::complex<double>;

// Bessel functions of real argument. J accepts x >= 0, Y requires x > 0;
// out-of-domain arguments throw DomainError.
double bessel_j0(double x);
double bessel_j1(double x);
double bessel_y0(double x);
double bessel_y1(double x);

HankelValue hankel1_0(double x);
HankelValue hankel1_1(double x);

/// Y0(x) - (2/pi) ln(x/2) J0(x), extended to x = 0 by its limit 2 gamma / pi.
double y0_regular_part(double x);
/// Y1(x) - (2/pi) ln(x/2) J1(x) + 2/(pi x). The 1/x pole is removed so the
/// result is smooth on x >= 0 and vanishes at 0.
double y1_regular_part(double x);

/// All four values at once; cheaper than separate calls inside kernel loops.
struct BesselSet {
    double j0, j1, y0, y1;
};
BesselSet bessel_all(double x);

}  // namespace cylscat
