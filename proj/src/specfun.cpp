#include "cylscat/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cylscat/error.hpp"
#include "specfun_tables.hpp"

namespace cylscat {

namespace {

constexpr double kSwitch = 8.0;
constexpr double kPi = std::numbers::pi;
constexpr long double kGammaL = 0.577215664901532860606512090082402431L;
constexpr long double kPiL = 3.141592653589793238462643383279502884L;

// Ascending series, small argument. Summed in extended precision so that the
// alternating terms (largest ~1e2 at x = 8) cancel without visible loss.
struct SeriesParts {
    long double j0, j1, y0_reg, y1_reg;
};

SeriesParts ascending_series(double x) {
    const long double h = static_cast<long double>(x) / 2.0L;
    const long double q = h * h;
    long double term0 = 1.0L;  // (-1)^k q^k / (k!)^2
    long double term1 = h;     // (-1)^k h^(2k+1) / (k! (k+1)!)
    long double harm = 0.0L;   // H_k
    long double j0 = 0.0L, j1 = 0.0L, s0 = 0.0L, s1 = 0.0L;
    for (int k = 0; k < 60; ++k) {
        const long double harm_next = harm + 1.0L / (k + 1);
        j0 += term0;
        j1 += term1;
        s0 -= harm * term0;
        s1 += (harm + harm_next - 2.0L * kGammaL) * term1;
        if (std::fabs(term0) < 1e-22L * std::fabs(j0) && std::fabs(term1) <= 1e-22L * std::fabs(j1) &&
            k > 2) {
            break;
        }
        term0 *= -q / static_cast<long double>((k + 1) * (k + 1));
        term1 *= -q / static_cast<long double>((k + 1) * (k + 2));
        harm = harm_next;
    }
    SeriesParts out;
    out.j0 = j0;
    out.j1 = j1;
    out.y0_reg = (2.0L / kPiL) * (kGammaL * j0 + s0);
    out.y1_reg = -s1 / kPiL;
    return out;
}

template <std::size_t N>
double chebyshev(const std::array<double, N>& c, double s) {
    // Clenshaw recurrence for sum c_k T_k(s).
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = N; k-- > 1;) {
        const double b0 = 2.0 * s * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return s * b1 - b2 + c[0];
}

struct Asymptotic {
    double j, y;
};

Asymptotic large_argument(int nu, double x) {
    const double u = kSwitch / x;
    const double s = 2.0 * u * u - 1.0;
    const double p = nu == 0 ? chebyshev(detail::kP0Cheb, s) : chebyshev(detail::kP1Cheb, s);
    const double q = u * (nu == 0 ? chebyshev(detail::kQ0Cheb, s) : chebyshev(detail::kQ1Cheb, s));
    const double chi = x - (2 * nu + 1) * kPi / 4.0;
    const double amp = std::sqrt(2.0 / (kPi * x));
    const double c = std::cos(chi), sn = std::sin(chi);
    return {amp * (p * c - q * sn), amp * (p * sn + q * c)};
}

void require_nonnegative(double x, const char* name) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(name) + ": argument must be finite and >= 0");
    }
}

void require_positive(double x, const char* name) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(name) + ": argument must be finite and > 0");
    }
}

double log_half(double x) { return (2.0 / kPi) * std::log(x / 2.0); }

}  // namespace

double bessel_j0(double x) {
    require_nonnegative(x, "bessel_j0");
    if (x <= kSwitch) return static_cast<double>(ascending_series(x).j0);
    return large_argument(0, x).j;
}

double bessel_j1(double x) {
    require_nonnegative(x, "bessel_j1");
    if (x <= kSwitch) return static_cast<double>(ascending_series(x).j1);
    return large_argument(1, x).j;
}

double bessel_y0(double x) {
    require_positive(x, "bessel_y0");
    if (x <= kSwitch) {
        const SeriesParts s = ascending_series(x);
        const long double lg = (2.0L / kPiL) * std::log(static_cast<long double>(x) / 2.0L);
        return static_cast<double>(lg * s.j0 + s.y0_reg);
    }
    return large_argument(0, x).y;
}

double bessel_y1(double x) {
    require_positive(x, "bessel_y1");
    if (x <= kSwitch) {
        const SeriesParts s = ascending_series(x);
        const long double xl = x;
        const long double lg = (2.0L / kPiL) * std::log(xl / 2.0L);
        return static_cast<double>(lg * s.j1 - 2.0L / (kPiL * xl) + s.y1_reg);
    }
    return large_argument(1, x).y;
}

HankelValue hankel1_0(double x) {
    require_positive(x, "hankel1_0");
    const BesselSet b = bessel_all(x);
    return {b.j0, b.y0};
}

HankelValue hankel1_1(double x) {
    require_positive(x, "hankel1_1");
    const BesselSet b = bessel_all(x);
    return {b.j1, b.y1};
}

double y0_regular_part(double x) {
    require_nonnegative(x, "y0_regular_part");
    if (x <= kSwitch) return static_cast<double>(ascending_series(x).y0_reg);
    const Asymptotic a = large_argument(0, x);
    return a.y - log_half(x) * a.j;
}

double y1_regular_part(double x) {
    require_nonnegative(x, "y1_regular_part");
    if (x <= kSwitch) return static_cast<double>(ascending_series(x).y1_reg);
    const Asymptotic a = large_argument(1, x);
    return a.y - log_half(x) * a.j + 2.0 / (kPi * x);
}

BesselSet bessel_all(double x) {
    require_positive(x, "bessel_all");
    if (x <= kSwitch) {
        const SeriesParts s = ascending_series(x);
        const long double xl = x;
        const long double lg = (2.0L / kPiL) * std::log(xl / 2.0L);
        return {static_cast<double>(s.j0), static_cast<double>(s.j1),
                static_cast<double>(lg * s.j0 + s.y0_reg),
                static_cast<double>(lg * s.j1 - 2.0L / (kPiL * xl) + s.y1_reg)};
    }
    const Asymptotic a0 = large_argument(0, x);
    const Asymptotic a1 = large_argument(1, x);
    return {a0.j, a1.j, a0.y, a1.y};
}

}  // namespace cylscat
