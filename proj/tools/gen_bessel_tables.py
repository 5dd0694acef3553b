#!/usr/bin/env python3
"""Generate Chebyshev coefficients for the large-argument Bessel modulus/phase
functions P_nu(x), Q_nu(x) (nu = 0, 1) on x >= 8.

For x >= 8 with u = 8/x and s = 2u^2 - 1:
    J_nu(x) = sqrt(2/(pi x)) (P cos chi - Q sin chi)
    Y_nu(x) = sqrt(2/(pi x)) (P sin chi + Q cos chi),  chi = x - (2 nu + 1) pi / 4
P is fitted as a Chebyshev series in s, Q / u likewise.
Output is a C++ header fragment written to stdout.
"""
import mpmath as mp

mp.mp.dps = 60
DEG = 18


def pq(nu, x):
    x = mp.mpf(x)
    chi = x - (2 * nu + 1) * mp.pi / 4
    a = mp.sqrt(2 / (mp.pi * x))
    j = mp.besselj(nu, x)
    y = mp.bessely(nu, x)
    p = (j * mp.cos(chi) + y * mp.sin(chi)) / a
    q = (y * mp.cos(chi) - j * mp.sin(chi)) / a
    return p, q


def cheb_fit(f, deg):
    m = deg + 1
    nodes = [mp.cos(mp.pi * (k + mp.mpf(1) / 2) / m) for k in range(m)]
    vals = [f(s) for s in nodes]
    coeffs = []
    for j in range(m):
        c = mp.fsum(vals[k] * mp.cos(mp.pi * j * (k + mp.mpf(1) / 2) / m) for k in range(m))
        coeffs.append(c * (1 if j == 0 else 2) / m)
    return coeffs


def x_of(s):
    u2 = (s + 1) / 2
    if u2 == 0:
        u2 = mp.mpf(10) ** -40
    return 8 / mp.sqrt(u2)


def main():
    out = []
    for nu in (0, 1):
        cp = cheb_fit(lambda s: pq(nu, x_of(s))[0], DEG)
        cq = cheb_fit(lambda s: pq(nu, x_of(s))[1] * x_of(s) / 8, DEG)
        for name, cs in (("P", cp), ("Q", cq)):
            out.append(f"inline constexpr std::array<double, {DEG + 1}> k{name}{nu}Cheb = {{")
            for c in cs:
                out.append(f"    {mp.nstr(c, 20, min_fixed=1, max_fixed=0)},")
            out.append("};")
            out.append("")
    print("\n".join(out))


if __name__ == "__main__":
    main()
