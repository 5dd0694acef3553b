#include "cylscat/system.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/LU>

#include "cylscat/error.hpp"
#include "cylscat/quadrature.hpp"
#include "cylscat/specfun.hpp"

namespace cylscat {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

constexpr double kPivotFloor = 1e-300;
constexpr double kConditionWarn = 1e12;

class BlockWriter {
public:
    BlockWriter(MatrixXcd& m, int size) : m_(m), size_(size) {}

    template <class Block>
    void set(int row, int col, const Block& block) {
        m_.block(row * size_, col * size_, size_, size_) = block;
    }
    void identity(int row, int col, cplx scale) {
        m_.block(row * size_, col * size_, size_, size_).diagonal().setConstant(scale);
    }

private:
    MatrixXcd& m_;
    int size_;
};

struct SourceTrace {
    VectorXcd value, dn, dtau;
};

// H0(kappa |x - z|) and its normal and tangential derivatives at the nodes.
SourceTrace source_trace(double kappa, const CollocationGrid& g, const Point& z) {
    SourceTrace t{VectorXcd(g.size()), VectorXcd(g.size()), VectorXcd(g.size())};
    for (int j = 0; j < g.size(); ++j) {
        const Point r = g.position().col(j) - z;
        const double dist = r.norm();
        if (!(dist > 0.0)) throw DomainError("source point lies on a collocation node");
        const BesselSet b = bessel_all(kappa * dist);
        const cplx h1(b.j1, b.y1);
        t.value[j] = cplx(b.j0, b.y0);
        t.dn[j] = -kappa * h1 * r.dot(g.normal().col(j)) / dist;
        t.dtau[j] = -kappa * h1 * r.dot(g.tangent().col(j)) / dist;
    }
    return t;
}

SolveResult finish(const MatrixXcd& a, const VectorXcd& rhs, const Eigen::PartialPivLU<MatrixXcd>& lu,
                   VectorXcd x, int n) {
    const double rhs_norm = rhs.norm();
    auto residual = [&](const VectorXcd& v) {
        const double r = (a * v - rhs).norm();
        return rhs_norm > 0.0 ? r / rhs_norm : r;
    };
    double res = residual(x);
    // A couple of refinement steps if rounding left a visible residual.
    for (int step = 0; step < 2 && res > 1e-13; ++step) {
        const VectorXcd corrected = x + lu.solve(rhs - a * x);
        const double r = residual(corrected);
        if (!(r < res)) break;
        x = corrected;
        res = r;
    }
    if (!x.allFinite()) throw SingularSystemError("solution is not finite");

    SolveResult out{DensitySet::from_stacked(x, n), 0.0, 0.0, {}};
    const double rcond = lu.rcond();
    out.condition_estimate = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
    out.relative_residual = res;
    if (out.condition_estimate > kConditionWarn) {
        std::ostringstream msg;
        msg << "condition estimate " << out.condition_estimate << " exceeds " << kConditionWarn;
        out.warning = msg.str();
    }
    return out;
}

Eigen::PartialPivLU<MatrixXcd> factorize(const MatrixXcd& a) {
    if (a.rows() != a.cols() || a.rows() == 0) throw DomainError("system matrix must be square");
    if (!a.allFinite()) throw SingularSystemError("system matrix has non-finite entries");
    Eigen::PartialPivLU<MatrixXcd> lu(a);
    const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (!(min_pivot >= kPivotFloor)) {
        throw SingularSystemError("numerically singular system (pivot below 1e-300)");
    }
    return lu;
}

}  // namespace

DensitySet::DensitySet(int n) : n_(n) {
    if (n < 1) throw DomainError("density set needs n >= 1");
    for (auto& p : parts_) p = VectorXcd::Zero(2 * n);
}

DensitySet DensitySet::from_stacked(const VectorXcd& stacked, int n) {
    DensitySet d(n);
    if (stacked.size() != 16 * n) throw DomainError("stacked density vector must have 16n entries");
    for (int b = 0; b < 8; ++b) d.parts_[b] = stacked.segment(b * 2 * n, 2 * n);
    return d;
}

VectorXcd DensitySet::stacked() const {
    VectorXcd v(16 * n_);
    for (int b = 0; b < 8; ++b) v.segment(b * 2 * n_, 2 * n_) = parts_[b];
    return v;
}

VectorXcd DensitySet::psi0_e(const DerivedParams& p) const {
    return -(p.eps_t[1] / p.eps_t[0]) * psi1_e();
}
VectorXcd DensitySet::psi0_h(const DerivedParams& p) const {
    return -(p.mu_t[1] / p.mu_t[0]) * psi1_h();
}
VectorXcd DensitySet::psi3_h(const DerivedParams& p) const {
    return (p.mu_t[1] / p.mu_t[2]) * psi2_h();
}
VectorXcd DensitySet::psi3_e(const DerivedParams& p) const {
    return (p.eps_t[1] / p.eps_t[2]) * psi2_e();
}

MatrixXcd assemble_B(const DerivedParams& p, const GridPair& grids) {
    const int size = grids.block_size();
    MatrixXcd b = MatrixXcd::Zero(8 * size, 8 * size);
    BlockWriter w(b, size);
    const double om = p.omega;
    const Eigen::MatrixXcd dt0 = tangential_derivative_matrix(grids.outer()).cast<cplx>();
    const Eigen::MatrixXcd dt1 = tangential_derivative_matrix(grids.inner()).cast<cplx>();
    for (int r : {0, 2, 4, 6}) w.identity(r, r, -0.5);
    if (p.beta_t[0] != 0.0) {
        w.set(1, 0, -(p.beta_t[0] / 2.0) * dt0);
        w.set(3, 2, (p.beta_t[0] / 2.0) * dt0);
    }
    if (p.beta_t[2] != 0.0) {
        w.set(5, 4, -(p.beta_t[2] / 2.0) * dt1);
        w.set(7, 6, (p.beta_t[2] / 2.0) * dt1);
    }
    w.identity(1, 1, p.mu_t[1] * om);
    w.identity(3, 3, p.eps_t[1] * om);
    w.identity(5, 5, -p.mu_t[1] * om);
    w.identity(7, 7, -p.eps_t[1] * om);
    return b;
}

MatrixXcd assemble_C(const DerivedParams& p, const BoundaryOperators& op) {
    const int size = op.block_size();
    MatrixXcd c = MatrixXcd::Zero(8 * size, 8 * size);
    BlockWriter w(c, size);
    const double om = p.omega;
    const auto& et = p.eps_t;
    const auto& mt = p.mu_t;
    const auto& bt = p.beta_t;

    // Gamma_0 rows.
    w.set(0, 0, -op.D(0, 0, 0));
    w.set(0, 3, op.S(1, 0, 0) - (et[1] / et[0]) * op.S(0, 0, 0));
    w.set(0, 7, op.S(1, 0, 1));

    w.set(1, 0, -bt[0] * op.TD(0, 0, 0));
    w.set(1, 1, mt[1] * om * (op.NS(1, 0, 0) - op.NS(0, 0, 0)));
    w.set(1, 2, -mt[0] * om * op.ND(0, 0, 0));
    w.set(1, 3, bt[1] * op.TS(1, 0, 0) - (et[1] / et[0]) * bt[0] * op.TS(0, 0, 0));
    w.set(1, 5, mt[1] * om * op.NS(1, 0, 1));
    w.set(1, 7, bt[1] * op.TS(1, 0, 1));

    w.set(2, 1, op.S(1, 0, 0) - (mt[1] / mt[0]) * op.S(0, 0, 0));
    w.set(2, 2, -op.D(0, 0, 0));
    w.set(2, 5, op.S(1, 0, 1));

    w.set(3, 0, -et[0] * om * op.ND(0, 0, 0));
    w.set(3, 1, -bt[1] * op.TS(1, 0, 0) + bt[0] * (mt[1] / mt[0]) * op.TS(0, 0, 0));
    w.set(3, 2, bt[0] * op.TD(0, 0, 0));
    w.set(3, 3, et[1] * om * (op.NS(1, 0, 0) - op.NS(0, 0, 0)));
    w.set(3, 5, -bt[1] * op.TS(1, 0, 1));
    w.set(3, 7, et[1] * om * op.NS(1, 0, 1));

    // Gamma_1 rows.
    w.set(4, 3, op.S(1, 1, 0));
    w.set(4, 4, op.D(2, 1, 1));
    w.set(4, 7, op.S(1, 1, 1) - (et[1] / et[2]) * op.S(2, 1, 1));

    w.set(5, 1, mt[1] * om * op.NS(1, 1, 0));
    w.set(5, 3, bt[1] * op.TS(1, 1, 0));
    w.set(5, 4, bt[2] * op.TD(2, 1, 1));
    w.set(5, 5, mt[1] * om * (op.NS(1, 1, 1) - op.NS(2, 1, 1)));
    w.set(5, 6, mt[2] * om * op.ND(2, 1, 1));
    w.set(5, 7, bt[1] * op.TS(1, 1, 1) - bt[2] * (et[1] / et[2]) * op.TS(2, 1, 1));

    w.set(6, 1, op.S(1, 1, 0));
    w.set(6, 5, op.S(1, 1, 1) - (mt[1] / mt[2]) * op.S(2, 1, 1));
    w.set(6, 6, op.D(2, 1, 1));

    w.set(7, 1, -bt[1] * op.TS(1, 1, 0));
    w.set(7, 3, et[1] * om * op.NS(1, 1, 0));
    w.set(7, 4, et[2] * om * op.ND(2, 1, 1));
    w.set(7, 5, -bt[1] * op.TS(1, 1, 1) + bt[2] * (mt[1] / mt[2]) * op.TS(2, 1, 1));
    w.set(7, 6, -bt[2] * op.TD(2, 1, 1));
    w.set(7, 7, et[1] * om * (op.NS(1, 1, 1) - op.NS(2, 1, 1)));
    return c;
}

VectorXcd rhs_incident(const MediumConfig& cfg, const DerivedParams& p, const GridPair& grids) {
    const int size = grids.block_size();
    const CollocationGrid& g = grids.outer();
    const PlaneWave wave(cfg, p);
    VectorXcd f = VectorXcd::Zero(8 * size);
    for (int j = 0; j < size; ++j) {
        const Point x = g.position().col(j);
        const Eigen::Vector2cd grad = wave.gradient(x);
        const cplx dtau = grad.x() * g.tangent()(0, j) + grad.y() * g.tangent()(1, j);
        const cplx dn = grad.x() * g.normal()(0, j) + grad.y() * g.normal()(1, j);
        f[j] = wave.value(x);
        f[size + j] = p.beta_t[0] * dtau;
        f[3 * size + j] = p.eps_t[0] * p.omega * dn;
    }
    return f;
}

VectorXcd rhs_analytic(const DerivedParams& p, const GridPair& grids, const PointSources& z) {
    const int size = grids.block_size();
    const auto& k = p.kappa;
    const auto& et = p.eps_t;
    const auto& mt = p.mu_t;
    const auto& bt = p.beta_t;
    const double om = p.omega;
    VectorXcd f(8 * size);

    // Outer interface: exterior fields from z1 (e), z2 (h); layer fields from z3, z4.
    {
        const CollocationGrid& g = grids.outer();
        const SourceTrace e0 = source_trace(k[0], g, z.z1), h0 = source_trace(k[0], g, z.z2);
        const SourceTrace e1 = source_trace(k[1], g, z.z3), h1 = source_trace(k[1], g, z.z4);
        f.segment(0, size) = e1.value - e0.value;
        f.segment(size, size) = mt[1] * om * h1.dn + bt[1] * e1.dtau - mt[0] * om * h0.dn -
                                bt[0] * e0.dtau;
        f.segment(2 * size, size) = h1.value - h0.value;
        f.segment(3 * size, size) = et[1] * om * e1.dn - bt[1] * h1.dtau - et[0] * om * e0.dn +
                                    bt[0] * h0.dtau;
    }
    // Inner interface: layer and core fields both from z3 (e), z4 (h).
    {
        const CollocationGrid& g = grids.inner();
        const SourceTrace e1 = source_trace(k[1], g, z.z3), h1 = source_trace(k[1], g, z.z4);
        const SourceTrace e2 = source_trace(k[2], g, z.z3), h2 = source_trace(k[2], g, z.z4);
        f.segment(4 * size, size) = e1.value - e2.value;
        f.segment(5 * size, size) = mt[1] * om * h1.dn + bt[1] * e1.dtau - mt[2] * om * h2.dn -
                                    bt[2] * e2.dtau;
        f.segment(6 * size, size) = h1.value - h2.value;
        f.segment(7 * size, size) = et[1] * om * e1.dn - bt[1] * h1.dtau - et[2] * om * e2.dn +
                                    bt[2] * h2.dtau;
    }
    return f;
}

CollocationSystem assemble_system(const DerivedParams& params, const BoundaryOperators& ops,
                                  VectorXcd rhs) {
    CollocationSystem sys;
    sys.n = ops.grids().n();
    if (rhs.size() != 8 * ops.block_size()) throw DomainError("rhs must have 16n entries");
    sys.matrix = assemble_B(params, ops.grids()) + assemble_C(params, ops);
    sys.rhs = std::move(rhs);
    return sys;
}

SolveResult solve(const CollocationSystem& system) {
    if (system.rhs.size() != system.matrix.rows()) throw DomainError("rhs size mismatch");
    const auto lu = factorize(system.matrix);
    return finish(system.matrix, system.rhs, lu, lu.solve(system.rhs), system.n);
}

SolveResult solve_reduced(const DerivedParams& p, const BoundaryOperators& ops,
                          const VectorXcd& rhs) {
    const int size = ops.block_size();
    const int total = 8 * size;
    if (rhs.size() != total) throw DomainError("rhs must have 16n entries");
    const MatrixXcd b = assemble_B(p, ops.grids());
    const MatrixXcd c = assemble_C(p, ops);

    // B is block diagonal in the row/column pairs (0,1), (2,3), (4,5), (6,7),
    // each of the form [[a I, 0], [L, c I]] with inverse
    // [[I/a, 0], [-L/(a c), I/c]].
    auto apply_binv = [&](const MatrixXcd& m) {
        MatrixXcd out(m.rows(), m.cols());
        for (int pair = 0; pair < 4; ++pair) {
            const int r0 = 2 * pair * size, r1 = r0 + size;
            const cplx a = b(r0, r0);
            const cplx cc = b(r1, r1);
            const MatrixXcd l = b.block(r1, r0, size, size);
            out.middleRows(r0, size) = m.middleRows(r0, size) / a;
            out.middleRows(r1, size) =
                m.middleRows(r1, size) / cc - (l * m.middleRows(r0, size)) / (a * cc);
        }
        return out;
    };
    const MatrixXcd k = MatrixXcd::Identity(total, total) + apply_binv(c);
    const VectorXcd g = apply_binv(rhs);
    const auto lu = factorize(k);
    const VectorXcd x = lu.solve(g);

    SolveResult out = finish(k, g, lu, x, ops.grids().n());
    // Refine against B + C itself, reusing the factorization of I + B^-1 C.
    const MatrixXcd full = b + c;
    const double rhs_norm = rhs.norm();
    auto residual = [&](const VectorXcd& v) {
        const double r = (full * v - rhs).norm();
        return rhs_norm > 0.0 ? r / rhs_norm : r;
    };
    VectorXcd phi = out.densities.stacked();
    double res = residual(phi);
    for (int step = 0; step < 2 && res > 1e-13; ++step) {
        const VectorXcd corrected = phi + lu.solve(apply_binv(rhs - full * phi));
        const double r = residual(corrected);
        if (!(r < res)) break;
        phi = corrected;
        res = r;
    }
    out.densities = DensitySet::from_stacked(phi, ops.grids().n());
    out.relative_residual = res;
    return out;
}

}  // namespace cylscat
