#include "cylscat/boundary_ops.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cylscat/error.hpp"
#include "cylscat/quadrature.hpp"
#include "cylscat/specfun.hpp"

namespace cylscat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286061;
const cplx kI(0.0, 1.0);

void require_kappa(double kappa) {
    if (!(kappa > 0.0) || !std::isfinite(kappa)) {
        throw DomainError("operator wavenumber must be positive");
    }
}

// ln(4 sin^2((t_i - t_j)/2)) for i != j on the 2n grid.
double log_factor(int i, int j, int n) {
    const double s = std::sin(0.5 * (i - j) * kPi / n);
    return std::log(4.0 * s * s);
}

void require_same_n(const CollocationGrid& a, const CollocationGrid& b) {
    if (a.n() != b.n()) throw DomainError("operator grids must share n");
}

Eigen::MatrixXcd tangential(const CollocationGrid& g, const Eigen::MatrixXcd& m) {
    return tangential_derivative_matrix(g).cast<cplx>() * m;
}

}  // namespace

GridPair::GridPair(const Scatterer& scatterer, int n)
    : outer_(scatterer.outer(), n, Boundary::Outer), inner_(scatterer.inner(), n, Boundary::Inner) {}

GridPair::GridPair(CollocationGrid outer, CollocationGrid inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    require_same_n(outer_, inner_);
}

const CollocationGrid& GridPair::grid(int l) const {
    if (l == 0) return outer_;
    if (l == 1) return inner_;
    throw DomainError("curve index must be 0 or 1, got " + std::to_string(l));
}

Eigen::MatrixXcd single_layer_self(double kappa, const CollocationGrid& g) {
    require_kappa(kappa);
    const int n = g.n(), size = g.size();
    const LogWeights r(n);
    const auto& x = g.position();
    const auto& jac = g.jacobian();
    Eigen::MatrixXcd m(size, size);
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            double m1;
            cplx m2;
            if (i == j) {
                m1 = -1.0 / (4.0 * kPi);
                m2 = 0.25 * kI - kEulerGamma / (2.0 * kPi) -
                     std::log(kappa * jac[j] / 2.0) / (2.0 * kPi);
            } else {
                const double kr = kappa * (x.col(i) - x.col(j)).norm();
                const BesselSet b = bessel_all(kr);
                m1 = -b.j0 / (4.0 * kPi);
                m2 = 0.25 * kI * cplx(b.j0, b.y0) - m1 * log_factor(i, j, n);
            }
            m(i, j) = (r(i, j) * m1 + (kPi / n) * m2) * jac[j];
        }
    }
    return m;
}

Eigen::MatrixXcd single_layer_cross(double kappa, const CollocationGrid& eval,
                                    const CollocationGrid& src) {
    require_kappa(kappa);
    require_same_n(eval, src);
    const int n = src.n();
    Eigen::MatrixXcd m(eval.size(), src.size());
    for (int i = 0; i < eval.size(); ++i) {
        for (int j = 0; j < src.size(); ++j) {
            const double r = (eval.position().col(i) - src.position().col(j)).norm();
            m(i, j) = (kPi / n) * 0.25 * kI * hankel1_0(kappa * r) * src.jacobian()[j];
        }
    }
    return m;
}

Eigen::MatrixXcd double_layer_self(double kappa, const CollocationGrid& g, bool adjoint) {
    require_kappa(kappa);
    const int n = g.n(), size = g.size();
    const LogWeights r(n);
    const auto& x = g.position();
    const auto& d1 = g.first_derivative();
    const auto& d2 = g.second_derivative();
    const auto& nu = g.normal();
    const auto& jac = g.jacobian();
    Eigen::MatrixXcd m(size, size);
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            double l1;
            cplx l2;
            if (i == j) {
                // Limit (1/4pi) x''.n / |x'|, written without the unit normal.
                l1 = 0.0;
                l2 = (d2(0, j) * d1(1, j) - d2(1, j) * d1(0, j)) /
                     (4.0 * kPi * jac[j] * jac[j] * jac[j]);
            } else {
                const Point diff = x.col(i) - x.col(j);
                const double dist = diff.norm();
                const double q = adjoint ? -diff.dot(nu.col(i)) : diff.dot(nu.col(j));
                const BesselSet b = bessel_all(kappa * dist);
                l1 = -(kappa / (4.0 * kPi)) * b.j1 * q / dist;
                l2 = 0.25 * kI * kappa * cplx(b.j1, b.y1) * q / dist - l1 * log_factor(i, j, n);
            }
            m(i, j) = (r(i, j) * l1 + (kPi / n) * l2) * jac[j];
        }
    }
    return m;
}

Eigen::MatrixXcd double_layer_cross(double kappa, const CollocationGrid& eval,
                                    const CollocationGrid& src, bool adjoint) {
    require_kappa(kappa);
    require_same_n(eval, src);
    const int n = src.n();
    Eigen::MatrixXcd m(eval.size(), src.size());
    for (int i = 0; i < eval.size(); ++i) {
        for (int j = 0; j < src.size(); ++j) {
            const Point diff = eval.position().col(i) - src.position().col(j);
            const double dist = diff.norm();
            const double q =
                adjoint ? -diff.dot(eval.normal().col(i)) : diff.dot(src.normal().col(j));
            m(i, j) = (kPi / n) * 0.25 * kI * kappa * hankel1_1(kappa * dist) * q / dist *
                      src.jacobian()[j];
        }
    }
    return m;
}

Eigen::MatrixXcd hypersingular_self(double kappa, const CollocationGrid& g) {
    const Eigen::MatrixXcd s = single_layer_self(kappa, g);
    const Eigen::MatrixXd nn = g.normal().transpose() * g.normal();
    const Eigen::MatrixXcd ds = tangential_derivative_matrix(g).cast<cplx>();
    return kappa * kappa * s.cwiseProduct(nn.cast<cplx>()) + ds * s * ds;
}

Eigen::MatrixXcd hypersingular_cross(double kappa, const CollocationGrid& eval,
                                     const CollocationGrid& src) {
    require_kappa(kappa);
    require_same_n(eval, src);
    const int n = src.n();
    Eigen::MatrixXcd m(eval.size(), src.size());
    for (int i = 0; i < eval.size(); ++i) {
        for (int j = 0; j < src.size(); ++j) {
            const Point diff = eval.position().col(i) - src.position().col(j);
            const double r = diff.norm();
            const double a = diff.dot(eval.normal().col(i));
            const double b = diff.dot(src.normal().col(j));
            const double c = eval.normal().col(i).dot(src.normal().col(j));
            const double kr = kappa * r;
            const BesselSet bs = bessel_all(kr);
            const cplx h0(bs.j0, bs.y0), h1(bs.j1, bs.y1);
            const cplx h1p = h0 - h1 / kr;
            const cplx val = -(0.25 * kI * kappa) *
                             (-kappa * h1p * a * b / (r * r) + h1 * (-c / r + a * b / (r * r * r)));
            m(i, j) = (kPi / n) * val * src.jacobian()[j];
        }
    }
    return m;
}

Eigen::MatrixXcd hypersingular_cross_maue(double kappa, const CollocationGrid& eval,
                                          const CollocationGrid& src) {
    const Eigen::MatrixXcd s = single_layer_cross(kappa, eval, src);
    const Eigen::MatrixXd nn = eval.normal().transpose() * src.normal();
    return kappa * kappa * s.cwiseProduct(nn.cast<cplx>()) +
           tangential(eval, s) * tangential_derivative_matrix(src).cast<cplx>();
}

Eigen::MatrixXcd tangential_single_layer_self(double kappa, const CollocationGrid& g) {
    return tangential(g, single_layer_self(kappa, g));
}

Eigen::MatrixXcd tangential_single_layer_cross(double kappa, const CollocationGrid& eval,
                                               const CollocationGrid& src) {
    require_kappa(kappa);
    require_same_n(eval, src);
    const int n = src.n();
    Eigen::MatrixXcd m(eval.size(), src.size());
    for (int i = 0; i < eval.size(); ++i) {
        for (int j = 0; j < src.size(); ++j) {
            const Point diff = eval.position().col(i) - src.position().col(j);
            const double r = diff.norm();
            const double q = -diff.dot(eval.tangent().col(i));
            m(i, j) = (kPi / n) * 0.25 * kI * kappa * hankel1_1(kappa * r) * q / r *
                      src.jacobian()[j];
        }
    }
    return m;
}

BoundaryOperators::BoundaryOperators(const DerivedParams& params, const GridPair& grids)
    : params_(params), grids_(grids) {
    dtau_[0] = tangential_derivative_matrix(grids_.outer());
    dtau_[1] = tangential_derivative_matrix(grids_.inner());
}

double BoundaryOperators::kappa(int k) const {
    if (k < 0 || k > 2) throw DomainError("wavenumber index must be 0, 1 or 2");
    return params_.kappa[k];
}

void BoundaryOperators::check(int k, int l, int j) const {
    kappa(k);
    grids_.grid(l);
    grids_.grid(j);
}

const Eigen::MatrixXd& BoundaryOperators::dtau(int l) const {
    grids_.grid(l);
    return dtau_[l];
}

template <class Build>
const Eigen::MatrixXcd& BoundaryOperators::cached(OpKind kind, int k, int l, int j,
                                                  Build&& build) const {
    check(k, l, j);
    const Key key{static_cast<int>(kind), k, l, j};
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    // Built outside the lock: builders may query other cached operators.
    Eigen::MatrixXcd m = build();
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(key, std::move(m)).first->second;
}

const Eigen::MatrixXcd& BoundaryOperators::S(int k, int l, int j) const {
    return cached(OpKind::S, k, l, j, [&] {
        const double kap = kappa(k);
        return l == j ? single_layer_self(kap, grids_.grid(l))
                      : single_layer_cross(kap, grids_.grid(l), grids_.grid(j));
    });
}

const Eigen::MatrixXcd& BoundaryOperators::D(int k, int l, int j) const {
    return cached(OpKind::D, k, l, j, [&] {
        const double kap = kappa(k);
        return l == j ? double_layer_self(kap, grids_.grid(l), false)
                      : double_layer_cross(kap, grids_.grid(l), grids_.grid(j), false);
    });
}

const Eigen::MatrixXcd& BoundaryOperators::NS(int k, int l, int j) const {
    return cached(OpKind::NS, k, l, j, [&] {
        const double kap = kappa(k);
        return l == j ? double_layer_self(kap, grids_.grid(l), true)
                      : double_layer_cross(kap, grids_.grid(l), grids_.grid(j), true);
    });
}

const Eigen::MatrixXcd& BoundaryOperators::ND(int k, int l, int j) const {
    return cached(OpKind::ND, k, l, j, [&] {
        const double kap = kappa(k);
        if (l != j) return hypersingular_cross(kap, grids_.grid(l), grids_.grid(j));
        const Eigen::MatrixXcd& s = S(k, l, l);
        const auto& g = grids_.grid(l);
        const Eigen::MatrixXd nn = g.normal().transpose() * g.normal();
        const Eigen::MatrixXcd ds = dtau_[l].cast<cplx>();
        return Eigen::MatrixXcd(kap * kap * s.cwiseProduct(nn.cast<cplx>()) + ds * s * ds);
    });
}

const Eigen::MatrixXcd& BoundaryOperators::TS(int k, int l, int j) const {
    return cached(OpKind::TS, k, l, j, [&] {
        if (l != j) return tangential_single_layer_cross(kappa(k), grids_.grid(l), grids_.grid(j));
        return Eigen::MatrixXcd(dtau_[l].cast<cplx>() * S(k, l, l));
    });
}

const Eigen::MatrixXcd& BoundaryOperators::TD(int k, int l, int j) const {
    return cached(OpKind::TD, k, l, j,
                  [&] { return Eigen::MatrixXcd(dtau_[l].cast<cplx>() * D(k, l, j)); });
}

const Eigen::MatrixXcd& BoundaryOperators::TD_combined(int k, int l, int sign) const {
    if (sign != 1 && sign != -1) throw DomainError("TD_combined: sign must be +1 or -1");
    const OpKind kind = sign > 0 ? OpKind::TDplusHalfDtau : OpKind::TDminusHalfDtau;
    return cached(kind, k, l, l, [&] {
        // d/ds of a constant multiple of the identity is 0.5 * sign * dtau.
        return Eigen::MatrixXcd(TD(k, l, l) + (0.5 * sign) * dtau_[l].cast<cplx>());
    });
}

OperatorMatrix BoundaryOperators::get(OpKind kind, int k, int l, int j) const {
    switch (kind) {
        case OpKind::S: return {kind, k, l, j, S(k, l, j)};
        case OpKind::D: return {kind, k, l, j, D(k, l, j)};
        case OpKind::NS: return {kind, k, l, j, NS(k, l, j)};
        case OpKind::ND: return {kind, k, l, j, ND(k, l, j)};
        case OpKind::TS: return {kind, k, l, j, TS(k, l, j)};
        case OpKind::TD: return {kind, k, l, j, TD(k, l, j)};
        case OpKind::TDplusHalfDtau:
        case OpKind::TDminusHalfDtau:
            if (l != j) throw DomainError("combined TD operators are defined for l == j only");
            return {kind, k, l, j, TD_combined(k, l, kind == OpKind::TDplusHalfDtau ? 1 : -1)};
    }
    throw DomainError("unknown operator kind");
}

OperatorMatrix op_S(int k, int l, int j, const DerivedParams& params, const GridPair& grids) {
    return BoundaryOperators(params, grids).get(OpKind::S, k, l, j);
}
OperatorMatrix op_D(int k, int l, int j, const DerivedParams& params, const GridPair& grids) {
    return BoundaryOperators(params, grids).get(OpKind::D, k, l, j);
}
OperatorMatrix op_NS(int k, int l, int j, const DerivedParams& params, const GridPair& grids) {
    return BoundaryOperators(params, grids).get(OpKind::NS, k, l, j);
}
OperatorMatrix op_ND(int k, int l, int j, const DerivedParams& params, const GridPair& grids) {
    return BoundaryOperators(params, grids).get(OpKind::ND, k, l, j);
}
OperatorMatrix op_TS(int k, int l, int j, const DerivedParams& params, const GridPair& grids) {
    return BoundaryOperators(params, grids).get(OpKind::TS, k, l, j);
}
OperatorMatrix op_TD_combined(int k, int l, int j, int sign, const DerivedParams& params,
                              const GridPair& grids) {
    return BoundaryOperators(params, grids)
        .get(sign > 0 ? OpKind::TDplusHalfDtau : OpKind::TDminusHalfDtau, k, l, j);
}

}  // namespace cylscat
