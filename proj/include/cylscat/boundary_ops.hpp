#pragma once

#include <map>
#include <mutex>
#include <tuple>

#include <Eigen/Core>

#include "cylscat/geometry.hpp"
#include "cylscat/media.hpp"

namespace cylscat {

/// Collocation grids on Gamma_0 (index 0) and Gamma_1 (index 1), same n.
class GridPair {
public:
    GridPair(const Scatterer& scatterer, int n);
    GridPair(CollocationGrid outer, CollocationGrid inner);

    int n() const { return outer_.n(); }
    int block_size() const { return outer_.size(); }
    const CollocationGrid& grid(int l) const;
    const CollocationGrid& outer() const { return outer_; }
    const CollocationGrid& inner() const { return inner_; }

private:
    CollocationGrid outer_, inner_;
};

// Nystrom matrices for a single wavenumber. "self" variants integrate over
// the curve they are evaluated on and carry the logarithmic split; "cross"
// variants are plain trapezoid rules for disjoint curves. All include the
// jacobian |y'(t_j)| of the integration curve.

Eigen::MatrixXcd single_layer_self(double kappa, const CollocationGrid& g);
Eigen::MatrixXcd single_layer_cross(double kappa, const CollocationGrid& eval,
                                    const CollocationGrid& src);

/// Double layer (normal at y) or, with `adjoint`, its adjoint NS (normal at x).
Eigen::MatrixXcd double_layer_self(double kappa, const CollocationGrid& g, bool adjoint = false);
Eigen::MatrixXcd double_layer_cross(double kappa, const CollocationGrid& eval,
                                    const CollocationGrid& src, bool adjoint = false);

/// Hypersingular ND through kappa^2 S[n(x).n(y) f] + d/ds S d/ds f.
Eigen::MatrixXcd hypersingular_self(double kappa, const CollocationGrid& g);
/// Direct kernel d^2 Phi / dn(x) dn(y) on disjoint curves.
Eigen::MatrixXcd hypersingular_cross(double kappa, const CollocationGrid& eval,
                                     const CollocationGrid& src);
/// The same identity as hypersingular_self, assembled from cross single
/// layers; valid for disjoint curves and used to cross-check the kernel.
Eigen::MatrixXcd hypersingular_cross_maue(double kappa, const CollocationGrid& eval,
                                          const CollocationGrid& src);

/// Tangential derivative at x of the single layer, d/ds(x) S.
Eigen::MatrixXcd tangential_single_layer_self(double kappa, const CollocationGrid& g);
Eigen::MatrixXcd tangential_single_layer_cross(double kappa, const CollocationGrid& eval,
                                               const CollocationGrid& src);

enum class OpKind { S, D, NS, ND, TS, TD, TDplusHalfDtau, TDminusHalfDtau };

/// Operator matrix with wavenumber index k, evaluation curve l and
/// integration curve j (each 0 or 1 for curves, 0..2 for k).
struct OperatorMatrix {
    OpKind kind;
    int k, l, j;
    Eigen::MatrixXcd entries;
};

/// Builds and memoizes every operator matrix the block system needs.
/// Safe to query from several threads.
class BoundaryOperators {
public:
    BoundaryOperators(const DerivedParams& params, const GridPair& grids);

    const GridPair& grids() const { return grids_; }
    int block_size() const { return grids_.block_size(); }
    double kappa(int k) const;

    const Eigen::MatrixXcd& S(int k, int l, int j) const;
    const Eigen::MatrixXcd& D(int k, int l, int j) const;
    const Eigen::MatrixXcd& NS(int k, int l, int j) const;
    const Eigen::MatrixXcd& ND(int k, int l, int j) const;
    const Eigen::MatrixXcd& TS(int k, int l, int j) const;
    /// d/ds(x) applied to the Nystrom double layer.
    const Eigen::MatrixXcd& TD(int k, int l, int j) const;
    /// d/ds (D_kll + sign/2 I): TD plus the matching jump term on one curve.
    const Eigen::MatrixXcd& TD_combined(int k, int l, int sign) const;

    /// Arclength derivative matrix on curve l.
    const Eigen::MatrixXd& dtau(int l) const;

    OperatorMatrix get(OpKind kind, int k, int l, int j) const;

private:
    using Key = std::tuple<int, int, int, int>;
    template <class Build>
    const Eigen::MatrixXcd& cached(OpKind kind, int k, int l, int j, Build&& build) const;
    void check(int k, int l, int j) const;

    DerivedParams params_;
    GridPair grids_;
    Eigen::MatrixXd dtau_[2];
    mutable std::mutex mutex_;
    mutable std::map<Key, Eigen::MatrixXcd> cache_;
};

OperatorMatrix op_S(int k, int l, int j, const DerivedParams& params, const GridPair& grids);
OperatorMatrix op_D(int k, int l, int j, const DerivedParams& params, const GridPair& grids);
OperatorMatrix op_NS(int k, int l, int j, const DerivedParams& params, const GridPair& grids);
OperatorMatrix op_ND(int k, int l, int j, const DerivedParams& params, const GridPair& grids);
OperatorMatrix op_TS(int k, int l, int j, const DerivedParams& params, const GridPair& grids);
/// sign = +1 gives TD + d/ds / 2, sign = -1 gives TD - d/ds / 2 (requires l == j).
OperatorMatrix op_TD_combined(int k, int l, int j, int sign, const DerivedParams& params,
                              const GridPair& grids);

}  // namespace cylscat
