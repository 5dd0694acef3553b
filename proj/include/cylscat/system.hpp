#pragma once

#include <array>
#include <string>

#include <Eigen/Core>

#include "cylscat/boundary_ops.hpp"
#include "cylscat/media.hpp"

namespace cylscat {

/// Position of each density in the stacked unknown vector.
enum class Density {
    Phi0E = 0,
    Psi1H = 1,
    Phi0H = 2,
    Psi1E = 3,
    Phi3E = 4,
    Psi2H = 5,
    Phi3H = 6,
    Psi2E = 7,
};

/// The eight unknown densities, each sampled at the 2n nodes of its curve
/// (the first four on Gamma_0, the last four on Gamma_1).
class DensitySet {
public:
    /// All-zero densities.
    explicit DensitySet(int n);
    /// Splits a stacked 16n vector.
    static DensitySet from_stacked(const Eigen::VectorXcd& stacked, int n);

    int n() const { return n_; }
    Eigen::VectorXcd stacked() const;

    const Eigen::VectorXcd& operator[](Density d) const { return parts_[static_cast<int>(d)]; }
    Eigen::VectorXcd& operator[](Density d) { return parts_[static_cast<int>(d)]; }

    const Eigen::VectorXcd& phi0_e() const { return (*this)[Density::Phi0E]; }
    const Eigen::VectorXcd& psi1_h() const { return (*this)[Density::Psi1H]; }
    const Eigen::VectorXcd& phi0_h() const { return (*this)[Density::Phi0H]; }
    const Eigen::VectorXcd& psi1_e() const { return (*this)[Density::Psi1E]; }
    const Eigen::VectorXcd& phi3_e() const { return (*this)[Density::Phi3E]; }
    const Eigen::VectorXcd& psi2_h() const { return (*this)[Density::Psi2H]; }
    const Eigen::VectorXcd& phi3_h() const { return (*this)[Density::Phi3H]; }
    const Eigen::VectorXcd& psi2_e() const { return (*this)[Density::Psi2E]; }

    // Densities fixed by the constraints on psi_0 and psi_3.
    Eigen::VectorXcd psi0_e(const DerivedParams& p) const;  ///< -(eps~1/eps~0) psi1_e
    Eigen::VectorXcd psi0_h(const DerivedParams& p) const;  ///< -(mu~1/mu~0) psi1_h
    Eigen::VectorXcd psi3_h(const DerivedParams& p) const;  ///< (mu~1/mu~2) psi2_h
    Eigen::VectorXcd psi3_e(const DerivedParams& p) const;  ///< (eps~1/eps~2) psi2_e

private:
    int n_;
    std::array<Eigen::VectorXcd, 8> parts_;
};

/// Dense (B + C) matrix with its right-hand side. Block rows 0-3 are
/// collocated on Gamma_0, rows 4-7 on Gamma_1.
struct CollocationSystem {
    int n = 0;
    Eigen::MatrixXcd matrix;
    Eigen::VectorXcd rhs;
};

/// The jump part B: -1/2 identities, constant material blocks and the
/// -/+ (beta~/2) d/ds blocks.
Eigen::MatrixXcd assemble_B(const DerivedParams& params, const GridPair& grids);

/// The integral-operator part C (with TD realized as d/ds of the double layer).
Eigen::MatrixXcd assemble_C(const DerivedParams& params, const BoundaryOperators& ops);

/// (e_inc, beta~0 d/ds e_inc, 0, eps~0 omega d/dn e_inc, 0, 0, 0, 0) on Gamma_0.
Eigen::VectorXcd rhs_incident(const MediumConfig& cfg, const DerivedParams& params,
                              const GridPair& grids);

/// Point sources of the analytic test fields: z1, z2 generate e and h outside
/// Gamma_0 (so they lie inside it), z3, z4 generate e and h in the interior
/// regions (so they lie outside Gamma_0).
struct PointSources {
    Point z1, z2, z3, z4;
};

/// Interface data produced by the exact point-source fields. Throws
/// DomainError if a source sits on a collocation node.
Eigen::VectorXcd rhs_analytic(const DerivedParams& params, const GridPair& grids,
                              const PointSources& sources);

/// B + C with the given right-hand side.
CollocationSystem assemble_system(const DerivedParams& params, const BoundaryOperators& ops,
                                  Eigen::VectorXcd rhs);

struct SolveResult {
    DensitySet densities;
    /// 1-norm condition number estimate 1 / rcond.
    double condition_estimate = 0.0;
    double relative_residual = 0.0;
    /// Non-empty when the condition estimate exceeds 1e12.
    std::string warning;
};

/// LU with partial pivoting. Throws SingularSystemError if a pivot falls
/// below 1e-300 in modulus.
SolveResult solve(const CollocationSystem& system);

/// Solves the equivalent second-kind form (I + B^-1 C) phi = B^-1 f using the
/// block-triangular inverse of B. Reported residual is for (B + C) phi = f.
SolveResult solve_reduced(const DerivedParams& params, const BoundaryOperators& ops,
                          const Eigen::VectorXcd& rhs);

}  // namespace cylscat
