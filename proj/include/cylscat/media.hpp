#pragma once

#include <array>
#include <complex>

#include <Eigen/Core>

namespace cylscat {

/// Physical inputs of the scattering problem. Index 0 is the exterior medium,
/// 1 the outer layer and 2 the core.
struct MediumConfig {
    std::array<double, 3> eps{1.0, 1.0, 1.0};
    std::array<double, 3> mu{1.0, 1.0, 1.0};
    double omega = 1.0;
    double theta = 0.0;  ///< incidence angle against the negative z-axis, in (0, pi)
    double phi = 0.0;    ///< polar angle of the incident direction, in [0, 2 pi]
};

/// Quantities derived from a MediumConfig.
struct DerivedParams {
    double omega = 0.0;
    double beta = 0.0;                 ///< k_0 cos(theta)
    std::array<double, 3> k{};         ///< omega sqrt(mu_j eps_j)
    std::array<double, 3> kappa_sq{};  ///< k_j^2 - beta^2
    std::array<double, 3> kappa{};
    std::array<double, 3> eps_t{};     ///< eps_j / kappa_j^2
    std::array<double, 3> mu_t{};      ///< mu_j / kappa_j^2
    std::array<double, 3> beta_t{};    ///< beta / kappa_j^2
};

/// Validates `cfg` and computes the derived wavenumbers and scaled material
/// constants.
///
/// Throws InvalidMaterialError for non-positive materials, an out-of-range
/// angle, or mu_1 == mu_2 (relative difference below 1e-14), and
/// NonPropagatingError when kappa_1^2 or kappa_2^2 is not positive.
DerivedParams derive_params(const MediumConfig& cfg);

/// Principal-symbol determinant of the interior transmission problem on the
/// inner interface, omega^2 |xi_1|^2 / (kappa_1^2 kappa_2^2) (mu_1 - mu_2)(eps_1 + eps_2).
/// It vanishes identically iff mu_1 == mu_2, so unlike derive_params this does
/// not reject equal permeabilities.
double sl_determinant(const MediumConfig& cfg, double xi1);

/// Obliquely incident plane wave reduced to the cross-section plane. Only the
/// electric component is non-zero.
class PlaneWave {
public:
    PlaneWave(const MediumConfig& cfg, const DerivedParams& params);

    std::complex<double> value(const Eigen::Vector2d& x) const;
    /// Gradient of value(x).
    Eigen::Vector2cd gradient(const Eigen::Vector2d& x) const;

    const Eigen::Vector2d& direction() const { return direction_; }
    double amplitude() const { return amplitude_; }
    double kappa() const { return kappa_; }

private:
    Eigen::Vector2d direction_;
    double amplitude_;
    double kappa_;
};

}  // namespace cylscat
