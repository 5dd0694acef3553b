#include "cylscat/media.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cylscat/error.hpp"

namespace cylscat {

namespace {

void check_inputs(const MediumConfig& cfg) {
    for (int j = 0; j < 3; ++j) {
        if (!(cfg.eps[j] > 0.0) || !(cfg.mu[j] > 0.0)) {
            throw InvalidMaterialError("material " + std::to_string(j) +
                                       ": permittivity and permeability must be positive");
        }
    }
    if (!(cfg.omega > 0.0)) throw InvalidMaterialError("omega must be positive");
    if (!(cfg.theta > 0.0 && cfg.theta < std::numbers::pi)) {
        throw InvalidMaterialError("theta must lie in (0, pi)");
    }
    if (!(cfg.phi >= 0.0 && cfg.phi <= 2.0 * std::numbers::pi)) {
        throw InvalidMaterialError("phi must lie in [0, 2 pi]");
    }
}

// No validity checks beyond what the arithmetic needs.
DerivedParams compute(const MediumConfig& cfg) {
    DerivedParams p;
    p.omega = cfg.omega;
    for (int j = 0; j < 3; ++j) p.k[j] = cfg.omega * std::sqrt(cfg.mu[j] * cfg.eps[j]);
    // sin(pi/2 - theta) is exactly zero for theta == pi/2, unlike cos(theta).
    p.beta = p.k[0] * std::sin(std::numbers::pi / 2 - cfg.theta);
    for (int j = 0; j < 3; ++j) {
        p.kappa_sq[j] = p.k[j] * p.k[j] - p.beta * p.beta;
        p.kappa[j] = std::sqrt(std::max(p.kappa_sq[j], 0.0));
        p.eps_t[j] = cfg.eps[j] / p.kappa_sq[j];
        p.mu_t[j] = cfg.mu[j] / p.kappa_sq[j];
        p.beta_t[j] = p.beta / p.kappa_sq[j];
    }
    return p;
}

}  // namespace

DerivedParams derive_params(const MediumConfig& cfg) {
    check_inputs(cfg);
    const double scale = std::max(cfg.mu[1], cfg.mu[2]);
    if (std::abs(cfg.mu[1] - cfg.mu[2]) <= 1e-14 * scale) {
        throw InvalidMaterialError("mu1 and mu2 must differ");
    }
    DerivedParams p = compute(cfg);
    if (!(p.kappa_sq[1] > 0.0) || !(p.kappa_sq[2] > 0.0)) {
        throw NonPropagatingError("kappa_1^2 and kappa_2^2 must be positive (got " +
                                  std::to_string(p.kappa_sq[1]) + ", " +
                                  std::to_string(p.kappa_sq[2]) + ")");
    }
    return p;
}

double sl_determinant(const MediumConfig& cfg, double xi1) {
    check_inputs(cfg);
    const DerivedParams p = compute(cfg);
    if (!(p.kappa_sq[1] > 0.0) || !(p.kappa_sq[2] > 0.0)) {
        throw NonPropagatingError("kappa_1^2 and kappa_2^2 must be positive");
    }
    return cfg.omega * cfg.omega * xi1 * xi1 / (p.kappa_sq[1] * p.kappa_sq[2]) *
           (cfg.mu[1] - cfg.mu[2]) * (cfg.eps[1] + cfg.eps[2]);
}

PlaneWave::PlaneWave(const MediumConfig& cfg, const DerivedParams& params)
    : direction_(std::cos(cfg.phi), std::sin(cfg.phi)),
      amplitude_(std::sin(cfg.theta) / std::sqrt(cfg.eps[0])),
      kappa_(params.kappa[0]) {}

std::complex<double> PlaneWave::value(const Eigen::Vector2d& x) const {
    return amplitude_ * std::exp(std::complex<double>(0.0, kappa_ * x.dot(direction_)));
}

Eigen::Vector2cd PlaneWave::gradient(const Eigen::Vector2d& x) const {
    const std::complex<double> ik(0.0, kappa_);
    return (ik * value(x)) * direction_.cast<std::complex<double>>();
}

}  // namespace cylscat
