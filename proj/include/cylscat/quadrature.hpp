#pragma once

#include <complex>

#include <Eigen/Core>

#include "cylscat/geometry.hpp"

namespace cylscat {

using cplx = std::complex<double>;

/// (pi/n) sum_j values_j jacobians_j over the 2n equispaced nodes.
cplx trapezoid(const Eigen::VectorXcd& values, const Eigen::VectorXd& jacobians);
double trapezoid(const Eigen::VectorXd& values, const Eigen::VectorXd& jacobians);

/// Weights R_ij for int_0^{2pi} ln(4 sin^2((t_i - tau)/2)) f(tau) dtau
/// ~ sum_j R_ij f(t_j). Depends on (i - j) mod 2n only.
class LogWeights {
public:
    explicit LogWeights(int n);

    int n() const { return n_; }
    int size() const { return 2 * n_; }
    double operator()(int i, int j) const;
    /// Dense 2n x 2n matrix.
    Eigen::MatrixXd matrix() const;

private:
    int n_;
    Eigen::VectorXd row_;  // R for i - j = 0, 1, ..., 2n-1
};

LogWeights log_weights(int n);

/// Differentiation matrix of the degree-<n trigonometric interpolant on the
/// 2n-point grid: D_ij = (-1)^(i-j) cot((t_i - t_j)/2) / 2, D_ii = 0.
class SpectralDerivative {
public:
    explicit SpectralDerivative(int n);

    int n() const { return n_; }
    const Eigen::MatrixXd& matrix() const { return d_; }
    Eigen::VectorXcd apply(const Eigen::VectorXcd& values) const { return d_ * values; }
    Eigen::VectorXd apply(const Eigen::VectorXd& values) const { return d_ * values; }

private:
    int n_;
    Eigen::MatrixXd d_;
};

/// d/dt of grid values (size must be even).
Eigen::VectorXcd spectral_diff(const Eigen::VectorXcd& values);
Eigen::VectorXd spectral_diff(const Eigen::VectorXd& values);

/// Arclength derivative (1/|x'(t)|) d/dt on a collocation grid.
Eigen::VectorXcd tangential_derivative(const CollocationGrid& grid, const Eigen::VectorXcd& values);
Eigen::VectorXd tangential_derivative(const CollocationGrid& grid, const Eigen::VectorXd& values);
/// Matrix form: diag(1/|x'|) D.
Eigen::MatrixXd tangential_derivative_matrix(const CollocationGrid& grid);

}  // namespace cylscat
