#include "cylscat/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cylscat/error.hpp"

namespace cylscat {

namespace {

constexpr double kPi = std::numbers::pi;

int half_size(Eigen::Index size) {
    if (size < 2 || size % 2 != 0) {
        throw DomainError("grid function must have an even number (>= 2) of values, got " +
                          std::to_string(size));
    }
    return static_cast<int>(size / 2);
}

void check_sizes(Eigen::Index a, Eigen::Index b) {
    if (a != b) throw DomainError("size mismatch between values and jacobians");
    half_size(a);
}

}  // namespace

cplx trapezoid(const Eigen::VectorXcd& values, const Eigen::VectorXd& jacobians) {
    check_sizes(values.size(), jacobians.size());
    const int n = half_size(values.size());
    return (kPi / n) * (values.array() * jacobians.array().cast<cplx>()).sum();
}

double trapezoid(const Eigen::VectorXd& values, const Eigen::VectorXd& jacobians) {
    check_sizes(values.size(), jacobians.size());
    const int n = half_size(values.size());
    return (kPi / n) * (values.array() * jacobians.array()).sum();
}

LogWeights::LogWeights(int n) : n_(n) {
    if (n < 1) throw DomainError("log_weights: n must be >= 1");
    row_.resize(2 * n);
    for (int d = 0; d < 2 * n; ++d) {
        const double s = d * kPi / n;
        double sum = 0.0;
        for (int m = 1; m < n; ++m) sum += std::cos(m * s) / m;
        row_[d] = -(2.0 * kPi / n) * sum - (kPi / (static_cast<double>(n) * n)) * std::cos(n * s);
    }
}

double LogWeights::operator()(int i, int j) const {
    const int size = 2 * n_;
    return row_[((i - j) % size + size) % size];
}

Eigen::MatrixXd LogWeights::matrix() const {
    const int size = 2 * n_;
    Eigen::MatrixXd r(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) r(i, j) = (*this)(i, j);
    return r;
}

LogWeights log_weights(int n) { return LogWeights(n); }

SpectralDerivative::SpectralDerivative(int n) : n_(n) {
    if (n < 1) throw DomainError("spectral derivative: n must be >= 1");
    const int size = 2 * n;
    d_ = Eigen::MatrixXd::Zero(size, size);
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            if (i == j) continue;
            const double half = 0.5 * (i - j) * kPi / n;
            const double sign = ((i - j) % 2 == 0) ? 1.0 : -1.0;
            d_(i, j) = 0.5 * sign * std::cos(half) / std::sin(half);
        }
    }
}

Eigen::VectorXcd spectral_diff(const Eigen::VectorXcd& values) {
    return SpectralDerivative(half_size(values.size())).apply(values);
}

Eigen::VectorXd spectral_diff(const Eigen::VectorXd& values) {
    return SpectralDerivative(half_size(values.size())).apply(values);
}

Eigen::MatrixXd tangential_derivative_matrix(const CollocationGrid& grid) {
    const SpectralDerivative d(grid.n());
    return grid.jacobian().cwiseInverse().asDiagonal() * d.matrix();
}

Eigen::VectorXcd tangential_derivative(const CollocationGrid& grid, const Eigen::VectorXcd& values) {
    if (values.size() != grid.size()) throw DomainError("tangential_derivative: size mismatch");
    return spectral_diff(values).cwiseQuotient(grid.jacobian().cast<cplx>());
}

Eigen::VectorXd tangential_derivative(const CollocationGrid& grid, const Eigen::VectorXd& values) {
    if (values.size() != grid.size()) throw DomainError("tangential_derivative: size mismatch");
    return spectral_diff(values).cwiseQuotient(grid.jacobian());
}

}  // namespace cylscat
