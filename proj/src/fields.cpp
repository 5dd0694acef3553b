#include "cylscat/fields.hpp"

#include <cmath>
#include <numbers>

#include "cylscat/error.hpp"
#include "cylscat/specfun.hpp"

namespace cylscat {

namespace {

constexpr double kPi = std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);

void require_region(const SolvedProblem& s, const Point& x, Region expected, const char* what) {
    const Region r = s.scatterer.classify(x);
    if (r != expected) {
        throw DomainError(std::string(what) + ": point is in " + region_name(r) + ", expected " +
                          region_name(expected));
    }
}

FieldPair annulus(const SolvedProblem& s, const Point& x) {
    const double k = s.params.kappa[1];
    const auto& d = s.densities;
    const auto& g0 = s.grids.outer();
    const auto& g1 = s.grids.inner();
    return {single_layer_potential(k, g0, d.psi1_e(), x) + single_layer_potential(k, g1, d.psi2_e(), x),
            single_layer_potential(k, g0, d.psi1_h(), x) + single_layer_potential(k, g1, d.psi2_h(), x)};
}

FieldPair core(const SolvedProblem& s, const Point& x) {
    const double k = s.params.kappa[2];
    const auto& d = s.densities;
    const auto& g1 = s.grids.inner();
    return {single_layer_potential(k, g1, d.psi3_e(s.params), x) -
                double_layer_potential(k, g1, d.phi3_e(), x),
            single_layer_potential(k, g1, d.psi3_h(s.params), x) -
                double_layer_potential(k, g1, d.phi3_h(), x)};
}

FieldPair scattered(const SolvedProblem& s, const Point& x) {
    const double k = s.params.kappa[0];
    const auto& d = s.densities;
    const auto& g0 = s.grids.outer();
    return {double_layer_potential(k, g0, d.phi0_e(), x) -
                single_layer_potential(k, g0, d.psi0_e(s.params), x),
            double_layer_potential(k, g0, d.phi0_h(), x) -
                single_layer_potential(k, g0, d.psi0_h(s.params), x)};
}

FieldPair exterior_total(const SolvedProblem& s, const Point& x) {
    FieldPair f = scattered(s, x);
    if (s.with_incident) f.e += PlaneWave(s.config, s.params).value(x);
    return f;
}

FieldPair in_region(const SolvedProblem& s, const Point& x, Region r) {
    switch (r) {
        case Region::Exterior: return exterior_total(s, x);
        case Region::Layer: return annulus(s, x);
        case Region::Core: return core(s, x);
        case Region::NearBoundary: break;
    }
    return {};
}

}  // namespace

SolvedProblem solve_scattering(const MediumConfig& cfg, const Scatterer& scatterer, int n) {
    const DerivedParams params = derive_params(cfg);
    GridPair grids(scatterer, n);
    const BoundaryOperators ops(params, grids);
    const SolveResult res =
        solve(assemble_system(params, ops, rhs_incident(cfg, params, grids)));
    return SolvedProblem{cfg,
                         params,
                         scatterer,
                         grids,
                         res.densities,
                         true,
                         res.condition_estimate,
                         res.relative_residual,
                         res.warning};
}

std::complex<double> single_layer_potential(double kappa, const CollocationGrid& g,
                                            const Eigen::VectorXcd& density, const Point& x) {
    std::complex<double> sum = 0.0;
    for (int j = 0; j < g.size(); ++j) {
        const double r = (x - g.position().col(j)).norm();
        sum += hankel1_0(kappa * r) * density[j] * g.jacobian()[j];
    }
    return (kPi / g.n()) * 0.25 * kI * sum;
}

std::complex<double> double_layer_potential(double kappa, const CollocationGrid& g,
                                            const Eigen::VectorXcd& density, const Point& x) {
    std::complex<double> sum = 0.0;
    for (int j = 0; j < g.size(); ++j) {
        const Point diff = x - g.position().col(j);
        const double r = diff.norm();
        const double q = diff.dot(g.normal().col(j));
        sum += hankel1_1(kappa * r) * (q / r) * density[j] * g.jacobian()[j];
    }
    return (kPi / g.n()) * 0.25 * kI * kappa * sum;
}

FieldPair eval_interior_annulus(const SolvedProblem& s, const Point& x) {
    require_region(s, x, Region::Layer, "eval_interior_annulus");
    return annulus(s, x);
}

FieldPair eval_core(const SolvedProblem& s, const Point& x) {
    require_region(s, x, Region::Core, "eval_core");
    return core(s, x);
}

FieldPair eval_scattered(const SolvedProblem& s, const Point& x) {
    require_region(s, x, Region::Exterior, "eval_scattered");
    return scattered(s, x);
}

FieldPair total_exterior(const SolvedProblem& s, const Point& x) {
    require_region(s, x, Region::Exterior, "total_exterior");
    return exterior_total(s, x);
}

FieldPair evaluate_any(const SolvedProblem& s, const Point& x) {
    return in_region(s, x, s.scatterer.classify(x));
}

std::vector<Point> unit_circle_directions(int count) {
    if (count < 1) throw DomainError("direction count must be positive");
    std::vector<Point> dirs;
    dirs.reserve(count);
    for (int m = 0; m < count; ++m) {
        const double t = 2.0 * kPi * m / count;
        dirs.emplace_back(std::cos(t), std::sin(t));
    }
    return dirs;
}

FarFieldSamples far_field(const SolvedProblem& s, const std::vector<Point>& directions) {
    const double k = s.params.kappa[0];
    const auto& g = s.grids.outer();
    const Eigen::VectorXcd psi0e = s.densities.psi0_e(s.params);
    const Eigen::VectorXcd psi0h = s.densities.psi0_h(s.params);
    const std::complex<double> pre = std::exp(kI * (kPi / 4.0)) / std::sqrt(8.0 * kPi * k);

    FarFieldSamples out;
    out.directions = directions;
    for (const Point& xh : directions) {
        if (std::abs(xh.norm() - 1.0) > 1e-12) throw DomainError("far-field direction must be unit");
        std::complex<double> se = 0.0, sh = 0.0;
        for (int j = 0; j < g.size(); ++j) {
            const std::complex<double> phase = std::exp(-kI * k * xh.dot(g.position().col(j)));
            const double xn = xh.dot(g.normal().col(j));
            const double w = g.jacobian()[j];
            se += phase * (-kI * k * xn * s.densities.phi0_e()[j] - psi0e[j]) * w;
            sh += phase * (-kI * k * xn * s.densities.phi0_h()[j] - psi0h[j]) * w;
        }
        out.e_inf.push_back(pre * (kPi / g.n()) * se);
        out.h_inf.push_back(pre * (kPi / g.n()) * sh);
    }
    return out;
}

FieldMap field_map(const SolvedProblem& s, const FieldMapSpec& spec) {
    if (spec.nx < 1 || spec.ny < 1) throw DomainError("field map resolution must be positive");
    if (!(spec.x_max >= spec.x_min) || !(spec.y_max >= spec.y_min)) {
        throw DomainError("field map bounds are inverted");
    }
    FieldMap map;
    map.spec = spec;
    map.near_distance = spec.near_distance >= 0.0 ? spec.near_distance
                                                  : s.scatterer.default_near_distance(s.grids.n());
    auto coord = [](double lo, double hi, int count, int i) {
        return count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
    };
    map.points.reserve(static_cast<std::size_t>(spec.nx) * spec.ny);
    for (int iy = 0; iy < spec.ny; ++iy) {
        for (int ix = 0; ix < spec.nx; ++ix) {
            const Point x(coord(spec.x_min, spec.x_max, spec.nx, ix),
                          coord(spec.y_min, spec.y_max, spec.ny, iy));
            const Region r = s.scatterer.classify(x, map.near_distance);
            map.points.push_back({x, r, in_region(s, x, r)});
        }
    }
    return map;
}

}  // namespace cylscat
