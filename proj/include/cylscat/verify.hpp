#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cylscat/fields.hpp"
#include "cylscat/system.hpp"

namespace cylscat {

struct SampleCircle {
    Point center;
    double radius;
};

/// Point-source test problem: the exact fields are Hankel functions centred at
/// sources on the far side of each interface, so the interface data are known
/// in closed form.
struct AnalyticScenario {
    std::string name;
    Scatterer scatterer;
    MediumConfig medium;
    PointSources sources;

    Point probe_exterior, probe_layer, probe_core;
    Point far_direction{1.0, 0.0};

    // Error sampling: circle |x| = exterior_radius in Omega0; in Omega1 the
    // average of the two parametrizations unless layer_circle is set; in
    // Omega2 the inner curve scaled by core_scale about its centroid.
    double exterior_radius = 1.0;
    std::optional<SampleCircle> layer_circle;
    double core_scale = 0.5;
    int samples = 256;
    int far_directions = 64;
};

/// Circle of radius 0.5 around a peanut; materials (1,1), (2,2), (3,3);
/// omega = 1, theta = pi/3.
AnalyticScenario case_one();
/// Apple around a kite; materials (1,1), (3,2), (4,3); omega = 2, theta = pi/6.
AnalyticScenario case_two();

/// Throws DomainError unless z1, z2 lie inside Gamma_0 and z3, z4 outside it.
void validate_scenario(const AnalyticScenario& s);

/// Exact fields of the scenario in the given region (Exterior, Layer or Core).
/// Throws DomainError at a source point.
FieldPair exact_fields(const AnalyticScenario& s, const Point& x, Region region);
/// Gradients of exact_fields: {grad e, grad h}.
std::array<Eigen::Vector2cd, 2> exact_gradients(const AnalyticScenario& s, const Point& x,
                                                Region region);

/// (-4i e^{i pi/4} / sqrt(8 pi kappa_0)) e^{-i kappa_0 xhat.z}, z = z1 for e, z2 for h.
FieldPair exact_far_field(const AnalyticScenario& s, const Point& xhat);

/// Field indices in error arrays and tables.
enum FieldIndex { kE0, kH0, kE1, kH1, kE2, kH2, kEinf, kHinf, kFieldCount };
extern const std::array<const char*, kFieldCount> kFieldNames;

using FieldValues = std::array<std::complex<double>, kFieldCount>;
using FieldErrors = std::array<double, kFieldCount>;

struct SamplingSet {
    std::vector<Point> exterior, layer, core;
    /// Trapezoid weights (arclength) for each sample set.
    std::vector<double> exterior_w, layer_w, core_w;
    std::vector<Point> directions;
};

/// Builds the sample points and checks each lies in its region at least
/// `margin` away from both curves.
SamplingSet sampling_set(const AnalyticScenario& s, double margin = 0.02);

/// Assembles and solves the analytic problem at resolution n; the returned
/// problem carries no incident wave.
SolvedProblem solve_analytic(const AnalyticScenario& s, int n);

struct AnalyticRun {
    int n = 0;
    FieldValues probes{};
    FieldErrors errors{};
    double condition_estimate = 0.0;
    double relative_residual = 0.0;
    DensitySet densities;
};

/// Solves the analytic problem at resolution n and measures L2 errors.
AnalyticRun run_analytic_case(const AnalyticScenario& s, int n);
/// Same, with a precomputed sampling set.
AnalyticRun run_analytic_case(const AnalyticScenario& s, int n, const SamplingSet& samples);

/// Exact values at the scenario probes.
FieldValues exact_probe_values(const AnalyticScenario& s);

struct ConvergenceReport {
    std::vector<AnalyticRun> runs;
    FieldValues exact{};
};

/// Throws DomainError unless `ns` is non-empty and strictly increasing.
ConvergenceReport convergence_study(const AnalyticScenario& s, const std::vector<int>& ns);

/// Interface data obtained by applying the transmission operators to the
/// exact one-sided traces at the collocation nodes (layer minus neighbour).
Eigen::VectorXcd transmission_data(const AnalyticScenario& s, const GridPair& grids);

/// Columns n, err_e0, ..., err_hinf.
void write_convergence_csv(std::ostream& os, const ConvergenceReport& r);
/// One row per n plus an "exact" row; re/im columns for each probe value.
void write_table_csv(std::ostream& os, const ConvergenceReport& r);

}  // namespace cylscat
