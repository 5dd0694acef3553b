#pragma once

#include <complex>
#include <vector>

#include "cylscat/boundary_ops.hpp"
#include "cylscat/geometry.hpp"
#include "cylscat/media.hpp"
#include "cylscat/system.hpp"

namespace cylscat {

/// Everything needed to evaluate fields after a solve.
struct SolvedProblem {
    MediumConfig config;
    DerivedParams params;
    Scatterer scatterer;
    GridPair grids;
    DensitySet densities;
    /// Whether the exterior total field includes the incident plane wave.
    bool with_incident = true;
    double condition_estimate = 0.0;
    double relative_residual = 0.0;
    std::string warning;
};

/// Assembles and solves the incident-wave system.
SolvedProblem solve_scattering(const MediumConfig& cfg, const Scatterer& scatterer, int n);

struct FieldPair {
    std::complex<double> e, h;
};

// Representation formulas evaluated with the trapezoid rule. Each checks the
// region of x and throws DomainError if it does not match.

/// S_110 psi1 + S_111 psi2 with kappa_1 kernels, x in Omega1.
FieldPair eval_interior_annulus(const SolvedProblem& s, const Point& x);
/// S_221 psi3 - D_221 phi3 with kappa_2 kernels, x in Omega2.
FieldPair eval_core(const SolvedProblem& s, const Point& x);
/// D_000 phi0 - S_000 psi0 with kappa_0 kernels, x in Omega0.
FieldPair eval_scattered(const SolvedProblem& s, const Point& x);
/// Scattered plus incident field (h_inc = 0), x in Omega0.
FieldPair total_exterior(const SolvedProblem& s, const Point& x);

/// Plain trapezoid layer potentials at an off-curve point.
std::complex<double> single_layer_potential(double kappa, const CollocationGrid& g,
                                            const Eigen::VectorXcd& density, const Point& x);
std::complex<double> double_layer_potential(double kappa, const CollocationGrid& g,
                                            const Eigen::VectorXcd& density, const Point& x);

struct FarFieldSamples {
    std::vector<Point> directions;
    std::vector<std::complex<double>> e_inf, h_inf;
};

/// count equispaced unit vectors starting at (1, 0).
std::vector<Point> unit_circle_directions(int count);

/// Far-field pattern of the scattered fields. Throws DomainError for
/// non-unit directions.
FarFieldSamples far_field(const SolvedProblem& s, const std::vector<Point>& directions);

struct FieldMapSpec {
    double x_min = -1.0, x_max = 1.0;
    double y_min = -1.0, y_max = 1.0;
    int nx = 100, ny = 100;
    /// Points closer than this to a curve are masked; negative selects
    /// the default of one arclength grid spacing.
    double near_distance = -1.0;
};

struct FieldMapPoint {
    Point x;
    Region region;
    /// Zero for masked (NearBoundary) points.
    FieldPair value;
};

struct FieldMap {
    FieldMapSpec spec;
    double near_distance = 0.0;
    /// Row-major, y outer: points[iy * nx + ix].
    std::vector<FieldMapPoint> points;
};

/// Total field in Omega0, interior fields in Omega1 and Omega2.
FieldMap field_map(const SolvedProblem& s, const FieldMapSpec& spec);

/// Field at x according to its region (total field outside). NearBoundary is
/// treated by plain evaluation in the region containing x.
FieldPair evaluate_any(const SolvedProblem& s, const Point& x);

}  // namespace cylscat
