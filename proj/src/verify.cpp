#include "cylscat/verify.hpp"

#include <cmath>
#include <numbers>

#include "cylscat/csv.hpp"
#include "cylscat/error.hpp"
#include "cylscat/specfun.hpp"

namespace cylscat {

namespace {

constexpr double kPi = std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);

struct RegionSources {
    double kappa;
    Point ze, zh;
};

RegionSources sources_for(const AnalyticScenario& s, const DerivedParams& p, Region region) {
    const PointSources& z = s.sources;
    switch (region) {
        case Region::Exterior: return {p.kappa[0], z.z1, z.z2};
        case Region::Layer: return {p.kappa[1], z.z3, z.z4};
        case Region::Core: return {p.kappa[2], z.z3, z.z4};
        case Region::NearBoundary: break;
    }
    throw DomainError("exact fields need a definite region");
}

double source_distance(const Point& x, const Point& z) {
    const double r = (x - z).norm();
    if (!(r > 0.0)) throw DomainError("exact field evaluated at a source point");
    return r;
}

std::complex<double> hankel_field(double kappa, const Point& x, const Point& z) {
    return hankel1_0(kappa * source_distance(x, z));
}

Eigen::Vector2cd hankel_gradient(double kappa, const Point& x, const Point& z) {
    const double r = source_distance(x, z);
    const Point unit = (x - z) / r;
    const std::complex<double> d = -kappa * hankel1_1(kappa * r);
    return Eigen::Vector2cd(d * unit.x(), d * unit.y());
}

Point centroid(const BoundaryCurve& c) {
    // Area centroid by the trapezoid rule on the Green's formula integrals.
    constexpr int m = 4096;
    double a = 0.0, cx = 0.0, cy = 0.0;
    for (int j = 0; j < m; ++j) {
        const double t = 2.0 * kPi * j / m;
        const Point x = c.position(t), d = c.first_derivative(t);
        const double w = x.x() * d.y() - x.y() * d.x();
        a += w;
        cx += x.x() * w;
        cy += x.y() * w;
    }
    return Point(cx, cy) / (1.5 * a);
}

double l2(const std::vector<std::complex<double>>& err, const std::vector<double>& w) {
    double sum = 0.0;
    for (std::size_t i = 0; i < err.size(); ++i) sum += w[i] * std::norm(err[i]);
    return std::sqrt(sum);
}

}  // namespace

const std::array<const char*, kFieldCount> kFieldNames = {"e0", "h0", "e1", "h1",
                                                          "e2", "h2", "einf", "hinf"};

AnalyticScenario case_one() {
    MediumConfig m;
    m.eps = {1.0, 2.0, 3.0};
    m.mu = {1.0, 2.0, 3.0};
    m.omega = 1.0;
    m.theta = kPi / 3.0;
    AnalyticScenario s{"case1",
                       Scatterer(make_circle(0.5), make_peanut()),
                       m,
                       {Point(0.1, 0.3), Point(-0.1, 0.35), Point(-0.3, 0.55), Point(0.15, 0.6)},
                       Point(0.2, 0.7),
                       Point(0.0, -0.3),
                       Point(0.2, 0.0),
                       Point(1.0, 0.0),
                       0.75,
                       std::nullopt};
    return s;
}

AnalyticScenario case_two() {
    MediumConfig m;
    m.eps = {1.0, 3.0, 4.0};
    m.mu = {1.0, 2.0, 3.0};
    m.omega = 2.0;
    m.theta = kPi / 6.0;
    AnalyticScenario s{"case2",
                       Scatterer(make_apple(), make_kite()),
                       m,
                       {Point(0.15, -0.15), Point(-0.05, -0.2), Point(-0.45, 0.7), Point(0.5, 0.5)},
                       Point(0.2, 0.7),
                       Point(0.3, 0.05),
                       Point(-0.2, 0.15),
                       Point(1.0, 0.0),
                       0.75,
                       std::nullopt};
    s.exterior_radius = 1.05;  // max |x| on the apple is about 0.703
    // The layer is thin around the left tip of the kite; sample its wide
    // lower part instead of a curve that follows the whole annulus.
    s.layer_circle = SampleCircle{Point(0.13, -0.17), 0.18};
    return s;
}

void validate_scenario(const AnalyticScenario& s) {
    const Scatterer& sc = s.scatterer;
    auto inside = [&](const Point& p) { return sc.classify(p) != Region::Exterior; };
    if (!inside(s.sources.z1) || !inside(s.sources.z2)) {
        throw DomainError(s.name + ": z1 and z2 must lie inside the outer curve");
    }
    if (inside(s.sources.z3) || inside(s.sources.z4)) {
        throw DomainError(s.name + ": z3 and z4 must lie outside the outer curve");
    }
    if (sc.classify(s.probe_exterior) != Region::Exterior || sc.classify(s.probe_layer) != Region::Layer ||
        sc.classify(s.probe_core) != Region::Core) {
        throw DomainError(s.name + ": probe point in the wrong region");
    }
    if (std::abs(s.far_direction.norm() - 1.0) > 1e-12) {
        throw DomainError(s.name + ": far-field direction must be a unit vector");
    }
}

FieldPair exact_fields(const AnalyticScenario& s, const Point& x, Region region) {
    const RegionSources rs = sources_for(s, derive_params(s.medium), region);
    return {hankel_field(rs.kappa, x, rs.ze), hankel_field(rs.kappa, x, rs.zh)};
}

std::array<Eigen::Vector2cd, 2> exact_gradients(const AnalyticScenario& s, const Point& x,
                                                Region region) {
    const RegionSources rs = sources_for(s, derive_params(s.medium), region);
    return {hankel_gradient(rs.kappa, x, rs.ze), hankel_gradient(rs.kappa, x, rs.zh)};
}

FieldPair exact_far_field(const AnalyticScenario& s, const Point& xhat) {
    if (std::abs(xhat.norm() - 1.0) > 1e-12) throw DomainError("direction must be a unit vector");
    const double k = derive_params(s.medium).kappa[0];
    const std::complex<double> pre = -4.0 * kI * std::exp(kI * (kPi / 4.0)) / std::sqrt(8.0 * kPi * k);
    return {pre * std::exp(-kI * k * xhat.dot(s.sources.z1)),
            pre * std::exp(-kI * k * xhat.dot(s.sources.z2))};
}

SamplingSet sampling_set(const AnalyticScenario& s, double margin) {
    const int m = s.samples;
    if (m < 1 || s.far_directions < 1) throw DomainError("sample counts must be positive");
    const BoundaryCurve& g0 = s.scatterer.outer();
    const BoundaryCurve& g1 = s.scatterer.inner();
    const Point c = centroid(g1);
    const double dt = 2.0 * kPi / m;

    SamplingSet set;
    auto accept = [&](const Point& p, Region expected) {
        if (s.scatterer.classify(p, margin) != expected) {
            throw DomainError(s.name + ": sampling point outside " + region_name(expected) +
                              " or within the boundary margin");
        }
    };
    for (int j = 0; j < m; ++j) {
        const double t = j * dt;
        const Point pe = s.exterior_radius * Point(std::cos(t), std::sin(t));
        accept(pe, Region::Exterior);
        set.exterior.push_back(pe);
        set.exterior_w.push_back(dt * s.exterior_radius);

        if (s.layer_circle) {
            const SampleCircle& lc = *s.layer_circle;
            set.layer.push_back(lc.center + lc.radius * Point(std::cos(t), std::sin(t)));
            set.layer_w.push_back(dt * lc.radius);
        } else {
            set.layer.push_back(0.5 * (g0.position(t) + g1.position(t)));
            set.layer_w.push_back(dt * 0.5 * (g0.first_derivative(t) + g1.first_derivative(t)).norm());
        }
        accept(set.layer.back(), Region::Layer);

        const Point pc = c + s.core_scale * (g1.position(t) - c);
        accept(pc, Region::Core);
        set.core.push_back(pc);
        set.core_w.push_back(dt * s.core_scale * g1.jacobian(t));
    }
    set.directions = unit_circle_directions(s.far_directions);
    return set;
}

FieldValues exact_probe_values(const AnalyticScenario& s) {
    FieldValues v{};
    const FieldPair ext = exact_fields(s, s.probe_exterior, Region::Exterior);
    const FieldPair lay = exact_fields(s, s.probe_layer, Region::Layer);
    const FieldPair cor = exact_fields(s, s.probe_core, Region::Core);
    const FieldPair far = exact_far_field(s, s.far_direction);
    v[kE0] = ext.e, v[kH0] = ext.h;
    v[kE1] = lay.e, v[kH1] = lay.h;
    v[kE2] = cor.e, v[kH2] = cor.h;
    v[kEinf] = far.e, v[kHinf] = far.h;
    return v;
}

SolvedProblem solve_analytic(const AnalyticScenario& s, int n) {
    validate_scenario(s);
    const DerivedParams params = derive_params(s.medium);
    GridPair grids(s.scatterer, n);
    const BoundaryOperators ops(params, grids);
    const SolveResult res =
        solve(assemble_system(params, ops, rhs_analytic(params, grids, s.sources)));
    return SolvedProblem{s.medium, params, s.scatterer, grids, res.densities, false,
                         res.condition_estimate, res.relative_residual, res.warning};
}

AnalyticRun run_analytic_case(const AnalyticScenario& s, int n) {
    return run_analytic_case(s, n, sampling_set(s));
}

AnalyticRun run_analytic_case(const AnalyticScenario& s, int n, const SamplingSet& samples) {
    const SolvedProblem solved = solve_analytic(s, n);
    AnalyticRun run{n, {}, {}, solved.condition_estimate, solved.relative_residual,
                    solved.densities};

    const FieldPair ext = eval_scattered(solved, s.probe_exterior);
    const FieldPair lay = eval_interior_annulus(solved, s.probe_layer);
    const FieldPair cor = eval_core(solved, s.probe_core);
    const FarFieldSamples far = far_field(solved, {s.far_direction});
    run.probes[kE0] = ext.e, run.probes[kH0] = ext.h;
    run.probes[kE1] = lay.e, run.probes[kH1] = lay.h;
    run.probes[kE2] = cor.e, run.probes[kH2] = cor.h;
    run.probes[kEinf] = far.e_inf[0], run.probes[kHinf] = far.h_inf[0];

    auto region_errors = [&](const std::vector<Point>& pts, const std::vector<double>& w,
                             Region region, FieldPair (*eval)(const SolvedProblem&, const Point&),
                             int ie, int ih) {
        std::vector<std::complex<double>> de, dh;
        for (const Point& p : pts) {
            const FieldPair num = eval(solved, p);
            const FieldPair ex = exact_fields(s, p, region);
            de.push_back(num.e - ex.e);
            dh.push_back(num.h - ex.h);
        }
        run.errors[ie] = l2(de, w);
        run.errors[ih] = l2(dh, w);
    };
    region_errors(samples.exterior, samples.exterior_w, Region::Exterior, eval_scattered, kE0, kH0);
    region_errors(samples.layer, samples.layer_w, Region::Layer, eval_interior_annulus, kE1, kH1);
    region_errors(samples.core, samples.core_w, Region::Core, eval_core, kE2, kH2);

    const FarFieldSamples ff = far_field(solved, samples.directions);
    std::vector<std::complex<double>> de, dh;
    for (std::size_t m = 0; m < samples.directions.size(); ++m) {
        const FieldPair ex = exact_far_field(s, samples.directions[m]);
        de.push_back(ff.e_inf[m] - ex.e);
        dh.push_back(ff.h_inf[m] - ex.h);
    }
    const std::vector<double> w(samples.directions.size(), 2.0 * kPi / samples.directions.size());
    run.errors[kEinf] = l2(de, w);
    run.errors[kHinf] = l2(dh, w);
    return run;
}

ConvergenceReport convergence_study(const AnalyticScenario& s, const std::vector<int>& ns) {
    if (ns.empty()) throw DomainError("convergence study needs at least one n");
    for (std::size_t i = 1; i < ns.size(); ++i) {
        if (ns[i] <= ns[i - 1]) throw DomainError("n values must be strictly increasing");
    }
    const SamplingSet samples = sampling_set(s);
    ConvergenceReport report;
    for (int n : ns) report.runs.push_back(run_analytic_case(s, n, samples));
    report.exact = exact_probe_values(s);
    return report;
}

Eigen::VectorXcd transmission_data(const AnalyticScenario& s, const GridPair& grids) {
    const DerivedParams p = derive_params(s.medium);
    const int size = grids.block_size();
    Eigen::VectorXcd f(8 * size);

    // Trace quantities (e, mu~ w dn h + beta~ dtau e, h, eps~ w dn e - beta~ dtau h)
    // of the exact field on one side of the curve, medium index m.
    auto traces = [&](const CollocationGrid& g, int j, Region side, int m) {
        const Point x = g.position().col(j);
        const FieldPair v = exact_fields(s, x, side);
        const auto grad = exact_gradients(s, x, side);
        const Eigen::Vector2cd nu = g.normal().col(j).cast<std::complex<double>>();
        const Eigen::Vector2cd tau = g.tangent().col(j).cast<std::complex<double>>();
        const std::complex<double> dn_e = nu.dot(grad[0]), dn_h = nu.dot(grad[1]);
        const std::complex<double> dt_e = tau.dot(grad[0]), dt_h = tau.dot(grad[1]);
        return std::array<std::complex<double>, 4>{
            v.e, p.mu_t[m] * p.omega * dn_h + p.beta_t[m] * dt_e, v.h,
            p.eps_t[m] * p.omega * dn_e - p.beta_t[m] * dt_h};
    };
    for (int curve = 0; curve < 2; ++curve) {
        const CollocationGrid& g = grids.grid(curve);
        const Region other = curve == 0 ? Region::Exterior : Region::Core;
        const int m_other = curve == 0 ? 0 : 2;
        for (int j = 0; j < size; ++j) {
            const auto layer = traces(g, j, Region::Layer, 1);
            const auto nb = traces(g, j, other, m_other);
            for (int row = 0; row < 4; ++row) {
                f[(4 * curve + row) * size + j] = layer[row] - nb[row];
            }
        }
    }
    return f;
}

void write_convergence_csv(std::ostream& os, const ConvergenceReport& r) {
    os << "n";
    for (const char* name : kFieldNames) os << ",err_" << name;
    os << '\n';
    for (const AnalyticRun& run : r.runs) {
        os << run.n;
        for (double e : run.errors) os << ',' << format_real(e);
        os << '\n';
    }
}

void write_table_csv(std::ostream& os, const ConvergenceReport& r) {
    os << "n";
    for (const char* name : kFieldNames) os << ",re_" << name << ",im_" << name;
    os << '\n';
    auto row = [&os](const std::string& label, const FieldValues& v) {
        os << label;
        for (const auto& z : v) os << ',' << format_real(z.real()) << ',' << format_real(z.imag());
        os << '\n';
    };
    for (const AnalyticRun& run : r.runs) row(std::to_string(run.n), run.probes);
    row("exact", r.exact);
}

}  // namespace cylscat
