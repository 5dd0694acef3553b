#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>

#include "cylscat/csv.hpp"
#include "cylscat/error.hpp"

namespace cylscat::cli {

namespace {

constexpr std::array<const char*, 8> kDensityNames = {"phi0_e", "psi1_h", "phi0_h", "psi1_e",
                                                      "phi3_e", "psi2_h", "phi3_h", "psi2_e"};

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::ofstream open_output(const Options& opts, const std::string& name) {
    std::filesystem::create_directories(opts.out_dir);
    const std::filesystem::path path = std::filesystem::path(opts.out_dir) / name;
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    return out;
}

void write_complex(std::ostream& os, std::complex<double> z, bool with_abs) {
    os << ',' << format_real(z.real()) << ',' << format_real(z.imag());
    if (with_abs) os << ',' << format_real(std::abs(z));
}

void write_densities(std::ostream& os, const SolvedProblem& s) {
    os << "density,node,t,x,y,re,im\n";
    for (int d = 0; d < 8; ++d) {
        const CollocationGrid& g = s.grids.grid(d < 4 ? 0 : 1);
        const Eigen::VectorXcd& v = s.densities[static_cast<Density>(d)];
        for (int j = 0; j < g.size(); ++j) {
            os << kDensityNames[d] << ',' << j << ',' << format_real(g.t(j)) << ','
               << format_real(g.position()(0, j)) << ',' << format_real(g.position()(1, j));
            write_complex(os, v[j], false);
            os << '\n';
        }
    }
}

void write_far_field(std::ostream& os, const FarFieldSamples& ff) {
    os << "index,angle,x,y,re_e,im_e,abs_e,re_h,im_h,abs_h\n";
    for (std::size_t m = 0; m < ff.directions.size(); ++m) {
        const Point& d = ff.directions[m];
        double angle = std::atan2(d.y(), d.x());
        if (angle < 0.0) angle += 2.0 * std::numbers::pi;
        os << m << ',' << format_real(angle) << ',' << format_real(d.x()) << ','
           << format_real(d.y());
        write_complex(os, ff.e_inf[m], true);
        write_complex(os, ff.h_inf[m], true);
        os << '\n';
    }
}

void write_field_map(std::ostream& os, const FieldMap& map) {
    os << "x,y,region,re_e,im_e,abs_e,re_h,im_h,abs_h\n";
    for (const FieldMapPoint& p : map.points) {
        os << format_real(p.x.x()) << ',' << format_real(p.x.y()) << ',' << region_name(p.region);
        if (p.region == Region::NearBoundary) {
            os << ",,,,,,";
        } else {
            write_complex(os, p.value.e, true);
            write_complex(os, p.value.h, true);
        }
        os << '\n';
    }
}

int resolution(const Options& opts, const ScenarioConfig& cfg) {
    return opts.n ? *opts.n : cfg.n_list.back();
}

void report_solve(const Options& opts, const SolvedProblem& s, double seconds) {
    if (!s.warning.empty()) std::cerr << "warning: " << s.warning << '\n';
    if (opts.quiet) return;
    std::cout << "n = " << s.grids.n() << ", condition estimate = " << s.condition_estimate
              << ", relative residual = " << s.relative_residual << ", solve time = " << seconds
              << " s\n";
}

SolvedProblem solve_configured(const Options& opts, const ScenarioConfig& cfg) {
    const int n = resolution(opts, cfg);
    const Timer timer;
    SolvedProblem s = cfg.mode == Mode::Analytic
                          ? solve_analytic(*cfg.analytic, n)
                          : solve_scattering(cfg.medium, Scatterer(cfg.outer, cfg.inner), n);
    report_solve(opts, s, timer.seconds());
    return s;
}

const AnalyticScenario& require_analytic(const ScenarioConfig& cfg, const char* command) {
    if (cfg.mode != Mode::Analytic || !cfg.analytic) {
        throw ConfigError(std::string(command) + " needs [run] mode = analytic");
    }
    return *cfg.analytic;
}

std::vector<int> n_values(const Options& opts, const ScenarioConfig& cfg) {
    return opts.n ? std::vector<int>{*opts.n} : cfg.n_list;
}

// Maps library exceptions onto exit codes.
int guarded(const Options& opts, const std::function<void(const ScenarioConfig&)>& body) {
    try {
        if (opts.n && *opts.n < 1) throw ConfigError("--n must be positive");
        const ScenarioConfig cfg = load_config(opts.config_path);
        body(cfg);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidMaterialError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const NonPropagatingError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const GeometryError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace

int cmd_solve(const Options& opts) {
    return guarded(opts, [&](const ScenarioConfig& cfg) {
        if (cfg.mode != Mode::Incident) throw ConfigError("solve needs [run] mode = incident");
        const SolvedProblem s = solve_configured(opts, cfg);
        {
            auto out = open_output(opts, "densities.csv");
            write_densities(out, s);
        }
        {
            auto out = open_output(opts, "farfield.csv");
            write_far_field(out, far_field(s, unit_circle_directions(cfg.far_directions)));
        }
        if (cfg.fieldmap) {
            auto out = open_output(opts, "fieldmap.csv");
            write_field_map(out, field_map(s, *cfg.fieldmap));
        }
    });
}

int cmd_verify(const Options& opts) {
    return guarded(opts, [&](const ScenarioConfig& cfg) {
        const AnalyticScenario& scenario = require_analytic(cfg, "verify");
        const Timer timer;
        const ConvergenceReport report = convergence_study(scenario, n_values(opts, cfg));
        {
            auto out = open_output(opts, "table.csv");
            write_table_csv(out, report);
        }
        {
            auto out = open_output(opts, "convergence.csv");
            write_convergence_csv(out, report);
        }
        if (!opts.quiet) {
            for (const AnalyticRun& run : report.runs) {
                std::cout << "n = " << run.n << ", condition estimate = " << run.condition_estimate
                          << ", relative residual = " << run.relative_residual << '\n';
            }
            std::cout << "total time = " << timer.seconds() << " s\n";
        }
    });
}

int cmd_fieldmap(const Options& opts) {
    return guarded(opts, [&](const ScenarioConfig& cfg) {
        const SolvedProblem s = solve_configured(opts, cfg);
        auto out = open_output(opts, "fieldmap.csv");
        write_field_map(out, field_map(s, cfg.fieldmap.value_or(FieldMapSpec{})));
    });
}

int cmd_convergence(const Options& opts) {
    return guarded(opts, [&](const ScenarioConfig& cfg) {
        const AnalyticScenario& scenario = require_analytic(cfg, "convergence");
        const ConvergenceReport report = convergence_study(scenario, n_values(opts, cfg));
        auto out = open_output(opts, "convergence.csv");
        write_convergence_csv(out, report);
        if (!opts.quiet) write_convergence_csv(std::cout, report);
    });
}

}  // namespace cylscat::cli
