#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace cylscat::cli;
    CLI::App app{"Two-layer cylinder transmission solver"};
    app.require_subcommand(1);

    Options opts;
    int n = 0;
    auto add = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--config", opts.config_path, "Scenario INI file")->required();
        sub->add_option("--n", n, "Override the resolution (2n nodes per curve)");
        sub->add_option("--out", opts.out_dir, "Output directory")->capture_default_str();
        sub->add_flag("--quiet", opts.quiet, "Suppress progress output");
        return sub;
    };
    CLI::App* solve = add("solve", "Incident plane wave: densities, far field, optional field map");
    CLI::App* verify = add("verify", "Analytic test: probe table and convergence report");
    CLI::App* fieldmap = add("fieldmap", "Field map on a Cartesian grid");
    CLI::App* convergence = add("convergence", "Analytic test: convergence report only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (n != 0) opts.n = n;

    if (solve->parsed()) return cmd_solve(opts);
    if (verify->parsed()) return cmd_verify(opts);
    if (fieldmap->parsed()) return cmd_fieldmap(opts);
    if (convergence->parsed()) return cmd_convergence(opts);
    return 2;
}
