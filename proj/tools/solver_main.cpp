#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "efk/config.hpp"
#include "efk/output.hpp"
#include "efk/scenarios.hpp"

namespace {

int cmd_run(const std::string& scenario, const std::string& config_path,
            const std::string& out_dir, int n, double tau, double gamma, bool svg) {
    efk::RunConfig cfg;
    try {
        if (!config_path.empty())
            cfg = efk::load_config_file(config_path);
        else
            cfg = efk::scenario_config(scenario);
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (n > 0) cfg.n = n;
        if (tau > 0.0) cfg.scheme.tau = tau;
        if (gamma >= 0.0) {
            cfg.problem.gamma = gamma;
            cfg.scenario.clear();  // gamma override turns a scenario into a plain run
        }
        if (svg) cfg.svg = true;
        cfg.problem.validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    const efk::ScenarioOutcome outcome = efk::run_config(cfg);
    if (outcome.exit_code != 0)
        std::cerr << "error: " << outcome.message << "\n";
    else
        std::cout << "ok (tau = " << efk::format_sig(outcome.tau_used, 6)
                  << ", halvings = " << outcome.halvings << ")\n";
    return outcome.exit_code;
}

int cmd_basis(int m, int n, double L) {
    try {
        const efk::Eigenbasis basis =
            m == 1 ? efk::sine_basis(L, n) : efk::beam_basis(L, n);
        std::printf("j,k,lambda\n");
        for (int j = 1; j <= n; ++j) {
            const double k = m == 1 ? j * M_PI / L : basis.kappas[j - 1] / L;
            std::printf("%d,%s,%s\n", j, efk::format_sig(k, 12).c_str(),
                        efk::format_sig(basis.lambdas[j - 1], 12).c_str());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral Galerkin solver for d_t u + (-1)^m D^{2m} u + u^3 - u = f"};
    app.require_subcommand(1);

    std::string scenario, config_path, out_dir;
    int n = 0;
    double tau = 0.0, gamma = -1.0;
    bool svg = false;

    auto* run = app.add_subcommand("run", "Run a named scenario or a config file");
    run->add_option("scenario", scenario, "Scenario name");
    run->add_option("--config", config_path, "Config file path");
    run->add_option("--out", out_dir, "Output directory");
    run->add_option("--n", n, "Basis size override");
    run->add_option("--tau", tau, "Time step override");
    run->add_option("--gamma", gamma, "Biharmonic coefficient override");
    run->add_flag("--svg", svg, "Also write SVG profile plots");

    auto* converge = app.add_subcommand("converge", "Run the Galerkin convergence ladder");
    converge->add_option("--out", out_dir, "Output directory");

    int basis_m = 1, basis_n = 8;
    double basis_L = 1.0;
    auto* basis = app.add_subcommand("basis", "Dump eigendata CSV to stdout");
    basis->add_option("--m", basis_m, "Operator order (1 or 2)")->required();
    basis->add_option("--n", basis_n, "Number of modes")->required();
    basis->add_option("--L", basis_L, "Domain length")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (run->parsed()) {
        if (scenario.empty() == config_path.empty()) {
            std::cerr << "error: give exactly one of SCENARIO or --config PATH\n";
            return 1;
        }
        return cmd_run(scenario, config_path, out_dir, n, tau, gamma, svg);
    }
    if (converge->parsed()) {
        efk::RunConfig cfg = efk::scenario_config("converge");
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        const efk::ScenarioOutcome outcome = efk::run_config(cfg);
        if (outcome.exit_code != 0) std::cerr << "error: " << outcome.message << "\n";
        return outcome.exit_code;
    }
    if (basis_m != 1 && basis_m != 2) {
        std::cerr << "error: --m must be 1 or 2\n";
        return 1;
    }
    return cmd_basis(basis_m, basis_n, basis_L);
}
