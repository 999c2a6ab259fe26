// End-to-end acceptance suite: one pass/fail line per criterion.
// Exit code 0 iff every criterion passes.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "efk/config.hpp"
#include "efk/diagnostics.hpp"
#include "efk/output.hpp"
#include "efk/scenarios.hpp"

using namespace efk;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %s: %s\n", pass ? "PASS" : "FAIL", name.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

struct Run {
    Eigenbasis basis;
    Trajectory traj;
};

Run run_registered(const std::string& name) {
    const RunConfig cfg = scenario_config(name);
    Run run{cfg.problem.m == 2 ? beam_basis(cfg.problem.L, cfg.n)
                               : sine_basis(cfg.problem.L, cfg.n),
            {}};
    const QuadratureRule rule =
        default_rule(cfg.problem.L, cfg.n, cfg.problem.u0.breakpoints(cfg.problem.L));
    run.traj = integrate(run.basis, rule, cfg.problem, cfg.scheme);
    return run;
}

bool checks_pass(const std::vector<AuditCheck>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string worst_check(const std::vector<AuditCheck>& checks) {
    std::string out;
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& c : checks)
        if (c.margin < worst) {
            worst = c.margin;
            out = c.name + " margin " + format_sig(c.margin, 6);
        }
    return checks.empty() ? "no checks" : out;
}

ScenarioOutcome run_scenario(const std::string& name, const std::string& dir) {
    RunConfig cfg = scenario_config(name);
    cfg.out_dir = dir;
    return run_config(cfg);
}

double gram_defect(const Eigenbasis& basis) {
    const QuadratureRule rule = gauss_rule(basis.L, 4 * basis.n, 12);
    double worst = 0.0;
    for (int i = 1; i <= basis.n; ++i)
        for (int j = i; j <= basis.n; ++j) {
            double s = 0.0;
            for (int q = 0; q < rule.size(); ++q)
                s += rule.weights[q] * eval(basis, i, rule.nodes[q]) *
                     eval(basis, j, rule.nodes[q]);
            worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

std::vector<double> profile_at_end(const Run& run, int points) {
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i)
        grid[i] = run.traj.problem.L * i / (points - 1);
    std::vector<double> u = reconstruct(run.basis, run.traj.snapshots.back().c, grid);
    if (run.traj.problem.has_lifting()) {
        const double slope = (run.traj.problem.bc_right - run.traj.problem.bc_left) /
                             run.traj.problem.L;
        for (int i = 0; i < points; ++i)
            u[i] += run.traj.problem.bc_left + slope * grid[i];
    }
    return u;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    namespace fs = std::filesystem;
    const fs::path work = fs::temp_directory_path() / "efk_acceptance";
    fs::create_directories(work);

    // 1. Basis construction: frozen first root, orthonormality, clamped BCs.
    {
        const std::vector<double> roots = beam_roots(2);
        const double root_err = std::abs(roots[0] - 4.730040744862704);
        const Eigenbasis sine = sine_basis(20.0, 16);
        const Eigenbasis beam = beam_basis(40.0, 16);
        const double defect = std::max(gram_defect(sine), gram_defect(beam));
        double bc = 0.0;
        for (int j = 1; j <= beam.n; ++j) {
            const double k = beam.kappas[j - 1] / beam.L;
            bc = std::max({bc, std::abs(eval(beam, j, 0.0)),
                           std::abs(eval(beam, j, beam.L)),
                           std::abs(eval(beam, j, 0.0, 1)) / k,
                           std::abs(eval(beam, j, beam.L, 1)) / k});
        }
        report("basis_construction", root_err < 1e-13 && defect < 1e-8 && bc < 1e-8,
               "root_err " + format_sig(root_err, 3) + ", gram_defect " +
                   format_sig(defect, 3) + ", bc_residual " + format_sig(bc, 3));
    }

    // 2. Linear heat oracle: temporal orders of both schemes on e^{-t} w_1.
    {
        const ScenarioOutcome out = run_scenario("heat_oracle", (work / "heat").string());
        report("heat_oracle_orders", out.exit_code == 0 && checks_pass(out.checks),
               worst_check(out.checks));
    }

    // 3. Manufactured solutions: first and second order bands, m = 1 and m = 2.
    {
        const ScenarioOutcome out = run_scenario("mms", (work / "mms").string());
        report("manufactured_orders", out.exit_code == 0 && checks_pass(out.checks),
               worst_check(out.checks));
    }

    // 4. Discrete energy law on smooth data, interval and beam cases.
    {
        std::vector<AuditCheck> all;
        for (const char* name : {"fk_front", "efk_kink"}) {
            const Run run = run_registered(name);
            const AuditRecord rec = smooth_energy_audit(run.traj);
            all.insert(all.end(), rec.checks.begin(), rec.checks.end());
        }
        report("smooth_energy_law", checks_pass(all), worst_check(all));
    }

    // 5. Rough-data estimate for plain L^2 initial data (indicator).
    {
        std::vector<AuditCheck> all;
        for (const char* name : {"rough_fk", "rough_efk"}) {
            const Run run = run_registered(name);
            const AuditRecord rec = rough_energy_audit(run.traj);
            all.insert(all.end(), rec.checks.begin(), rec.checks.end());
        }
        report("rough_data_estimate", checks_pass(all), worst_check(all));
    }

    // 6. Continuous dependence: perturbed pair stays inside the e^{2t} tube.
    {
        const ScenarioOutcome out =
            run_scenario("gronwall", (work / "gronwall").string());
        report("gronwall_separation", out.exit_code == 0 && checks_pass(out.checks),
               worst_check(out.checks));
    }

    // 7. Galerkin Cauchy property: successive-n differences shrink 10x.
    {
        const RunConfig cfg = scenario_config("efk_kink");
        const ConvergenceTable ladder =
            cauchy_ladder(cfg.problem, cfg.scheme, {4, 8, 16, 32});
        bool monotone = true;
        for (std::size_t i = 0; i + 1 < ladder.d.size(); ++i)
            monotone = monotone && ladder.d[i + 1] < ladder.d[i];
        const bool reduced = ladder.d.back() < ladder.d.front() / 10.0;
        report("galerkin_cauchy", monotone && reduced,
               "d = {" + format_sig(ladder.d[0], 6) + ", " +
                   format_sig(ladder.d[1], 6) + ", " + format_sig(ladder.d[2], 6) +
                   "}");
    }

    // 8. Independent cross-check against the finite-difference oracle.
    {
        RunConfig cfg = scenario_config("fk_front");
        cfg.problem.T = 1.0;
        cfg.n = 32;
        const Eigenbasis basis = sine_basis(cfg.problem.L, cfg.n);
        const QuadratureRule rule = default_rule(cfg.problem.L, cfg.n);
        const Trajectory traj = integrate(basis, rule, cfg.problem, cfg.scheme);
        const FdTrajectory fd = fd_oracle(cfg.problem, 400, cfg.scheme.tau);

        std::vector<double> u = reconstruct(basis, traj.snapshots.back().c, fd.x);
        double max_diff = 0.0;
        const double slope =
            (cfg.problem.bc_right - cfg.problem.bc_left) / cfg.problem.L;
        for (std::size_t i = 0; i < fd.x.size(); ++i) {
            const double lifted =
                u[i] + cfg.problem.bc_left + slope * fd.x[i];
            max_diff = std::max(max_diff, std::abs(lifted - fd.u.back()[i]));
        }
        report("fd_cross_check", max_diff < 1e-2,
               "max_diff " + format_sig(max_diff, 6) + " < 0.01");
    }

    // 9. Qualitative front shapes: monotone interval front, oscillatory beam kink.
    {
        const Run front = run_registered("fk_front");
        const std::vector<double> uf = profile_at_end(front, 1601);
        const Overshoot of = overshoot_metric(uf, 0.0, 1.0, 1e-6);
        const bool connects = std::abs(uf.front() - 1.0) < 1e-6 &&
                              std::abs(uf.back()) < 1e-6 && of.amplitude < 1e-3;

        const Run kink = run_registered("efk_kink");
        const std::vector<double> uk = profile_at_end(kink, 1601);
        const Overshoot ok = overshoot_metric(uk, 0.0, 1.0, 1e-6);
        const bool oscillates = ok.amplitude > 1e-2 && ok.sign_changes >= 2;

        report("front_shapes", connects && oscillates,
               "front overshoot " + format_sig(of.amplitude, 3) +
                   ", kink overshoot " + format_sig(ok.amplitude, 3) + " with " +
                   std::to_string(ok.sign_changes) + " derivative sign changes");
    }

    // 10. Overshoot amplitude decreases strictly with gamma.
    {
        const ScenarioOutcome out =
            run_scenario("gamma_sweep", (work / "gamma").string());
        report("gamma_overshoot_order", out.exit_code == 0 && checks_pass(out.checks),
               worst_check(out.checks));
    }

    // 11. Determinism: identical reruns produce byte-identical artifacts.
    {
        const ScenarioOutcome a = run_scenario("efk_kink", (work / "det_a").string());
        const ScenarioOutcome b = run_scenario("efk_kink", (work / "det_b").string());
        bool same = a.exit_code == 0 && b.exit_code == 0;
        for (const char* file : {"snapshots.csv", "timeseries.csv", "audit.csv"})
            same = same && slurp(work / "det_a" / file) == slurp(work / "det_b" / file)
                        && !slurp(work / "det_a" / file).empty();
        report("deterministic_output", same,
               same ? "csv artifacts byte-identical across reruns"
                    : "artifacts differ between reruns");
    }

    std::printf("%d/11 criteria passed\n", 11 - failures);
    return failures == 0 ? 0 : 1;
}
