#include "efk/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "efk/kernels.hpp"

namespace efk {

bool AuditRecord::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

AuditCheck make_check(std::string name, double lhs, double rhs) {
    AuditCheck c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.margin = rhs - lhs;
    c.pass = lhs <= rhs;
    return c;
}

void require_homogeneous_forcing(const Trajectory& traj, const char* op) {
    if (traj.problem.forcing.kind != Forcing::Kind::Zero)
        throw std::invalid_argument(std::string(op) + ": defined for f = 0 runs only");
}

}  // namespace

AuditRecord smooth_energy_audit(const Trajectory& traj, double slack,
                                double mono_slack) {
    require_homogeneous_forcing(traj, "smooth_energy_audit");
    if (traj.reports.empty())
        throw std::invalid_argument("smooth_energy_audit: empty trajectory");

    const double e0 = traj.reports.front().energy;
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& r : traj.reports)
        worst = std::max(worst, r.dissipation_cum + r.energy);

    double worst_increase = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < traj.reports.size(); ++k)
        worst_increase = std::max(worst_increase,
                                  traj.reports[k].energy - traj.reports[k - 1].energy);
    if (traj.reports.size() < 2) worst_increase = 0.0;

    AuditRecord rec;
    rec.checks.push_back(make_check("energy_decay", worst, e0 + slack));
    rec.checks.push_back(make_check("energy_monotone", worst_increase, mono_slack));
    return rec;
}

AuditRecord rough_energy_audit(const Trajectory& traj, double slack) {
    require_homogeneous_forcing(traj, "rough_energy_audit");
    if (traj.reports.empty())
        throw std::invalid_argument("rough_energy_audit: empty trajectory");

    const double L = traj.problem.L;
    const double half_l2sq_0 = 0.5 * traj.reports.front().l2 * traj.reports.front().l2;

    double worst_lhs = 0.0, worst_rhs = 0.0;
    double worst_margin = std::numeric_limits<double>::infinity();
    for (const auto& r : traj.reports) {
        const double lhs = 0.5 * r.l2 * r.l2 + r.cum_tau_vnorm + 0.5 * r.cum_tau_l4;
        const double rhs = half_l2sq_0 + 0.5 * L * r.t + slack;
        if (rhs - lhs < worst_margin) {
            worst_margin = rhs - lhs;
            worst_lhs = lhs;
            worst_rhs = rhs;
        }
    }

    AuditRecord rec;
    rec.checks.push_back(make_check("rough_energy", worst_lhs, worst_rhs));
    const double v_int = traj.reports.back().cum_tau_vnorm;
    AuditCheck fin = make_check("v_integral_finite", v_int,
                                std::numeric_limits<double>::infinity());
    fin.pass = std::isfinite(v_int);
    fin.margin = 0.0;
    rec.checks.push_back(fin);
    return rec;
}

SeparationRecord gronwall_separation(const Trajectory& traj_a,
                                     const Trajectory& traj_b, double slack) {
    if (traj_a.n != traj_b.n ||
        traj_a.snapshots.size() != traj_b.snapshots.size() ||
        traj_a.scheme.kind != traj_b.scheme.kind ||
        traj_a.scheme.tau != traj_b.scheme.tau ||
        traj_a.problem.m != traj_b.problem.m ||
        traj_a.problem.L != traj_b.problem.L)
        throw std::invalid_argument("gronwall_separation: mismatched discretizations");
    for (std::size_t k = 0; k < traj_a.snapshots.size(); ++k)
        if (std::abs(traj_a.snapshots[k].t - traj_b.snapshots[k].t) > 1e-12)
            throw std::invalid_argument("gronwall_separation: snapshot times differ");

    SeparationRecord rec;
    const double z0sq = (traj_a.snapshots.front().c - traj_b.snapshots.front().c)
                            .squaredNorm();
    rec.pass = true;
    for (std::size_t k = 0; k < traj_a.snapshots.size(); ++k) {
        const double t = traj_a.snapshots[k].t;
        const double zsq = (traj_a.snapshots[k].c - traj_b.snapshots[k].c).squaredNorm();
        rec.t.push_back(t);
        rec.zsq.push_back(zsq);
        if (z0sq == 0.0) {
            if (zsq != 0.0) rec.pass = false;
            continue;
        }
        const double ratio = zsq / (z0sq * std::exp(2.0 * t));
        rec.max_ratio = std::max(rec.max_ratio, ratio);
        if (ratio > 1.0 + slack) rec.pass = false;
    }
    if (z0sq > 0.0)
        rec.realized_ratio = std::sqrt(rec.zsq.back() / z0sq);
    return rec;
}

ConvergenceTable cauchy_ladder(const ProblemSpec& spec, const SchemeSpec& scheme,
                               const std::vector<int>& n_list) {
    if (n_list.size() < 2)
        throw std::invalid_argument("cauchy_ladder: need at least two basis sizes");
    for (std::size_t i = 1; i < n_list.size(); ++i)
        if (n_list[i] <= n_list[i - 1])
            throw std::invalid_argument("cauchy_ladder: n_list must be ascending");

    const std::vector<double> breaks = spec.u0.breakpoints(spec.L);
    const int n_max = n_list.back();
    const QuadratureRule fine = default_rule(spec.L, 2 * n_max, breaks);
    const Eigen::Map<const Eigen::VectorXd> fw(fine.weights.data(),
                                               static_cast<Eigen::Index>(fine.weights.size()));

    // Nodal values of every run at the shared fine grid, per stored time.
    std::vector<std::vector<Eigen::VectorXd>> nodal(n_list.size());
    std::size_t stored = 0;
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        const int n = n_list[i];
        const Eigenbasis basis = spec.m == 1 ? sine_basis(spec.L, n)
                                             : beam_basis(spec.L, n);
        const QuadratureRule rule = default_rule(spec.L, n, breaks);
        const Trajectory traj = integrate(basis, rule, spec, scheme);
        const Eigen::MatrixXd table = kernels::basis_table(basis, fine.nodes, 0);
        for (const auto& s : traj.snapshots)
            nodal[i].push_back(kernels::reconstruct_nodes(table, s.c));
        if (i == 0)
            stored = nodal[i].size();
        else if (nodal[i].size() != stored)
            throw std::runtime_error("cauchy_ladder: snapshot counts differ across n");
    }

    ConvergenceTable table;
    table.n = n_list;
    for (std::size_t i = 0; i + 1 < n_list.size(); ++i) {
        double d = 0.0;
        for (std::size_t k = 0; k < stored; ++k) {
            const Eigen::VectorXd diff = nodal[i + 1][k] - nodal[i][k];
            d = std::max(d, std::sqrt(fw.dot(diff.cwiseAbs2())));
        }
        table.d.push_back(d);
    }
    return table;
}

FdTrajectory fd_oracle(const ProblemSpec& spec, int grid_points, double tau,
                       int store_every) {
    spec.validate();
    if (grid_points < 8)
        throw std::invalid_argument("fd_oracle: need at least 8 interior points");
    if (tau <= 0.0) throw std::invalid_argument("fd_oracle: tau must be positive");

    const int M = grid_points;
    const double h = spec.L / (M + 1);
    const double h2 = h * h, h4 = h2 * h2;

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(M, M);
    Eigen::VectorXd bc = Eigen::VectorXd::Zero(M);
    if (spec.m == 1) {
        for (int i = 0; i < M; ++i) {
            A(i, i) = 2.0 / h2;
            if (i > 0) A(i, i - 1) = -1.0 / h2;
            if (i + 1 < M) A(i, i + 1) = -1.0 / h2;
        }
        bc[0] = spec.bc_left / h2;
        bc[M - 1] = spec.bc_right / h2;
        A *= spec.beta;
        bc *= spec.beta;
    } else {
        // gamma * D4 + beta * (-D2), clamped: boundary value rows vanish and
        // mirror ghosts u_{-1} = u_1 enforce u' = 0.
        for (int i = 0; i < M; ++i) {
            auto add4 = [&](int j, double v) {
                if (j >= 0 && j < M) A(i, j) += spec.gamma * v / h4;
            };
            add4(i - 2, 1.0);
            add4(i - 1, -4.0);
            add4(i, 6.0);
            add4(i + 1, -4.0);
            add4(i + 2, 1.0);
            if (i == 0) add4(1, 1.0);           // ghost u_{-1} = u_1
            if (i == M - 1) add4(M - 2, 1.0);   // ghost u_{M+2} = u_M
            A(i, i) += spec.beta * 2.0 / h2;
            if (i > 0) A(i, i - 1) -= spec.beta / h2;
            if (i + 1 < M) A(i, i + 1) -= spec.beta / h2;
        }
    }

    Eigen::MatrixXd Msys = tau * A;
    Msys.diagonal().array() += 1.0;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(Msys);

    FdTrajectory out;
    out.x.resize(M);
    Eigen::VectorXd u(M);
    for (int i = 0; i < M; ++i) {
        out.x[i] = (i + 1) * h;
        u[i] = spec.u0(out.x[i], spec.L);
    }

    auto store = [&](double t) {
        out.times.push_back(t);
        out.u.emplace_back(u.data(), u.data() + M);
    };
    store(0.0);

    const long full_steps = static_cast<long>(std::floor(spec.T / tau + 1e-9));
    const double remainder = spec.T - full_steps * tau;
    const long total_steps =
        full_steps + (remainder > 1e-12 * std::max(1.0, spec.T) ? 1 : 0);

    double t = 0.0;
    for (long k = 0; k < total_steps; ++k) {
        const double tau_k = (k < full_steps) ? tau : remainder;
        Eigen::VectorXd rhs = u;
        if (spec.nonlinearity_enabled)
            rhs -= tau_k * (u.array().cube() - u.array()).matrix();
        rhs += tau_k * bc;
        if (spec.forcing.kind == Forcing::Kind::Manufactured) {
            const double r = spec.forcing.rate;
            const double decay = std::exp(-r * (t + tau_k));
            for (int i = 0; i < M; ++i) {
                double v, d2, d4;
                manufactured_reference(spec.forcing.reference, spec.L, out.x[i], v, d2, d4);
                const double ue = decay * v;
                double f = -r * ue;
                f += decay * (spec.m == 2 ? spec.gamma * d4 - spec.beta * d2
                                          : -spec.beta * d2);
                if (spec.nonlinearity_enabled) f += ue * ue * ue - ue;
                rhs[i] += tau_k * f;
            }
        }
        if (tau_k != tau) {
            Eigen::MatrixXd Mk = tau_k * A;
            Mk.diagonal().array() += 1.0;
            u = Mk.partialPivLu().solve(rhs);
        } else {
            u = lu.solve(rhs);
        }
        if (!u.allFinite()) throw BlowUpError(t + tau_k, u.cwiseAbs().maxCoeff());
        t += tau_k;
        const bool last = (k == total_steps - 1);
        if (last || (store_every > 0 && (k + 1) % store_every == 0)) store(t);
    }
    return out;
}

Overshoot overshoot_metric(const std::vector<double>& values, double lo, double hi,
                           double deriv_tol) {
    Overshoot o;
    if (values.empty()) return o;
    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    o.amplitude = std::max(0.0, *mx - hi) + std::max(0.0, lo - *mn);
    int last_sign = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        const double d = values[i] - values[i - 1];
        if (std::abs(d) <= deriv_tol) continue;
        const int s = d > 0.0 ? 1 : -1;
        if (last_sign != 0 && s != last_sign) ++o.sign_changes;
        last_sign = s;
    }
    return o;
}

}  // namespace efk
