#include "efk/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "efk/kernels.hpp"

namespace efk {

SchemeSpec::Kind scheme_from_name(const std::string& name) {
    if (name == "imex_euler") return SchemeSpec::Kind::ImexEuler;
    if (name == "imex_cn_ab2") return SchemeSpec::Kind::ImexCnAb2;
    throw std::invalid_argument("unknown scheme: " + name);
}

std::string scheme_name(SchemeSpec::Kind kind) {
    return kind == SchemeSpec::Kind::ImexEuler ? "imex_euler" : "imex_cn_ab2";
}

BlowUpError::BlowUpError(double t_, double max_abs_)
    : std::runtime_error([&] {
          std::ostringstream os;
          os << "solution blew up at t = " << t_ << " (max |c| = " << max_abs_ << ")";
          return os.str();
      }()),
      t(t_),
      max_abs(max_abs_) {}

SpectralState init_state(const Eigenbasis& basis, const QuadratureRule& rule,
                         const ProblemSpec& spec) {
    spec.validate();
    SpectralState state;
    state.t = 0.0;
    state.step_index = 0;
    // coefficient_list data specifies the homogeneous variable directly.
    if (!spec.has_lifting() || spec.u0.kind == Profile::Kind::CoefficientList) {
        state.c = project(basis, rule, spec.u0);
        return state;
    }
    // Project u0 - g pointwise (u0 kinds with pointwise values only).
    const int nq = rule.size();
    Eigen::VectorXd values(nq), weights(nq);
    const double slope = (spec.bc_right - spec.bc_left) / spec.L;
    for (int i = 0; i < nq; ++i) {
        const double x = rule.nodes[i];
        values[i] = spec.u0(x, spec.L) - (spec.bc_left + slope * x);
        weights[i] = rule.weights[i];
    }
    const Eigen::MatrixXd table = kernels::basis_table(basis, rule.nodes, 0);
    state.c = kernels::project_nodes(table, weights, values);
    return state;
}

EnergyReport energy_report(const AssembledOperators& ops, const SpectralState& state,
                           double dissipation_cum) {
    EnergyReport r;
    r.t = state.t;
    r.dissipation_cum = dissipation_cum;

    Eigen::VectorXd u = kernels::reconstruct_nodes(ops.basis0, state.c);
    if (ops.lifted) u += ops.lifting_at_nodes;
    Eigen::VectorXd up = kernels::reconstruct_nodes(ops.basis1, state.c);
    if (ops.lifted) up.array() += ops.lift_slope;

    double l2sq = 0.0, grad = 0.0, l4 = 0.0, pot = 0.0;
    const int nq = static_cast<int>(ops.weights.size());
    for (int i = 0; i < nq; ++i) {
        const double w = ops.weights[i], v = u[i];
        l2sq += w * v * v;
        grad += w * up[i] * up[i];
        l4 += w * v * v * v * v;
        const double q = 1.0 - v * v;
        pot += w * q * q / 4.0;
    }
    r.l2 = std::sqrt(l2sq);
    r.l4_4 = l4;
    r.potential = pot;
    if (ops.basis2) {
        const Eigen::VectorXd upp = kernels::reconstruct_nodes(*ops.basis2, state.c);
        double curv = 0.0;
        for (int i = 0; i < nq; ++i) curv += ops.weights[i] * upp[i] * upp[i];
        r.vnorm_sq = ops.gamma * curv + ops.beta * grad;
    } else {
        r.vnorm_sq = grad;
    }
    r.energy = 0.5 * r.vnorm_sq + r.potential;
    return r;
}

Stepper::Stepper(const Eigenbasis& basis, const QuadratureRule& rule,
                 const AssembledOperators& ops, const ProblemSpec& spec)
    : basis_(basis), rule_(rule), ops_(ops), spec_(spec) {}

Eigen::VectorXd Stepper::nonlinear(const Eigen::VectorXd& c) const {
    if (!spec_.nonlinearity_enabled) return Eigen::VectorXd::Zero(ops_.n);
    return nonlinear_term(ops_, c);
}

void Stepper::check_finite(const Eigen::VectorXd& c, double t) const {
    if (!c.allFinite()) {
        double mx = 0.0;
        for (Eigen::Index i = 0; i < c.size(); ++i)
            if (std::isfinite(c[i])) mx = std::max(mx, std::abs(c[i]));
        throw BlowUpError(t, mx);
    }
}

SpectralState Stepper::imex_euler_step(const SpectralState& state, double tau) {
    if (tau != cached_tau_euler_) {
        Eigen::MatrixXd M = tau * ops_.system_matrix;
        M.diagonal().array() += 1.0;
        llt_euler_.compute(M);
        if (llt_euler_.info() != Eigen::Success)
            throw std::runtime_error("imex_euler_step: factorization failed");
        cached_tau_euler_ = tau;
    }
    const double t_next = state.t + tau;
    Eigen::VectorXd rhs = state.c +
                          tau * (forcing_vector(ops_, basis_, rule_, spec_, t_next) -
                                 nonlinear(state.c));
    SpectralState next;
    next.t = t_next;
    next.step_index = state.step_index + 1;
    next.c = llt_euler_.solve(rhs);
    check_finite(next.c, next.t);
    return next;
}

SpectralState Stepper::imex_cn_ab2_step(const SpectralState& state,
                                        const Eigen::VectorXd& prev_nonlinear,
                                        double tau) {
    if (tau != cached_tau_cn_) {
        Eigen::MatrixXd M = 0.5 * tau * ops_.system_matrix;
        M.diagonal().array() += 1.0;
        llt_cn_.compute(M);
        if (llt_cn_.info() != Eigen::Success)
            throw std::runtime_error("imex_cn_ab2_step: factorization failed");
        cached_tau_cn_ = tau;
    }
    const double t_half = state.t + 0.5 * tau;
    Eigen::VectorXd rhs = state.c - 0.5 * tau * (ops_.system_matrix * state.c);
    rhs -= tau * (1.5 * nonlinear(state.c) - 0.5 * prev_nonlinear);
    rhs += tau * forcing_vector(ops_, basis_, rule_, spec_, t_half);
    SpectralState next;
    next.t = state.t + tau;
    next.step_index = state.step_index + 1;
    next.c = llt_cn_.solve(rhs);
    check_finite(next.c, next.t);
    return next;
}

Trajectory integrate(const Eigenbasis& basis, const QuadratureRule& rule,
                     const ProblemSpec& spec, const SchemeSpec& scheme,
                     const Observer& observer) {
    if (scheme.tau <= 0.0) throw std::invalid_argument("integrate: tau must be positive");
    const AssembledOperators ops = assemble(basis, rule, spec);
    Stepper stepper(basis, rule, ops, spec);

    Trajectory traj;
    traj.problem = spec;
    traj.scheme = scheme;
    traj.n = basis.n;
    traj.tau_used = scheme.tau;

    SpectralState state = init_state(basis, rule, spec);
    double diss = 0.0, cum_vn = 0.0, cum_l4 = 0.0, cum_l2sq = 0.0;

    auto store = [&](const SpectralState& s) {
        EnergyReport r = energy_report(ops, s, diss);
        r.cum_tau_vnorm = cum_vn;
        r.cum_tau_l4 = cum_l4;
        r.cum_tau_l2sq = cum_l2sq;
        traj.snapshots.push_back(s);
        traj.reports.push_back(r);
        if (observer) observer(s, r);
    };
    store(state);

    if (spec.T <= 0.0) return traj;

    const double tau = scheme.tau;
    const long full_steps = static_cast<long>(std::floor(spec.T / tau + 1e-9));
    const double remainder = spec.T - full_steps * tau;
    const long total_steps = full_steps + (remainder > 1e-12 * std::max(1.0, spec.T) ? 1 : 0);

    Eigen::VectorXd prev_nonlinear;
    if (scheme.kind == SchemeSpec::Kind::ImexCnAb2)
        prev_nonlinear = stepper.nonlinear(state.c);

    for (long k = 0; k < total_steps; ++k) {
        const double tau_k = (k < full_steps) ? tau : remainder;
        SpectralState next;
        if (scheme.kind == SchemeSpec::Kind::ImexEuler || k == 0) {
            if (scheme.kind == SchemeSpec::Kind::ImexCnAb2) {
                // Bootstrap with Euler substeps: a single full-tau Euler step
                // leaves an O(tau) startup defect in the stiff modes that the
                // near-neutral CN amplification never damps.
                prev_nonlinear = stepper.nonlinear(state.c);
                // substep width ~ tau^2 so the defect matches the CN order
                const int boot_substeps = static_cast<int>(
                    std::clamp(std::ceil(1.0 / tau_k), 16.0, 4096.0));
                SpectralState sub = state;
                for (int s = 0; s < boot_substeps; ++s)
                    sub = stepper.imex_euler_step(sub, tau_k / boot_substeps);
                next = sub;
                next.t = state.t + tau_k;  // avoid substep roundoff drift
                next.step_index = state.step_index + 1;
            } else {
                next = stepper.imex_euler_step(state, tau_k);
            }
        } else {
            const Eigen::VectorXd cur_nonlinear = stepper.nonlinear(state.c);
            next = stepper.imex_cn_ab2_step(state, prev_nonlinear, tau_k);
            prev_nonlinear = cur_nonlinear;
        }
        const double inc = (next.c - state.c).norm() / tau_k;
        traj.increment_norms.push_back(inc);
        diss += tau_k * inc * inc;
        state = next;

        const EnergyReport probe = energy_report(ops, state, diss);
        cum_vn += tau_k * probe.vnorm_sq;
        cum_l4 += tau_k * probe.l4_4;
        cum_l2sq += tau_k * probe.l2 * probe.l2;

        const bool last = (k == total_steps - 1);
        if (last || (scheme.store_every > 0 && state.step_index % scheme.store_every == 0)) {
            EnergyReport r = probe;
            r.cum_tau_vnorm = cum_vn;
            r.cum_tau_l4 = cum_l4;
            r.cum_tau_l2sq = cum_l2sq;
            traj.snapshots.push_back(state);
            traj.reports.push_back(r);
            if (observer) observer(state, r);
        }
    }
    return traj;
}

}  // namespace efk
