#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "efk/operators.hpp"

namespace efk {

struct SpectralState {
    double t = 0.0;
    Eigen::VectorXd c;
    long step_index = 0;
};

struct SchemeSpec {
    enum class Kind { ImexEuler, ImexCnAb2 };
    Kind kind = Kind::ImexEuler;
    double tau = 1e-3;
    int store_every = 1;
};

SchemeSpec::Kind scheme_from_name(const std::string& name);
std::string scheme_name(SchemeSpec::Kind kind);

struct BlowUpError : std::runtime_error {
    double t;
    double max_abs;
    BlowUpError(double t_, double max_abs_);
};

// Per-time-step diagnostics; cumulative fields integrate over all steps
// taken so far, not just stored ones.
struct EnergyReport {
    double t = 0.0;
    double l2 = 0.0;
    double vnorm_sq = 0.0;       // gamma ||u''||^2 + beta ||u'||^2
    double l4_4 = 0.0;
    double potential = 0.0;      // (Phi(u), 1), Phi(s) = (1 - s^2)^2 / 4
    double energy = 0.0;         // vnorm_sq / 2 + potential
    double dissipation_cum = 0.0;         // sum_k tau ||(c^{k+1} - c^k)/tau||^2
    double cum_tau_vnorm = 0.0;           // sum_k tau vnorm_sq(t_k)
    double cum_tau_l4 = 0.0;
    double cum_tau_l2sq = 0.0;
};

struct Trajectory {
    std::vector<SpectralState> snapshots;
    std::vector<EnergyReport> reports;
    ProblemSpec problem;
    SchemeSpec scheme;
    int n = 0;
    double tau_used = 0.0;
    int halvings = 0;
    std::vector<double> increment_norms;  // ||c^{k+1} - c^k|| / tau per step
};

// c(0) = projection of u0 - g, so the evolved variable is homogeneous.
SpectralState init_state(const Eigenbasis& basis, const QuadratureRule& rule,
                         const ProblemSpec& spec);

EnergyReport energy_report(const AssembledOperators& ops, const SpectralState& state,
                           double dissipation_cum = 0.0);

// Time stepper with cached Cholesky factorizations of the implicit matrix;
// refactors only when tau changes.
class Stepper {
  public:
    Stepper(const Eigenbasis& basis, const QuadratureRule& rule,
            const AssembledOperators& ops, const ProblemSpec& spec);

    // (I + tau A) c+ = c + tau (F(t + tau) - N(c))
    SpectralState imex_euler_step(const SpectralState& state, double tau);

    // (I + tau/2 A) c+ = (I - tau/2 A) c - tau (3/2 N(c) - 1/2 N_prev)
    //                    + tau F(t + tau/2)
    SpectralState imex_cn_ab2_step(const SpectralState& state,
                                   const Eigen::VectorXd& prev_nonlinear, double tau);

    Eigen::VectorXd nonlinear(const Eigen::VectorXd& c) const;

  private:
    const Eigenbasis& basis_;
    const QuadratureRule& rule_;
    const AssembledOperators& ops_;
    const ProblemSpec& spec_;
    double cached_tau_euler_ = -1.0;
    double cached_tau_cn_ = -1.0;
    Eigen::LLT<Eigen::MatrixXd> llt_euler_;
    Eigen::LLT<Eigen::MatrixXd> llt_cn_;

    void check_finite(const Eigen::VectorXd& c, double t) const;
};

using Observer = std::function<void(const SpectralState&, const EnergyReport&)>;

// Uniform steps from 0 to T (final step shortened to land exactly on T).
Trajectory integrate(const Eigenbasis& basis, const QuadratureRule& rule,
                     const ProblemSpec& spec, const SchemeSpec& scheme,
                     const Observer& observer = nullptr);

}  // namespace efk
