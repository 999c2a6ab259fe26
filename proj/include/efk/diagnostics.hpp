#pragma once

#include <string>
#include <vector>

#include "efk/integrator.hpp"

namespace efk {

struct AuditCheck {
    std::string name;
    double lhs = 0.0;    // worst-case left-hand side over the trajectory
    double rhs = 0.0;    // bound it must stay below (slack included)
    double margin = 0.0; // rhs - lhs
    bool pass = false;
};

struct AuditRecord {
    std::vector<AuditCheck> checks;
    bool pass() const;
};

// Discrete shadow of the testing-with-dt estimate: for every stored time,
//   dissipation_cum(t_k) + E(t_k) <= E(0) + slack,
// plus monotonicity of E itself. Defined for f = 0 only.
AuditRecord smooth_energy_audit(const Trajectory& traj, double slack = 1e-6,
                                double mono_slack = 1e-9);

// Discrete shadow of the testing-with-u estimate, with the zeroth-order term
// absorbed by Young's inequality (u^2 <= u^4/2 + 1/2):
//   1/2 ||u(t)||^2 + sum tau (vnorm_sq + 1/2 l4_4) <= 1/2 ||u(0)||^2 + L t / 2.
AuditRecord rough_energy_audit(const Trajectory& traj, double slack = 1e-6);

struct SeparationRecord {
    bool pass = false;
    double max_ratio = 0.0;       // max_k ||z_k||^2 / (||z_0||^2 e^{2 t_k})
    double realized_ratio = 0.0;  // ||z(T)|| / ||z(0)||
    std::vector<double> t;
    std::vector<double> zsq;
};

// Continuous-dependence bound ||z(t)||^2 <= ||z(0)||^2 e^{2t} (1 + slack)
// for z = u_a - u_b, evaluated in coefficient space (Parseval).
SeparationRecord gronwall_separation(const Trajectory& traj_a,
                                     const Trajectory& traj_b,
                                     double slack = 0.05);

struct ConvergenceTable {
    std::vector<int> n;        // n_1 .. n_p
    std::vector<double> d;     // d_i = max_k ||u_{n_{i+1}} - u_{n_i}||, size p-1
};

// Same problem at each n in ascending n_list; successive solutions are
// compared in L^2 on a common fine quadrature grid at every stored time.
ConvergenceTable cauchy_ladder(const ProblemSpec& spec, const SchemeSpec& scheme,
                               const std::vector<int>& n_list);

struct FdTrajectory {
    std::vector<double> x;                  // interior grid points
    std::vector<double> times;
    std::vector<std::vector<double>> u;     // nodal values per stored time
};

// Independent brute-force oracle: centered second-order finite differences
// (3-point Laplacian; 5-point biharmonic with mirror ghosts enforcing the
// clamped conditions) and the same IMEX-Euler stepping in nodal space.
// grid_points counts interior nodes. store_every = 0 stores only t=0 and t=T.
FdTrajectory fd_oracle(const ProblemSpec& spec, int grid_points, double tau,
                       int store_every = 0);

struct Overshoot {
    double amplitude = 0.0;   // max(0, max v - hi) + max(0, lo - min v)
    int sign_changes = 0;     // oscillation count of the discrete derivative
};

Overshoot overshoot_metric(const std::vector<double>& values, double lo, double hi,
                           double deriv_tol = 0.0);

}  // namespace efk
