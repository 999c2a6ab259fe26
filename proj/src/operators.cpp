#include "efk/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "efk/kernels.hpp"

namespace efk {

Forcing Forcing::manufactured(Profile ref, double rate) {
    if (ref.kind != Profile::Kind::SineMode && ref.kind != Profile::Kind::PolyBump)
        throw std::invalid_argument(
            "manufactured forcing: reference must be sine_mode or poly_bump");
    Forcing f;
    f.kind = Kind::Manufactured;
    f.reference = std::move(ref);
    f.rate = rate;
    return f;
}

void ProblemSpec::validate() const {
    if (m != 1 && m != 2) throw std::invalid_argument("ProblemSpec: m must be 1 or 2");
    if (L <= 0.0) throw std::invalid_argument("ProblemSpec: L must be positive");
    if (T < 0.0) throw std::invalid_argument("ProblemSpec: T must be nonnegative");
    if (gamma < 0.0) throw std::invalid_argument("ProblemSpec: gamma must be >= 0");
    if (m == 2 && (bc_left != 0.0 || bc_right != 0.0))
        throw std::invalid_argument("ProblemSpec: m = 2 requires homogeneous BCs");
    if (m == 1 && beta != 1.0)
        throw std::invalid_argument("ProblemSpec: beta is forced to 1 when m = 1");
}

AssembledOperators assemble(const Eigenbasis& basis, const QuadratureRule& rule,
                            const ProblemSpec& spec) {
    spec.validate();
    if (basis.m != spec.m)
        throw std::invalid_argument("assemble: basis order does not match problem");

    AssembledOperators ops;
    ops.n = basis.n;
    ops.m = spec.m;
    ops.gamma = spec.m == 2 ? spec.gamma : 0.0;
    ops.beta = spec.beta;
    const int nq = rule.size();

    ops.nodes = rule.nodes;
    ops.weights = Eigen::Map<const Eigen::VectorXd>(rule.weights.data(), nq);
    ops.basis0 = kernels::basis_table(basis, rule.nodes, 0);
    ops.basis1 = kernels::basis_table(basis, rule.nodes, 1);
    if (spec.m == 2) ops.basis2 = kernels::basis_table(basis, rule.nodes, 2);

    ops.stiffness_diag.resize(basis.n);
    for (int j = 0; j < basis.n; ++j)
        ops.stiffness_diag[j] =
            (spec.m == 2 ? spec.gamma : 1.0) * basis.lambdas[j];

    // B by quadrature over w_i' w_j'; symmetrized to kill roundoff skew.
    Eigen::MatrixXd weighted = ops.basis1;
    for (int i = 0; i < nq; ++i) weighted.row(i) *= ops.weights[i];
    ops.gram_grad = ops.basis1.transpose() * weighted;
    ops.gram_grad = 0.5 * (ops.gram_grad + ops.gram_grad.transpose()).eval();

    ops.lifted = spec.has_lifting();
    ops.lift_left = spec.bc_left;
    ops.lift_slope = (spec.bc_right - spec.bc_left) / spec.L;
    ops.lifting_at_nodes.resize(nq);
    for (int i = 0; i < nq; ++i)
        ops.lifting_at_nodes[i] = ops.lifted ? ops.lifting(rule.nodes[i]) : 0.0;

    if (spec.m == 2) {
        ops.system_matrix = spec.beta * ops.gram_grad;
        ops.system_matrix.diagonal() += ops.stiffness_diag;
    } else {
        ops.system_matrix = ops.stiffness_diag.asDiagonal();
    }
    return ops;
}

Eigen::VectorXd nonlinear_term(const AssembledOperators& ops,
                               const Eigen::VectorXd& coeffs) {
    if (coeffs.size() != ops.n)
        throw std::invalid_argument("nonlinear_term: coefficient count mismatch");
    Eigen::VectorXd u = kernels::reconstruct_nodes(ops.basis0, coeffs);
    if (ops.lifted) u += ops.lifting_at_nodes;
    const Eigen::VectorXd phi = kernels::phi_nodes(u);
    return kernels::project_nodes(ops.basis0, ops.weights, phi);
}

void manufactured_reference(const Profile& ref, double L, double x,
                            double& v, double& d2, double& d4) {
    if (ref.kind == Profile::Kind::SineMode) {
        const double f = ref.mode * M_PI / L;
        const double amp = std::sqrt(2.0 / L);
        v = amp * std::sin(f * x);
        d2 = -f * f * v;
        d4 = f * f * f * f * v;
        return;
    }
    if (ref.kind == Profile::Kind::PolyBump) {
        const double s = x / L, A = ref.amplitude;
        v = A * s * s * (1.0 - s) * (1.0 - s);
        d2 = A * (12.0 * s * s - 12.0 * s + 2.0) / (L * L);
        d4 = A * 24.0 / (L * L * L * L);
        return;
    }
    throw std::invalid_argument("manufactured reference must be sine_mode or poly_bump");
}

Eigen::VectorXd forcing_vector(const AssembledOperators& ops, const Eigenbasis& basis,
                               const QuadratureRule& rule, const ProblemSpec& spec,
                               double t) {
    if (spec.forcing.kind == Forcing::Kind::Zero)
        return Eigen::VectorXd::Zero(ops.n);

    const double decay = std::exp(-spec.forcing.rate * t);
    const int nq = rule.size();
    Eigen::VectorXd f(nq);
    for (int i = 0; i < nq; ++i) {
        double v, d2, d4;
        manufactured_reference(spec.forcing.reference, spec.L, rule.nodes[i], v, d2, d4);
        const double u = decay * v;
        double spatial;
        if (spec.m == 2)
            spatial = spec.gamma * decay * d4 - spec.beta * decay * d2;
        else
            spatial = -decay * d2;
        f[i] = -spec.forcing.rate * u + spatial + (u * u * u - u);
    }
    return kernels::project_nodes(ops.basis0, ops.weights, f);
}

}  // namespace efk
