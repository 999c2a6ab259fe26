#pragma once

#include <optional>

#include <Eigen/Dense>

#include "efk/eigenbasis.hpp"
#include "efk/profile.hpp"
#include "efk/quadrature.hpp"

namespace efk {

struct Forcing {
    enum class Kind { Zero, Manufactured };
    Kind kind = Kind::Zero;
    Profile reference;   // sine_mode or poly_bump
    double rate = 1.0;   // u_ex(t, x) = e^{-rate t} reference(x)

    static Forcing zero() { return {}; }
    static Forcing manufactured(Profile ref, double rate);
};

// The problem  d_t u + (-1)^m D^{2m} u + u^3 - u = f  on (0, L), where for
// m = 2 the spatial operator is gamma u'''' - beta u''.
struct ProblemSpec {
    int m = 1;
    double gamma = 0.0;           // biharmonic coefficient (m = 2 only)
    double beta = 1.0;            // second-order coefficient, forced 1 for m = 1
    double L = 1.0;
    double T = 1.0;
    Profile u0 = Profile::poly_bump();
    double bc_left = 0.0, bc_right = 0.0;   // m = 1 only
    Forcing forcing;
    bool nonlinearity_enabled = true;       // test hook: N == 0 when false

    void validate() const;
    bool has_lifting() const { return bc_left != 0.0 || bc_right != 0.0; }
};

struct AssembledOperators {
    int n = 0;
    int m = 1;
    double gamma = 0.0, beta = 1.0;   // V-norm weights (gamma only for m = 2)
    Eigen::VectorXd stiffness_diag;   // gamma * lambda_j (m = 2) or lambda_j (m = 1)
    Eigen::MatrixXd gram_grad;        // B_ij = (w_i', w_j')
    double lift_left = 0.0;           // g(x) = lift_left + lift_slope * x
    double lift_slope = 0.0;
    bool lifted = false;

    // Cached basis values at the quadrature nodes.
    Eigen::MatrixXd basis0, basis1;
    std::optional<Eigen::MatrixXd> basis2;   // m = 2 only
    Eigen::VectorXd weights;
    std::vector<double> nodes;
    Eigen::VectorXd lifting_at_nodes;

    // Full implicit system matrix A = gamma*Lambda + beta*B (m = 2) or
    // Lambda (m = 1, where the sine basis diagonalizes -Laplace exactly).
    Eigen::MatrixXd system_matrix;

    double lifting(double x) const { return lift_left + lift_slope * x; }
};

AssembledOperators assemble(const Eigenbasis& basis, const QuadratureRule& rule,
                            const ProblemSpec& spec);

// N_j = (phi(u_n + g), w_j) with u_n = sum c_j w_j, phi(s) = s^3 - s,
// evaluated pseudo-spectrally at the cached quadrature nodes.
Eigen::VectorXd nonlinear_term(const AssembledOperators& ops,
                               const Eigen::VectorXd& coeffs);

// (f(t, .), w_j). Zero forcing gives 0; manufactured forcing is the exact
// residual of u_ex(t, x) = e^{-rate t} ref(x) under the spec operator.
Eigen::VectorXd forcing_vector(const AssembledOperators& ops, const Eigenbasis& basis,
                               const QuadratureRule& rule, const ProblemSpec& spec,
                               double t);

// Pointwise manufactured reference derivatives (analytic): value, u'', u''''.
void manufactured_reference(const Profile& ref, double L, double x,
                            double& v, double& d2, double& d4);

}  // namespace efk
