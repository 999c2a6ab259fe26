#pragma once

#include <vector>

namespace efk {

// Orthonormal eigenbasis of (-1)^m d^{2m}/dx^{2m} on (0, L).
//   m = 1: Dirichlet sine modes  w_j = sqrt(2/L) sin(j pi x / L)
//   m = 2: clamped beam modes (w = w' = 0 at both ends), eigen-wavenumbers
//          k_j = kappa_j / L with cos(kappa_j) cosh(kappa_j) = 1.
//
// Beam modes are evaluated in an exponential decomposition so that no
// cosh/sinh of a large argument is ever formed as a difference:
//   w_j(x) = nu_j [ a_j e^{k x} + b_j e^{-k x} - cos(k x) + sigma_j sin(k x) ]
// with a_j = (1 - sigma_j)/2 computed cancellation-free (a_j ~ e^{-kappa_j}).
struct Eigenbasis {
    int m = 1;
    double L = 0.0;
    int n = 0;
    std::vector<double> lambdas;   // ascending, lambda_j = (j pi/L)^2 or k_j^4

    // m = 2 per-mode parameters
    std::vector<double> kappas;    // dimensionless roots kappa_j
    std::vector<double> sigmas;
    std::vector<double> coef_a;    // (1 - sigma_j)/2, cancellation-free
    std::vector<double> coef_b;    // (1 + sigma_j)/2
    std::vector<double> nus;       // L^2 normalization factors
};

// First n positive roots of cos(kappa) cosh(kappa) = 1, solved in the
// overflow-safe form cos(kappa) - sech(kappa) = 0. The j-th root lies in
// (j pi, (j+1) pi) and tends to (j + 1/2) pi.
std::vector<double> beam_roots(int n);

Eigenbasis sine_basis(double L, int n);
Eigenbasis beam_basis(double L, int n);

// w_j^{(deriv)}(x), modes numbered 1..n, deriv in {0, 1, 2}.
double eval(const Eigenbasis& basis, int j, double x, int deriv = 0);

}  // namespace efk
