#include "efk/eigenbasis.hpp"

#include <cmath>
#include <stdexcept>

#include "efk/quadrature.hpp"

namespace efk {

namespace {

double beam_residual(double k) { return std::cos(k) - 1.0 / std::cosh(k); }

// Raw (unnormalized) clamped mode and derivatives for given mode parameters.
double beam_raw(double k, double sigma, double a, double b, double x, int deriv) {
    const double kx = k * x;
    const double ep = a * std::exp(kx);     // a ~ e^{-kappa}, so ep stays O(1) for x <= L
    const double em = b * std::exp(-kx);
    switch (deriv) {
        case 0: return ep + em - std::cos(kx) + sigma * std::sin(kx);
        case 1: return k * (ep - em + std::sin(kx) + sigma * std::cos(kx));
        case 2: return k * k * (ep + em + std::cos(kx) - sigma * std::sin(kx));
        default: throw std::invalid_argument("eval: deriv must be 0, 1 or 2");
    }
}

}  // namespace

std::vector<double> beam_roots(int n) {
    if (n < 1) throw std::invalid_argument("beam_roots: n must be >= 1");
    std::vector<double> roots;
    roots.reserve(n);
    for (int j = 1; j <= n; ++j) {
        double lo = j * M_PI, hi = (j + 1) * M_PI;
        double flo = beam_residual(lo);
        if (flo * beam_residual(hi) >= 0.0)
            throw std::runtime_error("beam_roots: root not bracketed");
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = beam_residual(mid);
            if (flo * fm <= 0.0) {
                hi = mid;
            } else {
                lo = mid;
                flo = fm;
            }
            if (hi - lo < 1e-15 * hi) break;
        }
        const double k = 0.5 * (lo + hi);
        if (std::abs(beam_residual(k)) > 1e-12)
            throw std::runtime_error("beam_roots: residual tolerance not met");
        roots.push_back(k);
    }
    return roots;
}

Eigenbasis sine_basis(double L, int n) {
    if (L <= 0.0) throw std::invalid_argument("sine_basis: L must be positive");
    if (n < 1) throw std::invalid_argument("sine_basis: n must be >= 1");
    Eigenbasis basis;
    basis.m = 1;
    basis.L = L;
    basis.n = n;
    basis.lambdas.reserve(n);
    for (int j = 1; j <= n; ++j) {
        const double f = j * M_PI / L;
        basis.lambdas.push_back(f * f);
    }
    return basis;
}

Eigenbasis beam_basis(double L, int n) {
    if (L <= 0.0) throw std::invalid_argument("beam_basis: L must be positive");
    if (n < 1) throw std::invalid_argument("beam_basis: n must be >= 1");
    Eigenbasis basis;
    basis.m = 2;
    basis.L = L;
    basis.n = n;
    basis.kappas = beam_roots(n);
    for (double kap : basis.kappas) {
        const double k = kap / L;
        basis.lambdas.push_back(k * k * k * k);
        const double sh = std::sinh(kap), ch = std::cosh(kap);
        const double sigma = (ch - std::cos(kap)) / (sh - std::sin(kap));
        // (1 - sigma)/2 without the e^{kappa}-scale cancellation:
        // sinh k - cosh k = -e^{-k} exactly.
        const double a = (std::cos(kap) - std::sin(kap) - std::exp(-kap)) /
                         (2.0 * (sh - std::sin(kap)));
        basis.sigmas.push_back(sigma);
        basis.coef_a.push_back(a);
        basis.coef_b.push_back(0.5 * (1.0 + sigma));
        basis.nus.push_back(1.0);  // fixed below by quadrature
    }
    const QuadratureRule rule = gauss_rule(L, std::max(4 * n, 32), 12);
    for (int j = 0; j < n; ++j) {
        const double k = basis.kappas[j] / L;
        double nrm2 = 0.0;
        for (int q = 0; q < rule.size(); ++q) {
            const double v = beam_raw(k, basis.sigmas[j], basis.coef_a[j],
                                      basis.coef_b[j], rule.nodes[q], 0);
            nrm2 += rule.weights[q] * v * v;
        }
        basis.nus[j] = 1.0 / std::sqrt(nrm2);
    }
    return basis;
}

double eval(const Eigenbasis& basis, int j, double x, int deriv) {
    if (j < 1 || j > basis.n) throw std::invalid_argument("eval: mode index out of range");
    if (x < -1e-12 * basis.L || x > basis.L * (1.0 + 1e-12))
        throw std::invalid_argument("eval: x outside [0, L]");
    if (basis.m == 1) {
        const double f = j * M_PI / basis.L;
        const double amp = std::sqrt(2.0 / basis.L);
        switch (deriv) {
            case 0: return amp * std::sin(f * x);
            case 1: return amp * f * std::cos(f * x);
            case 2: return -amp * f * f * std::sin(f * x);
            default: throw std::invalid_argument("eval: deriv must be 0, 1 or 2");
        }
    }
    const int i = j - 1;
    const double k = basis.kappas[i] / basis.L;
    return basis.nus[i] *
           beam_raw(k, basis.sigmas[i], basis.coef_a[i], basis.coef_b[i], x, deriv);
}

}  // namespace efk
