#include "efk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace efk {

bool QuadratureRule::has_edge(double x, double tol) const {
    for (double e : edges)
        if (std::abs(e - x) <= tol * std::max(1.0, L)) return true;
    return false;
}

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration from the Chebyshev estimate of the i-th root.
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

QuadratureRule gauss_rule(double L, int panels, int points_per_panel,
                          const std::vector<double>& breakpoints) {
    if (L <= 0.0) throw std::invalid_argument("gauss_rule: L must be positive");
    if (panels < 1) throw std::invalid_argument("gauss_rule: panels must be >= 1");
    if (points_per_panel < 2 || points_per_panel > 16)
        throw std::invalid_argument("gauss_rule: points_per_panel must be in 2..16");
    for (double b : breakpoints)
        if (b <= 0.0 || b >= L)
            throw std::invalid_argument("gauss_rule: breakpoint outside (0, L)");

    std::vector<double> edges;
    edges.reserve(panels + 1 + breakpoints.size());
    for (int i = 0; i <= panels; ++i) edges.push_back(L * i / panels);
    edges.insert(edges.end(), breakpoints.begin(), breakpoints.end());
    std::sort(edges.begin(), edges.end());
    const double tol = 1e-12 * L;
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [tol](double a, double b) { return std::abs(a - b) < tol; }),
                edges.end());

    std::vector<double> gx, gw;
    gauss_legendre(points_per_panel, gx, gw);

    QuadratureRule rule;
    rule.L = L;
    rule.edges = edges;
    rule.points_per_panel = points_per_panel;
    for (size_t p = 0; p + 1 < edges.size(); ++p) {
        const double a = edges[p], b = edges[p + 1];
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int i = 0; i < points_per_panel; ++i) {
            rule.nodes.push_back(mid + half * gx[i]);
            rule.weights.push_back(half * gw[i]);
        }
    }
    return rule;
}

QuadratureRule default_rule(double L, int n, const std::vector<double>& breakpoints) {
    return gauss_rule(L, std::max(2 * n, 16), 8, breakpoints);
}

}  // namespace efk
