#pragma once

#include <vector>

namespace efk {

// Composite Gauss-Legendre rule on (0, L). Panel edges always include the
// requested breakpoints so that piecewise-defined integrands (indicator
// initial data) are integrated panel-exactly.
struct QuadratureRule {
    double L = 0.0;
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> edges;        // panel edges, ascending, edges.front()=0, back()=L
    int points_per_panel = 0;

    int size() const { return static_cast<int>(nodes.size()); }
    bool has_edge(double x, double tol = 1e-12) const;
};

// Nodes/weights of the n-point Gauss-Legendre rule on (-1, 1).
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

QuadratureRule gauss_rule(double L, int panels, int points_per_panel,
                          const std::vector<double>& breakpoints = {});

// Default rule used throughout: resolves products of four basis functions
// of index <= n (the cubic term integrand).
QuadratureRule default_rule(double L, int n,
                            const std::vector<double>& breakpoints = {});

}  // namespace efk
