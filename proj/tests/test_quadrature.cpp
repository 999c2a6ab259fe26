#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "efk/quadrature.hpp"

using namespace efk;

TEST_CASE("gauss points integrate polynomials exactly") {
    std::vector<double> x, w;
    gauss_legendre(8, x, w);
    // degree up to 15 on (-1, 1)
    for (int p = 0; p <= 15; ++p) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], p);
        const double exact = (p % 2 == 0) ? 2.0 / (p + 1) : 0.0;
        CHECK(s == doctest::Approx(exact).epsilon(1e-13));
    }
}

TEST_CASE("composite rule integrates on (0, L)") {
    const QuadratureRule rule = gauss_rule(2.0, 5, 6);
    double s0 = 0.0, s2 = 0.0;
    for (int i = 0; i < rule.size(); ++i) {
        s0 += rule.weights[i];
        s2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
    }
    CHECK(s0 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s2 == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("breakpoints become panel edges") {
    const QuadratureRule rule = gauss_rule(1.0, 4, 4, {0.25, 0.75});
    CHECK(rule.has_edge(0.25));
    CHECK(rule.has_edge(0.75));
    // piecewise-constant integrand is integrated exactly
    double s = 0.0;
    for (int i = 0; i < rule.size(); ++i)
        if (rule.nodes[i] > 0.25 && rule.nodes[i] < 0.75) s += rule.weights[i];
    CHECK(s == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("default rule resolves quartic basis products") {
    const int n = 6;
    const QuadratureRule rule = default_rule(M_PI, n);
    // integral of sin^4(n x) over (0, pi) is 3 pi / 8
    double s = 0.0;
    for (int i = 0; i < rule.size(); ++i)
        s += rule.weights[i] * std::pow(std::sin(n * rule.nodes[i]), 4);
    CHECK(s == doctest::Approx(3.0 * M_PI / 8.0).epsilon(1e-12));
}

TEST_CASE("invalid rule parameters are rejected") {
    CHECK_THROWS_AS(gauss_rule(-1.0, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(gauss_rule(1.0, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(gauss_rule(1.0, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(gauss_rule(1.0, 2, 4, {1.5}), std::invalid_argument);
}
