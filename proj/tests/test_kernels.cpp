#include <doctest.h>

#include "efk/kernels.hpp"

using namespace efk;

namespace {

struct Fixture {
    Eigenbasis basis = beam_basis(2.0, 24);
    QuadratureRule rule = default_rule(2.0, 24);
    Eigen::VectorXd coeffs;
    Eigen::VectorXd weights;

    Fixture() {
        coeffs.resize(24);
        for (int j = 0; j < 24; ++j) coeffs[j] = std::cos(1.0 + j);
        weights = Eigen::Map<const Eigen::VectorXd>(rule.weights.data(), rule.size());
    }
};

}  // namespace

TEST_CASE("omp kernels are bitwise identical to serial") {
    Fixture f;
    for (int deriv = 0; deriv <= 2; ++deriv) {
        const Eigen::MatrixXd ts = kernels::basis_table_serial(f.basis, f.rule.nodes, deriv);
        const Eigen::MatrixXd tp = kernels::basis_table_omp(f.basis, f.rule.nodes, deriv);
        CHECK(ts == tp);
    }
    const Eigen::MatrixXd table = kernels::basis_table_serial(f.basis, f.rule.nodes, 0);
    const Eigen::VectorXd vs = kernels::reconstruct_nodes_serial(table, f.coeffs);
    CHECK(vs == kernels::reconstruct_nodes_omp(table, f.coeffs));
    CHECK(kernels::phi_nodes_serial(vs) == kernels::phi_nodes_omp(vs));
    CHECK(kernels::project_nodes_serial(table, f.weights, vs) ==
          kernels::project_nodes_omp(table, f.weights, vs));
}

TEST_CASE("project is a left inverse of reconstruct") {
    Fixture f;
    const Eigen::MatrixXd table = kernels::basis_table(f.basis, f.rule.nodes, 0);
    const Eigen::VectorXd values = kernels::reconstruct_nodes(table, f.coeffs);
    const Eigen::VectorXd back = kernels::project_nodes(table, f.weights, values);
    CHECK((back - f.coeffs).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("phi kernel computes s^3 - s") {
    Eigen::VectorXd v(3);
    v << -1.0, 0.5, 2.0;
    const Eigen::VectorXd out = kernels::phi_nodes(v);
    CHECK(out[0] == doctest::Approx(0.0));
    CHECK(out[1] == doctest::Approx(-0.375));
    CHECK(out[2] == doctest::Approx(6.0));
}

TEST_CASE("parallel toggle is honored") {
    const bool before = kernels::parallel_enabled();
    kernels::set_parallel(false);
    CHECK_FALSE(kernels::parallel_enabled());
    kernels::set_parallel(before);
}
