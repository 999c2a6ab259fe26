// Timing comparison of the serial and OpenMP kernel variants, plus a
// bitwise agreement check (the parallel kernels must be exact).
#include <chrono>
#include <cstdio>

#include "efk/kernels.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <class F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        f();
        const auto t1 = Clock::now();
        best = std::min(best, seconds(t0, t1));
    }
    return best;
}

}  // namespace

int main() {
    const double L = 40.0;
    const int n = 128;
    const efk::Eigenbasis basis = efk::beam_basis(L, n);
    const efk::QuadratureRule rule = efk::default_rule(L, n);
    const int nq = rule.size();
    std::printf("beam basis n = %d, quadrature nodes = %d\n", n, nq);

    Eigen::VectorXd coeffs(n);
    for (int j = 0; j < n; ++j) coeffs[j] = 1.0 / (1.0 + j);
    const Eigen::Map<const Eigen::VectorXd> weights(rule.weights.data(), nq);

    const Eigen::MatrixXd table_s = efk::kernels::basis_table_serial(basis, rule.nodes, 0);
    const Eigen::MatrixXd table_p = efk::kernels::basis_table_omp(basis, rule.nodes, 0);
    const Eigen::VectorXd values_s = efk::kernels::reconstruct_nodes_serial(table_s, coeffs);
    const Eigen::VectorXd values_p = efk::kernels::reconstruct_nodes_omp(table_p, coeffs);
    const Eigen::VectorXd phi_s = efk::kernels::phi_nodes_serial(values_s);
    const Eigen::VectorXd phi_p = efk::kernels::phi_nodes_omp(values_p);
    const Eigen::VectorXd proj_s = efk::kernels::project_nodes_serial(table_s, weights, phi_s);
    const Eigen::VectorXd proj_p = efk::kernels::project_nodes_omp(table_p, weights, phi_p);

    const bool identical = table_s == table_p && values_s == values_p &&
                           phi_s == phi_p && proj_s == proj_p;
    std::printf("serial/omp outputs bitwise identical: %s\n", identical ? "yes" : "NO");

    const int reps = 20;
    struct Row {
        const char* name;
        double serial, omp;
    } rows[] = {
        {"basis_table", time_best_of(reps, [&] { efk::kernels::basis_table_serial(basis, rule.nodes, 0); }),
         time_best_of(reps, [&] { efk::kernels::basis_table_omp(basis, rule.nodes, 0); })},
        {"reconstruct", time_best_of(reps, [&] { efk::kernels::reconstruct_nodes_serial(table_s, coeffs); }),
         time_best_of(reps, [&] { efk::kernels::reconstruct_nodes_omp(table_s, coeffs); })},
        {"phi", time_best_of(reps, [&] { efk::kernels::phi_nodes_serial(values_s); }),
         time_best_of(reps, [&] { efk::kernels::phi_nodes_omp(values_s); })},
        {"project", time_best_of(reps, [&] { efk::kernels::project_nodes_serial(table_s, weights, phi_s); }),
         time_best_of(reps, [&] { efk::kernels::project_nodes_omp(table_s, weights, phi_s); })},
    };

    std::printf("%-12s %12s %12s %8s\n", "kernel", "serial [s]", "omp [s]", "speedup");
    for (const auto& r : rows)
        std::printf("%-12s %12.3e %12.3e %8.2f\n", r.name, r.serial, r.omp,
                    r.serial / r.omp);
    return identical ? 0 : 1;
}
