#include "efk/kernels.hpp"

#include <cstdlib>

#ifdef EFK_HAVE_OPENMP
#include <omp.h>
#endif

namespace efk {
namespace kernels {

namespace {
bool g_parallel = [] {
    const char* env = std::getenv("EFK_SERIAL");
    return env == nullptr || env[0] == '0';
}();

// Below this many flops the fork/join overhead dominates; fall back to the
// serial kernel (identical results, so the switch is invisible).
constexpr long kMinParallelWork = 1 << 16;
}  // namespace

bool parallel_enabled() {
#ifdef EFK_HAVE_OPENMP
    return g_parallel;
#else
    return false;
#endif
}

void set_parallel(bool on) { g_parallel = on; }

Eigen::MatrixXd basis_table_serial(const Eigenbasis& basis,
                                   const std::vector<double>& nodes, int deriv) {
    const int nq = static_cast<int>(nodes.size());
    Eigen::MatrixXd table(nq, basis.n);
    for (int i = 0; i < nq; ++i)
        for (int j = 0; j < basis.n; ++j)
            table(i, j) = eval(basis, j + 1, nodes[i], deriv);
    return table;
}

Eigen::MatrixXd basis_table_omp(const Eigenbasis& basis,
                                const std::vector<double>& nodes, int deriv) {
    const int nq = static_cast<int>(nodes.size());
    Eigen::MatrixXd table(nq, basis.n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < nq; ++i)
        for (int j = 0; j < basis.n; ++j)
            table(i, j) = eval(basis, j + 1, nodes[i], deriv);
    return table;
}

Eigen::MatrixXd basis_table(const Eigenbasis& basis,
                            const std::vector<double>& nodes, int deriv) {
    const long work = static_cast<long>(nodes.size()) * basis.n * 8;
    return parallel_enabled() && work >= kMinParallelWork
               ? basis_table_omp(basis, nodes, deriv)
               : basis_table_serial(basis, nodes, deriv);
}

Eigen::VectorXd reconstruct_nodes_serial(const Eigen::MatrixXd& table,
                                         const Eigen::VectorXd& coeffs) {
    const int nq = static_cast<int>(table.rows());
    const int n = static_cast<int>(table.cols());
    Eigen::VectorXd out(nq);
    for (int i = 0; i < nq; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += table(i, j) * coeffs[j];
        out[i] = s;
    }
    return out;
}

Eigen::VectorXd reconstruct_nodes_omp(const Eigen::MatrixXd& table,
                                      const Eigen::VectorXd& coeffs) {
    const int nq = static_cast<int>(table.rows());
    const int n = static_cast<int>(table.cols());
    Eigen::VectorXd out(nq);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < nq; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += table(i, j) * coeffs[j];
        out[i] = s;
    }
    return out;
}

Eigen::VectorXd reconstruct_nodes(const Eigen::MatrixXd& table,
                                  const Eigen::VectorXd& coeffs) {
    const long work = static_cast<long>(table.rows()) * table.cols();
    return parallel_enabled() && work >= kMinParallelWork
               ? reconstruct_nodes_omp(table, coeffs)
               : reconstruct_nodes_serial(table, coeffs);
}

Eigen::VectorXd project_nodes_serial(const Eigen::MatrixXd& table,
                                     const Eigen::VectorXd& weights,
                                     const Eigen::VectorXd& values) {
    const int nq = static_cast<int>(table.rows());
    const int n = static_cast<int>(table.cols());
    Eigen::VectorXd out(n);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < nq; ++i) s += table(i, j) * weights[i] * values[i];
        out[j] = s;
    }
    return out;
}

Eigen::VectorXd project_nodes_omp(const Eigen::MatrixXd& table,
                                  const Eigen::VectorXd& weights,
                                  const Eigen::VectorXd& values) {
    const int nq = static_cast<int>(table.rows());
    const int n = static_cast<int>(table.cols());
    Eigen::VectorXd out(n);
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < nq; ++i) s += table(i, j) * weights[i] * values[i];
        out[j] = s;
    }
    return out;
}

Eigen::VectorXd project_nodes(const Eigen::MatrixXd& table,
                              const Eigen::VectorXd& weights,
                              const Eigen::VectorXd& values) {
    const long work = static_cast<long>(table.rows()) * table.cols();
    return parallel_enabled() && work >= kMinParallelWork
               ? project_nodes_omp(table, weights, values)
               : project_nodes_serial(table, weights, values);
}

Eigen::VectorXd phi_nodes_serial(const Eigen::VectorXd& values) {
    Eigen::VectorXd out(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        const double v = values[i];
        out[i] = v * v * v - v;
    }
    return out;
}

Eigen::VectorXd phi_nodes_omp(const Eigen::VectorXd& values) {
    const int nq = static_cast<int>(values.size());
    Eigen::VectorXd out(nq);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < nq; ++i) {
        const double v = values[i];
        out[i] = v * v * v - v;
    }
    return out;
}

Eigen::VectorXd phi_nodes(const Eigen::VectorXd& values) {
    return parallel_enabled() && values.size() >= kMinParallelWork
               ? phi_nodes_omp(values)
               : phi_nodes_serial(values);
}

}  // namespace kernels
}  // namespace efk
