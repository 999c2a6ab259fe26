#pragma once

#include <Eigen/Dense>

#include "efk/eigenbasis.hpp"
#include "efk/quadrature.hpp"

namespace efk {

// Hot inner loops of the solver: basis-value tables, physical-space
// reconstruction (table * coeffs), weighted projection (table^T * (w . v))
// and the pointwise cubic. Each kernel has a serial reference implementation
// and an OpenMP variant. Every output element is produced by a single thread
// with a fixed serial inner loop, so results are bit-identical to the serial
// kernels for any thread count.
namespace kernels {

bool parallel_enabled();
void set_parallel(bool on);

// table(i, j) = w_{j+1}^{(deriv)}(nodes[i])
Eigen::MatrixXd basis_table_serial(const Eigenbasis& basis,
                                   const std::vector<double>& nodes, int deriv);
Eigen::MatrixXd basis_table_omp(const Eigenbasis& basis,
                                const std::vector<double>& nodes, int deriv);
Eigen::MatrixXd basis_table(const Eigenbasis& basis,
                            const std::vector<double>& nodes, int deriv);

// values[i] = sum_j table(i, j) c[j]
Eigen::VectorXd reconstruct_nodes_serial(const Eigen::MatrixXd& table,
                                         const Eigen::VectorXd& coeffs);
Eigen::VectorXd reconstruct_nodes_omp(const Eigen::MatrixXd& table,
                                      const Eigen::VectorXd& coeffs);
Eigen::VectorXd reconstruct_nodes(const Eigen::MatrixXd& table,
                                  const Eigen::VectorXd& coeffs);

// r[j] = sum_i table(i, j) weights[i] values[i]
Eigen::VectorXd project_nodes_serial(const Eigen::MatrixXd& table,
                                     const Eigen::VectorXd& weights,
                                     const Eigen::VectorXd& values);
Eigen::VectorXd project_nodes_omp(const Eigen::MatrixXd& table,
                                  const Eigen::VectorXd& weights,
                                  const Eigen::VectorXd& values);
Eigen::VectorXd project_nodes(const Eigen::MatrixXd& table,
                              const Eigen::VectorXd& weights,
                              const Eigen::VectorXd& values);

// out[i] = v[i]^3 - v[i]
Eigen::VectorXd phi_nodes_serial(const Eigen::VectorXd& values);
Eigen::VectorXd phi_nodes_omp(const Eigen::VectorXd& values);
Eigen::VectorXd phi_nodes(const Eigen::VectorXd& values);

}  // namespace kernels
}  // namespace efk
