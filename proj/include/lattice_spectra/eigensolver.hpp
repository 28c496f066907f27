#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lattice_spectra/operator.hpp"

namespace lspec {

/// Full eigendecomposition of a Dirichlet operator. Eigenvalues ascending;
/// vectors[i] is the i-th eigenvector, normalized so that the degree-weighted
/// inner product <u_i, u_j> = sum u_i u_j d_x is the identity, with the first
/// nonzero entry of each vector positive.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> vectors;
  int n = 0;           // ambient lattice dimension
  std::size_t N = 0;   // matrix size
};

struct SolverDiagnostics {
  double max_residual = 0.0;      // max_i ||A u_i - lambda_i u_i||_2
  double max_ortho_defect = 0.0;  // max |<u_i,u_j>_d - delta_ij|
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense symmetric eigensolver: Householder reduction to tridiagonal form
/// followed by implicit-shift QL. `a` is row-major N*N and is destroyed.
/// On return `values` holds the eigenvalues (unsorted) and column j of the
/// row-major `vectors` holds the j-th eigenvector (Euclidean-normalized).
/// Throws SolverError after 30*N QL sweeps without convergence.
void symmetric_eigen(std::vector<double> a, std::size_t N,
                     std::vector<double>& values, std::vector<double>& vectors);

Spectrum full_spectrum(const DirichletOperator& op);

/// Closed-form spectrum of the box {1..m_1}x...x{1..m_n}: the sorted multiset
/// { 1 - (1/n) sum_a cos(j_a pi / (m_a + 1)) : 1 <= j_a <= m_a }. Computed
/// without assembling any matrix; independent oracle for the solver.
std::vector<double> box_spectrum_oracle(const std::vector<int>& dims);

SolverDiagnostics spectral_checks(const Spectrum& spec,
                                  const DirichletOperator& op);

/// Default residual gate: 1e-10 * N * ||op||_inf.
double default_eig_tol(const DirichletOperator& op);

}  // namespace lspec
