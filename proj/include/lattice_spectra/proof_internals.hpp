#pragma once

#include <string>
#include <vector>

#include "lattice_spectra/eigensolver.hpp"
#include "lattice_spectra/region.hpp"

namespace lspec {

/// Trial-function machinery for one (k, alpha): g is the alpha-th coordinate
/// function (true lattice coordinate, translated so the region's bounding box
/// starts at 1), u_1..u_k the first k eigenvectors.
///
///   a_ij = sum g u_i u_j d_x                     (symmetric)
///   b_ij = sum u_j Gamma(g, u_i) d_x             (antisymmetric)
///   phi_i = g u_i - sum_j a_ij u_j               (orthogonal to u_1..u_k)
///   Kg_i  = -2 sum phi_i Gamma(g, u_i) d_x
///   Ig_i  = (1/4) sum_{x,y} mu_xy |grad g|^2 |grad u_i|^2
struct ProofData {
  int k = 0;
  int alpha = 0;  // 1-based coordinate index
  std::vector<double> a;   // k*k, row-major
  std::vector<double> b;   // k*k, row-major
  std::vector<std::vector<double>> phi;  // phi[i] on the region
  std::vector<double> Kg;
  std::vector<double> Ig;
  std::vector<double> phi_norm2;        // sum phi_i^2 d_x
  std::vector<double> gamma_gu_norm2;   // sum Gamma(g,u_i)^2 d_x over region+boundary
};

ProofData build_proof_data(const Spectrum& spec, const Region& region, int k,
                           int alpha);

/// max_ij |2 b_ij - (lambda_i - lambda_j) a_ij|
double check_prop31(const ProofData& pd, const Spectrum& spec);

/// max_i |Kg_i - (1/(2n) - Ig_i + sum_j (lambda_i - lambda_j) a_ij^2)|
double check_kg_identity(const ProofData& pd, const Spectrum& spec);

/// max_ij |sum phi_i u_j d_x| (orthogonality forced by construction)
double check_orthogonality(const ProofData& pd, const Spectrum& spec,
                           const Region& region);

struct ChainRecord {
  int i = 0;                  // 1-based eigenvalue index
  double lower_slack = 0.0;   // (lambda_{k+1}-lambda_i) |phi_i|^2 >= 0
  double upper_slack = 0.0;   // Kg_i - (lambda_{k+1}-lambda_i) |phi_i|^2 >= 0
  bool degenerate = false;    // phi_i = 0 with Kg_i possibly negative
};

/// 0 <= (lambda_{k+1}-lambda_i) sum phi_i^2 d_x <= Kg_i, per i <= k.
std::vector<ChainRecord> check_lam1_chain(const ProofData& pd,
                                          const Spectrum& spec);

struct GradLemmaResult {
  double equality_residual = 0.0;   // two expressions for sum Gamma(u) d_x
  double inequality_slack = 0.0;    // (1/2n) energy - sum_a sum Gamma(x_a,u)^2 d_x (min over u)
  double energy_eigen_residual = 0.0;  // max_i |sum Gamma(u_i) d_x - lambda_i|
};

GradLemmaResult check_grad_lemma(const Spectrum& spec, const Region& region);

struct HpClaimRecord {
  int i = 0;
  double slack = 0.0;  // 4/(lambda_{k+1}-lambda_i) sum Gamma(g,u_i)^2 d_x - Kg_i
  bool vacuous = false;  // lambda_{k+1} = lambda_i
};

/// Kg_i <= 4/(lambda_{k+1}-lambda_i) sum Gamma(g,u_i)^2 d_x, per i <= k.
std::vector<HpClaimRecord> check_hp_claim(const ProofData& pd,
                                          const Spectrum& spec);

/// Lattice Laplacian of the alpha-th coordinate and of its square at a point,
/// evaluated on true (untranslated, unextended) coordinates. For interior
/// checks: Delta g = 0 and Delta(g^2) = 1/n everywhere on Z^n.
double coordinate_laplacian(const Point& x, int alpha);
double coordinate_square_laplacian(const Point& x, int alpha);

}  // namespace lspec
