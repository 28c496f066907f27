#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lattice_spectra/eigensolver.hpp"

namespace lspec {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// One inequality evaluated at one k. `slack` is always the favorable margin:
/// slack >= 0 means the inequality holds, regardless of which side the source
/// statement writes first. rhs/lhs may be +inf (never encoded as a large
/// finite float). pass = !precondition_met || slack >= -tol.
struct InequalityRecord {
  std::string inequality_id;
  int k = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool precondition_met = true;
  bool pass = true;
};

/// Absolute 1e-8 plus 1e-10 relative to the larger finite magnitude.
double ineq_tol(double lhs, double rhs);

// gap bound: lambda_{k+1} - lambda_k <= (4/n) sum lambda_i / sum (1-lambda_i)
InequalityRecord check_ppw(const Spectrum& spec, int k);

// k = 1 corollary: the gap bound specialized to lambda_2 - lambda_1, and
// lambda_2 <= 9 lambda_1 (the ratio record requires the region connected).
std::pair<InequalityRecord, InequalityRecord> check_first_gap(
    const Spectrum& spec, bool connected);

// sum lambda_i/(lambda_{k+1}-lambda_i) >= (n/4) sum (1-lambda_i); lhs is +inf
// when lambda_{k+1} = lambda_k.
InequalityRecord check_hp(const Spectrum& spec, int k);

// sum (lambda_{k+1}-lambda_i)^2 (1-lambda_i)
//   <= (4/n) sum (lambda_{k+1}-lambda_i) lambda_i
InequalityRecord check_yang1(const Spectrum& spec, int k);

// under lambda_{k+1} <= 1 + 4/n:
// lambda_{k+1} <= [(1+4/n) sum lambda_i - sum lambda_i^2] / sum (1-lambda_i)
InequalityRecord check_yang2(const Spectrum& spec, int k);

// under lambda_k < 1:
// lambda_{k+1} <= (1 + 4/(n(1-lambda_k))) k^{2/(n(1-lambda_k))} lambda_1.
// With delta supplied, evaluates the uniform form with 1-lambda_k replaced by
// delta, preconditioned on lambda_k <= 1 - delta.
InequalityRecord check_ratio_bound(const Spectrum& spec, int k,
                                   std::optional<double> delta = std::nullopt);

/// max_k |lambda_k + lambda_{N+1-k} - 2| (bipartite spectral symmetry).
double check_bipartite_symmetry(const Spectrum& spec);

// Partial sums sum_{i<=k}(1-lambda_i): >= 0 for every k, = 0 exactly at k = N.
std::vector<InequalityRecord> check_partial_sums(const Spectrum& spec);

// lambda_1 <= 1 - 1/(2n) for a connected region with N >= 2.
InequalityRecord check_first_eig_bound(const Spectrum& spec, bool connected);

// under lambda_{k+1} <= 1 + 4/n:
// (1/k) sum (lambda_i - mean)^2 <= (4/n) mean
InequalityRecord check_variance(const Spectrum& spec, int k);

/// Weights mu_i = (1 - lambda_i + 2/n) / sum_j (1 - lambda_j + 2/n) and the
/// amplification factor
///   A = (1 + 2k/(n S0)) (1 + sqrt(1 - (1 + 2k/(n S0))^{-1})), S0 = sum(1-lambda_i).
struct AltWeights {
  std::vector<double> mu;
  double A = 0.0;
};

/// Throws std::domain_error when sum(1-lambda_i) is numerically zero.
AltWeights alt_weights(const Spectrum& spec, int k);

// First record ("yang2_quad"): lambda_{k+1} <= [S1 + sqrt(S1^2 - S0 S2)]/S0
// with S0 = sum(1-lambda_i), S1 = sum lambda_i (1-lambda_i+2/n),
// S2 = sum lambda_i^2 (1-lambda_i+4/n); discriminant values in [-1e-10, 0)
// are clamped to 0, anything more negative is a hard error.
// Second record ("yang2_weighted"): lambda_{k+1} <= A sum lambda_i mu_i,
// preconditioned on lambda_k <= 1 + 2/n.
std::pair<InequalityRecord, InequalityRecord> check_yang2_alt(
    const Spectrum& spec, int k);

// sum lambda_i/(lambda_{k+1}-lambda_i) mu_i >= 1/(A-1) under lambda_k <= 1+2/n.
InequalityRecord check_hp_alt(const Spectrum& spec, int k);

// lambda_{k+1} - lambda_k <= (A-1) sum lambda_i mu_i under lambda_k <= 1+2/n.
InequalityRecord check_ppw_alt(const Spectrum& spec, int k);

/// Contraction step of the eigenvalue-ratio recursion: with
///   Lambda_k = mean(lambda_1..k), T_k = mean(lambda^2),
///   F_k = (1 + 2B/n) Lambda_k^2 - T_k,
/// if sum (lambda_{k+1}-lambda_i)^2 <= (4B/n) sum lambda_i (lambda_{k+1}-lambda_i)
/// then F_{k+1} <= C(n,k,B) ((k+1)/k)^{4B/n} F_k with
///   C = 1 - (B/(3n)) (k/(k+1))^{4B/n} (1+2B/n)(1+4B/n)/(k+1)^3 < 1.
struct RecursionRecord {
  int k = 0;
  double B = 0.0;
  double Lambda_k = 0.0;
  double T_k = 0.0;
  double F_k = 0.0;
  double F_k1 = 0.0;
  double p_k1 = 0.0;
  double C = 0.0;
  double bound = 0.0;         // C ((k+1)/k)^{4B/n} F_k
  bool hypothesis_met = false;
  bool contraction_ok = false;  // C < 1
  bool pass = true;
};

/// Default B = 1/(1-lambda_k); throws std::domain_error when lambda_k >= 1 and
/// no B is supplied.
RecursionRecord check_recursion(const Spectrum& spec, int k,
                                std::optional<double> B = std::nullopt);

/// Every checker above for every admissible k, sorted by (inequality_id, k).
/// Degenerate cases become vacuous records; the sweep never aborts.
std::vector<InequalityRecord> full_report(const Spectrum& spec, bool connected);

}  // namespace lspec
