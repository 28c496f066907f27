#include "lattice_spectra/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lspec {

namespace {

constexpr double kDegenerate = 1e-12;  // "numerically zero" for denominators
constexpr double kPreTol = 1e-9;       // slop on precondition thresholds

void require_k(const Spectrum& spec, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > spec.N - 1)
    throw std::out_of_range("k must satisfy 1 <= k <= N-1");
}

// direction: true for statements of the form lhs <= rhs, false for lhs >= rhs.
// slack is always the favorable margin.
InequalityRecord rec(std::string id, int k, double lhs, double rhs, bool pre,
                     bool upper) {
  InequalityRecord r;
  r.inequality_id = std::move(id);
  r.k = k;
  r.lhs = lhs;
  r.rhs = rhs;
  r.precondition_met = pre;
  double slack = upper ? rhs - lhs : lhs - rhs;
  if (std::isnan(slack)) slack = 0.0;
  r.slack = slack;
  r.pass = !pre || slack >= -ineq_tol(lhs, rhs);
  return r;
}

struct PrefixSums {
  double lam = 0.0;    // sum lambda_i
  double lam2 = 0.0;   // sum lambda_i^2
  double one_minus = 0.0;  // sum (1 - lambda_i)
};

PrefixSums prefix(const Spectrum& spec, int k) {
  PrefixSums s;
  for (int i = 0; i < k; ++i) {
    const double l = spec.eigenvalues[i];
    s.lam += l;
    s.lam2 += l * l;
    s.one_minus += 1.0 - l;
  }
  return s;
}

}  // namespace

double ineq_tol(double lhs, double rhs) {
  double scale = 0.0;
  if (std::isfinite(lhs)) scale = std::max(scale, std::fabs(lhs));
  if (std::isfinite(rhs)) scale = std::max(scale, std::fabs(rhs));
  return 1e-8 + 1e-10 * scale;
}

InequalityRecord check_ppw(const Spectrum& spec, int k) {
  require_k(spec, k);
  const double lhs = spec.eigenvalues[k] - spec.eigenvalues[k - 1];
  const PrefixSums s = prefix(spec, k);
  const double rhs =
      s.one_minus <= kDegenerate ? kInf : (4.0 / spec.n) * s.lam / s.one_minus;
  return rec("ppw", k, lhs, rhs, true, true);
}

std::pair<InequalityRecord, InequalityRecord> check_first_gap(
    const Spectrum& spec, bool connected) {
  if (spec.N < 2) throw std::invalid_argument("first-gap checks need N >= 2");
  const double l1 = spec.eigenvalues[0];
  const double l2 = spec.eigenvalues[1];
  const double rhs_gap =
      l1 >= 1.0 - kDegenerate ? kInf : 4.0 * l1 / (spec.n * (1.0 - l1));
  InequalityRecord gap = rec("first_gap", 1, l2 - l1, rhs_gap, true, true);
  InequalityRecord ratio = rec("first_ratio", 1, l2, 9.0 * l1, connected, true);
  return {gap, ratio};
}

InequalityRecord check_hp(const Spectrum& spec, int k) {
  require_k(spec, k);
  const double top = spec.eigenvalues[k];
  double lhs;
  if (top - spec.eigenvalues[k - 1] <= kDegenerate) {
    lhs = kInf;
  } else {
    lhs = 0.0;
    for (int i = 0; i < k; ++i)
      lhs += spec.eigenvalues[i] / (top - spec.eigenvalues[i]);
  }
  const double rhs = (spec.n / 4.0) * prefix(spec, k).one_minus;
  return rec("hp", k, lhs, rhs, true, false);
}

InequalityRecord check_yang1(const Spectrum& spec, int k) {
  require_k(spec, k);
  const double top = spec.eigenvalues[k];
  double lhs = 0.0;
  double sum = 0.0;
  for (int i = 0; i < k; ++i) {
    const double gap = top - spec.eigenvalues[i];
    lhs += gap * gap * (1.0 - spec.eigenvalues[i]);
    sum += gap * spec.eigenvalues[i];
  }
  return rec("yang1", k, lhs, (4.0 / spec.n) * sum, true, true);
}

InequalityRecord check_yang2(const Spectrum& spec, int k) {
  require_k(spec, k);
  const double top = spec.eigenvalues[k];
  const bool pre = top <= 1.0 + 4.0 / spec.n + kPreTol;
  const PrefixSums s = prefix(spec, k);
  const double rhs =
      s.one_minus <= kDegenerate
          ? kInf
          : ((1.0 + 4.0 / spec.n) * s.lam - s.lam2) / s.one_minus;
  return rec("yang2", k, top, rhs, pre, true);
}

InequalityRecord check_ratio_bound(const Spectrum& spec, int k,
                                   std::optional<double> delta) {
  require_k(spec, k);
  const double lam_k = spec.eigenvalues[k - 1];
  if (delta) {
    const double d = *delta;
    if (d <= 0.0) throw std::domain_error("delta must be positive");
    const bool pre = lam_k <= 1.0 - d + kPreTol;
    const double rhs = (1.0 + 4.0 / (spec.n * d)) *
                       std::pow(static_cast<double>(k), 2.0 / (spec.n * d)) *
                       spec.eigenvalues[0];
    return rec("ratio_delta", k, spec.eigenvalues[k], rhs, pre, true);
  }
  const bool pre = lam_k < 1.0 - kDegenerate;
  double rhs = kInf;
  if (pre) {
    const double g = 1.0 - lam_k;
    rhs = (1.0 + 4.0 / (spec.n * g)) *
          std::pow(static_cast<double>(k), 2.0 / (spec.n * g)) *
          spec.eigenvalues[0];
  }
  return rec("ratio", k, spec.eigenvalues[k], rhs, pre, true);
}

double check_bipartite_symmetry(const Spectrum& spec) {
  double worst = 0.0;
  for (std::size_t k = 0; k < spec.N; ++k)
    worst = std::max(worst, std::fabs(spec.eigenvalues[k] +
                                      spec.eigenvalues[spec.N - 1 - k] - 2.0));
  return worst;
}

std::vector<InequalityRecord> check_partial_sums(const Spectrum& spec) {
  std::vector<InequalityRecord> out;
  double sum = 0.0;
  for (std::size_t k = 1; k <= spec.N; ++k) {
    sum += 1.0 - spec.eigenvalues[k - 1];
    InequalityRecord r;
    r.inequality_id = "partial_sum";
    r.k = static_cast<int>(k);
    r.lhs = sum;
    r.rhs = 0.0;
    r.precondition_met = true;
    // >= 0 for every k; equality is forced exactly at k = N
    r.slack = k == spec.N ? -std::fabs(sum) : sum;
    r.pass = r.slack >= -ineq_tol(r.lhs, r.rhs);
    out.push_back(std::move(r));
  }
  return out;
}

InequalityRecord check_first_eig_bound(const Spectrum& spec, bool connected) {
  const bool pre = connected && spec.N >= 2;
  return rec("first_eig", 1, spec.eigenvalues[0], 1.0 - 1.0 / (2.0 * spec.n),
             pre, true);
}

InequalityRecord check_variance(const Spectrum& spec, int k) {
  require_k(spec, k);
  const bool pre = spec.eigenvalues[k] <= 1.0 + 4.0 / spec.n + kPreTol;
  const double mean = prefix(spec, k).lam / k;
  double var = 0.0;
  for (int i = 0; i < k; ++i) {
    const double d = spec.eigenvalues[i] - mean;
    var += d * d;
  }
  var /= k;
  return rec("variance", k, var, (4.0 / spec.n) * mean, pre, true);
}

AltWeights alt_weights(const Spectrum& spec, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > spec.N)
    throw std::out_of_range("k must satisfy 1 <= k <= N");
  const double shift = 2.0 / spec.n;
  double total = 0.0;
  for (int i = 0; i < k; ++i) total += 1.0 - spec.eigenvalues[i] + shift;
  double s0 = 0.0;
  for (int i = 0; i < k; ++i) s0 += 1.0 - spec.eigenvalues[i];
  if (s0 <= kDegenerate)
    throw std::domain_error("degenerate weights: sum(1-lambda_i) is zero");
  AltWeights w;
  w.mu.resize(k);
  for (int i = 0; i < k; ++i)
    w.mu[i] = (1.0 - spec.eigenvalues[i] + shift) / total;
  const double t = 1.0 + 2.0 * k / (spec.n * s0);
  w.A = t * (1.0 + std::sqrt(1.0 - 1.0 / t));
  return w;
}

std::pair<InequalityRecord, InequalityRecord> check_yang2_alt(
    const Spectrum& spec, int k) {
  require_k(spec, k);
  const double top = spec.eigenvalues[k];
  const PrefixSums ps = prefix(spec, k);
  const double s0 = ps.one_minus;
  double s1 = 0.0;
  double s2 = 0.0;
  for (int i = 0; i < k; ++i) {
    const double l = spec.eigenvalues[i];
    s1 += l * (1.0 - l + 2.0 / spec.n);
    s2 += l * l * (1.0 - l + 4.0 / spec.n);
  }

  InequalityRecord quad;
  if (s0 <= kDegenerate) {
    quad = rec("yang2_quad", k, top, kInf, true, true);
  } else {
    double disc = s1 * s1 - s0 * s2;
    if (disc < 0.0) {
      if (disc < -1e-10)
        throw std::runtime_error(
            "yang2 quadratic discriminant below -1e-10: eigensolver failure");
      disc = 0.0;
    }
    quad = rec("yang2_quad", k, top, (s1 + std::sqrt(disc)) / s0, true, true);
  }

  InequalityRecord weighted;
  const bool pre = spec.eigenvalues[k - 1] <= 1.0 + 2.0 / spec.n + kPreTol &&
                   s0 > kDegenerate;
  if (!pre) {
    weighted = rec("yang2_weighted", k, top, kInf, false, true);
  } else {
    const AltWeights w = alt_weights(spec, k);
    double mean = 0.0;
    for (int i = 0; i < k; ++i) mean += spec.eigenvalues[i] * w.mu[i];
    weighted = rec("yang2_weighted", k, top, w.A * mean, true, true);
  }
  return {quad, weighted};
}

InequalityRecord check_hp_alt(const Spectrum& spec, int k) {
  require_k(spec, k);
  const double top = spec.eigenvalues[k];
  const double s0 = prefix(spec, k).one_minus;
  const bool pre = spec.eigenvalues[k - 1] <= 1.0 + 2.0 / spec.n + kPreTol &&
                   s0 > kDegenerate;
  if (!pre) return rec("hp_alt", k, 0.0, 0.0, false, false);
  const AltWeights w = alt_weights(spec, k);
  double lhs;
  if (top - spec.eigenvalues[k - 1] <= kDegenerate) {
    lhs = kInf;
  } else {
    lhs = 0.0;
    for (int i = 0; i < k; ++i)
      lhs += spec.eigenvalues[i] / (top - spec.eigenvalues[i]) * w.mu[i];
  }
  return rec("hp_alt", k, lhs, 1.0 / (w.A - 1.0), true, false);
}

InequalityRecord check_ppw_alt(const Spectrum& spec, int k) {
  require_k(spec, k);
  const double s0 = prefix(spec, k).one_minus;
  const bool pre = spec.eigenvalues[k - 1] <= 1.0 + 2.0 / spec.n + kPreTol &&
                   s0 > kDegenerate;
  const double lhs = spec.eigenvalues[k] - spec.eigenvalues[k - 1];
  if (!pre) return rec("ppw_alt", k, lhs, kInf, false, true);
  const AltWeights w = alt_weights(spec, k);
  double mean = 0.0;
  for (int i = 0; i < k; ++i) mean += spec.eigenvalues[i] * w.mu[i];
  return rec("ppw_alt", k, lhs, (w.A - 1.0) * mean, true, true);
}

RecursionRecord check_recursion(const Spectrum& spec, int k,
                                std::optional<double> B_opt) {
  require_k(spec, k);
  const double lam_k = spec.eigenvalues[k - 1];
  double B;
  if (B_opt) {
    B = *B_opt;
    if (B <= 0.0) throw std::domain_error("B must be positive");
  } else {
    if (lam_k >= 1.0 - kDegenerate)
      throw std::domain_error(
          "default B = 1/(1-lambda_k) undefined: lambda_k >= 1");
    B = 1.0 / (1.0 - lam_k);
  }

  RecursionRecord r;
  r.k = k;
  r.B = B;
  const double top = spec.eigenvalues[k];
  const double bn = B / spec.n;

  double sumsq = 0.0;
  double cross = 0.0;
  for (int i = 0; i < k; ++i) {
    const double gap = top - spec.eigenvalues[i];
    sumsq += gap * gap;
    cross += spec.eigenvalues[i] * gap;
  }
  r.hypothesis_met = sumsq <= 4.0 * bn * cross + ineq_tol(sumsq, 4.0 * bn * cross);

  const PrefixSums sk = prefix(spec, k);
  const PrefixSums sk1 = prefix(spec, k + 1);
  r.Lambda_k = sk.lam / k;
  r.T_k = sk.lam2 / k;
  r.F_k = (1.0 + 2.0 * bn) * r.Lambda_k * r.Lambda_k - r.T_k;
  const double Lambda_k1 = sk1.lam / (k + 1);
  const double T_k1 = sk1.lam2 / (k + 1);
  r.F_k1 = (1.0 + 2.0 * bn) * Lambda_k1 * Lambda_k1 - T_k1;
  r.p_k1 = Lambda_k1 - (1.0 + 2.0 * bn / (k + 1)) * r.Lambda_k;

  const double ratio = static_cast<double>(k + 1) / k;
  r.C = 1.0 - (bn / 3.0) * std::pow(1.0 / ratio, 4.0 * bn) *
                  (1.0 + 2.0 * bn) * (1.0 + 4.0 * bn) /
                  std::pow(static_cast<double>(k + 1), 3.0);
  r.contraction_ok = r.C < 1.0;
  r.bound = r.C * std::pow(ratio, 4.0 * bn) * r.F_k;
  r.pass = !r.hypothesis_met ||
           (r.contraction_ok &&
            r.F_k1 <= r.bound + ineq_tol(r.F_k1, r.bound));
  return r;
}

std::vector<InequalityRecord> full_report(const Spectrum& spec,
                                          bool connected) {
  std::vector<InequalityRecord> out;
  const int N = static_cast<int>(spec.N);
  for (int k = 1; k <= N - 1; ++k) {
    out.push_back(check_ppw(spec, k));
    out.push_back(check_hp(spec, k));
    out.push_back(check_yang1(spec, k));
    out.push_back(check_yang2(spec, k));
    out.push_back(check_ratio_bound(spec, k));
    out.push_back(check_variance(spec, k));
    auto [quad, weighted] = check_yang2_alt(spec, k);
    out.push_back(std::move(quad));
    out.push_back(std::move(weighted));
    out.push_back(check_hp_alt(spec, k));
    out.push_back(check_ppw_alt(spec, k));

    InequalityRecord recursion;
    recursion.inequality_id = "recursion";
    recursion.k = k;
    if (spec.eigenvalues[k - 1] < 1.0 - kDegenerate) {
      const RecursionRecord rr = check_recursion(spec, k);
      recursion.lhs = rr.F_k1;
      recursion.rhs = rr.bound;
      recursion.slack = rr.bound - rr.F_k1;
      recursion.precondition_met = rr.hypothesis_met;
      recursion.pass = rr.pass;
    } else {
      recursion.precondition_met = false;
      recursion.pass = true;
    }
    out.push_back(std::move(recursion));
  }
  if (N >= 2) {
    auto [gap, ratio] = check_first_gap(spec, connected);
    out.push_back(std::move(gap));
    out.push_back(std::move(ratio));
    out.push_back(check_first_eig_bound(spec, connected));
  }
  for (auto& r : check_partial_sums(spec)) out.push_back(std::move(r));

  std::sort(out.begin(), out.end(),
            [](const InequalityRecord& a, const InequalityRecord& b) {
              if (a.inequality_id != b.inequality_id)
                return a.inequality_id < b.inequality_id;
              return a.k < b.k;
            });
  return out;
}

}  // namespace lspec
