#include "lattice_spectra/proof_internals.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lattice_spectra/operator.hpp"

namespace lspec {

namespace {

// g evaluated on the true lattice coordinate, translated so the region's
// bounding box starts at 1. All verified identities are translation-covariant.
struct CoordinateFn {
  int alpha;      // 0-based here
  Coord offset;   // min coordinate of the region along alpha

  double operator()(const Point& x) const {
    return static_cast<double>(x[alpha]) - offset + 1.0;
  }
};

double u_at(const Region& region, const std::vector<double>& u, const Point& x) {
  const int i = region.index_of(x);
  return i >= 0 ? u[static_cast<std::size_t>(i)] : 0.0;
}

// Gamma(g, u)(x) with g defined on all of Z^n and u null-extended.
double gamma_gu(const Region& region, const CoordinateFn& g,
                const std::vector<double>& u, const Point& x) {
  const double gx = g(x);
  const double ux = u_at(region, u, x);
  double acc = 0.0;
  for (const Point& y : lattice_neighbors(x))
    acc += (g(y) - gx) * (u_at(region, u, y) - ux);
  return acc / (2.0 * region.degree());
}

}  // namespace

ProofData build_proof_data(const Spectrum& spec, const Region& region, int k,
                           int alpha) {
  const int N = static_cast<int>(region.size());
  if (k < 1 || k > N - 1) throw std::out_of_range("k must satisfy 1 <= k <= N-1");
  if (alpha < 1 || alpha > region.dim())
    throw std::out_of_range("alpha must satisfy 1 <= alpha <= n");

  Coord offset = std::numeric_limits<Coord>::max();
  for (const Point& p : region.points())
    offset = std::min(offset, p[alpha - 1]);
  const CoordinateFn g{alpha - 1, offset};

  const double d = region.degree();
  const std::vector<Point> bnd = boundary(region).points;

  ProofData pd;
  pd.k = k;
  pd.alpha = alpha;
  pd.a.assign(static_cast<std::size_t>(k) * k, 0.0);
  pd.b.assign(static_cast<std::size_t>(k) * k, 0.0);
  pd.Kg.assign(k, 0.0);
  pd.Ig.assign(k, 0.0);
  pd.phi_norm2.assign(k, 0.0);
  pd.gamma_gu_norm2.assign(k, 0.0);
  pd.phi.assign(k, std::vector<double>(N, 0.0));

  // a_ij = sum g u_i u_j d_x (support: the region)
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      double acc = 0.0;
      for (int x = 0; x < N; ++x)
        acc += g(region.point(x)) * spec.vectors[i][x] * spec.vectors[j][x];
      pd.a[static_cast<std::size_t>(i) * k + j] = acc * d;
    }

  for (int i = 0; i < k; ++i) {
    auto& phi = pd.phi[i];
    for (int x = 0; x < N; ++x) {
      double acc = g(region.point(x)) * spec.vectors[i][x];
      for (int j = 0; j < k; ++j)
        acc -= pd.a[static_cast<std::size_t>(i) * k + j] * spec.vectors[j][x];
      phi[x] = acc;
      pd.phi_norm2[i] += acc * acc;
    }
    pd.phi_norm2[i] *= d;
  }

  for (int i = 0; i < k; ++i) {
    // Gamma(g, u_i) on region + boundary; elsewhere every incident edge has
    // grad u_i = 0.
    double kg = 0.0;
    double gnorm2 = 0.0;
    double ig = 0.0;
    auto visit = [&](const Point& x, int region_index) {
      const double gam = gamma_gu(region, g, spec.vectors[i], x);
      gnorm2 += gam * gam;
      if (region_index >= 0) {
        kg += pd.phi[i][region_index] * gam;
        for (int j = 0; j < k; ++j)
          pd.b[static_cast<std::size_t>(i) * k + j] +=
              spec.vectors[j][region_index] * gam * d;
      }
      const double gx = g(x);
      const double ux = u_at(region, spec.vectors[i], x);
      for (const Point& y : lattice_neighbors(x)) {
        const double dg = g(y) - gx;
        const double du = u_at(region, spec.vectors[i], y) - ux;
        ig += dg * dg * du * du;
      }
    };
    for (int x = 0; x < N; ++x) visit(region.point(x), x);
    for (const Point& x : bnd) visit(x, -1);
    pd.Kg[i] = -2.0 * kg * d;
    pd.gamma_gu_norm2[i] = gnorm2 * d;
    pd.Ig[i] = ig / 4.0;  // ordered pairs count each edge twice
  }
  return pd;
}

double check_prop31(const ProofData& pd, const Spectrum& spec) {
  double worst = 0.0;
  for (int i = 0; i < pd.k; ++i)
    for (int j = 0; j < pd.k; ++j) {
      const double lhs = 2.0 * pd.b[static_cast<std::size_t>(i) * pd.k + j];
      const double rhs = (spec.eigenvalues[i] - spec.eigenvalues[j]) *
                         pd.a[static_cast<std::size_t>(i) * pd.k + j];
      worst = std::max(worst, std::fabs(lhs - rhs));
    }
  return worst;
}

double check_kg_identity(const ProofData& pd, const Spectrum& spec) {
  double worst = 0.0;
  for (int i = 0; i < pd.k; ++i) {
    double sum = 0.0;
    for (int j = 0; j < pd.k; ++j) {
      const double aij = pd.a[static_cast<std::size_t>(i) * pd.k + j];
      sum += (spec.eigenvalues[i] - spec.eigenvalues[j]) * aij * aij;
    }
    const double rhs = 1.0 / (2.0 * spec.n) - pd.Ig[i] + sum;
    worst = std::max(worst, std::fabs(pd.Kg[i] - rhs));
  }
  return worst;
}

double check_orthogonality(const ProofData& pd, const Spectrum& spec,
                           const Region& region) {
  const int N = static_cast<int>(region.size());
  const double d = region.degree();
  double worst = 0.0;
  for (int i = 0; i < pd.k; ++i)
    for (int j = 0; j < pd.k; ++j) {
      double acc = 0.0;
      for (int x = 0; x < N; ++x) acc += pd.phi[i][x] * spec.vectors[j][x];
      worst = std::max(worst, std::fabs(acc * d));
    }
  return worst;
}

std::vector<ChainRecord> check_lam1_chain(const ProofData& pd,
                                          const Spectrum& spec) {
  std::vector<ChainRecord> out;
  const double top = spec.eigenvalues[pd.k];
  for (int i = 0; i < pd.k; ++i) {
    ChainRecord r;
    r.i = i + 1;
    const double middle = (top - spec.eigenvalues[i]) * pd.phi_norm2[i];
    r.lower_slack = middle;
    r.upper_slack = pd.Kg[i] - middle;
    r.degenerate = pd.phi_norm2[i] <= 1e-20 && pd.Kg[i] < 0.0;
    out.push_back(r);
  }
  return out;
}

GradLemmaResult check_grad_lemma(const Spectrum& spec, const Region& region) {
  GradLemmaResult res;
  res.inequality_slack = std::numeric_limits<double>::infinity();
  const int N = static_cast<int>(region.size());
  const int n = region.dim();
  const double d = region.degree();
  const std::vector<Point> bnd = boundary(region).points;

  for (int i = 0; i < N; ++i) {
    const auto& u = spec.vectors[i];
    const double energy = dirichlet_energy(region, u);
    res.energy_eigen_residual = std::max(
        res.energy_eigen_residual, std::fabs(energy - spec.eigenvalues[i]));

    double edge_sum = 0.0;      // sum_a (1/2) sum_{x,y} |grad x_a|^2 |grad u|^2
    double gamma_sq_sum = 0.0;  // sum_a sum_x Gamma(x_a, u)^2 d_x
    auto visit = [&](const Point& x) {
      const double ux = u_at(region, u, x);
      for (int a = 0; a < n; ++a) {
        double gam = 0.0;
        for (const Point& y : lattice_neighbors(x)) {
          const double dg = static_cast<double>(y[a]) - x[a];
          const double du = u_at(region, u, y) - ux;
          edge_sum += 0.5 * dg * dg * du * du;
          gam += dg * du;
        }
        gam /= 2.0 * d;
        gamma_sq_sum += gam * gam * d;
      }
    };
    for (int x = 0; x < N; ++x) visit(region.point(x));
    for (const Point& x : bnd) visit(x);

    res.equality_residual =
        std::max(res.equality_residual, std::fabs(edge_sum - energy));
    res.inequality_slack =
        std::min(res.inequality_slack, energy / (2.0 * n) - gamma_sq_sum);
  }
  return res;
}

std::vector<HpClaimRecord> check_hp_claim(const ProofData& pd,
                                          const Spectrum& spec) {
  std::vector<HpClaimRecord> out;
  const double top = spec.eigenvalues[pd.k];
  for (int i = 0; i < pd.k; ++i) {
    HpClaimRecord r;
    r.i = i + 1;
    const double gap = top - spec.eigenvalues[i];
    if (gap <= 1e-12) {
      r.vacuous = true;
    } else {
      r.slack = 4.0 / gap * pd.gamma_gu_norm2[i] - pd.Kg[i];
    }
    out.push_back(r);
  }
  return out;
}

double coordinate_laplacian(const Point& x, int alpha) {
  // (1/2n) sum_y g(y) - g(x) over the 2n neighbors: the +-1 shifts along alpha
  // cancel and every other direction leaves g unchanged.
  const double n = static_cast<double>(x.size());
  double acc = 0.0;
  for (const Point& y : lattice_neighbors(x))
    acc += static_cast<double>(y[alpha - 1]);
  return acc / (2.0 * n) - static_cast<double>(x[alpha - 1]);
}

double coordinate_square_laplacian(const Point& x, int alpha) {
  const double n = static_cast<double>(x.size());
  const double gx = static_cast<double>(x[alpha - 1]);
  double acc = 0.0;
  for (const Point& y : lattice_neighbors(x)) {
    const double gy = static_cast<double>(y[alpha - 1]);
    acc += gy * gy;
  }
  return acc / (2.0 * n) - gx * gx;
}

}  // namespace lspec
