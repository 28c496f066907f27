#include "lattice_spectra/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace lspec {

namespace {

// Householder reduction of a symmetric matrix to tridiagonal form with
// accumulation of the orthogonal transform, 0-based port of the classic
// tred2 routine. On exit d holds the diagonal, e the subdiagonal (e[0]
// unused), and a the accumulated transform.
void householder_tridiag(std::vector<double>& a, int n, std::vector<double>& d,
                         std::vector<double>& e) {
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0;
    double scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::fabs(A(i, k));
      if (scale == 0.0) {
        e[i] = A(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          A(i, k) /= scale;
          h += A(i, k) * A(i, k);
        }
        double f = A(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        A(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          A(j, i) = A(i, j) / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
          for (int k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
          e[j] = g / h;
          f += e[j] * A(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = A(i, j);
          const double gj = e[j] - hh * f;
          e[j] = gj;
          for (int k = 0; k <= j; ++k) A(j, k) -= f * e[k] + gj * A(i, k);
        }
      }
    } else {
      e[i] = A(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    if (d[i] != 0.0) {
      for (int j = 0; j < i; ++j) {
        double g = 0.0;
        for (int k = 0; k < i; ++k) g += A(i, k) * A(k, j);
        for (int k = 0; k < i; ++k) A(k, j) -= g * A(k, i);
      }
    }
    d[i] = A(i, i);
    A(i, i) = 1.0;
    for (int j = 0; j < i; ++j) A(j, i) = A(i, j) = 0.0;
  }
}

// Implicit-shift QL on the tridiagonal (d, e), rotations accumulated into z.
// Total sweep budget 30*n; exceeding it is a hard error.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e, int n,
                       std::vector<double>& z) {
  auto Z = [&](int i, int j) -> double& { return z[static_cast<std::size_t>(i) * n + j]; };

  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  const long budget = 30L * n;
  long sweeps = 0;

  for (int l = 0; l < n; ++l) {
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (++sweeps > budget)
          throw SolverError("QL failed to converge within " +
                            std::to_string(budget) + " sweeps (N=" +
                            std::to_string(n) + ")");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = Z(k, i + 1);
            Z(k, i + 1) = s * Z(k, i) + c * f;
            Z(k, i) = c * Z(k, i) - s * f;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

void symmetric_eigen(std::vector<double> a, std::size_t N,
                     std::vector<double>& values, std::vector<double>& vectors) {
  const int n = static_cast<int>(N);
  if (n < 1) throw std::invalid_argument("matrix must be at least 1x1");
  values.assign(N, 0.0);
  std::vector<double> e(N, 0.0);
  householder_tridiag(a, n, values, e);
  ql_implicit_shift(values, e, n, a);
  vectors = std::move(a);
}

Spectrum full_spectrum(const DirichletOperator& op) {
  const std::size_t N = op.size();
  std::vector<double> values;
  std::vector<double> z;
  symmetric_eigen(op.dense(), N, values, z);

  std::vector<std::size_t> order(N);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });

  Spectrum spec;
  spec.n = op.region().dim();
  spec.N = N;
  spec.eigenvalues.resize(N);
  spec.vectors.assign(N, std::vector<double>(N));
  const double scale = 1.0 / std::sqrt(2.0 * spec.n);
  for (std::size_t r = 0; r < N; ++r) {
    const std::size_t c = order[r];
    spec.eigenvalues[r] = values[c];
    auto& u = spec.vectors[r];
    for (std::size_t i = 0; i < N; ++i) u[i] = z[i * N + c];
    // sign convention: first entry of nonnegligible magnitude is positive
    for (std::size_t i = 0; i < N; ++i) {
      if (std::fabs(u[i]) > 1e-12) {
        if (u[i] < 0.0)
          for (double& v : u) v = -v;
        break;
      }
    }
    for (double& v : u) v *= scale;
  }
  return spec;
}

std::vector<double> box_spectrum_oracle(const std::vector<int>& dims) {
  const int n = static_cast<int>(dims.size());
  if (n < 1) throw std::domain_error("box needs at least one dimension");
  for (int m : dims)
    if (m < 1) throw std::domain_error("box dimensions must be >= 1");
  std::vector<double> out;
  std::vector<int> j(n, 1);
  const double pi = std::acos(-1.0);
  for (;;) {
    double acc = 0.0;
    for (int a = 0; a < n; ++a) acc += std::cos(j[a] * pi / (dims[a] + 1));
    out.push_back(1.0 - acc / n);
    int a = 0;
    while (a < n) {
      if (j[a] < dims[a]) {
        ++j[a];
        break;
      }
      j[a] = 1;
      ++a;
    }
    if (a == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

SolverDiagnostics spectral_checks(const Spectrum& spec,
                                  const DirichletOperator& op) {
  const std::size_t N = spec.N;
  if (N != op.size() || spec.eigenvalues.size() != N)
    throw std::invalid_argument("spectrum/operator size mismatch");
  SolverDiagnostics diag;
  diag.min_eigenvalue = spec.eigenvalues.front();
  diag.max_eigenvalue = spec.eigenvalues.back();
  const double d = op.region().degree();
  for (std::size_t i = 0; i < N; ++i) {
    const auto& u = spec.vectors[i];
    LatticeFunction r = op.apply(u);
    double norm2 = 0.0;
    for (std::size_t x = 0; x < N; ++x) {
      r[x] -= spec.eigenvalues[i] * u[x];
      norm2 += r[x] * r[x];
    }
    diag.max_residual = std::max(diag.max_residual, std::sqrt(norm2));
    for (std::size_t j = i; j < N; ++j) {
      double dot = 0.0;
      for (std::size_t x = 0; x < N; ++x) dot += u[x] * spec.vectors[j][x];
      dot *= d;
      const double defect = std::fabs(dot - (i == j ? 1.0 : 0.0));
      diag.max_ortho_defect = std::max(diag.max_ortho_defect, defect);
    }
  }
  return diag;
}

double default_eig_tol(const DirichletOperator& op) {
  return 1e-10 * static_cast<double>(op.size()) * op.inf_norm();
}

}  // namespace lspec
