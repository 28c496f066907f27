#include "lattice_spectra/operator.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace lspec {

DirichletOperator::DirichletOperator(const Region& region) : region_(region) {
  const std::size_t N = region_.size();
  adjacency_.resize(N);
  for (std::size_t i = 0; i < N; ++i) {
    for (const Point& q : lattice_neighbors(region_.point(i))) {
      const int j = region_.index_of(q);
      if (j >= 0) adjacency_[i].push_back(j);
    }
  }
}

DirichletOperator assemble(const Region& region) {
  return DirichletOperator(region);
}

double DirichletOperator::entry(std::size_t i, std::size_t j) const {
  if (i == j) return 1.0;
  for (int c : adjacency_[i])
    if (static_cast<std::size_t>(c) == j) return offdiag();
  return 0.0;
}

LatticeFunction DirichletOperator::apply(const LatticeFunction& f) const {
  const std::size_t N = size();
  if (f.size() != N) throw std::invalid_argument("function/operator shape mismatch");
  LatticeFunction out(N);
  const double w = offdiag();
  for (std::size_t i = 0; i < N; ++i) {
    double acc = f[i];
    for (int j : adjacency_[i]) acc += w * f[j];
    out[i] = acc;
  }
  return out;
}

std::vector<double> DirichletOperator::dense() const {
  const std::size_t N = size();
  std::vector<double> a(N * N, 0.0);
  const double w = offdiag();
  for (std::size_t i = 0; i < N; ++i) {
    a[i * N + i] = 1.0;
    for (int j : adjacency_[i]) a[i * N + j] = w;
  }
  return a;
}

double DirichletOperator::inf_norm() const {
  double best = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    const double row = 1.0 + static_cast<double>(adjacency_[i].size()) * (-offdiag());
    best = std::max(best, row);
  }
  return best;
}

void DirichletOperator::dump_coordinate_list(std::ostream& os) const {
  const double w = offdiag();
  for (std::size_t i = 0; i < size(); ++i) {
    os << i << ' ' << i << ' ' << 1.0 << '\n';
    for (int j : adjacency_[i]) os << i << ' ' << j << ' ' << w << '\n';
  }
}

double weighted_inner(const Region& region, const LatticeFunction& f,
                      const LatticeFunction& g) {
  const std::size_t N = region.size();
  if (f.size() != N || g.size() != N)
    throw std::invalid_argument("function/region shape mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < N; ++i) acc += f[i] * g[i];
  return acc * region.degree();
}

namespace {

double value_at(const Region& region, const LatticeFunction& f, const Point& x) {
  const int i = region.index_of(x);
  return i >= 0 ? f[static_cast<std::size_t>(i)] : 0.0;
}

}  // namespace

double gamma_at(const Region& region, const LatticeFunction& f,
                const LatticeFunction& g, const Point& x) {
  const double fx = value_at(region, f, x);
  const double gx = value_at(region, g, x);
  double acc = 0.0;
  for (const Point& y : lattice_neighbors(x))
    acc += (value_at(region, f, y) - fx) * (value_at(region, g, y) - gx);
  return acc / (2.0 * region.degree());
}

LatticeFunction gamma_form(const Region& region, const LatticeFunction& f,
                           const LatticeFunction& g) {
  const std::size_t N = region.size();
  if (f.size() != N || g.size() != N)
    throw std::invalid_argument("function/region shape mismatch");
  LatticeFunction out(N);
  for (std::size_t i = 0; i < N; ++i)
    out[i] = gamma_at(region, f, g, region.point(i));
  return out;
}

double dirichlet_energy(const Region& region, const LatticeFunction& f) {
  double acc = 0.0;
  for (const Point& x : region.points()) acc += gamma_at(region, f, f, x);
  for (const Point& x : boundary(region).points) acc += gamma_at(region, f, f, x);
  return acc * region.degree();
}

double green_residual(const Region& region, const LatticeFunction& f,
                      const LatticeFunction& g) {
  const std::size_t N = region.size();
  if (f.size() != N || g.size() != N)
    throw std::invalid_argument("function/region shape mismatch");
  const double d = region.degree();

  // sum (Delta f~)(x) g~(x) d_x: g~ vanishes off the region, so the sum
  // collapses to the region itself.
  double lhs = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    double lap = -f[i];
    for (const Point& y : lattice_neighbors(region.point(i)))
      lap += value_at(region, f, y) / d;
    lhs += lap * g[i] * d;
  }

  // (1/2) sum over ordered pairs x~y of grad f grad g; every edge carrying a
  // nonzero difference is incident to the region, so region + boundary covers
  // each such edge twice.
  double edges = 0.0;
  auto accumulate = [&](const Point& x) {
    const double fx = value_at(region, f, x);
    const double gx = value_at(region, g, x);
    for (const Point& y : lattice_neighbors(x))
      edges += (value_at(region, f, y) - fx) * (value_at(region, g, y) - gx);
  };
  for (const Point& x : region.points()) accumulate(x);
  for (const Point& x : boundary(region).points) accumulate(x);

  return lhs + 0.5 * edges;
}

}  // namespace lspec
