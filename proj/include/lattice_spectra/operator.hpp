#pragma once

#include <iosfwd>
#include <vector>

#include "lattice_spectra/region.hpp"

namespace lspec {

/// Values of a function on a region, indexed by the canonical vertex order.
/// The function is implicitly zero on the boundary and beyond (null extension).
using LatticeFunction = std::vector<double>;

/// The matrix of -Laplacian with Dirichlet condition on a region: diagonal 1,
/// entry -1/(2n) for every edge inside the region, 0 elsewhere. Stored as a
/// CSR adjacency list (the off-diagonal value is constant); contracts are
/// dense-equivalent. Immutable after construction.
class DirichletOperator {
 public:
  explicit DirichletOperator(const Region& region);

  const Region& region() const { return region_; }
  std::size_t size() const { return region_.size(); }
  double offdiag() const { return -1.0 / (2.0 * region_.dim()); }

  double entry(std::size_t i, std::size_t j) const;

  /// f(x) - (1/2n) sum of f over neighbors of x inside the region.
  LatticeFunction apply(const LatticeFunction& f) const;

  /// Row-major N*N dense copy.
  std::vector<double> dense() const;

  double inf_norm() const;

  /// Neighbor indices of vertex i inside the region (ascending).
  const std::vector<int>& neighbors(std::size_t i) const {
    return adjacency_[i];
  }

  /// Coordinate-list text dump: "row col value" per nonzero, 0-based.
  void dump_coordinate_list(std::ostream& os) const;

 private:
  Region region_;
  std::vector<std::vector<int>> adjacency_;
};

DirichletOperator assemble(const Region& region);

/// <f,g> = sum f(x) g(x) d_x with the constant ambient degree d_x = 2n.
double weighted_inner(const Region& region, const LatticeFunction& f,
                      const LatticeFunction& g);

/// Gamma(f,g)(x) = (1/(2 d_x)) sum over all 2n lattice neighbors y of
/// (f(y)-f(x))(g(y)-g(x)), with null-extended values off the region. Works at
/// any lattice point x.
double gamma_at(const Region& region, const LatticeFunction& f,
                const LatticeFunction& g, const Point& x);

/// Pointwise Gamma(f,g) on the region, canonical order.
LatticeFunction gamma_form(const Region& region, const LatticeFunction& f,
                           const LatticeFunction& g);

/// sum over the lattice of Gamma(f)(x) d_x; support is region + boundary.
double dirichlet_energy(const Region& region, const LatticeFunction& f);

/// Residual of Green's identity for null-extended f, g:
///   sum (Delta f)(x) g(x) d_x + (1/2) sum_{x,y} mu_xy grad_xy f grad_xy g.
/// Mathematically zero; returned for testing.
double green_residual(const Region& region, const LatticeFunction& f,
                      const LatticeFunction& g);

}  // namespace lspec
