#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "lattice_spectra/operator.hpp"

using namespace lspec;

namespace {

LatticeFunction random_function(std::size_t N, SplitMix64& rng) {
  LatticeFunction f(N);
  for (double& v : f) v = 2.0 * rng.next_double() - 1.0;
  return f;
}

}  // namespace

TEST_CASE("assemble: two adjacent vertices") {
  for (int n = 1; n <= 3; ++n) {
    Point a(n, 0);
    Point b(n, 0);
    b[0] = 1;
    DirichletOperator op = assemble(Region(n, {a, b}));
    CHECK(op.entry(0, 0) == 1.0);
    CHECK(op.entry(1, 1) == 1.0);
    CHECK(op.entry(0, 1) == -1.0 / (2 * n));
    CHECK(op.entry(0, 1) == op.entry(1, 0));
  }
}

TEST_CASE("assemble: single vertex and 3-path") {
  CHECK(assemble(new_region(2, {{0, 0}})).entry(0, 0) == 1.0);
  DirichletOperator op = assemble(path_region(1, 3));
  CHECK(op.entry(0, 1) == -0.5);
  CHECK(op.entry(1, 2) == -0.5);
  CHECK(op.entry(0, 2) == 0.0);
}

TEST_CASE("apply matches direct stencil evaluation") {
  Region r = random_connected_region(2, 40, 3);
  DirichletOperator op = assemble(r);
  SplitMix64 rng(9);
  LatticeFunction f = random_function(r.size(), rng);
  LatticeFunction lhs = op.apply(f);
  for (std::size_t i = 0; i < r.size(); ++i) {
    double expected = f[i];
    for (const Point& q : neighbors_in(r, r.point(i)))
      expected -= f[static_cast<std::size_t>(r.index_of(q))] / 4.0;
    CHECK(lhs[i] == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("apply on eigen-like inputs") {
  Region pair = path_region(1, 2);
  DirichletOperator op = assemble(pair);
  const double inv = 1.0 / std::sqrt(2.0);
  LatticeFunction u{inv, inv};
  LatticeFunction v = op.apply(u);
  CHECK(v[0] == doctest::Approx(0.5 * u[0]));
  CHECK(v[1] == doctest::Approx(0.5 * u[1]));
  CHECK(op.apply({0.0, 0.0}) == LatticeFunction{0.0, 0.0});
  LatticeFunction w = op.apply({1.0, 0.0});
  CHECK(w[0] == 1.0);
  CHECK(w[1] == -0.5);
  CHECK_THROWS_AS(op.apply({1.0}), std::invalid_argument);
}

TEST_CASE("weighted inner product") {
  Region r1 = path_region(1, 2);
  CHECK(weighted_inner(r1, {1, 0}, {1, 0}) == 2.0);
  Region r2 = new_region(2, {{0, 0}, {1, 0}});
  CHECK(weighted_inner(r2, {1, 1}, {1, -1}) == 0.0);
}

TEST_CASE("gamma: coordinate function on a box interior") {
  for (int n = 1; n <= 3; ++n) {
    Region box = box_region(std::vector<int>(n, 5));
    LatticeFunction f(box.size());
    for (std::size_t i = 0; i < box.size(); ++i) f[i] = box.point(i)[0];
    // center of the box: all 2n neighbors are inside
    Point center(n, 3);
    LatticeFunction g = gamma_form(box, f, f);
    CHECK(g[static_cast<std::size_t>(box.index_of(center))] ==
          doctest::Approx(1.0 / (2 * n)).epsilon(1e-14));
  }
}

TEST_CASE("gamma: null extension at a region edge") {
  Region pair = path_region(1, 2);
  LatticeFunction f{1.0, 0.0};
  LatticeFunction g = gamma_form(pair, f, f);
  CHECK(g[0] == doctest::Approx(0.5));
  CHECK(gamma_form(pair, {0, 0}, {0, 0}) == LatticeFunction{0.0, 0.0});
}

TEST_CASE("green residual vanishes") {
  SUBCASE("single vertex indicator") {
    for (int n = 1; n <= 3; ++n) {
      Region r(n, {Point(n, 0)});
      CHECK(green_residual(r, {1.0}, {1.0}) == 0.0);
    }
  }
  SUBCASE("random functions on a random region") {
    Region r = random_connected_region(2, 35, 17);
    SplitMix64 rng(23);
    for (int rep = 0; rep < 5; ++rep) {
      LatticeFunction f = random_function(r.size(), rng);
      LatticeFunction g = random_function(r.size(), rng);
      CHECK(std::fabs(green_residual(r, f, g)) < 1e-12 * r.size());
    }
    CHECK(green_residual(r, LatticeFunction(r.size(), 0.0),
                         random_function(r.size(), rng)) == 0.0);
  }
}

TEST_CASE("self-adjointness in the weighted inner product") {
  Region r = random_connected_region(3, 25, 41);
  DirichletOperator op = assemble(r);
  SplitMix64 rng(5);
  LatticeFunction f = random_function(r.size(), rng);
  LatticeFunction g = random_function(r.size(), rng);
  const double a = weighted_inner(r, op.apply(f), g);
  const double b = weighted_inner(r, f, op.apply(g));
  CHECK(a == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("energy identity: <-Lf, f> equals the Gamma sum") {
  Region r = random_connected_region(2, 30, 19);
  DirichletOperator op = assemble(r);
  SplitMix64 rng(7);
  LatticeFunction f = random_function(r.size(), rng);
  const double quad = weighted_inner(r, op.apply(f), f);
  CHECK(quad == doctest::Approx(dirichlet_energy(r, f)).epsilon(1e-12));
}

TEST_CASE("elementary product identity on adjacent values") {
  SplitMix64 rng(99);
  for (int rep = 0; rep < 50; ++rep) {
    const double fx = rng.next_double(), fy = rng.next_double();
    const double gx = rng.next_double(), gy = rng.next_double();
    const double lhs = fx * gx + fy * gy;
    const double rhs =
        0.5 * ((fx + fy) * (gx + gy) + (fy - fx) * (gy - gx));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
  }
}

TEST_CASE("gershgorin row bound") {
  Region r = random_connected_region(2, 20, 1);
  DirichletOperator op = assemble(r);
  CHECK(op.inf_norm() <= 2.0);
}
