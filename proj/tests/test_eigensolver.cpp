#include <cmath>

#include "doctest.h"
#include "lattice_spectra/eigensolver.hpp"

using namespace lspec;

TEST_CASE("two adjacent vertices: closed-form eigenpair") {
  for (int n = 1; n <= 5; ++n) {
    Point a(n, 0), b(n, 0);
    b[0] = 1;
    Spectrum spec = full_spectrum(assemble(Region(n, {a, b})));
    CHECK(spec.eigenvalues[0] ==
          doctest::Approx(1.0 - 1.0 / (2 * n)).epsilon(1e-13));
    CHECK(spec.eigenvalues[1] ==
          doctest::Approx(1.0 + 1.0 / (2 * n)).epsilon(1e-13));
  }
}

TEST_CASE("single vertex") {
  Spectrum spec = full_spectrum(assemble(new_region(3, {{0, 0, 0}})));
  CHECK(spec.eigenvalues == std::vector<double>{1.0});
  CHECK(spectral_checks(spec, assemble(new_region(3, {{0, 0, 0}}))).max_residual ==
        0.0);
}

TEST_CASE("2x2 box spectrum") {
  Spectrum spec = full_spectrum(assemble(box_region({2, 2})));
  CHECK(spec.eigenvalues[0] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(spec.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(spec.eigenvalues[2] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(spec.eigenvalues[3] == doctest::Approx(1.5).epsilon(1e-13));
}

TEST_CASE("box oracle closed forms") {
  auto e1 = box_spectrum_oracle({2});
  CHECK(e1[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(e1[1] == doctest::Approx(1.5).epsilon(1e-14));
  auto e2 = box_spectrum_oracle({3});
  CHECK(e2[0] == doctest::Approx(1.0 - std::sqrt(2.0) / 2).epsilon(1e-14));
  CHECK(e2[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e2[2] == doctest::Approx(1.0 + std::sqrt(2.0) / 2).epsilon(1e-14));
  auto e3 = box_spectrum_oracle({2, 2});
  CHECK(e3[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(e3[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e3[2] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e3[3] == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("solver matches the box oracle") {
  for (const auto& dims :
       std::vector<std::vector<int>>{{7}, {4, 3}, {3, 3, 2}, {5, 1}, {2, 2, 2}}) {
    Spectrum spec = full_spectrum(assemble(box_region(dims)));
    auto oracle = box_spectrum_oracle(dims);
    REQUIRE(spec.eigenvalues.size() == oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i)
      CHECK(spec.eigenvalues[i] == doctest::Approx(oracle[i]).epsilon(1e-10));
  }
}

TEST_CASE("spectrum invariants on random regions") {
  for (std::uint64_t seed : {1, 2, 3}) {
    const int n = static_cast<int>(seed % 3) + 1;
    Region r = random_connected_region(n, 60, seed);
    DirichletOperator op = assemble(r);
    Spectrum spec = full_spectrum(op);
    const SolverDiagnostics diag = spectral_checks(spec, op);
    CHECK(diag.max_residual <= default_eig_tol(op));
    CHECK(diag.max_ortho_defect <= 1e-10);
    CHECK(diag.min_eigenvalue > 0.0);
    CHECK(diag.max_eigenvalue <= 2.0 + 1e-10);

    // trace identity
    double sum = 0.0;
    for (double l : spec.eigenvalues) sum += l;
    CHECK(sum == doctest::Approx(static_cast<double>(spec.N)).epsilon(1e-9));

    // bipartite symmetry of the spectrum
    for (std::size_t k = 0; k < spec.N; ++k)
      CHECK(spec.eigenvalues[k] + spec.eigenvalues[spec.N - 1 - k] ==
            doctest::Approx(2.0).epsilon(1e-10));

    // partial sums of 1 - lambda stay nonnegative and land on zero
    double partial = 0.0;
    for (std::size_t k = 0; k < spec.N; ++k) {
      partial += 1.0 - spec.eigenvalues[k];
      CHECK(partial >= -1e-9);
    }
    CHECK(partial == doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("weighted orthonormality convention") {
  Region r = ball_region(2, 2, {0, 0});
  Spectrum spec = full_spectrum(assemble(r));
  for (std::size_t i = 0; i < spec.N; ++i) {
    CHECK(weighted_inner(r, spec.vectors[i], spec.vectors[i]) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // sign convention: leading nonzero entry positive
    for (double v : spec.vectors[i]) {
      if (std::fabs(v) > 1e-12) {
        CHECK(v > 0.0);
        break;
      }
    }
  }
}
