#include <catch2/catch.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "entgap/linalg.hpp"
#include "entgap/model.hpp"

using namespace entgap;

TEST_CASE("the five product vectors as printed", "[model]") {
  const ProductVectorSet vs = tiles_product_vectors();
  REQUIRE(vs.pairs.size() == 5);
  CHECK(vs.pairs[0].side_a == std::vector<double>{1, 0, 0});
  CHECK(vs.pairs[0].side_b == std::vector<double>{1, 1, 0});
  CHECK(vs.pairs[4].side_a == std::vector<double>{1, -1, 1});
  CHECK(vs.pairs[4].side_b == std::vector<double>{1, -1, 1});
  for (const auto& pr : vs.pairs) {
    for (double x : pr.side_a) CHECK((x == 0.0 || x == 1.0 || x == -1.0));
    for (double x : pr.side_b) CHECK((x == 0.0 || x == 1.0 || x == -1.0));
  }
}

TEST_CASE("composed vectors are mutually orthogonal", "[model]") {
  const auto composed = composed_vectors(tiles_product_vectors());
  REQUIRE(composed.size() == 5);
  // oracle: direct inner products, no library calls
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) {
      cplx dot = 0.0;
      for (std::size_t k = 0; k < 9; ++k) dot += std::conj(composed[i][k]) * composed[j][k];
      CHECK(std::abs(dot) <= 1e-12);
    }
}

TEST_CASE("complement projector", "[model]") {
  const ProductVectorSet vs = tiles_product_vectors();
  const BipartiteOperator pi = complement_projector(vs);
  const auto composed = composed_vectors(vs);

  SECTION("annihilates every composed vector") {
    for (const auto& v : composed) CHECK(vec_norm(matvec(pi.matrix, v)) <= 1e-12);
  }

  SECTION("is a rank-4 orthogonal projector") {
    CHECK(pi.matrix.is_hermitian());
    CHECK(max_abs_diff(pi.matrix * pi.matrix, pi.matrix) <= 1e-12);
    CHECK(pi.matrix.trace().real() == Approx(4.0).margin(1e-11));
  }

  SECTION("is fixed by partial transposition") {
    CHECK(max_abs_diff(partial_transpose(pi).matrix, pi.matrix) <= 1e-12);
  }

  SECTION("rejects a rank-deficient set") {
    ProductVectorSet bad = vs;
    bad.pairs[1] = bad.pairs[0];  // duplicated vector is no longer orthogonal
    CHECK_THROWS_AS(complement_projector(bad), std::invalid_argument);
  }
}

TEST_CASE("fixed states", "[model]") {
  const FixedStates f = fixed_states();
  const auto composed = composed_vectors(tiles_product_vectors());

  SECTION("normalization") {
    CHECK(f.psi.norm() == Approx(1.0).margin(1e-12));
    CHECK(f.phi.norm() == Approx(1.0).margin(1e-12));
    CHECK(f.tau.norm() == Approx(1.0).margin(1e-12));
  }

  SECTION("psi is orthogonal to all five composed vectors") {
    for (const auto& v : composed) CHECK(std::abs(inner(v, f.psi.amplitudes)) <= 1e-12);
  }

  SECTION("tau is orthogonal to psi") {
    CHECK(std::abs(inner(f.tau.amplitudes, f.psi.amplitudes)) <= 1e-12);
  }

  SECTION("P fixes psi and tau") {
    const std::vector<cplx> p_psi = matvec(f.p_proj.matrix, f.psi.amplitudes);
    for (std::size_t i = 0; i < 9; ++i)
      CHECK(std::abs(p_psi[i] - f.psi.amplitudes[i]) <= 1e-15);
    const std::vector<cplx> p_tau = matvec(f.p_proj.matrix, f.tau.amplitudes);
    for (std::size_t i = 0; i < 9; ++i)
      CHECK(std::abs(p_tau[i] - f.tau.amplitudes[i]) <= 1e-15);
  }

  SECTION("P is a product projector of trace 4") {
    CHECK(f.p_proj.matrix.is_hermitian());
    CHECK(max_abs_diff(f.p_proj.matrix * f.p_proj.matrix, f.p_proj.matrix) == 0.0);
    CHECK(f.p_proj.matrix.trace().real() == 4.0);
  }
}

TEST_CASE("sigma endpoints", "[model]") {
  SECTION("p = 0 is the bound entangled state with flat spectrum") {
    const Spectrum s = eig_hermitian(sigma(0.0).matrix);
    for (int i = 0; i < 4; ++i)
      CHECK(s.eigenvalues[static_cast<std::size_t>(i)] == Approx(0.25).margin(1e-12));
    for (int i = 4; i < 9; ++i)
      CHECK(s.eigenvalues[static_cast<std::size_t>(i)] == Approx(0.0).margin(1e-12));
    CHECK(max_abs_diff(sigma(0.0).matrix, rho_b().matrix) == 0.0);
  }

  SECTION("p = 1 is the pure projector onto psi") {
    CHECK(max_abs_diff(sigma(1.0).matrix, projector(fixed_states().psi).matrix) == 0.0);
  }

  SECTION("out-of-range p is rejected") {
    CHECK_THROWS_AS(sigma(-1e-9), std::invalid_argument);
    CHECK_THROWS_AS(sigma(1.0 + 1e-9), std::invalid_argument);
  }
}

TEST_CASE("sigma is supported on the complement subspace", "[model]") {
  const BipartiteOperator pi = upb_projector();
  const BipartiteOperator s = sigma(0.5);
  const ComplexMatrix projected = pi.matrix * s.matrix * pi.matrix;
  CHECK(max_abs_diff(projected, s.matrix) <= 1e-12);

  // psi itself lies in V
  const FixedStates f = fixed_states();
  std::vector<cplx> r = matvec(pi.matrix, f.psi.amplitudes);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= f.psi.amplitudes[i];
  CHECK(vec_norm(r) <= 1e-12);
}

TEST_CASE("sigma is an affine path of unit-trace PSD states", "[model]") {
  const ComplexMatrix s0 = sigma(0.0).matrix;
  const ComplexMatrix s1 = sigma(1.0).matrix;
  for (double p : {0.1, 0.3, 0.5, 0.77, 0.9}) {
    const ComplexMatrix direct = sigma(p).matrix;
    const ComplexMatrix path = s0 + p * (s1 - s0);
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) {
        const double scale = std::max({std::abs(direct(i, j)), std::abs(path(i, j)), 1e-3});
        CHECK(std::abs(direct(i, j) - path(i, j)) / scale <= 1e-15);
      }
    CHECK(std::abs(direct.trace() - cplx(1.0, 0.0)) <= 1e-12);
    CHECK(min_eigenvalue(direct) >= -1e-12);
  }
}

TEST_CASE("projected rho_b has rank three with kernel direction tau", "[model]") {
  const FixedStates f = fixed_states();
  const BipartiteOperator pr = sandwich(f.p_proj, rho_b());

  CHECK(max_abs_diff(partial_transpose(pr).matrix, pr.matrix) <= 1e-12);

  const Spectrum s = eig_hermitian(pr.matrix);
  int rank = 0;
  for (double ev : s.eigenvalues)
    if (std::abs(ev) > 1e-10) ++rank;
  CHECK(rank == 3);

  CHECK(vec_norm(matvec(pr.matrix, f.tau.amplitudes)) <= 1e-11);
}
