/* Maximal product-state overlap with a projector.
 *
 * seesaw_max_overlap alternates between the two local vectors: with one side
 * fixed the objective <ab|Pi|ab> is a quadratic form on the other side, so
 * each half-step is a top-eigenvector problem and the objective can only
 * grow. Seeded random restarts cover the landscape; the reduction over
 * restarts is deterministic (max alpha, ties within 1e-12 broken by lowest
 * restart index), so results do not depend on execution order.
 *
 * grid_oracle_overlap is the independent check: an exhaustive scan of real
 * unit vectors on both sides over a 4-angle grid, followed by a single local
 * seesaw refinement from the best grid point. It lower-bounds the true
 * maximum by construction.
 *
 * Random initial vectors are drawn from the rotation-invariant distribution
 * on the complex unit sphere via a hand-rolled Box-Muller on mt19937_64
 * streams, derived from (seed, restart index): reproducible across platforms
 * and across any restart execution order.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "entgap/linalg.hpp"

namespace entgap {

struct OverlapResult {
  double alpha = 0.0;
  std::vector<cplx> a_opt;
  std::vector<cplx> b_opt;
  int restarts_used = 0;
  long iterations_total = 0;
  bool converged = false;
};

// One seesaw trajectory from a given starting pair.
struct SeesawRun {
  double alpha = 0.0;
  std::vector<cplx> a;
  std::vector<cplx> b;
  int iterations = 0;
  bool converged = false;
  std::vector<double> objective_trace;  // one entry per half-step
};

namespace detail {

class GaussianStream {
 public:
  GaussianStream(std::uint64_t seed, std::uint32_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      stream};
    gen_.seed(seq);
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0,1], keeps the log finite
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  std::vector<cplx> unit_vector(int dim) {
    std::vector<cplx> v(static_cast<std::size_t>(dim));
    for (cplx& z : v) z = cplx(gaussian(), gaussian());
    const double n = vec_norm(v);
    for (cplx& z : v) z /= n;
    return v;
  }

 private:
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

inline void require_overlap_projector(const BipartiteOperator& pi) {
  require_bipartite(pi, "seesaw_max_overlap");
  if (!pi.matrix.is_hermitian(tol::hermiticity))
    throw std::invalid_argument("seesaw_max_overlap: Pi is not hermitian");
  const Spectrum s = eig_hermitian(pi.matrix);
  if (s.eigenvalues.back() < -tol::eigen_zero)
    throw std::invalid_argument("seesaw_max_overlap: Pi is not positive semidefinite");
  if (s.eigenvalues.front() > 1.0 + tol::eigen_zero)
    throw std::invalid_argument("seesaw_max_overlap: Pi has eigenvalues above 1");
}

}  // namespace detail

// <ab|Pi|ab> for a product pair.
inline double product_overlap(const BipartiteOperator& pi, std::span<const cplx> a,
                              std::span<const cplx> b) {
  const ComplexMatrix ma = overlap_operator_b(pi, b);
  return inner(a, matvec(ma, a)).real();
}

inline SeesawRun seesaw_from(const BipartiteOperator& pi, std::vector<cplx> a0,
                             std::vector<cplx> b0, double tol_step = 1e-12,
                             int max_iterations = 500) {
  SeesawRun run;
  run.a = std::move(a0);
  run.b = std::move(b0);
  double prev = -1.0;
  for (int it = 0; it < max_iterations; ++it) {
    const Spectrum sa = eig_hermitian(overlap_operator_b(pi, run.b));
    run.a = sa.eigenvector(0);
    run.objective_trace.push_back(sa.eigenvalues.front());

    const Spectrum sb = eig_hermitian(overlap_operator_a(pi, run.a));
    run.b = sb.eigenvector(0);
    run.objective_trace.push_back(sb.eigenvalues.front());

    run.alpha = sb.eigenvalues.front();
    ++run.iterations;
    if (run.alpha - prev < tol_step) {
      run.converged = true;
      break;
    }
    prev = run.alpha;
  }
  return run;
}

inline OverlapResult seesaw_max_overlap(const BipartiteOperator& pi, int restarts = 200,
                                        std::uint64_t seed = 42, double tol_step = 1e-12) {
  detail::require_overlap_projector(pi);
  if (restarts < 1) throw std::invalid_argument("seesaw_max_overlap: restarts < 1");

  OverlapResult best;
  best.alpha = -1.0;
  best.restarts_used = restarts;
  for (int r = 0; r < restarts; ++r) {
    detail::GaussianStream rng(seed, static_cast<std::uint32_t>(r));
    std::vector<cplx> a0 = rng.unit_vector(pi.dim_a);
    std::vector<cplx> b0 = rng.unit_vector(pi.dim_b);
    SeesawRun run = seesaw_from(pi, std::move(a0), std::move(b0), tol_step);
    best.iterations_total += run.iterations;
    if (run.alpha > best.alpha + 1e-12) {
      best.alpha = run.alpha;
      best.a_opt = std::move(run.a);
      best.b_opt = std::move(run.b);
      best.converged = run.converged;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Real-slice grid oracle on (3,3): spherical angles (theta, phi) per side,
// theta over [0,pi] inclusive, phi over [0,2pi) exclusive, resolution points
// per dimension, then one seesaw refinement from the best grid point.
// ---------------------------------------------------------------------------

inline double grid_oracle_overlap(const BipartiteOperator& pi, int resolution) {
  detail::require_overlap_projector(pi);
  if (pi.dim_a != 3 || pi.dim_b != 3)
    throw std::invalid_argument("grid_oracle_overlap: requires local dimensions (3,3)");
  if (resolution < 8) throw std::invalid_argument("grid_oracle_overlap: resolution too small");

  auto unit3 = [](double theta, double phi) {
    return std::vector<cplx>{std::cos(theta), std::sin(theta) * std::cos(phi),
                             std::sin(theta) * std::sin(phi)};
  };
  std::vector<std::vector<cplx>> bs;
  bs.reserve(static_cast<std::size_t>(resolution) * resolution);
  for (int i = 0; i < resolution; ++i) {
    const double theta = std::numbers::pi * i / (resolution - 1);
    for (int j = 0; j < resolution; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / resolution;
      bs.push_back(unit3(theta, phi));
    }
  }

  double best = -1.0;
  std::vector<cplx> best_a, best_b;
  for (const auto& a : bs) {
    const ComplexMatrix mb = overlap_operator_a(pi, a);
    for (const auto& b : bs) {
      const double val = inner(b, matvec(mb, b)).real();
      if (val > best) {
        best = val;
        best_a = a;
        best_b = b;
      }
    }
  }
  const SeesawRun refined = seesaw_from(pi, std::move(best_a), std::move(best_b));
  return refined.alpha;
}

// ---------------------------------------------------------------------------
// Two-copy overlap: Pi (x) Pi in interleaved order, regrouped to the
// ((A1 A2),(B1 B2)) layout, then the same seesaw on the doubled dimensions.
// ---------------------------------------------------------------------------

inline OverlapResult two_copy_overlap(const BipartiteOperator& pi, int restarts = 200,
                                      std::uint64_t seed = 42) {
  detail::require_overlap_projector(pi);
  const BipartiteOperator interleaved{kron(pi.matrix, pi.matrix), pi.dim_a, pi.dim_b};
  const BipartiteOperator grouped = permute_to_copies_layout(interleaved, 2);
  return seesaw_max_overlap(grouped, restarts, seed);
}

}  // namespace entgap
