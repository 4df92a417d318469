/* Entanglement quantities and criteria.
 *
 * Negativity and logarithmic negativity from the full spectrum of the
 * partial transpose, the PPT test, the 2x2-projection distillability
 * witness, Schmidt data for pure states, and the product-overlap lower
 * bound on the entanglement cost. Entropies are in bits of entanglement
 * (ebits, log base 2) everywhere.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "entgap/linalg.hpp"
#include "entgap/model.hpp"

namespace entgap {

namespace detail {

inline void require_state(const BipartiteOperator& rho, const char* where) {
  require_bipartite(rho, where);
  if (!rho.matrix.is_hermitian(tol::hermiticity))
    throw std::invalid_argument(std::string(where) + ": operator is not hermitian");
  if (std::abs(rho.matrix.trace() - cplx(1.0, 0.0)) > 1e-10)
    throw std::invalid_argument(std::string(where) + ": operator does not have unit trace");
}

}  // namespace detail

// Absolute value of the sum of negative eigenvalues of rho^{T_A}.
inline double negativity(const BipartiteOperator& rho) {
  detail::require_state(rho, "negativity");
  const Spectrum s = eig_hermitian(partial_transpose(rho).matrix);
  double n = 0.0;
  for (double ev : s.eigenvalues)
    if (ev < 0.0) n -= ev;
  return n;
}

// E_N(rho) = log2(1 + 2 N(rho)), an additive upper bound on the
// distillable entanglement that vanishes exactly on PPT states.
inline double log_negativity(const BipartiteOperator& rho) {
  return std::log2(1.0 + 2.0 * negativity(rho));
}

inline bool is_ppt(const BipartiteOperator& rho, double tol_eig = tol::eigen_zero) {
  require_bipartite(rho, "is_ppt");
  if (!rho.matrix.is_hermitian(tol::hermiticity))
    throw std::invalid_argument("is_ppt: operator is not hermitian");
  return min_eigenvalue(partial_transpose(rho).matrix) >= -tol_eig;
}

// ---------------------------------------------------------------------------
// Distillability witness: the minimum eigenvalue of (P rho P^dag)^{T_A}
// for a product projector P of local rank 2 on each side. A strictly
// negative value certifies distillability.
// ---------------------------------------------------------------------------

struct WitnessReport {
  double min_eigenvalue = 0.0;
  bool is_distillable_certificate = false;
  int projected_rank = 0;
};

namespace detail {

// P must factor as P_A (x) P_B with each local factor a rank-2 projector.
// The factors are recovered from partial traces and checked entrywise.
inline void require_local_rank2_product_projector(const BipartiteOperator& p) {
  require_bipartite(p, "distillability_witness");
  const int da = p.dim_a, db = p.dim_b;
  if (!p.matrix.is_hermitian(tol::hermiticity))
    throw std::invalid_argument("distillability_witness: P is not hermitian");
  if (max_abs_diff(p.matrix * p.matrix, p.matrix) > 1e-10)
    throw std::invalid_argument("distillability_witness: P is not idempotent");
  ComplexMatrix pa(da), pb(db);
  for (int a1 = 0; a1 < da; ++a1)
    for (int a2 = 0; a2 < da; ++a2) {
      cplx s = 0.0;
      for (int b = 0; b < db; ++b) s += p.matrix(a1 * db + b, a2 * db + b);
      pa(a1, a2) = 0.5 * s;
    }
  for (int b1 = 0; b1 < db; ++b1)
    for (int b2 = 0; b2 < db; ++b2) {
      cplx s = 0.0;
      for (int a = 0; a < da; ++a) s += p.matrix(a * db + b1, a * db + b2);
      pb(b1, b2) = 0.5 * s;
    }
  if (std::abs(pa.trace() - cplx(2.0, 0.0)) > 1e-10 ||
      std::abs(pb.trace() - cplx(2.0, 0.0)) > 1e-10)
    throw std::invalid_argument("distillability_witness: local factors are not rank 2");
  if (max_abs_diff(pa * pa, pa) > 1e-10 || max_abs_diff(pb * pb, pb) > 1e-10)
    throw std::invalid_argument("distillability_witness: local factors are not projectors");
  if (max_abs_diff(kron(pa, pb), p.matrix) > 1e-10)
    throw std::invalid_argument("distillability_witness: P does not factor as P_A (x) P_B");
}

}  // namespace detail

inline WitnessReport distillability_witness(const BipartiteOperator& rho,
                                            const BipartiteOperator& p,
                                            double witness_tol = tol::witness) {
  require_bipartite(rho, "distillability_witness");
  detail::require_local_rank2_product_projector(p);
  const Spectrum s = eig_hermitian(partial_transpose(sandwich(p, rho)).matrix);
  WitnessReport r;
  r.min_eigenvalue = s.eigenvalues.back();
  r.is_distillable_certificate = r.min_eigenvalue < -witness_tol;
  for (double ev : s.eigenvalues)
    if (std::abs(ev) > tol::eigen_zero) ++r.projected_rank;
  return r;
}

// ---------------------------------------------------------------------------
// Schmidt decomposition of a pure state: singular values of the dA x dB
// amplitude matrix, obtained from the hermitian eigenproblem of K K^dag.
// ---------------------------------------------------------------------------

struct SchmidtData {
  std::vector<double> coefficients;  // non-negative, sorted descending
  double entropy_ebits = 0.0;
};

inline SchmidtData schmidt(const StateVector& psi) {
  if (psi.amplitudes.size() != static_cast<std::size_t>(psi.dim_a) * psi.dim_b)
    throw std::invalid_argument("schmidt: amplitude length does not equal dA*dB");
  const double n = psi.norm();
  if (n < 1e-12) throw std::invalid_argument("schmidt: zero vector");
  if (std::abs(n - 1.0) > 1e-10) throw std::invalid_argument("schmidt: state is not normalized");

  // reduced operator on A: (K K^dag)[a1][a2] = sum_b K[a1][b] conj(K[a2][b])
  ComplexMatrix red(psi.dim_a);
  for (int a1 = 0; a1 < psi.dim_a; ++a1)
    for (int a2 = 0; a2 < psi.dim_a; ++a2) {
      cplx s = 0.0;
      for (int b = 0; b < psi.dim_b; ++b)
        s += psi.amplitudes[static_cast<std::size_t>(a1 * psi.dim_b + b)] *
             std::conj(psi.amplitudes[static_cast<std::size_t>(a2 * psi.dim_b + b)]);
      red(a1, a2) = s;
    }

  SchmidtData out;
  for (double ev : eig_hermitian(red).eigenvalues) {
    const double lambda = std::max(ev, 0.0);
    out.coefficients.push_back(std::sqrt(lambda));
    if (lambda > 0.0) out.entropy_ebits -= lambda * std::log2(lambda);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Overlap-based lower bound on the entanglement cost: -log2(alpha) for the
// maximal product overlap alpha with the support projector.
// ---------------------------------------------------------------------------

inline double ec_lower_bound_from_overlap(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0 + 1e-12))
    throw std::invalid_argument("ec_lower_bound_from_overlap: alpha outside (0,1]");
  return -std::log2(std::min(alpha, 1.0));
}

}  // namespace entgap
