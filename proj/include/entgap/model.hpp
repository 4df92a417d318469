/* Concrete states and projectors of the 3x3 family.
 *
 * The five "tiles" product vectors span a five-dimensional product subspace
 * of C^3 x C^3 whose orthogonal complement V contains no product vector.
 * Everything the experiments need lives here: the complement projector Pi_b,
 * the bound entangled state rho_b = Pi_b/4, the entangled vector psi in V,
 * the interpolating family sigma(p), and the fixed 2x2 product projector P
 * with its kernel direction tau.
 *
 * All constructors return exact rational-valued entries (up to the relevant
 * 1/sqrt normalizations); nothing here is randomized.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "entgap/linalg.hpp"

namespace entgap {

// ---------------------------------------------------------------------------
// Pure states: complex amplitudes tagged with local dimensions.
// ---------------------------------------------------------------------------

struct StateVector {
  int dim_a = 0;
  int dim_b = 0;
  std::vector<cplx> amplitudes;

  double norm() const { return vec_norm(amplitudes); }
};

// |v><v| as a bipartite operator.
inline BipartiteOperator projector(const StateVector& v) {
  if (v.amplitudes.size() != static_cast<std::size_t>(v.dim_a) * v.dim_b)
    throw std::invalid_argument("projector: amplitude length does not equal dA*dB");
  return {outer(v.amplitudes, v.amplitudes), v.dim_a, v.dim_b};
}

// ---------------------------------------------------------------------------
// The five product vectors, amplitudes in {-1,0,1} exactly as printed.
// ---------------------------------------------------------------------------

struct ProductVectorSet {
  struct Pair {
    std::vector<double> side_a;
    std::vector<double> side_b;
  };
  std::vector<Pair> pairs;
};

inline ProductVectorSet tiles_product_vectors() {
  ProductVectorSet vs;
  vs.pairs = {
      {{1, 0, 0}, {1, 1, 0}},    // |0> (x) (|0>+|1>)
      {{1, 1, 0}, {0, 0, 1}},    // (|0>+|1>) (x) |2>
      {{0, 0, 1}, {0, 1, 1}},    // |2> (x) (|1>+|2>)
      {{0, 1, 1}, {1, 0, 0}},    // (|1>+|2>) (x) |0>
      {{1, -1, 1}, {1, -1, 1}},  // (|0>-|1>+|2>) (x) (|0>-|1>+|2>)
  };
  return vs;
}

// Composed 9-dimensional vectors a (x) b, unnormalized.
inline std::vector<std::vector<cplx>> composed_vectors(const ProductVectorSet& vs) {
  std::vector<std::vector<cplx>> out;
  out.reserve(vs.pairs.size());
  for (const auto& pr : vs.pairs) {
    const std::size_t da = pr.side_a.size(), db = pr.side_b.size();
    std::vector<cplx> v(da * db);
    for (std::size_t a = 0; a < da; ++a)
      for (std::size_t b = 0; b < db; ++b) v[a * db + b] = pr.side_a[a] * pr.side_b[b];
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orthogonal projector Pi_b onto the complement V of the composed vectors.
// The set is mutually orthogonal, so Pi_b = I - sum |v_i><v_i| over the
// normalized vectors; no orthogonalization step is involved.
// ---------------------------------------------------------------------------

inline BipartiteOperator complement_projector(const ProductVectorSet& vs) {
  if (vs.pairs.empty()) throw std::invalid_argument("complement_projector: empty set");
  const auto composed = composed_vectors(vs);
  const std::size_t dim = composed.front().size();
  for (std::size_t i = 0; i < composed.size(); ++i) {
    if (composed[i].size() != dim)
      throw std::invalid_argument("complement_projector: inconsistent dimensions");
    if (vec_norm(composed[i]) < 1e-12)
      throw std::invalid_argument("complement_projector: rank-deficient input set");
    for (std::size_t j = i + 1; j < composed.size(); ++j)
      if (std::abs(inner(composed[i], composed[j])) >
          1e-12 * vec_norm(composed[i]) * vec_norm(composed[j]))
        throw std::invalid_argument("complement_projector: input vectors are not orthogonal");
  }
  ComplexMatrix pi = ComplexMatrix::identity(static_cast<int>(dim));
  for (const auto& v : composed) {
    const double n = vec_norm(v);
    std::vector<cplx> vn(v);
    for (cplx& z : vn) z /= n;
    pi = pi - outer(vn, vn);
  }
  const int da = static_cast<int>(vs.pairs.front().side_a.size());
  const int db = static_cast<int>(vs.pairs.front().side_b.size());
  return {std::move(pi), da, db};
}

// ---------------------------------------------------------------------------
// Fixed states of the construction.
// ---------------------------------------------------------------------------

struct FixedStates {
  StateVector psi;          // (|00> - |01> - 2|11>)/sqrt(6) on (3,3)
  StateVector phi;          // (|00> + |11>)/sqrt(2) on (2,2)
  StateVector tau;          // |0> (x) (|0>+|1>)/sqrt(2) on (3,3)
  BipartiteOperator p_proj; // (|0><0|+|1><1|) (x) (|0><0|+|1><1|) on (3,3)
};

inline FixedStates fixed_states() {
  FixedStates f;
  const double s6 = 1.0 / std::sqrt(6.0);
  const double s2 = 1.0 / std::sqrt(2.0);

  f.psi = {3, 3, std::vector<cplx>(9, 0.0)};
  f.psi.amplitudes[0 * 3 + 0] = s6;
  f.psi.amplitudes[0 * 3 + 1] = -s6;
  f.psi.amplitudes[1 * 3 + 1] = -2.0 * s6;

  f.phi = {2, 2, std::vector<cplx>(4, 0.0)};
  f.phi.amplitudes[0 * 2 + 0] = s2;
  f.phi.amplitudes[1 * 2 + 1] = s2;

  f.tau = {3, 3, std::vector<cplx>(9, 0.0)};
  f.tau.amplitudes[0 * 3 + 0] = s2;
  f.tau.amplitudes[0 * 3 + 1] = s2;

  ComplexMatrix local(3);
  local(0, 0) = 1.0;
  local(1, 1) = 1.0;
  f.p_proj = {kron(local, local), 3, 3};
  return f;
}

// ---------------------------------------------------------------------------
// The one-parameter family sigma(p) = (1-p) Pi_b/4 + p |psi><psi|, p in [0,1].
// ---------------------------------------------------------------------------

inline BipartiteOperator upb_projector() { return complement_projector(tiles_product_vectors()); }

inline BipartiteOperator rho_b() {
  BipartiteOperator pi = upb_projector();
  pi.matrix = 0.25 * pi.matrix;
  return pi;
}

inline BipartiteOperator sigma(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sigma: p outside [0,1]");
  const BipartiteOperator base = rho_b();
  const BipartiteOperator pure = projector(fixed_states().psi);
  return {(1.0 - p) * base.matrix + p * pure.matrix, 3, 3};
}

}  // namespace entgap
