/* Dense complex linear algebra for small bipartite operators.
 *
 * Everything here is sized for Hilbert-space dimensions of a few dozen
 * (9x9 operators and their two-copy products). Matrices are row-major,
 * bipartite indices use the A-major convention i = a*dB + b throughout.
 * All functions are pure; errors are reported via std::invalid_argument.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace entgap {

using cplx = std::complex<double>;

namespace tol {
// Global tolerance scheme: hermiticity checks, rank decisions and
// reconstruction residuals sit well above double noise for these sizes
// and far below the smallest physical gap handled by the artifact.
inline constexpr double hermiticity = 1e-12;
inline constexpr double eigen_zero = 1e-10;
inline constexpr double reconstruction = 1e-11;
inline constexpr double witness = 1e-10;
}  // namespace tol

// ---------------------------------------------------------------------------
// ComplexMatrix: dense square complex matrix, row-major.
// ---------------------------------------------------------------------------

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(check_dim(dim)), a_(static_cast<std::size_t>(dim) * dim) {}
  ComplexMatrix(int dim, std::vector<cplx> entries) : dim_(check_dim(dim)), a_(std::move(entries)) {
    if (a_.size() != static_cast<std::size_t>(dim_) * dim_)
      throw std::invalid_argument("ComplexMatrix: entry count does not match dim*dim");
  }

  static ComplexMatrix identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const double> d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
  }

  int dim() const { return dim_; }

  cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
  const cplx& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }

  std::span<const cplx> entries() const { return a_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : a_) s += std::norm(z);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (const cplx& z : a_) m = std::max(m, std::abs(z));
    return m;
  }

  bool is_hermitian(double eps = tol::hermiticity) const {
    for (int i = 0; i < dim_; ++i)
      for (int j = i; j < dim_; ++j)
        if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > eps) return false;
    return true;
  }

  friend ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_dim(x, y, "operator+");
    ComplexMatrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
    return r;
  }

  friend ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_dim(x, y, "operator-");
    ComplexMatrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
    return r;
  }

  friend ComplexMatrix operator*(const cplx& s, const ComplexMatrix& x) {
    ComplexMatrix r = x;
    for (cplx& z : r.a_) z *= s;
    return r;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& x, const cplx& s) { return s * x; }
  friend ComplexMatrix operator*(double s, const ComplexMatrix& x) { return cplx(s, 0.0) * x; }
  friend ComplexMatrix operator*(const ComplexMatrix& x, double s) { return cplx(s, 0.0) * x; }

  friend ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_dim(x, y, "operator*");
    const int n = x.dim_;
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const cplx xik = x(i, k);
        if (xik == cplx(0.0, 0.0)) continue;
        for (int j = 0; j < n; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }

 private:
  static int check_dim(int dim) {
    if (dim <= 0) throw std::invalid_argument("ComplexMatrix: dim must be positive");
    return dim;
  }
  static void require_same_dim(const ComplexMatrix& x, const ComplexMatrix& y, const char* op) {
    if (x.dim_ != y.dim_)
      throw std::invalid_argument(std::string("ComplexMatrix::") + op + ": dimension mismatch");
  }

  int dim_ = 0;
  std::vector<cplx> a_;
};

// Maximum entrywise |x - y|.
inline double max_abs_diff(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j) m = std::max(m, std::abs(x(i, j) - y(i, j)));
  return m;
}

// ---------------------------------------------------------------------------
// Small vector helpers (states are plain std::vector<cplx>).
// ---------------------------------------------------------------------------

inline cplx inner(std::span<const cplx> u, std::span<const cplx> v) {
  if (u.size() != v.size()) throw std::invalid_argument("inner: length mismatch");
  cplx s = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) s += std::conj(u[k]) * v[k];
  return s;
}

inline double vec_norm(std::span<const cplx> v) {
  double s = 0.0;
  for (const cplx& z : v) s += std::norm(z);
  return std::sqrt(s);
}

inline std::vector<cplx> matvec(const ComplexMatrix& m, std::span<const cplx> v) {
  if (static_cast<std::size_t>(m.dim()) != v.size())
    throw std::invalid_argument("matvec: dimension mismatch");
  std::vector<cplx> r(v.size());
  for (int i = 0; i < m.dim(); ++i) {
    cplx s = 0.0;
    for (int j = 0; j < m.dim(); ++j) s += m(i, j) * v[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

// |u><v|
inline ComplexMatrix outer(std::span<const cplx> u, std::span<const cplx> v) {
  if (u.size() != v.size()) throw std::invalid_argument("outer: length mismatch");
  ComplexMatrix r(static_cast<int>(u.size()));
  for (int i = 0; i < r.dim(); ++i)
    for (int j = 0; j < r.dim(); ++j)
      r(i, j) = u[static_cast<std::size_t>(i)] * std::conj(v[static_cast<std::size_t>(j)]);
  return r;
}

// ---------------------------------------------------------------------------
// BipartiteOperator: matrix tagged with local dimensions (dA, dB).
// Basis label i = a*dB + b.
// ---------------------------------------------------------------------------

struct BipartiteOperator {
  ComplexMatrix matrix;
  int dim_a = 0;
  int dim_b = 0;
};

inline void require_bipartite(const BipartiteOperator& o, const char* where) {
  if (o.dim_a <= 0 || o.dim_b <= 0 || o.matrix.dim() != o.dim_a * o.dim_b)
    throw std::invalid_argument(std::string(where) + ": matrix dim does not equal dA*dB");
}

// ---------------------------------------------------------------------------
// Kronecker product, interleaved order: index (i,j) of A x B is i*B.dim + j.
// ---------------------------------------------------------------------------

inline ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
  const int nx = x.dim(), ny = y.dim();
  ComplexMatrix r(nx * ny);
  for (int i1 = 0; i1 < nx; ++i1)
    for (int i2 = 0; i2 < nx; ++i2) {
      const cplx xv = x(i1, i2);
      if (xv == cplx(0.0, 0.0)) continue;
      for (int j1 = 0; j1 < ny; ++j1)
        for (int j2 = 0; j2 < ny; ++j2) r(i1 * ny + j1, i2 * ny + j2) = xv * y(j1, j2);
    }
  return r;
}

// Tensor product of two bipartite operators delivered directly in the grouped
// layout ((A1 A2),(B1 B2)). Local dimensions multiply sidewise, so mixed
// factors like a 3x3-state with a two-qubit state compose cleanly.
inline BipartiteOperator tensor_grouped(const BipartiteOperator& x, const BipartiteOperator& y) {
  require_bipartite(x, "tensor_grouped");
  require_bipartite(y, "tensor_grouped");
  const int da = x.dim_a * y.dim_a;
  const int db = x.dim_b * y.dim_b;
  ComplexMatrix r(da * db);
  auto row = [&](int a1, int a2, int b1, int b2) {
    return ((a1 * y.dim_a + a2) * x.dim_b + b1) * y.dim_b + b2;
  };
  for (int a1 = 0; a1 < x.dim_a; ++a1)
    for (int b1 = 0; b1 < x.dim_b; ++b1)
      for (int a1p = 0; a1p < x.dim_a; ++a1p)
        for (int b1p = 0; b1p < x.dim_b; ++b1p) {
          const cplx xv = x.matrix(a1 * x.dim_b + b1, a1p * x.dim_b + b1p);
          if (xv == cplx(0.0, 0.0)) continue;
          for (int a2 = 0; a2 < y.dim_a; ++a2)
            for (int b2 = 0; b2 < y.dim_b; ++b2)
              for (int a2p = 0; a2p < y.dim_a; ++a2p)
                for (int b2p = 0; b2p < y.dim_b; ++b2p)
                  r(row(a1, a2, b1, b2), row(a1p, a2p, b1p, b2p)) =
                      xv * y.matrix(a2 * y.dim_b + b2, a2p * y.dim_b + b2p);
        }
  return {std::move(r), da, db};
}

// ---------------------------------------------------------------------------
// Partial transposition on subsystem A: entry[(a1,b1),(a2,b2)] of the result
// is entry[(a2,b1),(a1,b2)] of the input. Pure index permutation, hence an
// exact involution.
// ---------------------------------------------------------------------------

inline BipartiteOperator partial_transpose(const BipartiteOperator& o) {
  require_bipartite(o, "partial_transpose");
  const int da = o.dim_a, db = o.dim_b;
  ComplexMatrix r(o.matrix.dim());
  for (int a1 = 0; a1 < da; ++a1)
    for (int b1 = 0; b1 < db; ++b1)
      for (int a2 = 0; a2 < da; ++a2)
        for (int b2 = 0; b2 < db; ++b2)
          r(a1 * db + b1, a2 * db + b2) = o.matrix(a2 * db + b1, a1 * db + b2);
  return {std::move(r), da, db};
}

// ---------------------------------------------------------------------------
// Copies-layout permutation: regroups an operator living on the interleaved
// order (A1 B1 A2 B2 ...) into the grouped order ((A1 A2 ...),(B1 B2 ...)).
// The input carrier is tagged with the per-copy local dimensions; its matrix
// has dimension (dA*dB)^copies. Supported copy counts: 1 and 2.
// ---------------------------------------------------------------------------

inline BipartiteOperator permute_to_copies_layout(const BipartiteOperator& o, int copies) {
  if (copies != 1 && copies != 2)
    throw std::invalid_argument("permute_to_copies_layout: unsupported copy count");
  const int da = o.dim_a, db = o.dim_b;
  if (da <= 0 || db <= 0) throw std::invalid_argument("permute_to_copies_layout: bad local dims");
  if (copies == 1) {
    require_bipartite(o, "permute_to_copies_layout");
    return o;
  }
  const int d = da * db;
  if (o.matrix.dim() != d * d)
    throw std::invalid_argument("permute_to_copies_layout: matrix dim is not (dA*dB)^2");
  // interleaved index ((a1*dB+b1)*dA+a2)*dB+b2 -> grouped ((a1*dA+a2)*dB+b1)*dB+b2
  std::vector<int> to_grouped(static_cast<std::size_t>(d) * d);
  for (int a1 = 0; a1 < da; ++a1)
    for (int b1 = 0; b1 < db; ++b1)
      for (int a2 = 0; a2 < da; ++a2)
        for (int b2 = 0; b2 < db; ++b2)
          to_grouped[static_cast<std::size_t>(((a1 * db + b1) * da + a2) * db + b2)] =
              ((a1 * da + a2) * db + b1) * db + b2;
  ComplexMatrix r(d * d);
  for (int i = 0; i < d * d; ++i)
    for (int j = 0; j < d * d; ++j)
      r(to_grouped[static_cast<std::size_t>(i)], to_grouped[static_cast<std::size_t>(j)]) =
          o.matrix(i, j);
  return {std::move(r), da * da, db * db};
}

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition via cyclic Jacobi rotations.
// ---------------------------------------------------------------------------

struct Spectrum {
  std::vector<double> eigenvalues;  // sorted non-increasing
  ComplexMatrix eigenvectors;       // column j pairs with eigenvalues[j]

  std::vector<cplx> eigenvector(int j) const {
    std::vector<cplx> v(static_cast<std::size_t>(eigenvectors.dim()));
    for (int i = 0; i < eigenvectors.dim(); ++i) v[static_cast<std::size_t>(i)] = eigenvectors(i, j);
    return v;
  }
};

namespace detail {

inline double offdiag_frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). The rotation acts as
// a <- J^dag a J, v <- v J with J[p][p]=c, J[p][q]=-conj(s), J[q][p]=s,
// J[q][q]=c, c real. Exactly-zero pivots are skipped, which keeps
// decoupled zero rows/columns of the input bitwise intact.
inline void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const cplx beta = a(p, q);
  const double ab = std::abs(beta);
  if (ab == 0.0) return;
  const double alpha = a(p, p).real();
  const double gamma = a(q, q).real();
  const double theta = (gamma - alpha) / (2.0 * ab);
  // smaller-magnitude root of t^2 - 2*theta*t - 1 = 0
  const double t = -1.0 / (theta + std::copysign(std::sqrt(theta * theta + 1.0), theta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const cplx phase = beta / ab;
  const cplx s = std::conj(phase) * (t * c);

  const int n = a.dim();
  for (int k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = c * akp + s * akq;
    a(k, q) = -std::conj(s) * akp + c * akq;
    a(p, k) = std::conj(a(k, p));
    a(q, k) = std::conj(a(k, q));
  }
  const double sb = (s * beta).real();  // s*beta is real by construction
  a(p, p) = c * c * alpha + 2.0 * c * sb + std::norm(s) * gamma;
  a(q, q) = std::norm(s) * alpha - 2.0 * c * sb + c * c * gamma;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (int k = 0; k < n; ++k) {
    const cplx vkp = v(k, p);
    const cplx vkq = v(k, q);
    v(k, p) = c * vkp + s * vkq;
    v(k, q) = -std::conj(s) * vkp + c * vkq;
  }
}

}  // namespace detail

// Cyclic Jacobi on a hermitian matrix. Convergence when the off-diagonal
// Frobenius mass drops below 1e-14 * ||A||_F, hard cap 100 sweeps. Fully
// deterministic: fixed pivot order, stable descending sort of eigenvalues.
inline Spectrum eig_hermitian(const ComplexMatrix& a_in) {
  if (!a_in.is_hermitian(tol::hermiticity))
    throw std::invalid_argument("eig_hermitian: input is not hermitian within tolerance");
  const int n = a_in.dim();
  ComplexMatrix a = a_in;
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double target = 1e-14 * std::max(a.frobenius_norm(), 1e-300);
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (detail::offdiag_frobenius(a) < target) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) detail::jacobi_rotate(a, v, p, q);
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  Spectrum s;
  s.eigenvalues.resize(static_cast<std::size_t>(n));
  s.eigenvectors = ComplexMatrix(n);
  for (int j = 0; j < n; ++j) {
    s.eigenvalues[static_cast<std::size_t>(j)] = a(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(j)]).real();
    for (int i = 0; i < n; ++i) s.eigenvectors(i, j) = v(i, order[static_cast<std::size_t>(j)]);
  }
  return s;
}

inline double min_eigenvalue(const ComplexMatrix& a) {
  const Spectrum s = eig_hermitian(a);
  return s.eigenvalues.back();
}

inline double max_eigenvalue(const ComplexMatrix& a) {
  const Spectrum s = eig_hermitian(a);
  return s.eigenvalues.front();
}

// ---------------------------------------------------------------------------
// sandwich: P O P^dag, dimensions must match.
// ---------------------------------------------------------------------------

inline BipartiteOperator sandwich(const BipartiteOperator& p, const BipartiteOperator& o) {
  require_bipartite(p, "sandwich");
  require_bipartite(o, "sandwich");
  if (p.dim_a != o.dim_a || p.dim_b != o.dim_b)
    throw std::invalid_argument("sandwich: local dimension mismatch");
  return {p.matrix * o.matrix * p.matrix.adjoint(), o.dim_a, o.dim_b};
}

// ---------------------------------------------------------------------------
// Local contractions <b|Pi|b> and <a|Pi|a> used by the seesaw. The B-side
// contraction returns the dA x dA operator whose expectation in |a> equals
// <ab|Pi|ab>, and symmetrically for the A side.
// ---------------------------------------------------------------------------

inline ComplexMatrix overlap_operator_b(const BipartiteOperator& pi, std::span<const cplx> b) {
  require_bipartite(pi, "overlap_operator_b");
  if (b.size() != static_cast<std::size_t>(pi.dim_b))
    throw std::invalid_argument("overlap_operator_b: side-B vector length mismatch");
  if (std::abs(vec_norm(b) - 1.0) > 1e-12)
    throw std::invalid_argument("overlap_operator_b: side-B vector is not normalized");
  const int da = pi.dim_a, db = pi.dim_b;
  ComplexMatrix m(da);
  for (int a1 = 0; a1 < da; ++a1)
    for (int a2 = 0; a2 < da; ++a2) {
      cplx s = 0.0;
      for (int b1 = 0; b1 < db; ++b1)
        for (int b2 = 0; b2 < db; ++b2)
          s += std::conj(b[static_cast<std::size_t>(b1)]) * pi.matrix(a1 * db + b1, a2 * db + b2) *
               b[static_cast<std::size_t>(b2)];
      m(a1, a2) = s;
    }
  return m;
}

inline ComplexMatrix overlap_operator_a(const BipartiteOperator& pi, std::span<const cplx> a) {
  require_bipartite(pi, "overlap_operator_a");
  if (a.size() != static_cast<std::size_t>(pi.dim_a))
    throw std::invalid_argument("overlap_operator_a: side-A vector length mismatch");
  if (std::abs(vec_norm(a) - 1.0) > 1e-12)
    throw std::invalid_argument("overlap_operator_a: side-A vector is not normalized");
  const int da = pi.dim_a, db = pi.dim_b;
  ComplexMatrix m(db);
  for (int b1 = 0; b1 < db; ++b1)
    for (int b2 = 0; b2 < db; ++b2) {
      cplx s = 0.0;
      for (int a1 = 0; a1 < da; ++a1)
        for (int a2 = 0; a2 < da; ++a2)
          s += std::conj(a[static_cast<std::size_t>(a1)]) * pi.matrix(a1 * db + b1, a2 * db + b2) *
               a[static_cast<std::size_t>(a2)];
      m(b1, b2) = s;
    }
  return m;
}

}  // namespace entgap
