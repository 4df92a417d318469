/* Acceptance suite: one pass/fail line per criterion, exit code 0 only when
 * every criterion holds at its stated tolerance.
 */

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "entgap/experiments.hpp"
#include "entgap/linalg.hpp"
#include "entgap/measures.hpp"
#include "entgap/model.hpp"
#include "entgap/overlap.hpp"

using namespace entgap;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what) {
  std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, what.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

}  // namespace

int main() {
  const FixedStates f = fixed_states();
  const ProductVectorSet vs = tiles_product_vectors();
  const auto composed = composed_vectors(vs);
  const BipartiteOperator pi_b = complement_projector(vs);
  const BipartiteOperator rb = rho_b();

  // 1. PPT of rho_b
  {
    const ComplexMatrix pt = partial_transpose(rb).matrix;
    const double mn = min_eigenvalue(pt);
    const double dev = max_abs_diff(pt, rb.matrix);
    report(1, mn >= -1e-10 && dev <= 1e-12,
           "rho_b is PPT: min eig(rho_b^TA) = " + fmt(mn) + ", |rho_b^TA - rho_b|_max = " + fmt(dev));
  }

  // 2. UPB structure
  {
    double gram = 0.0;
    for (std::size_t i = 0; i < composed.size(); ++i)
      for (std::size_t j = i + 1; j < composed.size(); ++j)
        gram = std::max(gram, std::abs(inner(composed[i], composed[j])));
    const double herm = max_abs_diff(pi_b.matrix, pi_b.matrix.adjoint());
    const double idem = max_abs_diff(pi_b.matrix * pi_b.matrix, pi_b.matrix);
    const double tr = pi_b.matrix.trace().real();
    std::vector<cplx> res = matvec(pi_b.matrix, f.psi.amplitudes);
    for (std::size_t i = 0; i < res.size(); ++i) res[i] -= f.psi.amplitudes[i];
    const double psi_in_v = vec_norm(res);
    const double tau_psi = std::abs(inner(f.tau.amplitudes, f.psi.amplitudes));
    report(2,
           gram <= 1e-12 && herm <= 1e-12 && idem <= 1e-12 && std::abs(tr - 4.0) <= 1e-11 &&
               psi_in_v <= 1e-12 && tau_psi <= 1e-12,
           "UPB structure: gram_off = " + fmt(gram) + ", tr = " + fmt(tr) +
               ", |Pi psi - psi| = " + fmt(psi_in_v) + ", <tau|psi> = " + fmt(tau_psi));
  }

  // 3. Witness number at p = 0.015 and the rank at p = 0
  {
    const double n015 = std::abs(distillability_witness(sigma(0.015), f.p_proj).min_eigenvalue);
    const int rank0 = distillability_witness(rb, f.p_proj).projected_rank;
    report(3, n015 >= 2.6e-4 && n015 <= 2.8e-4 && rank0 == 3,
           "|n|(0.015) = " + fmt(n015) + " in [2.6e-4, 2.8e-4], projected rank at p = 0 is " +
               std::to_string(rank0));
  }

  // 4. Quadratic law
  {
    const QuadraticFit hi = fit_quadratic_law(sweep(1e-3, 1e-2, 25, true), 1e-3, 1e-2);
    const QuadraticFit lo = fit_quadratic_law(sweep(1e-4, 1e-3, 25, true), 1e-4, 1e-3);
    const double rel = std::abs(lo.k_fit - lo.k_perturbative) / lo.k_perturbative;
    report(4,
           std::abs(hi.exponent_fit - 2.0) <= 0.05 && rel <= 0.02 && lo.k_perturbative >= 0.5 &&
               lo.k_perturbative <= 2.5,
           "exponent = " + fmt(hi.exponent_fit) + " (2.00 +- 0.05), k_fit/k_pert dev = " +
               fmt(rel) + " (<= 2%), k_pert = " + fmt(lo.k_perturbative) + " in [0.5, 2.5]");
  }

  // 5. Monotonicity on the 200-point grid
  const std::vector<SweepRecord> grid = sweep(0.0, 0.05, 200);
  {
    bool mono = true;
    for (std::size_t i = 1; i < grid.size(); ++i)
      mono = mono && std::abs(grid[i].witness_n) >= std::abs(grid[i - 1].witness_n) - 1e-15 &&
             grid[i].log_negativity >= grid[i - 1].log_negativity - 1e-15;
    report(5, mono, "|n(p)| and E_N(sigma(p)) non-decreasing over 200 grid points on [0, 0.05]");
  }

  // 6. Pure-state anchors
  {
    const double ent = schmidt(f.psi).entropy_ebits;
    const double en_psi = log_negativity(projector(f.psi));
    const double en_phi = log_negativity(projector(f.phi));
    report(6,
           std::abs(ent - 0.55) <= 0.005 && std::abs(en_psi - std::log2(5.0 / 3.0)) <= 1e-9 &&
               std::abs(en_phi - 1.0) <= 1e-11,
           "S(psi) = " + fmt(ent) + " (0.55 +- 0.005), E_N(psi) = " + fmt(en_psi) +
               " (log2(5/3) +- 1e-9), E_N(phi) = " + fmt(en_phi) + " (1 +- 1e-11)");
  }

  // 7. Gap regime and the typo audit
  {
    bool regime = true;
    for (const SweepRecord& r : grid)
      if (r.p > 0.0 && r.p <= 0.012)
        regime = regime && r.log_negativity < 0.0145 && r.witness_n < -1e-10;
    const double en_a = log_negativity(sigma(0.0015));
    const double en_b = log_negativity(sigma(0.015));
    const bool match_a = std::abs(en_a - 0.012) <= 0.001;
    const bool match_b = std::abs(en_b - 0.012) <= 0.001;
    const int matches = static_cast<int>(match_a) + static_cast<int>(match_b);
    const double p_star_en = match_a && !match_b ? en_a : en_b;
    const double gap = ec_bound_ebits() - p_star_en;
    report(7, regime && matches == 1 && gap >= 0.0025,
           "gap regime on (0, 0.012] non-empty, E_N matches 0.012 +- 0.001 at exactly one of "
           "{0.0015, 0.015} (E_N = " +
               fmt(en_a) + " / " + fmt(en_b) + "), gap there = " + fmt(gap) + " >= 0.0025");
  }

  // 8. Additivity and catalysis
  {
    const BipartiteOperator s03 = sigma(0.3);
    const BipartiteOperator psi_proj = projector(f.psi);
    const BipartiteOperator phi_proj = projector(f.phi);
    const std::vector<const BipartiteOperator*> pool = {&s03, &psi_proj, &phi_proj};
    double dev = 0.0;
    for (const BipartiteOperator* x : pool)
      for (const BipartiteOperator* y : pool)
        dev = std::max(dev, std::abs(log_negativity(tensor_grouped(*x, *y)) -
                                     log_negativity(*x) - log_negativity(*y)));
    const BipartiteOperator s015 = sigma(0.015);
    const double cat = std::abs(log_negativity(tensor_grouped(s015, phi_proj)) -
                                log_negativity(s015) - 1.0);
    report(8, dev <= 1e-9 && cat <= 1e-9,
           "E_N additivity max deviation = " + fmt(dev) + ", catalysis deviation = " + fmt(cat) +
               " (both <= 1e-9)");
  }

  // 9. Overlap bounds
  {
    const OverlapResult a200 = seesaw_max_overlap(pi_b, 200, 42);
    const OverlapResult a400 = seesaw_max_overlap(pi_b, 400, 42);
    const double oracle = grid_oracle_overlap(pi_b, 24);
    const OverlapResult two = two_copy_overlap(pi_b, 200, 42);
    const bool ok = a200.alpha < 0.99 && std::abs(a200.alpha - a400.alpha) <= 1e-6 &&
                    oracle <= a200.alpha + 1e-8 && two.alpha >= a200.alpha * a200.alpha - 1e-6 &&
                    two.alpha <= 0.9801;
    report(9, ok,
           "alpha = " + fmt(a200.alpha) + " < 0.99, |alpha200 - alpha400| = " +
               fmt(std::abs(a200.alpha - a400.alpha)) + ", oracle - alpha = " +
               fmt(oracle - a200.alpha) + " <= 1e-8, alpha2 = " + fmt(two.alpha) +
               " in [alpha^2 - 1e-6, 0.9801]");
  }

  // 10. Numerical kernel
  {
    double max_res = 0.0;
    for (int i = 0; i < 50; ++i) {
      const ComplexMatrix h = detail::random_hermitian(9, 42, 5000 + static_cast<std::uint32_t>(i));
      const Spectrum s = eig_hermitian(h);
      ComplexMatrix rec(9);
      for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 9; ++c) {
          cplx acc = 0.0;
          for (int k = 0; k < 9; ++k)
            acc += s.eigenvectors(r, k) * s.eigenvalues[static_cast<std::size_t>(k)] *
                   std::conj(s.eigenvectors(c, k));
          rec(r, c) = acc;
        }
      max_res = std::max(max_res, max_abs_diff(rec, h));
    }

    const BipartiteOperator s015 = sigma(0.015);
    const BipartiteOperator rnd{detail::random_hermitian(9, 42, 6000), 3, 3};
    const double invol =
        std::max(max_abs_diff(partial_transpose(partial_transpose(s015)).matrix, s015.matrix),
                 max_abs_diff(partial_transpose(partial_transpose(rnd)).matrix, rnd.matrix));

    const BipartiteOperator two{kron(pi_b.matrix, pi_b.matrix), 3, 3};
    const Spectrum sp1 = eig_hermitian(two.matrix);
    const Spectrum sp2 = eig_hermitian(permute_to_copies_layout(two, 2).matrix);
    double perm_dev = 0.0;
    for (std::size_t i = 0; i < sp1.eigenvalues.size(); ++i)
      perm_dev = std::max(perm_dev, std::abs(sp1.eigenvalues[i] - sp2.eigenvalues[i]));

    report(10, max_res <= 1e-11 && invol == 0.0 && perm_dev <= 1e-12,
           "eig reconstruction over 50 seeded matrices = " + fmt(max_res) +
               " (<= 1e-11), pt involution deviation = " + fmt(invol) +
               " (exact), permutation spectrum deviation = " + fmt(perm_dev) + " (<= 1e-12)");
  }

  if (g_failures == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
