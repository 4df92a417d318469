/* entgap: bounds and witnesses for the 3x3 distillable-yet-irreversible
 * state family.
 *
 * Subcommands:
 *   verify     run the structural invariant suite
 *   reproduce  run the quoted-number reproduction report
 *   sweep      CSV sweep of witness eigenvalue and (log-)negativity over p
 *   figure1    write the figure data CSV (and an SVG next to it)
 *   overlap    seesaw product-overlap bounds for the UPB complement projector
 *
 * Exit codes: 0 success / all checks passed, 1 any check failed, 2 usage error.
 */

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "entgap/experiments.hpp"
#include "entgap/model.hpp"
#include "entgap/overlap.hpp"

int main(int argc, char** argv) {
  CLI::App app{"bounds and witnesses for a distillable state family with an "
               "entanglement cost/distillation gap"};
  app.require_subcommand(1);

  std::uint64_t seed = 42;
  double tol_eig = 1e-12;
  double witness_tol = 1e-10;
  app.add_option("--seed", seed, "seed for randomized restarts");
  app.add_option("--tol-eig", tol_eig, "seesaw convergence tolerance on the objective");
  app.add_option("--witness-tol", witness_tol, "certificate threshold for witness eigenvalues");

  CLI::App* cmd_verify = app.add_subcommand("verify", "run the invariant suite");
  CLI::App* cmd_repro = app.add_subcommand("reproduce", "run the quoted-number report");

  double p_min = 0.0, p_max = 0.05;
  int steps = 50;
  bool log_spacing = false;
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "sweep p and print a CSV");
  cmd_sweep->add_option("--p-min", p_min, "lower end of the p grid")->required();
  cmd_sweep->add_option("--p-max", p_max, "upper end of the p grid")->required();
  cmd_sweep->add_option("--steps", steps, "number of grid points")->required();
  cmd_sweep->add_flag("--log", log_spacing, "use geometric spacing (needs p-min > 0)");

  std::string out_path;
  CLI::App* cmd_fig = app.add_subcommand("figure1", "write the figure data CSV");
  cmd_fig->add_option("--out", out_path, "output CSV path")->required();

  int copies = 1;
  int restarts = 200;
  int grid_resolution = 0;
  CLI::App* cmd_overlap = app.add_subcommand("overlap", "product-overlap bounds");
  cmd_overlap->add_option("--copies", copies, "number of copies (1 or 2)")
      ->check(CLI::IsMember({1, 2}));
  cmd_overlap->add_option("--restarts", restarts, "number of seeded restarts");
  cmd_overlap->add_option("--seed", seed, "seed for randomized restarts");
  cmd_overlap->add_option("--grid-resolution", grid_resolution,
                          "also run the real-grid oracle at this resolution (single copy)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    entgap::ReportOptions opt;
    opt.seed = seed;
    opt.seesaw_tol = tol_eig;
    opt.witness_tol = witness_tol;

    if (cmd_verify->parsed()) return entgap::verify_invariants(std::cout, opt);
    if (cmd_repro->parsed()) return entgap::reproduce_report(std::cout, opt);

    if (cmd_sweep->parsed()) {
      entgap::write_sweep_csv(std::cout, entgap::sweep(p_min, p_max, steps, log_spacing));
      return 0;
    }

    if (cmd_fig->parsed()) {
      entgap::figure1(out_path);
      std::cout << "wrote " << out_path << '\n';
      return 0;
    }

    if (cmd_overlap->parsed()) {
      const entgap::BipartiteOperator pi_b = entgap::upb_projector();
      const entgap::OverlapResult r =
          copies == 1 ? entgap::seesaw_max_overlap(pi_b, restarts, seed, tol_eig)
                      : entgap::two_copy_overlap(pi_b, restarts, seed);
      std::cout << "copies: " << copies << '\n'
                << "alpha: " << entgap::detail::fmt_sci(r.alpha, 12) << '\n'
                << "ec_lower_bound_ebits: "
                << entgap::detail::fmt_sci(entgap::ec_lower_bound_from_overlap(r.alpha), 12)
                << '\n'
                << "restarts_used: " << r.restarts_used << '\n'
                << "iterations_total: " << r.iterations_total << '\n'
                << "converged: " << (r.converged ? "yes" : "no") << '\n';
      if (grid_resolution > 0) {
        if (copies != 1) {
          std::cerr << "overlap: --grid-resolution applies to --copies 1 only\n";
          return 2;
        }
        const double oracle = entgap::grid_oracle_overlap(pi_b, grid_resolution);
        std::cout << "grid_oracle: " << entgap::detail::fmt_sci(oracle, 12) << '\n'
                  << "oracle_minus_seesaw: "
                  << entgap::detail::fmt_sci(oracle - r.alpha, 12) << '\n';
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
