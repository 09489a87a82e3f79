// Copyright 2026 The spinsq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: critical-temperature tables and sweeps for the
// built-in spin models, criterion evaluation on user-supplied states or
// measured moments, and optimal measurement directions. CSV goes to
// stdout in one write; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 computational failure (search bracket
// exceeded), 2 flag misuse, 3 malformed input file.

#include "CLI11.hpp"

#include "spinsq/analysis.hpp"
#include "spinsq/criteria.hpp"
#include "spinsq/models.hpp"
#include "spinsq/moments_io.hpp"
#include "spinsq/separability.hpp"
#include "spinsq/spin_ops.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace spinsq;

std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string csv_temps(const CriticalTemperature& tc) {
  if (!tc.found()) {
    return ",,";  // empty t_c, t_lo, t_hi
  }
  return fmt6(tc.t_c) + "," + fmt6(tc.t_lo) + "," + fmt6(tc.t_hi);
}

struct SearchFlags {
  double t_max = 10.0;
  int grid_points = 200;
  double tol = 1e-4;

  SearchParams params() const {
    SearchParams p;
    p.t_max = t_max;
    p.grid_points = grid_points;
    p.tol = tol;
    return p;
  }
};

void add_search_flags(CLI::App* cmd, SearchFlags& flags) {
  cmd->add_option("--t-max", flags.t_max, "Upper end of the temperature search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--grid-points", flags.grid_points,
                  "Coarse log-grid size for the scan")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  cmd->add_option("--tol", flags.tol, "Bisection bracket width in temperature")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

// ---- table1 -------------------------------------------------------------

struct Table1Flags {
  std::string family;     // "heisenberg" or "xy"; empty = both
  int n = 0;              // 0 = full range 3..9
  std::string criterion;  // empty = eqs2 and ppt
  SearchFlags search;
};

int run_table1(const Table1Flags& flags) {
  Table1Options opts;
  opts.search = flags.search.params();
  if (!flags.family.empty()) {
    opts.families = {flags.family == "xy" ? ModelFamily::XyRing
                                          : ModelFamily::HeisenbergRing};
  }
  if (flags.n != 0) {
    opts.n_min = opts.n_max = flags.n;
  }
  if (!flags.criterion.empty()) {
    opts.criteria = {*criterion_from_name(flags.criterion)};
  }

  std::ostringstream csv;
  csv << "family,n,criterion,t_c,t_lo,t_hi\n";
  for (const CriticalTemperature& tc : table1(opts)) {
    csv << family_name(tc.model.family) << "," << tc.model.n << ","
        << criterion_name(tc.criterion) << "," << csv_temps(tc) << "\n";
    if (!tc.found()) {
      std::cerr << "note: " << criterion_name(tc.criterion)
                << " never detects " << tc.model.describe()
                << " on the search grid\n";
    }
  }
  std::cout << csv.str();
  return 0;
}

// ---- fig2 ---------------------------------------------------------------

struct Fig2Flags {
  double j2_min = -1.0;
  double j2_max = 2.0;
  int steps = 13;
  std::vector<std::string> criteria{"eqs2", "ppt", "ccnr"};
  // The strongest coupling on the default sweep (j2 = 2) orders around
  // t = 10.4, so the sweep needs more headroom than the other commands.
  SearchFlags search{20.0};
};

int run_fig2(const Fig2Flags& flags) {
  std::vector<Criterion> criteria;
  bool want_eqs2 = false;
  bool want_ppt = false;
  bool want_ccnr = false;
  for (Criterion c : {Criterion::Eqs2, Criterion::Ppt, Criterion::Ccnr}) {
    for (const std::string& name : flags.criteria) {
      if (name == criterion_name(c)) {
        criteria.push_back(c);
        want_eqs2 |= c == Criterion::Eqs2;
        want_ppt |= c == Criterion::Ppt;
        want_ccnr |= c == Criterion::Ccnr;
        break;
      }
    }
  }
  const bool want_window = want_eqs2 && want_ppt;

  std::ostringstream csv;
  csv << "j2";
  if (want_eqs2) csv << ",t_eqs2";
  if (want_ppt) csv << ",t_ppt";
  if (want_ccnr) csv << ",t_ccnr";
  if (want_window) csv << ",window_lo,window_hi";
  csv << "\n";

  const auto rows =
      j2_sweep(flags.j2_min, flags.j2_max, flags.steps, criteria,
               flags.search.params());
  for (const SweepRow& row : rows) {
    csv << fmt6(row.j2);
    for (Criterion c : {Criterion::Eqs2, Criterion::Ppt, Criterion::Ccnr}) {
      const auto it = row.results.find(c);
      if (it == row.results.end()) {
        continue;
      }
      csv << "," << (it->second.found() ? fmt6(it->second.t_c) : "");
    }
    if (want_window) {
      if (row.window) {
        csv << "," << fmt6(row.window->t_ppt) << ","
            << fmt6(row.window->t_eqs2);
      } else {
        csv << ",,";
      }
    }
    csv << "\n";
  }
  std::cout << csv.str();
  return 0;
}

// ---- check / directions -------------------------------------------------

void print_margin_line(std::ostream& out, const CriterionReport& report,
                       const std::string& id, const char* prefix) {
  out << prefix << id << " = ";
  const auto it = report.margins.find(id);
  if (it == report.margins.end()) {
    out << "n/a (zero transverse mean spin)";
  } else {
    out << fmt6(it->second);
  }
  out << "\n";
}

void print_verdict(std::ostream& out, const CriterionReport& report,
                   const char* prefix) {
  if (report.detected) {
    out << prefix << "verdict: ENTANGLED (" << report.argmax_id << " margin "
        << fmt6(report.max_margin) << ")\n";
  } else {
    out << prefix << "verdict: not detected\n";
  }
}

void print_direction_analysis(std::ostream& out, const DirectionAnalysis& d) {
  const char* rows[] = {"x'", "y'", "z'"};
  out << "optimal axes (rows of O):\n";
  for (int r = 0; r < 3; ++r) {
    out << rows[r] << " = " << fmt6(d.o(r, 0)) << " " << fmt6(d.o(r, 1)) << " "
        << fmt6(d.o(r, 2)) << "\n";
  }
  out << "xi_eigenvalues = " << fmt6(d.x_eigenvalues(0)) << " "
      << fmt6(d.x_eigenvalues(1)) << " " << fmt6(d.x_eigenvalues(2)) << "\n";
  out << "eq2c over directions: "
      << (d.eq2c_violated_some_direction ? "violated"
                                         : "not violated in any direction")
      << " (best margin " << fmt6(d.eq2c_best_margin) << ")\n";
  out << "eq2d over directions: "
      << (d.eq2d_violated_some_direction ? "violated"
                                         : "not violated in any direction")
      << " (best margin " << fmt6(d.eq2d_best_margin) << ")\n";
  for (const char* id : kInequalityIds) {
    print_margin_line(out, d.report, id, "rotated margin ");
  }
  print_verdict(out, d.report, "rotated ");
}

struct CheckFlags {
  std::string state_path;
  std::string moments_path;
  bool optimize_directions = false;
};

int run_check(const CheckFlags& flags) {
  CollectiveMoments moments;
  bool has_full_corr = false;
  if (!flags.state_path.empty()) {
    moments = moments_from_state(read_state_file(flags.state_path));
    has_full_corr = true;
  } else {
    MomentsFile file = read_moments_file(flags.moments_path);
    moments = file.moments;
    has_full_corr = file.has_full_corr;
  }

  CriterionOptions opts;
  opts.include_eq1 = true;
  opts.include_case2 = true;
  const CriterionReport report = eval_squeezing_inequalities(moments, opts);

  std::ostringstream out;
  out << "n = " << moments.n << "\n";
  for (const char* id : kInequalityIds) {
    print_margin_line(out, report, id, "margin ");
  }
  print_margin_line(out, report, "eq1", "margin ");
  print_margin_line(out, report, "case2", "margin ");
  print_verdict(out, report, "");

  if (flags.optimize_directions) {
    if (has_full_corr) {
      print_direction_analysis(out, optimal_directions(moments));
    } else {
      std::cerr << "note: skipping direction optimization, moments file lacks "
                   "the full correlation matrix (Cxy, Cxz, Cyz)\n";
    }
  }
  std::cout << out.str();
  return 0;
}

int run_directions(const std::string& moments_path) {
  MomentsFile file = read_moments_file(moments_path);
  if (!file.has_full_corr) {
    throw ParseError(0,
                     "direction analysis needs the full correlation matrix "
                     "(keys Cxy, Cxz, Cyz)");
  }
  const CollectiveMoments& m = file.moments;
  const CriterionReport lab = eval_squeezing_inequalities(m);

  std::ostringstream out;
  out << "n = " << m.n << "\n";
  for (const char* id : {"eq2a", "eq2b"}) {
    const double margin = lab.margins.at(id);
    out << id << ": "
        << (margin > kDetectionTol ? "violated" : "not violated")
        << " (rotation-invariant, margin " << fmt6(margin) << ")\n";
  }
  print_direction_analysis(out, optimal_directions(m));
  std::cout << out.str();
  return 0;
}

// ---- tc -----------------------------------------------------------------

struct TcFlags {
  std::string family;
  int n = 0;
  double j2 = 0.0;
  std::string criterion = "eqs2";
  SearchFlags search;
};

int run_tc(const TcFlags& flags) {
  ModelSpec spec{*family_from_name(flags.family), flags.n, flags.j2};
  validate(spec);
  const CriticalTemperature tc = critical_temperature(
      spec, *criterion_from_name(flags.criterion), flags.search.params());

  std::ostringstream csv;
  csv << "family,n,j2,criterion,t_c,t_lo,t_hi\n";
  csv << family_name(spec.family) << "," << spec.n << "," << fmt6(spec.j2)
      << "," << criterion_name(tc.criterion) << "," << csv_temps(tc) << "\n";
  if (!tc.found()) {
    std::cerr << "note: " << criterion_name(tc.criterion) << " never detects "
              << spec.describe() << " on the search grid\n";
  }
  std::cout << csv.str();
  return 0;
}

// ---- gen-state ----------------------------------------------------------

struct GenStateFlags {
  std::string family;
  int n = 0;
  double j2 = 0.0;
  double t = 0.0;
  std::string reference;
  std::string output;
};

int run_gen_state(const GenStateFlags& flags) {
  DensityMatrix rho;
  if (!flags.reference.empty()) {
    ReferenceState which = ReferenceState::Ghz;
    if (flags.reference == "singlet_pairs") {
      which = ReferenceState::SingletPairs;
    } else if (flags.reference == "dicke_half") {
      which = ReferenceState::DickeHalf;
    }
    rho = reference_state(which, flags.n);
  } else {
    ModelSpec spec{*family_from_name(flags.family), flags.n, flags.j2};
    validate(spec);
    rho = thermal_state(spec, flags.t).state;
  }
  if (flags.output.empty()) {
    write_state_file(std::cout, rho);
  } else {
    write_state_file(flags.output, rho);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  // One BLAS thread per worker; our own pool carries the parallelism.
  setenv("OPENBLAS_NUM_THREADS", "1", /*overwrite=*/0);

  CLI::App app{
      "spinsq: spin-squeezing entanglement criteria, separability tests and "
      "critical temperatures for thermal spin models"};
  app.require_subcommand(1);

  static const std::vector<std::string> kCriterionNames{"eqs2", "eq1", "case2",
                                                        "ppt", "ccnr"};
  static const std::vector<std::string> kFamilyNames{
      "heisenberg_ring", "xy_ring", "cluster4", "heisenberg_complete",
      "xy_complete"};

  Table1Flags table1_flags;
  CLI::App* cmd_table1 = app.add_subcommand(
      "table1", "Critical temperatures for Heisenberg and XY rings");
  cmd_table1->add_option("--family", table1_flags.family, "Ring family")
      ->check(CLI::IsMember({"heisenberg", "xy"}));
  cmd_table1->add_option("--n", table1_flags.n, "Ring size (default: 3..9)")
      ->check(CLI::Range(3, kMaxQubits));
  cmd_table1
      ->add_option("--criterion", table1_flags.criterion,
                   "Single criterion (default: eqs2 and ppt)")
      ->check(CLI::IsMember(kCriterionNames));
  add_search_flags(cmd_table1, table1_flags.search);

  Fig2Flags fig2_flags;
  CLI::App* cmd_fig2 = app.add_subcommand(
      "fig2", "Critical temperatures of the 4-site cluster model versus j2");
  cmd_fig2->add_option("--j2-min", fig2_flags.j2_min, "Sweep start")
      ->capture_default_str();
  cmd_fig2->add_option("--j2-max", fig2_flags.j2_max, "Sweep end")
      ->capture_default_str();
  cmd_fig2->add_option("--steps", fig2_flags.steps, "Number of j2 values")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  cmd_fig2
      ->add_option("--criteria", fig2_flags.criteria,
                   "Comma-separated criteria to bisect")
      ->delimiter(',')
      ->check(CLI::IsMember({"eqs2", "ppt", "ccnr"}));
  add_search_flags(cmd_fig2, fig2_flags.search);

  CheckFlags check_flags;
  CLI::App* cmd_check = app.add_subcommand(
      "check", "Evaluate all criteria on a state or measured moments");
  CLI::Option* check_state =
      cmd_check->add_option("--state", check_flags.state_path,
                            "Density matrix file (DMAT format)");
  CLI::Option* check_moments = cmd_check->add_option(
      "--moments", check_flags.moments_path, "Measured moments file");
  check_state->excludes(check_moments);
  cmd_check->add_flag("--optimize-directions", check_flags.optimize_directions,
                      "Also report the optimal measurement frame");

  std::string directions_path;
  CLI::App* cmd_directions = app.add_subcommand(
      "directions", "Optimal measurement directions from measured moments");
  cmd_directions->add_option("--moments", directions_path, "Moments file")
      ->required();

  TcFlags tc_flags;
  CLI::App* cmd_tc =
      app.add_subcommand("tc", "Single critical-temperature query");
  cmd_tc->add_option("--family", tc_flags.family, "Model family")
      ->required()
      ->check(CLI::IsMember(kFamilyNames));
  cmd_tc->add_option("--n", tc_flags.n, "Number of spins")
      ->required()
      ->check(CLI::Range(2, kMaxQubits));
  cmd_tc->add_option("--j2", tc_flags.j2, "Diagonal coupling (cluster4)")
      ->capture_default_str();
  cmd_tc->add_option("--criterion", tc_flags.criterion, "Criterion")
      ->check(CLI::IsMember(kCriterionNames))
      ->capture_default_str();
  add_search_flags(cmd_tc, tc_flags.search);

  GenStateFlags gen_flags;
  CLI::App* cmd_gen = app.add_subcommand(
      "gen-state", "Write a density matrix file (thermal or reference state)");
  CLI::Option* gen_family =
      cmd_gen->add_option("--family", gen_flags.family, "Model family")
          ->check(CLI::IsMember(kFamilyNames));
  cmd_gen->add_option("--n", gen_flags.n, "Number of spins")
      ->required()
      ->check(CLI::Range(1, kMaxQubits));
  cmd_gen->add_option("--j2", gen_flags.j2, "Diagonal coupling (cluster4)");
  CLI::Option* gen_t =
      cmd_gen->add_option("--t", gen_flags.t, "Temperature of the thermal state");
  CLI::Option* gen_ref =
      cmd_gen
          ->add_option("--reference", gen_flags.reference,
                       "Reference state instead of a thermal state")
          ->check(CLI::IsMember({"singlet_pairs", "dicke_half", "ghz"}));
  gen_ref->excludes(gen_family)->excludes(gen_t);
  cmd_gen->add_option("-o,--output", gen_flags.output,
                      "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_table1)) {
      return run_table1(table1_flags);
    }
    if (app.got_subcommand(cmd_fig2)) {
      return run_fig2(fig2_flags);
    }
    if (app.got_subcommand(cmd_check)) {
      if (check_flags.state_path.empty() && check_flags.moments_path.empty()) {
        std::cerr << "error: check needs --state or --moments\n";
        return 2;
      }
      return run_check(check_flags);
    }
    if (app.got_subcommand(cmd_directions)) {
      return run_directions(directions_path);
    }
    if (app.got_subcommand(cmd_tc)) {
      return run_tc(tc_flags);
    }
    if (app.got_subcommand(cmd_gen)) {
      if (gen_flags.reference.empty() &&
          (gen_flags.family.empty() || !(*gen_t))) {
        std::cerr << "error: gen-state needs --reference or --family with --t\n";
        return 2;
      }
      return run_gen_state(gen_flags);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const BracketExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
