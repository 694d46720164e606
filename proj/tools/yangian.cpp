#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "yangian/boundary.hpp"
#include "yangian/matrix_json.hpp"
#include "yangian/modes.hpp"
#include "yangian/monodromy.hpp"
#include "yangian/rmatrix.hpp"

namespace {

using namespace yangian;

// A suite takes the space, the site shifts (ignored by the R-matrix-only
// suites) and the mode cutoff (used by "modes" alone).
using SuiteFn = std::function<CheckReport(const SuperSpace&, const std::vector<Rational>&, int)>;

struct SuiteEntry {
  std::string name;
  SuiteFn run;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> reg = {
      {"pk",
       [](const SuperSpace& sp, const std::vector<Rational>&, int) { return check_pk_algebra(sp); }},
      {"pk3",
       [](const SuperSpace& sp, const std::vector<Rational>&, int) {
         return check_pk_relations3(sp);
       }},
      {"ybe",
       [](const SuperSpace& sp, const std::vector<Rational>&, int) { return check_ybe(sp); }},
      {"crossing",
       [](const SuperSpace& sp, const std::vector<Rational>&, int) { return check_crossing(sp); }},
      {"unitarity",
       [](const SuperSpace& sp, const std::vector<Rational>&, int) { return check_unitarity(sp); }},
      {"rtt",
       [](const SuperSpace& sp, const std::vector<Rational>& shifts, int) {
         return check_rtt(MonodromyRep(sp, shifts));
       }},
      {"relcomm",
       [](const SuperSpace& sp, const std::vector<Rational>& shifts, int) {
         return check_relcomm(MonodromyRep(sp, shifts));
       }},
      {"modes",
       [](const SuperSpace& sp, const std::vector<Rational>& shifts, int nmax) {
         return check_modes(MonodromyRep(sp, shifts), nmax, nmax - 2);
       }},
      {"center",
       [](const SuperSpace& sp, const std::vector<Rational>& shifts, int) {
         return check_center(MonodromyRep(sp, shifts));
       }},
      {"centrality",
       [](const SuperSpace& sp, const std::vector<Rational>& shifts, int) {
         return check_centrality(MonodromyRep(sp, shifts));
       }},
      {"order1",
       [](const SuperSpace& sp, const std::vector<Rational>& shifts, int) {
         return check_order1(MonodromyRep(sp, shifts));
       }},
      {"rsrs-S",
       [](const SuperSpace& sp, const std::vector<Rational>& shifts, int) {
         return check_rsrs_twisted(MonodromyRep(sp, shifts));
       }},
      {"rsrs-B",
       [](const SuperSpace& sp, const std::vector<Rational>& shifts, int) {
         return check_rsrs_reflection(MonodromyRep(sp, shifts));
       }},
      {"S-eq-cB",
       [](const SuperSpace& sp, const std::vector<Rational>& shifts, int) {
         return check_twisted_vs_reflection(MonodromyRep(sp, shifts));
       }},
  };
  return reg;
}

std::string suite_names() {
  std::string out;
  for (const auto& s : registry()) {
    if (!out.empty()) out += ", ";
    out += s.name;
  }
  return out;
}

const SuiteEntry* find_suite(const std::string& name) {
  for (const auto& s : registry())
    if (s.name == name) return &s;
  return nullptr;
}

std::string spec_tag(const SuperSpace& sp) {
  return "M" + std::to_string(sp.bosonic_dim()) + "N" + std::to_string(sp.fermionic_dim()) +
         (sp.theta0() > 0 ? "tp1" : "tm1");
}

std::string spec_display(const SuperSpace& sp) {
  return "(" + std::to_string(sp.bosonic_dim()) + "," + std::to_string(sp.fermionic_dim()) + "," +
         (sp.theta0() > 0 ? "+1" : "-1") + ")";
}

std::string join_rats(const std::vector<Rational>& xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ", ";
    out += rat_str(x);
  }
  return out;
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += " ";
    out += std::to_string(x);
  }
  return out;
}

struct Cell {
  SuperSpace space;
  std::vector<Rational> shifts;
  const SuiteEntry* suite;
  int nmax;
};

struct Outcome {
  std::optional<CheckReport> report;
  std::string error;
  double seconds = 0;

  bool ok() const { return error.empty() && report && report->all_pass(); }
};

Outcome run_cell(const Cell& cell) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    out.report = cell.suite->run(cell.space, cell.shifts, cell.nmax);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

nlohmann::ordered_json cell_json(const Cell& cell, const Outcome& out) {
  if (out.report) return report_to_json(*out.report);
  nlohmann::ordered_json j;
  j["suite"] = cell.suite->name;
  j["spec"] = {{"M", cell.space.bosonic_dim()},
               {"N", cell.space.fermionic_dim()},
               {"theta0", cell.space.theta0()}};
  j["error"] = out.error;
  return j;
}

struct VerifyOptions {
  std::vector<int> bosonic;
  std::vector<int> fermionic;
  std::vector<int> theta0;
  std::vector<std::string> suites;
  int sites = 1;
  bool sites_given = false;
  std::vector<std::string> inhomogeneities;
  int nmax = 6;
  std::string kappa_override;
  unsigned jobs = 1;
  std::string format = "text";
  std::string out_dir;
};

int run_verify(const VerifyOptions& opt) {
  if (opt.bosonic.size() != opt.fermionic.size() || opt.bosonic.size() != opt.theta0.size()) {
    std::cerr << "error: --M, --N and --theta0 must be given the same number of times\n";
    return 2;
  }

  std::vector<const SuiteEntry*> suites;
  for (const auto& name : opt.suites) {
    if (name == "all") {
      suites.clear();
      for (const auto& s : registry()) suites.push_back(&s);
      break;
    }
    const SuiteEntry* s = find_suite(name);
    if (!s) {
      std::cerr << "error: unknown suite '" << name << "' (known: " << suite_names() << ")\n";
      return 2;
    }
    suites.push_back(s);
  }

  std::vector<Cell> cells;
  try {
    int sites = opt.sites;
    std::vector<Rational> shifts;
    for (const auto& text : opt.inhomogeneities) shifts.push_back(rat_parse(text));
    if (!shifts.empty()) {
      if (opt.sites_given && sites != static_cast<int>(shifts.size()))
        throw std::invalid_argument("--sites disagrees with the number of --inhomogeneities");
      sites = static_cast<int>(shifts.size());
    }

    for (std::size_t k = 0; k < opt.bosonic.size(); ++k) {
      SuperSpace sp(opt.bosonic[k], opt.fermionic[k], opt.theta0[k]);
      if (!opt.kappa_override.empty()) sp.override_kappa(rat_parse(opt.kappa_override));
      const std::vector<Rational> cell_shifts =
          shifts.empty() ? default_inhomogeneities(sp, sites) : shifts;
      for (const SuiteEntry* s : suites) cells.push_back({sp, cell_shifts, s, opt.nmax});
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::vector<Outcome> outcomes(cells.size());
  const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, cells.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) outcomes[i] = run_cell(cells[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) outcomes[i] = run_cell(cells[i]);
      });
    for (auto& th : pool) th.join();
  }

  if (!opt.out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(opt.out_dir, ec);
    if (ec) {
      std::cerr << "error: cannot create " << opt.out_dir << ": " << ec.message() << "\n";
      return 1;
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto path = std::filesystem::path(opt.out_dir) /
                        (spec_tag(cells[i].space) + "_" + cells[i].suite->name + ".json");
      std::ofstream f(path, std::ios::binary);
      f << cell_json(cells[i], outcomes[i]).dump(2) << "\n";
      if (!f) {
        std::cerr << "error: cannot write " << path.string() << "\n";
        return 1;
      }
    }
  }

  bool all_ok = true;
  for (const auto& out : outcomes) all_ok = all_ok && out.ok();

  if (opt.format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < cells.size(); ++i) arr.push_back(cell_json(cells[i], outcomes[i]));
    std::cout << arr.dump(2) << "\n";
    return all_ok ? 0 : 1;
  }

  std::ostringstream table;
  table << std::left << std::setw(12) << "spec" << std::setw(12) << "suite" << std::setw(8)
        << "status" << std::setw(10) << "checks" << "time\n";
  int failed_cells = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& cell = cells[i];
    const Outcome& out = outcomes[i];
    std::string status = "pass";
    std::string checks = "-";
    if (!out.error.empty()) {
      status = "error";
    } else {
      int passed = 0;
      for (const auto& r : out.report->results) passed += r.pass ? 1 : 0;
      checks = std::to_string(passed) + "/" + std::to_string(out.report->results.size());
      if (passed != static_cast<int>(out.report->results.size())) status = "FAIL";
    }
    if (!out.ok()) ++failed_cells;
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(2) << out.seconds << "s";
    table << std::left << std::setw(12) << spec_display(cell.space) << std::setw(12)
          << cell.suite->name << std::setw(8) << status << std::setw(10) << checks << secs.str()
          << "\n";
    if (!out.error.empty()) table << "    ! error: " << out.error << "\n";
    if (out.report)
      for (const auto& r : out.report->results)
        if (!r.pass) {
          table << "    ! " << r.identity;
          if (r.witness)
            table << "  point=(" << join_rats(r.witness->point) << ")  entry=["
                  << join_ints(r.witness->entry.row) << " | " << join_ints(r.witness->entry.col)
                  << "]  value=" << rat_str(r.witness->value);
          table << "\n";
        }
  }
  table << cells.size() << " cell" << (cells.size() == 1 ? "" : "s") << ", " << failed_cells
        << " failed\n";
  std::cout << table.str();
  return all_ok ? 0 : 1;
}

struct ExportOptions {
  int bosonic = 0;
  int fermionic = 0;
  int theta0 = 1;
  std::string object;
  std::string u;
  int sites = 1;
  bool sites_given = false;
  std::vector<std::string> inhomogeneities;
  std::string kappa_override;
  std::string out_path = "-";
};

int run_export(const ExportOptions& opt) {
  const bool needs_u = opt.object != "P" && opt.object != "K";
  const bool needs_rep = opt.object == "T" || opt.object == "S" || opt.object == "B";
  if (needs_u && opt.u.empty()) {
    std::cerr << "error: --u is required for object " << opt.object << "\n";
    return 2;
  }

  std::optional<GradedMatrix> m;
  try {
    SuperSpace sp(opt.bosonic, opt.fermionic, opt.theta0);
    if (!opt.kappa_override.empty()) sp.override_kappa(rat_parse(opt.kappa_override));
    const Rational u = needs_u ? rat_parse(opt.u) : Rational(0);

    if (needs_rep) {
      int sites = opt.sites;
      std::vector<Rational> shifts;
      for (const auto& text : opt.inhomogeneities) shifts.push_back(rat_parse(text));
      if (!shifts.empty()) {
        if (opt.sites_given && sites != static_cast<int>(shifts.size()))
          throw std::invalid_argument("--sites disagrees with the number of --inhomogeneities");
      } else {
        shifts = default_inhomogeneities(sp, sites);
      }
      const MonodromyRep rep(sp, shifts);
      if (opt.object == "T") m = monodromy(rep, u);
      else if (opt.object == "S") m = twisted_current(rep, u);
      else m = reflection_current(rep, u);
    } else if (opt.object == "P") {
      m = permutation_op(sp);
    } else if (opt.object == "K") {
      m = k_op(sp);
    } else {
      m = r_matrix(sp, u);
    }
  } catch (const PoleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = matrix_json_text(*m);
  if (opt.out_path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(opt.out_path, std::ios::binary);
  f << text;
  if (!f) {
    std::cerr << "error: cannot write " << opt.out_path << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for rational graded R-matrices and their monodromies"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand("verify", "run identity suites over one or more specs");
  verify->add_option("--M", vopt.bosonic, "first block dimension (repeatable)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--N", vopt.fermionic, "second block dimension, even (repeatable)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--theta0", vopt.theta0, "grading sign, +1 or -1 (repeatable, use --theta0=-1)")
      ->required();
  verify
      ->add_option("--suites", vopt.suites,
                   "comma separated suite names, or 'all' (" + suite_names() + ")")
      ->required()
      ->delimiter(',');
  auto* sites_opt =
      verify->add_option("--sites", vopt.sites, "number of evaluation sites")->check(CLI::PositiveNumber);
  verify->add_option("--inhomogeneities", vopt.inhomogeneities,
                     "comma separated site shifts, e.g. --inhomogeneities=0,1/3,-2/5")
      ->delimiter(',');
  verify->add_option("--nmax", vopt.nmax, "mode cutoff for the modes suite")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--kappa-override", vopt.kappa_override,
                     "replace the crossing shift (negative control; use --kappa-override=3/2)");
  verify->add_option("--jobs", vopt.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--format", vopt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", vopt.out_dir, "directory for one JSON report per spec and suite");

  ExportOptions eopt;
  CLI::App* exp = app.add_subcommand("export", "print one operator as sparse JSON");
  exp->add_option("--M", eopt.bosonic, "first block dimension")
      ->required()
      ->check(CLI::NonNegativeNumber);
  exp->add_option("--N", eopt.fermionic, "second block dimension, even")
      ->required()
      ->check(CLI::NonNegativeNumber);
  exp->add_option("--theta0", eopt.theta0, "grading sign, +1 or -1")->required();
  exp->add_option("--object", eopt.object, "P, K, R, T, S or B")
      ->required()
      ->check(CLI::IsMember({"P", "K", "R", "T", "S", "B"}));
  exp->add_option("--u", eopt.u, "spectral parameter, e.g. --u=5/3 (required for R, T, S, B)");
  auto* esites_opt =
      exp->add_option("--sites", eopt.sites, "number of evaluation sites")->check(CLI::PositiveNumber);
  exp->add_option("--inhomogeneities", eopt.inhomogeneities,
                  "comma separated site shifts, e.g. --inhomogeneities=0,1/3")
      ->delimiter(',');
  exp->add_option("--kappa-override", eopt.kappa_override, "replace the crossing shift");
  exp->add_option("--out", eopt.out_path, "output file, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  vopt.sites_given = sites_opt->count() > 0;
  eopt.sites_given = esites_opt->count() > 0;
  if (verify->parsed()) return run_verify(vopt);
  return run_export(eopt);
}
