#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "yangian/rational.hpp"
#include "yangian/super_space.hpp"

namespace yangian {

// 1-based multi-index position of a matrix entry.
struct EntryRef {
  std::vector<int> row;
  std::vector<int> col;
};

// Evidence for a failed identity: the evaluation point, the first entry
// (lexicographic in the flat indices) where the two sides differ, and the
// value of the difference there.
struct Witness {
  std::vector<Rational> point;
  EntryRef entry;
  Rational value;
};

struct CheckResult {
  std::string identity;
  bool pass = false;
  std::optional<Witness> witness;
};

struct CheckReport {
  std::string suite;
  SuperSpace space;
  int degree_bound = 0;
  std::vector<std::vector<Rational>> grid;
  std::vector<CheckResult> results;

  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
};

inline nlohmann::ordered_json point_json(const std::vector<Rational>& point) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& x : point) arr.push_back(rat_str(x));
  return arr;
}

inline nlohmann::ordered_json report_to_json(const CheckReport& rep) {
  nlohmann::ordered_json j;
  j["suite"] = rep.suite;
  j["spec"] = {{"M", rep.space.bosonic_dim()},
               {"N", rep.space.fermionic_dim()},
               {"theta0", rep.space.theta0()}};
  j["kappa"] = rat_str(rep.space.kappa());
  j["kappa_overridden"] = rep.space.kappa_overridden();
  j["degenerate"] = rep.space.degenerate();
  j["degree_bound"] = rep.degree_bound;
  auto grid = nlohmann::ordered_json::array();
  for (const auto& point : rep.grid) grid.push_back(point_json(point));
  j["grid"] = grid;
  auto results = nlohmann::ordered_json::array();
  for (const auto& r : rep.results) {
    nlohmann::ordered_json jr;
    jr["identity"] = r.identity;
    jr["pass"] = r.pass;
    if (r.witness) {
      nlohmann::ordered_json w;
      w["point"] = point_json(r.witness->point);
      w["entry"] = {{"row", r.witness->entry.row}, {"col", r.witness->entry.col}};
      w["value"] = rat_str(r.witness->value);
      jr["witness"] = std::move(w);
    }
    results.push_back(std::move(jr));
  }
  j["results"] = std::move(results);
  return j;
}

inline std::string report_json_text(const CheckReport& rep) {
  return report_to_json(rep).dump(2) + "\n";
}

}  // namespace yangian
