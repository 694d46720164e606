#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "yangian/graded_matrix.hpp"
#include "yangian/report.hpp"

namespace yangian {

// Sparse matrix as JSON: 1-based digit tuples per factor, row-major order,
// values as exact rational strings.
inline nlohmann::ordered_json matrix_to_json(const GradedMatrix& m) {
  nlohmann::ordered_json j;
  j["spec"] = {{"M", m.space().bosonic_dim()},
               {"N", m.space().fermionic_dim()},
               {"theta0", m.space().theta0()}};
  j["factors"] = m.factors();
  auto entries = nlohmann::ordered_json::array();
  for (std::int64_t r = 0; r < m.dim(); ++r)
    for (const auto& [c, v] : m.row(r)) {
      auto row = nlohmann::ordered_json::array();
      for (int digit : m.unflatten(r)) row.push_back(digit);
      auto col = nlohmann::ordered_json::array();
      for (int digit : m.unflatten(c)) col.push_back(digit);
      entries.push_back(nlohmann::ordered_json::array({row, col, rat_str(v)}));
    }
  j["entries"] = std::move(entries);
  return j;
}

inline std::string matrix_json_text(const GradedMatrix& m) {
  return matrix_to_json(m).dump(2) + "\n";
}

inline GradedMatrix matrix_from_json(const nlohmann::json& j) {
  const auto& spec = j.at("spec");
  SuperSpace sp(spec.at("M").get<long>(), spec.at("N").get<long>(),
                spec.at("theta0").get<int>());
  GradedMatrix out(sp, j.at("factors").get<int>());
  for (const auto& entry : j.at("entries")) {
    if (entry.size() != 3) throw std::invalid_argument("matrix entry needs [row, col, value]");
    std::vector<int> row, col;
    for (const auto& d : entry.at(0)) row.push_back(d.get<int>());
    for (const auto& d : entry.at(1)) col.push_back(d.get<int>());
    out.add_entry(out.flatten(row), out.flatten(col), rat_parse(entry.at(2).get<std::string>()));
  }
  return out;
}

}  // namespace yangian
