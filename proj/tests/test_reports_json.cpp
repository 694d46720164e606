#include <catch2/catch_amalgamated.hpp>

#include "yangian/matrix_json.hpp"
#include "yangian/rmatrix.hpp"

using namespace yangian;

TEST_CASE("report JSON carries fields in schema order") {
  const SuperSpace sp(3, 0, 1);
  const CheckReport rep = check_pk_algebra(sp);
  const auto j = report_to_json(rep);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  REQUIRE(keys.size() == 8);
  CHECK(keys[0] == "suite");
  CHECK(keys[1] == "spec");
  CHECK(keys[2] == "kappa");
  CHECK(keys[3] == "kappa_overridden");
  CHECK(keys[4] == "degenerate");
  CHECK(keys[5] == "degree_bound");
  CHECK(keys[6] == "grid");
  CHECK(keys[7] == "results");
  CHECK(j["suite"] == "pk");
  CHECK(j["spec"]["M"] == 3);
  CHECK(j["kappa"] == "1/2");
  CHECK(j["kappa_overridden"] == false);
  CHECK(j["degenerate"] == false);
}

TEST_CASE("report JSON text is byte stable across runs") {
  const SuperSpace sp(0, 2, -1);
  const std::string a = report_json_text(check_ybe(sp));
  const std::string b = report_json_text(check_ybe(sp));
  CHECK(a == b);
  CHECK(a.back() == '\n');
}

TEST_CASE("failing reports embed a witness object") {
  SuperSpace sp(3, 0, 1);
  sp.override_kappa(Rational(sp.natural_kappa() + 1));
  const auto j = report_to_json(check_ybe(sp));
  CHECK(j["kappa_overridden"] == true);
  bool found = false;
  for (const auto& res : j["results"]) {
    if (res["pass"] == false) {
      REQUIRE(res.contains("witness"));
      CHECK(res["witness"].contains("point"));
      CHECK(res["witness"]["entry"].contains("row"));
      CHECK(res["witness"]["entry"].contains("col"));
      CHECK(res["witness"]["value"] != "0");
      found = true;
    } else {
      CHECK_FALSE(res.contains("witness"));
    }
  }
  CHECK(found);
}

TEST_CASE("matrix JSON golden form for the graded permutation") {
  const SuperSpace sp(0, 2, -1);
  // With theta0 = -1 both indices carry parity 0, so P is the plain
  // permutation P e_i (x) e_j = e_j (x) e_i.
  const auto expect = nlohmann::ordered_json::parse(R"({
    "spec": {"M": 0, "N": 2, "theta0": -1},
    "factors": 2,
    "entries": [
      [[1, 1], [1, 1], "1"],
      [[1, 2], [2, 1], "1"],
      [[2, 1], [1, 2], "1"],
      [[2, 2], [2, 2], "1"]
    ]
  })");
  CHECK(matrix_to_json(permutation_op(sp)) == expect);
}

TEST_CASE("matrix JSON golden form for the rank-one companion") {
  const SuperSpace sp(0, 2, -1);
  // K entry at ((conj j, j), (conj i, i)) is theta_i theta_j here, and
  // theta = (+1, -1), conj(i) = 3 - i.
  const auto expect = nlohmann::ordered_json::parse(R"({
    "spec": {"M": 0, "N": 2, "theta0": -1},
    "factors": 2,
    "entries": [
      [[1, 2], [1, 2], "1"],
      [[1, 2], [2, 1], "-1"],
      [[2, 1], [1, 2], "-1"],
      [[2, 1], [2, 1], "1"]
    ]
  })");
  CHECK(matrix_to_json(k_op(sp)) == expect);
}

TEST_CASE("matrix JSON exposes exact rational entries") {
  const SuperSpace sp(3, 0, 1);
  // At u = 2 the identity and P/u both hit ((1,1),(1,1)) and K does not,
  // so the entry is 1 + 1/2.
  const auto j = matrix_to_json(r_matrix(sp, rat(2)));
  const auto pos = nlohmann::json::array({1, 1});
  bool found = false;
  for (const auto& e : j["entries"])
    if (e[0] == pos && e[1] == pos) {
      CHECK(e[2] == "3/2");
      found = true;
    }
  CHECK(found);
}

TEST_CASE("matrix JSON round trips exactly") {
  const SuperSpace sp(1, 2, 1);
  const GradedMatrix r = r_matrix(sp, rat(5, 3));
  const GradedMatrix back = matrix_from_json(matrix_to_json(r));
  CHECK(back == r);
  CHECK(matrix_json_text(back) == matrix_json_text(r));
}

TEST_CASE("matrix JSON rejects malformed entries") {
  auto j = matrix_to_json(permutation_op(SuperSpace(2, 0, 1)));
  j["entries"][0] = nlohmann::json::array({nlohmann::json::array({1, 1})});
  CHECK_THROWS_AS(matrix_from_json(j), std::invalid_argument);
}
