#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "yangian/boundary.hpp"
#include "yangian/modes.hpp"
#include "yangian/monodromy.hpp"
#include "yangian/rmatrix.hpp"

using namespace yangian;

namespace {

bool has_pass(const CheckReport& rep, const std::string& id) {
  for (const auto& r : rep.results)
    if (r.identity == id && r.pass) return true;
  return false;
}

// A shifted crossing parameter must break the Yang-Baxter identity, and the
// failure must come with a concrete nonzero witness entry.
bool control_fails(const SuperSpace& base) {
  SuperSpace sp = base;
  sp.override_kappa(Rational(sp.natural_kappa() + 1));
  const CheckReport rep = check_ybe(sp);
  if (rep.all_pass()) return false;
  for (const auto& r : rep.results)
    if (!r.pass && r.witness && r.witness->value != 0) return true;
  return false;
}

MonodromyRep make_rep(const SuperSpace& sp, int sites) {
  return MonodromyRep(sp, default_inhomogeneities(sp, sites));
}

}  // namespace

int main() {
  const std::vector<SuperSpace> specs8 = {{3, 0, 1}, {4, 0, 1}, {5, 0, 1}, {0, 2, -1},
                                          {0, 4, -1}, {1, 2, 1}, {2, 2, 1}, {3, 2, 1}};
  const std::vector<SuperSpace> specs3 = {{3, 0, 1}, {0, 2, -1}, {1, 2, 1}};

  bool all = true;
  auto criterion = [&all](int n, double limit, const char* text, auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      note = std::string("  error: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0 && secs > limit) {
      ok = false;
      note += "  over the time limit";
    }
    all = all && ok;
    if (limit > 0)
      std::printf("[%2d] %s  %s (%.2fs, limit %.0fs)%s\n", n, ok ? "PASS" : "FAIL", text, secs,
                  limit, note.c_str());
    else
      std::printf("[%2d] %s  %s (%.2fs)%s\n", n, ok ? "PASS" : "FAIL", text, secs, note.c_str());
    std::fflush(stdout);
  };

  criterion(1, 5.0, "P/K projector algebra and all six triple-product relations on 8 specs",
            [&] {
              for (const auto& sp : specs8) {
                if (!check_pk_algebra(sp).all_pass()) return false;
                if (!check_pk_relations3(sp).all_pass()) return false;
              }
              return true;
            });

  criterion(2, 30.0,
            "Yang-Baxter identity on 8 specs; kappa+1 control fails with a nonzero witness",
            [&] {
              for (const auto& sp : specs8)
                if (!check_ybe(sp).all_pass()) return false;
              for (const auto& sp : specs8)
                if (!control_fails(sp)) return false;
              return true;
            });

  criterion(3, 10.0, "crossing, double-transpose invariance, and unitarity on 8 specs", [&] {
    for (const auto& sp : specs8) {
      const CheckReport cr = check_crossing(sp);
      if (!cr.all_pass()) return false;
      if (!has_pass(cr, "R^t1(-u - kappa) = R(u)")) return false;
      if (!has_pass(cr, "R^t1t2 = R")) return false;
      if (!check_unitarity(sp).all_pass()) return false;
    }
    return true;
  });

  criterion(4, 120.0, "monodromy exchange relation for 1..3 sites across so, sp and osp", [&] {
    for (const auto& sp : specs3)
      for (int sites = 1; sites <= 3; ++sites)
        if (!check_rtt(make_rep(sp, sites)).all_pass()) return false;
    return true;
  });

  criterion(5, 0, "entrywise exchange relations for every index quadruple, 1..2 sites", [&] {
    for (const auto& sp : specs3)
      for (int sites = 1; sites <= 2; ++sites) {
        const CheckReport rep = check_relcomm(make_rep(sp, sites));
        const std::size_t quadruples = static_cast<std::size_t>(sp.dim()) * sp.dim() *
                                       sp.dim() * sp.dim();
        if (rep.results.size() != quadruples) return false;
        if (!rep.all_pass()) return false;
      }
    return true;
  });

  criterion(6, 0,
            "mode relations for orders -2..2 at cutoff 6, with T_(n<0) = 0 and T_(0) = I",
            [&] {
              for (const auto& sp : specs3)
                for (int sites = 1; sites <= 2; ++sites) {
                  const CheckReport rep = check_modes(make_rep(sp, sites), 6, 2);
                  if (!rep.all_pass()) return false;
                  if (!has_pass(rep, "T_(0) = I")) return false;
                  if (!has_pass(rep, "T_(n) = 0 for n < 0")) return false;
                }
              return true;
            });

  criterion(7, 0,
            "central element: scalar on aux, exact site-factorized value, commutes with T",
            [&] {
              for (const auto& sp : specs3)
                for (int sites = 1; sites <= 2; ++sites) {
                  const MonodromyRep rep = make_rep(sp, sites);
                  const CheckReport center = check_center(rep);
                  if (!center.all_pass()) return false;
                  if (!has_pass(center, "C(u) is scalar on the auxiliary factor")) return false;
                  if (!has_pass(center, "c(u) = prod_j (1 - (u - a_j)^-2)")) return false;
                  const CheckReport central = check_centrality(rep);
                  if (!central.all_pass()) return false;
                  if (!has_pass(central, "C1(u) T2(v) = T2(v) C1(u)")) return false;
                }
              return true;
            });

  criterion(8, 0, "order-1 antisymmetry, graded bracket closure, span dimensions 3/3/5", [&] {
    const std::vector<int> expected = {3, 3, 5};
    for (std::size_t k = 0; k < specs3.size(); ++k) {
      const SuperSpace& sp = specs3[k];
      const int m = sp.bosonic_dim(), n = sp.fermionic_dim();
      if (m * (m - 1) / 2 + n * (n + 1) / 2 + m * n != expected[k]) return false;
      const CheckReport rep = check_order1(make_rep(sp, 1));
      if (!rep.all_pass()) return false;
      if (!has_pass(rep, "T^t_(1) + T_(1) = 0")) return false;
      if (!has_pass(rep, "order-1 blocks close under the graded bracket")) return false;
      if (!has_pass(rep, "order-1 span dimension is M(M-1)/2 + N(N+1)/2 + MN")) return false;
    }
    return true;
  });

  criterion(9, 0,
            "boundary exchange for the twisted and reflection currents; S(u) = c(-u) B(u)",
            [&] {
              for (const auto& sp : specs3)
                for (int sites = 1; sites <= 2; ++sites) {
                  const MonodromyRep rep = make_rep(sp, sites);
                  if (!check_rsrs_twisted(rep).all_pass()) return false;
                  if (!check_rsrs_reflection(rep).all_pass()) return false;
                  if (!check_twisted_vs_reflection(rep).all_pass()) return false;
                }
              return true;
            });

  criterion(10, 0, "two runs of the full suite produce byte-identical JSON reports", [&] {
    auto run_all = [&specs3]() {
      std::string bytes;
      for (const auto& sp : specs3) {
        bytes += report_json_text(check_pk_algebra(sp));
        bytes += report_json_text(check_pk_relations3(sp));
        bytes += report_json_text(check_ybe(sp));
        bytes += report_json_text(check_crossing(sp));
        bytes += report_json_text(check_unitarity(sp));
        const MonodromyRep rep = make_rep(sp, 1);
        bytes += report_json_text(check_rtt(rep));
        bytes += report_json_text(check_relcomm(rep));
        bytes += report_json_text(check_modes(rep, 6, 2));
        bytes += report_json_text(check_center(rep));
        bytes += report_json_text(check_centrality(rep));
        bytes += report_json_text(check_order1(rep));
        bytes += report_json_text(check_rsrs_twisted(rep));
        bytes += report_json_text(check_rsrs_reflection(rep));
        bytes += report_json_text(check_twisted_vs_reflection(rep));
      }
      return bytes;
    };
    const std::string first = run_all();
    const std::string second = run_all();
    return !first.empty() && first == second;
  });

  return all ? 0 : 1;
}
