#include <catch2/catch_amalgamated.hpp>

#include "yangian/boundary.hpp"

using namespace yangian;

namespace {

std::vector<SuperSpace> regression_family() {
  return {
      SuperSpace(3, 0, 1), SuperSpace(4, 0, 1), SuperSpace(5, 0, 1),
      SuperSpace(0, 2, -1), SuperSpace(0, 4, -1), SuperSpace(1, 2, 1),
      SuperSpace(2, 2, 1), SuperSpace(3, 2, 1),
  };
}

std::vector<SuperSpace> small_family() {
  return {SuperSpace(3, 0, 1), SuperSpace(0, 2, -1), SuperSpace(1, 2, 1)};
}

MonodromyRep rep_for(const SuperSpace& sp, int sites) {
  return MonodromyRep(sp, default_inhomogeneities(sp, sites));
}

}  // namespace

TEST_CASE("tau of a one-site monodromy is the shifted R matrix") {
  const SuperSpace sp(3, 0, 1);
  const MonodromyRep at_zero(sp, {rat(0)});
  CHECK(tau_monodromy(at_zero, rat(3)) == r_matrix(sp, rat(3)));
  const MonodromyRep shifted(sp, {rat(1, 3)});
  CHECK(tau_monodromy(shifted, rat(3)) == r_matrix(sp, rat(10, 3)));
}

TEST_CASE("one-site currents reduce to R matrix products") {
  const SuperSpace sp(3, 0, 1);
  const MonodromyRep rep(sp, {rat(0)});
  const GradedMatrix r3 = r_matrix(sp, rat(3));
  CHECK(twisted_current(rep, rat(3)) == r3 * r3);
  CHECK(reflection_current(rep, rat(3)) == rat(9, 8) * (r3 * r3));
  CHECK(twisted_current(rep, rat(3)) ==
        Rational(central_value(rep, rat(-3))) * reflection_current(rep, rat(3)));
}

TEST_CASE("tau acts entrywise with conjugated indices and parity signs") {
  // Frozen form: the (a,b) generator block of tau[T(u)] equals
  // (-1)^{[a]([b]+1)} theta_abar theta_bbar times the (bbar, abar) block of
  // T(-u - kappa). The unbarred theta reading fails on mixed-parity blocks.
  for (const auto& sp : regression_family()) {
    const int L = sp.dim() <= 4 ? 2 : 1;
    const MonodromyRep rep = rep_for(sp, L);
    const Rational u = rat(5, 2);
    const GradedMatrix tau = tau_monodromy(rep, u);
    const GradedMatrix tm = monodromy(rep, Rational(-u - sp.kappa()));
    INFO(sp.label());
    for (int a = 1; a <= sp.dim(); ++a) {
      for (int b = 1; b <= sp.dim(); ++b) {
        GradedMatrix rhs = generator_block(tm, sp.conjugate(b), sp.conjugate(a));
        const int expo = sp.parity(a) & (sp.parity(b) ^ 1);
        int sign = sp.theta(sp.conjugate(a)) * sp.theta(sp.conjugate(b));
        if (expo) sign = -sign;
        if (sign < 0) rhs = Rational(-1) * rhs;
        CHECK(generator_block(tau, a, b) == rhs);
      }
    }
  }
}

TEST_CASE("twisted current satisfies the reflection-type relation") {
  for (const auto& sp : small_family()) {
    const CheckReport rep = check_rsrs_twisted(rep_for(sp, 1));
    INFO(sp.label());
    CHECK(rep.degree_bound == 8);
    CHECK(rep.all_pass());
  }
  CHECK(check_rsrs_twisted(rep_for(SuperSpace(0, 2, -1), 2)).all_pass());
}

TEST_CASE("reflection current satisfies the reflection-type relation") {
  for (const auto& sp : small_family()) {
    const CheckReport rep = check_rsrs_reflection(rep_for(sp, 1));
    INFO(sp.label());
    CHECK(rep.degree_bound == 11);
    CHECK(rep.all_pass());
  }
  CHECK(check_rsrs_reflection(rep_for(SuperSpace(0, 2, -1), 2)).all_pass());
}

TEST_CASE("currents agree up to the central scalar") {
  for (const auto& sp : small_family()) {
    INFO(sp.label());
    CHECK(check_twisted_vs_reflection(rep_for(sp, 1)).all_pass());
  }
  CHECK(check_twisted_vs_reflection(rep_for(SuperSpace(0, 2, -1), 2)).all_pass());
}

TEST_CASE("reflection relation rejects a shifted kappa") {
  SuperSpace sp(3, 0, 1);
  sp.override_kappa(Rational(sp.natural_kappa() + 1));
  const CheckReport rep = check_rsrs_twisted(rep_for(sp, 1));
  REQUIRE_FALSE(rep.all_pass());
  REQUIRE(rep.results[0].witness.has_value());
  CHECK(rep.results[0].witness->value != 0);
}

TEST_CASE("degenerate kappa still satisfies the reflection relations") {
  const SuperSpace sp(2, 0, 1);
  REQUIRE(sp.degenerate());
  CHECK(check_rsrs_twisted(rep_for(sp, 1)).all_pass());
  CHECK(check_rsrs_reflection(rep_for(sp, 1)).all_pass());
  CHECK(check_twisted_vs_reflection(rep_for(sp, 1)).all_pass());
}
