#pragma once

#include <functional>
#include <string>
#include <vector>

#include "yangian/modes.hpp"
#include "yangian/monodromy.hpp"

namespace yangian {

// tau[T(u)] = T^t(-u - kappa), the supertranspose on the auxiliary factor.
inline GradedMatrix tau_monodromy(const MonodromyRep& rep, const Rational& u) {
  return super_transpose(monodromy(rep, Rational(-u - rep.space.kappa())), 1);
}

// Twisted current S(u) = tau[T(u)] T(u).
inline GradedMatrix twisted_current(const MonodromyRep& rep, const Rational& u) {
  return tau_monodromy(rep, u) * monodromy(rep, u);
}

// Reflection current B(u) = T(-u)^{-1} T(u).
inline GradedMatrix reflection_current(const MonodromyRep& rep, const Rational& u) {
  return invert(monodromy(rep, Rational(-u))) * monodromy(rep, u);
}

namespace detail {

// Pole forms of the twisted current in the variable with coefficient
// (cu, cv): T(x) contributes x - a_j and x - a_j + kappa, tau[T(x)]
// contributes x + a_j and x + a_j + kappa.
inline void add_twisted_poles(std::vector<LinearForm>* poles, const MonodromyRep& rep, int cu,
                              int cv) {
  const Rational kap = rep.space.kappa();
  for (const Rational& a : rep.inhomogeneities) {
    add_pole(*poles, LinearForm(cu, cv, Rational(-a)));
    add_pole(*poles, LinearForm(cu, cv, Rational(-a + kap)));
    add_pole(*poles, LinearForm(cu, cv, a));
    add_pole(*poles, LinearForm(cu, cv, Rational(a + kap)));
  }
}

// Pole forms of the reflection current: those of T(x) plus the entry and
// determinant lines of T(-x)^{-1}.
inline void add_reflection_poles(std::vector<LinearForm>* poles, const MonodromyRep& rep, int cu,
                                 int cv) {
  const Rational kap = rep.space.kappa();
  for (const Rational& a : rep.inhomogeneities) {
    add_pole(*poles, LinearForm(cu, cv, Rational(-a)));
    add_pole(*poles, LinearForm(cu, cv, Rational(-a + kap)));
    add_pole(*poles, LinearForm(cu, cv, a));
    add_pole(*poles, LinearForm(cu, cv, Rational(a - kap)));
    add_pole(*poles, LinearForm(cu, cv, Rational(a + kap)));
    add_pole(*poles, LinearForm(cu, cv, Rational(a + 1)));
    add_pole(*poles, LinearForm(cu, cv, Rational(a - 1)));
  }
}

inline CheckReport reflection_suite(const char* suite, const char* symbol,
                                    const MonodromyRep& rep,
                                    const std::function<GradedMatrix(const Rational&)>& current,
                                    int degree,
                                    const std::function<void(std::vector<LinearForm>*, int, int)>&
                                        current_poles) {
  const SuperSpace& sp = rep.space;
  const int L = rep.sites();
  const Rational kap = sp.kappa();
  std::vector<LinearForm> poles;
  add_pole(poles, LinearForm(1, -1, rat(0)));
  add_pole(poles, LinearForm(1, 1, rat(0)));
  add_pole(poles, LinearForm(1, -1, kap));
  add_pole(poles, LinearForm(1, 1, kap));
  current_poles(&poles, 1, 0);
  current_poles(&poles, 0, 1);
  MemoizedFamily x1([&](const Rational& u) { return embed(current(u), aux_slots(1, L), L + 2); });
  MemoizedFamily x2([&](const Rational& v) { return embed(current(v), aux_slots(2, L), L + 2); });
  MemoizedFamily r12(
      [&](const Rational& x) { return embed(r_matrix(sp, x), {1, 2}, L + 2); });
  const std::string s = symbol;
  Identity rsrs{
      "R12(u-v) " + s + "1(u) R12(u+v) " + s + "2(v) = " + s + "2(v) R12(u+v) " + s +
          "1(u) R12(u-v)",
      [&](const std::vector<Rational>& pt) {
        return r12(Rational(pt[0] - pt[1])) *
               (x1(pt[0]) * (r12(Rational(pt[0] + pt[1])) * x2(pt[1])));
      },
      [&](const std::vector<Rational>& pt) {
        return x2(pt[1]) *
               (r12(Rational(pt[0] + pt[1])) * (x1(pt[0]) * r12(Rational(pt[0] - pt[1]))));
      }};
  return run_suite(suite, sp, 2, degree, poles, {rsrs});
}

}  // namespace detail

// Reflection-type exchange relation for the twisted current.
inline CheckReport check_rsrs_twisted(const MonodromyRep& rep) {
  return detail::reflection_suite(
      "rsrs-S", "S", rep, [&](const Rational& u) { return twisted_current(rep, u); },
      4 * rep.sites() + 4,
      [&](std::vector<LinearForm>* poles, int cu, int cv) {
        detail::add_twisted_poles(poles, rep, cu, cv);
      });
}

// Reflection-type exchange relation for the reflection current.
inline CheckReport check_rsrs_reflection(const MonodromyRep& rep) {
  return detail::reflection_suite(
      "rsrs-B", "B", rep, [&](const Rational& u) { return reflection_current(rep, u); },
      7 * rep.sites() + 4,
      [&](std::vector<LinearForm>* poles, int cu, int cv) {
        detail::add_reflection_poles(poles, rep, cu, cv);
      });
}

// On evaluation representations the two currents agree up to the central
// scalar: S(u) = c(-u) B(u).
inline CheckReport check_twisted_vs_reflection(const MonodromyRep& rep) {
  const SuperSpace& sp = rep.space;
  std::vector<LinearForm> poles;
  detail::add_twisted_poles(&poles, rep, 1, 0);
  detail::add_reflection_poles(&poles, rep, 1, 0);
  Identity same{"S(u) = c(-u) B(u)",
                [&](const std::vector<Rational>& pt) { return twisted_current(rep, pt[0]); },
                [&](const std::vector<Rational>& pt) {
                  return central_value(rep, Rational(-pt[0])) * reflection_current(rep, pt[0]);
                }};
  return run_suite("S-eq-cB", sp, 1, 9 * rep.sites(), poles, {same});
}

}  // namespace yangian
