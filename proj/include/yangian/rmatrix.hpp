#pragma once

#include <utility>
#include <vector>

#include "yangian/graded_matrix.hpp"
#include "yangian/operator_family.hpp"
#include "yangian/rational.hpp"
#include "yangian/report.hpp"
#include "yangian/super_space.hpp"

namespace yangian {

// Graded permutation on the two-fold tensor product:
// P = sum_{i,j} (-1)^[j] E_ij (x) E_ji.
inline GradedMatrix permutation_op(const SuperSpace& sp) {
  GradedMatrix out(sp, 2);
  const int d = sp.dim();
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      GradedMatrix term =
          graded_kron(GradedMatrix::elementary(sp, i, j), GradedMatrix::elementary(sp, j, i));
      if (sp.parity(j)) out -= term;
      else out += term;
    }
  }
  return out;
}

// Rank-one companion operator: the partial super-transpose of P in the
// first factor.
inline GradedMatrix k_op(const SuperSpace& sp) { return super_transpose(permutation_op(sp), 1); }

// Same operator written out entry by entry, with no shared code path through
// the kron or transpose routines. Entry at row (conj(j), j), column
// (conj(i), i) is (-1)^[j] theta_i theta_j.
inline GradedMatrix k_op_explicit(const SuperSpace& sp) {
  GradedMatrix out(sp, 2);
  const int d = sp.dim();
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      const std::int64_t r = out.flatten({sp.conjugate(j), j});
      const std::int64_t c = out.flatten({sp.conjugate(i), i});
      const int sign = (sp.parity(j) ? -1 : 1) * sp.theta(i) * sp.theta(j);
      out.add_entry(r, c, rat(sign));
    }
  }
  return out;
}

// Rational R-matrix R(u) = I + P/u - K/(u + kappa).
inline GradedMatrix r_matrix(const SuperSpace& sp, const Rational& u) {
  if (u == 0) throw PoleError(LinearForm(1, 0, rat(0)), {u});
  const Rational shifted(u + sp.kappa());
  if (shifted == 0) throw PoleError(LinearForm(1, 0, sp.kappa()), {u});
  GradedMatrix out = GradedMatrix::identity(sp, 2);
  out += permutation_op(sp) * Rational(1 / u);
  out -= k_op(sp) * Rational(1 / shifted);
  return out;
}

inline CheckReport check_pk_algebra(const SuperSpace& sp) {
  const GradedMatrix p = permutation_op(sp);
  const GradedMatrix k = k_op(sp);
  const GradedMatrix id = GradedMatrix::identity(sp, 2);
  const Rational t0 = rat(sp.theta0());
  const Rational kk(t0 * (sp.bosonic_dim() - sp.fermionic_dim()));
  auto constant = [](GradedMatrix m) {
    return [m = std::move(m)](const std::vector<Rational>&) { return m; };
  };
  std::vector<Identity> ids;
  ids.push_back({"P^2 = I", constant(p * p), constant(id)});
  ids.push_back({"P K = theta0 K", constant(p * k), constant(t0 * k)});
  ids.push_back({"K P = theta0 K", constant(k * p), constant(t0 * k)});
  ids.push_back({"K^2 = theta0 (M - N) K", constant(k * k), constant(kk * k)});
  ids.push_back({"K = P^t1 entrywise", constant(k), constant(k_op_explicit(sp))});
  return run_suite("pk", sp, 0, 0, {}, ids);
}

inline CheckReport check_pk_relations3(const SuperSpace& sp) {
  const GradedMatrix p = permutation_op(sp);
  const GradedMatrix k = k_op(sp);
  const GradedMatrix p12 = embed(p, {1, 2}, 3), p13 = embed(p, {1, 3}, 3),
                     p23 = embed(p, {2, 3}, 3);
  const GradedMatrix k12 = embed(k, {1, 2}, 3), k13 = embed(k, {1, 3}, 3),
                     k23 = embed(k, {2, 3}, 3);
  const Rational t0 = rat(sp.theta0());
  auto constant = [](GradedMatrix m) {
    return [m = std::move(m)](const std::vector<Rational>&) { return m; };
  };
  std::vector<Identity> ids;
  ids.push_back({"P13 K23 = K12 P13", constant(p13 * k23), constant(k12 * p13)});
  ids.push_back({"K13 K12 = P23 K12", constant(k13 * k12), constant(p23 * k12)});
  ids.push_back({"P12 P23 K12 = theta0 P13 K12", constant(p12 * (p23 * k12)),
                 constant(t0 * (p13 * k12))});
  ids.push_back({"P12 K23 K12 = theta0 K13 K12", constant(p12 * (k23 * k12)),
                 constant(t0 * (k13 * k12))});
  ids.push_back({"K12 K13 K23 = theta0 P13 K23", constant(k12 * (k13 * k23)),
                 constant(t0 * (p13 * k23))});
  ids.push_back({"K12 P23 K12 = K12", constant(k12 * (p23 * k12)), constant(k12)});
  return run_suite("pk3", sp, 0, 0, {}, ids);
}

inline CheckReport check_ybe(const SuperSpace& sp) {
  const Rational kap = sp.kappa();
  std::vector<LinearForm> poles;
  add_pole(poles, LinearForm(1, 0, rat(0)));
  add_pole(poles, LinearForm(0, 1, rat(0)));
  add_pole(poles, LinearForm(1, -1, rat(0)));
  add_pole(poles, LinearForm(1, 0, kap));
  add_pole(poles, LinearForm(0, 1, kap));
  add_pole(poles, LinearForm(1, -1, kap));
  MemoizedFamily r12([&sp](const Rational& x) { return embed(r_matrix(sp, x), {1, 2}, 3); });
  MemoizedFamily r13([&sp](const Rational& x) { return embed(r_matrix(sp, x), {1, 3}, 3); });
  MemoizedFamily r23([&sp](const Rational& x) { return embed(r_matrix(sp, x), {2, 3}, 3); });
  Identity ybe{"R12(u-v) R13(u) R23(v) = R23(v) R13(u) R12(u-v)",
               [&](const std::vector<Rational>& pt) {
                 const Rational uv(pt[0] - pt[1]);
                 return r12(uv) * (r13(pt[0]) * r23(pt[1]));
               },
               [&](const std::vector<Rational>& pt) {
                 const Rational uv(pt[0] - pt[1]);
                 return r23(pt[1]) * (r13(pt[0]) * r12(uv));
               }};
  return run_suite("ybe", sp, 2, 4, poles, {ybe});
}

inline CheckReport check_crossing(const SuperSpace& sp) {
  const Rational kap = sp.kappa();
  std::vector<LinearForm> poles;
  add_pole(poles, LinearForm(1, 0, rat(0)));
  add_pole(poles, LinearForm(1, 0, kap));
  std::vector<Identity> ids;
  ids.push_back({"R^t1(-u - kappa) = R(u)",
                 [&sp, kap](const std::vector<Rational>& pt) {
                   return super_transpose(r_matrix(sp, Rational(-pt[0] - kap)), 1);
                 },
                 [&sp](const std::vector<Rational>& pt) { return r_matrix(sp, pt[0]); }});
  ids.push_back({"R^t1t2 = R",
                 [&sp](const std::vector<Rational>& pt) {
                   return super_transpose(super_transpose(r_matrix(sp, pt[0]), 1), 2);
                 },
                 [&sp](const std::vector<Rational>& pt) { return r_matrix(sp, pt[0]); }});
  return run_suite("crossing", sp, 1, 2, poles, ids);
}

inline CheckReport check_unitarity(const SuperSpace& sp) {
  const Rational kap = sp.kappa();
  std::vector<LinearForm> poles;
  add_pole(poles, LinearForm(1, 0, rat(0)));
  add_pole(poles, LinearForm(1, 0, kap));
  add_pole(poles, LinearForm(1, 0, Rational(-kap)));
  Identity unit{"R(u) R(-u) = (1 - u^-2) I",
                [&sp](const std::vector<Rational>& pt) {
                  return r_matrix(sp, pt[0]) * r_matrix(sp, Rational(-pt[0]));
                },
                [&sp](const std::vector<Rational>& pt) {
                  const Rational scale(1 - 1 / (pt[0] * pt[0]));
                  return scale * GradedMatrix::identity(sp, 2);
                }};
  return run_suite("unitarity", sp, 1, 4, poles, {unit});
}

}  // namespace yangian
