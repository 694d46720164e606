#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "yangian/graded_matrix.hpp"
#include "yangian/rational.hpp"
#include "yangian/report.hpp"
#include "yangian/super_space.hpp"

namespace yangian {

// Linear form cu*u + cv*v + c0 with cu, cv in {-1, 0, +1}. These name the
// denominators of a rational operator family: evaluation grids must avoid
// the zero set of every listed form. Normalized so the leading variable
// enters with coefficient +1, making equal forms compare equal.
struct LinearForm {
  int cu = 0;
  int cv = 0;
  Rational c0;

  LinearForm(int u_coeff, int v_coeff, Rational constant)
      : cu(u_coeff), cv(v_coeff), c0(std::move(constant)) {
    if (cu < -1 || cu > 1 || cv < -1 || cv > 1)
      throw std::invalid_argument("linear form coefficients must be -1, 0, or +1");
    if (cu < 0 || (cu == 0 && cv < 0)) {
      cu = -cu;
      cv = -cv;
      c0 = Rational(-c0);
    }
  }

  Rational eval(const std::vector<Rational>& point) const {
    Rational out = c0;
    if (cu != 0) out += Rational(cu * point.at(0));
    if (cv != 0) out += Rational(cv * point.at(1));
    return out;
  }

  std::string str() const {
    std::string s;
    if (cu == 1) s = "u";
    if (cv == 1) s += s.empty() ? "v" : " + v";
    if (cv == -1) s += s.empty() ? "-v" : " - v";
    if (c0 != 0 || s.empty()) {
      std::string cs = rat_str(c0);
      if (s.empty())
        s = cs;
      else if (cs[0] == '-')
        s += " - " + cs.substr(1);
      else
        s += " + " + cs;
    }
    return s;
  }

  bool operator==(const LinearForm& o) const {
    return cu == o.cu && cv == o.cv && c0 == o.c0;
  }
};

inline std::string point_str(const std::vector<Rational>& point) {
  std::string s = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) s += ", ";
    s += rat_str(point[i]);
  }
  return s + ")";
}

class PoleError : public std::runtime_error {
 public:
  PoleError(const LinearForm& form, const std::vector<Rational>& point)
      : std::runtime_error("evaluation point " + point_str(point) +
                           " lies on pole " + form.str()) {}
};

// Appends a form unless an equal one is already present.
inline void add_pole(std::vector<LinearForm>& poles, const LinearForm& form) {
  if (std::find(poles.begin(), poles.end(), form) == poles.end())
    poles.push_back(form);
}

namespace detail {

inline long next_prime(long n) {
  for (long c = n + 1;; ++c) {
    bool prime = c >= 2;
    for (long d = 2; d * d <= c; ++d)
      if (c % d == 0) {
        prime = false;
        break;
      }
    if (prime) return c;
  }
}

}  // namespace detail

// Deterministic evaluation axes: degree_bound + 1 values per variable, drawn
// from the primes 2, 3, 5, ... in order, skipping any candidate at which a
// pole form vanishes. Values for the second variable are additionally checked
// against every chosen first-variable value on the mixed forms, so the full
// Cartesian grid avoids every pole.
inline std::vector<std::vector<Rational>> build_axes(
    int variables, int degree_bound, const std::vector<LinearForm>& poles) {
  if (variables < 0 || variables > 2)
    throw std::invalid_argument("variables must be 0, 1, or 2");
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be >= 0");
  std::vector<std::vector<Rational>> axes;
  const int need = degree_bound + 1;
  if (variables >= 1) {
    std::vector<Rational> us;
    long cand = 1;
    while (static_cast<int>(us.size()) < need) {
      cand = detail::next_prime(cand);
      const Rational u = rat(cand);
      bool ok = true;
      for (const auto& f : poles) {
        if (f.cu != 0 && f.cv == 0 && f.eval({u}) == 0) {
          ok = false;
          break;
        }
      }
      if (ok) us.push_back(u);
    }
    axes.push_back(std::move(us));
  }
  if (variables >= 2) {
    std::vector<Rational> vs;
    long cand = 1;
    while (static_cast<int>(vs.size()) < need) {
      cand = detail::next_prime(cand);
      const Rational v = rat(cand);
      bool ok = true;
      for (const auto& f : poles) {
        if (f.cu == 0 && f.cv != 0 && f.eval({Rational(0), v}) == 0) {
          ok = false;
          break;
        }
        if (f.cu != 0 && f.cv != 0) {
          for (const auto& u : axes[0]) {
            if (f.eval({u, v}) == 0) {
              ok = false;
              break;
            }
          }
        }
        if (!ok) break;
      }
      if (ok) vs.push_back(v);
    }
    axes.push_back(std::move(vs));
  }
  return axes;
}

inline std::vector<std::vector<Rational>> cartesian_points(
    const std::vector<std::vector<Rational>>& axes) {
  std::vector<std::vector<Rational>> pts;
  if (axes.empty()) {
    pts.push_back({});
    return pts;
  }
  if (axes.size() == 1) {
    for (const auto& u : axes[0]) pts.push_back({u});
    return pts;
  }
  for (const auto& u : axes[0])
    for (const auto& v : axes[1]) pts.push_back({u, v});
  return pts;
}

// Caches a one-parameter matrix family by argument value. Grid axes repeat
// each value across many Cartesian points, so each member is built once.
class MemoizedFamily {
 public:
  explicit MemoizedFamily(std::function<GradedMatrix(const Rational&)> fn)
      : fn_(std::move(fn)) {}

  const GradedMatrix& operator()(const Rational& x) const {
    auto it = cache_.find(x);
    if (it == cache_.end()) it = cache_.emplace(x, fn_(x)).first;
    return it->second;
  }

 private:
  std::function<GradedMatrix(const Rational&)> fn_;
  mutable std::map<Rational, GradedMatrix> cache_;
};

using MatrixFn = std::function<GradedMatrix(const std::vector<Rational>&)>;

struct Identity {
  std::string name;
  MatrixFn lhs;
  MatrixFn rhs;
};

// Evaluates each identity at every grid point and compares both sides
// exactly. The grid has degree_bound + 1 values per variable; since both
// sides times the product of the pole forms are polynomials of per-variable
// degree at most degree_bound, agreement on the grid is agreement as
// rational functions. Stops an identity at its first failing point and
// records the witness.
inline CheckReport run_suite(std::string suite, const SuperSpace& space,
                             int variables, int degree_bound,
                             const std::vector<LinearForm>& poles,
                             const std::vector<Identity>& identities) {
  CheckReport rep{std::move(suite), space, degree_bound, {}, {}};
  rep.grid = cartesian_points(build_axes(variables, degree_bound, poles));
  for (const auto& ident : identities) {
    CheckResult res;
    res.identity = ident.name;
    res.pass = true;
    for (const auto& point : rep.grid) {
      GradedMatrix diff = ident.lhs(point) - ident.rhs(point);
      std::int64_t r = 0, c = 0;
      Rational v;
      if (diff.first_nonzero(&r, &c, &v)) {
        res.pass = false;
        res.witness = Witness{point, EntryRef{diff.unflatten(r), diff.unflatten(c)}, v};
        break;
      }
    }
    rep.results.push_back(std::move(res));
  }
  return rep;
}

}  // namespace yangian
