#pragma once

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "yangian/monodromy.hpp"

namespace yangian {

inline Rational rat_pow(const Rational& base, int exp) {
  if (exp < 0) throw std::invalid_argument("rat_pow needs exp >= 0");
  Rational out = rat(1);
  for (int i = 0; i < exp; ++i) out = Rational(out * base);
  return out;
}

// Coefficients of the expansion T(u) = sum_{n>=0} T_(n) u^{-n}.
// Site j contributes the identity at order 0 and
// a_j^{n-1} P_{0j} - (a_j - kappa)^{n-1} K_{0j} at order n >= 1; the full
// series is the convolution of the per-site series in monodromy order.
class ModeSeries {
 public:
  ModeSeries(const MonodromyRep& rep, int n_max)
      : space_(rep.space), zero_(rep.space, 1 + rep.sites()) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    const SuperSpace& sp = rep.space;
    const int L = rep.sites();
    const Rational kap = sp.kappa();
    const GradedMatrix p = permutation_op(sp);
    const GradedMatrix k = k_op(sp);
    auto site_series = [&](int j) {
      const Rational a = rep.inhomogeneities[static_cast<std::size_t>(j - 1)];
      const GradedMatrix ep = embed(p, {1, 1 + j}, 1 + L);
      const GradedMatrix ek = embed(k, {1, 1 + j}, 1 + L);
      std::vector<GradedMatrix> s;
      s.push_back(GradedMatrix::identity(sp, 1 + L));
      for (int n = 1; n <= n_max; ++n)
        s.push_back(rat_pow(a, n - 1) * ep - rat_pow(Rational(a - kap), n - 1) * ek);
      return s;
    };
    table_ = site_series(L);
    for (int j = L - 1; j >= 1; --j) {
      const std::vector<GradedMatrix> right = site_series(j);
      std::vector<GradedMatrix> next;
      for (int n = 0; n <= n_max; ++n) {
        GradedMatrix acc = table_[0] * right[static_cast<std::size_t>(n)];
        for (int m = 1; m <= n; ++m)
          acc += table_[static_cast<std::size_t>(m)] * right[static_cast<std::size_t>(n - m)];
        next.push_back(std::move(acc));
      }
      table_ = std::move(next);
    }
  }

  // T_(n); zero for n < 0 by convention.
  const GradedMatrix& mode(int n) const {
    if (n < 0) return zero_;
    if (n >= static_cast<int>(table_.size()))
      throw std::out_of_range("mode order exceeds the computed range");
    return table_[static_cast<std::size_t>(n)];
  }

  int n_max() const { return static_cast<int>(table_.size()) - 1; }
  const SuperSpace& space() const { return space_; }

 private:
  SuperSpace space_;
  GradedMatrix zero_;
  std::vector<GradedMatrix> table_;
};

namespace detail {

// Assembles the d^2 x d^2 table of per-quadruple cells into one matrix on
// 2 + wfactors tensor factors, so a whole family of entrywise identities can
// be compared (and witnessed) in one shot. Cell (i,j,k,l) lands at block
// rows (i,k), cols (j,l).
inline GradedMatrix stack_quadruples(
    const SuperSpace& sp, int wfactors,
    const std::function<GradedMatrix(int, int, int, int)>& cell) {
  const int d = sp.dim();
  GradedMatrix out(sp, 2 + wfactors);
  std::int64_t wdim = 1;
  for (int f = 0; f < wfactors; ++f) wdim *= d;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l) {
          const GradedMatrix c = cell(i, j, k, l);
          const std::int64_t base_r = (static_cast<std::int64_t>(i - 1) * d + (k - 1)) * wdim;
          const std::int64_t base_c = (static_cast<std::int64_t>(j - 1) * d + (l - 1)) * wdim;
          for (std::int64_t r = 0; r < c.dim(); ++r)
            for (const auto& [cc, v] : c.row(r)) out.add_entry(base_r + r, base_c + cc, v);
        }
  return out;
}

}  // namespace detail

// Mode-level exchange relations: for every index quadruple and every
// r, s in {-2, ..., r_max}, the graded commutators of the generator modes
// satisfy the quadratic relation with kappa corrections. n_max controls how
// far the series is expanded; the relation needs modes up to r_max + 2.
inline CheckReport check_modes(const MonodromyRep& rep, int n_max, int r_max) {
  const SuperSpace& sp = rep.space;
  const int L = rep.sites();
  const int d = sp.dim();
  const Rational kap = sp.kappa();
  if (r_max < -2) throw std::invalid_argument("r_max must be >= -2");
  if (r_max + 2 > n_max) throw std::invalid_argument("need n_max >= r_max + 2");

  auto series = std::make_shared<ModeSeries>(rep, n_max);
  // gb[n][(a-1)*d + b-1] = T^{ab}_{(n)}; index 0 holds the zero matrix so
  // negative orders resolve without branching at use sites.
  auto gb = std::make_shared<std::vector<std::vector<GradedMatrix>>>();
  {
    std::vector<GradedMatrix> zeros;
    for (int a = 1; a <= d; ++a)
      for (int b = 1; b <= d; ++b) zeros.emplace_back(sp, L);
    gb->push_back(std::move(zeros));
    for (int n = 0; n <= n_max; ++n) {
      std::vector<GradedMatrix> row;
      for (int a = 1; a <= d; ++a)
        for (int b = 1; b <= d; ++b) row.push_back(generator_block(series->mode(n), a, b));
      gb->push_back(std::move(row));
    }
  }
  auto tmode = [gb, d](int n, int a, int b) -> const GradedMatrix& {
    const int slot = n < 0 ? 0 : n + 1;
    return (*gb)[static_cast<std::size_t>(slot)][static_cast<std::size_t>((a - 1) * d + (b - 1))];
  };

  std::vector<Identity> ids;
  ids.push_back(Identity{
      "T_(0) = I",
      [series](const std::vector<Rational>&) { return series->mode(0); },
      [series, &sp, L](const std::vector<Rational>&) {
        return GradedMatrix::identity(sp, 1 + L);
      }});
  ids.push_back(Identity{
      "T_(n) = 0 for n < 0",
      [series](const std::vector<Rational>&) {
        return series->mode(-1) + series->mode(-2);
      },
      [series, &sp, L](const std::vector<Rational>&) { return GradedMatrix(sp, 1 + L); }});

  for (int r = -2; r <= r_max; ++r) {
    for (int s = -2; s <= r_max; ++s) {
      auto lhs_cell = [&sp, tmode, r, s](int i, int j, int k, int l) {
        const int pT = (sp.parity(i) ^ sp.parity(j)) & (sp.parity(k) ^ sp.parity(l)) & 1;
        auto sbracket = [&](int ru, int su) {
          GradedMatrix out = tmode(ru, i, j) * tmode(su, k, l);
          GradedMatrix sw = tmode(su, k, l) * tmode(ru, i, j);
          if (pT) out += sw; else out -= sw;
          return out;
        };
        GradedMatrix out = sbracket(r + 2, s);
        out += sbracket(r, s + 2);
        return out;
      };
      auto rhs_cell = [&sp, tmode, kap, r, s](int i, int j, int k, int l) {
        const int pi = sp.parity(i), pj = sp.parity(j), pk = sp.parity(k), pl = sp.parity(l);
        const int pT = (pi ^ pj) & (pk ^ pl) & 1;
        auto sbracket = [&](int ru, int su) {
          GradedMatrix out = tmode(ru, i, j) * tmode(su, k, l);
          GradedMatrix sw = tmode(su, k, l) * tmode(ru, i, j);
          if (pT) out += sw; else out -= sw;
          return out;
        };
        GradedMatrix out = rat(2) * sbracket(r + 1, s + 1);
        out -= kap * sbracket(r + 1, s);
        out += kap * sbracket(r, s + 1);
        {
          const int bit = (pk & pi) ^ (pk & pj) ^ (pi & pj);
          GradedMatrix term = tmode(s, k, j) * tmode(r + 1, i, l);
          term -= tmode(r + 1, k, j) * tmode(s, i, l);
          term -= tmode(s + 1, k, j) * tmode(r, i, l);
          term += tmode(r, k, j) * tmode(s + 1, i, l);
          term += kap * (tmode(s, k, j) * tmode(r, i, l));
          term -= kap * (tmode(r, k, j) * tmode(s, i, l));
          if (bit) out -= term; else out += term;
        }
        if (i == sp.conjugate(k)) {
          const int ibar = sp.conjugate(i);
          for (int p = 1; p <= sp.dim(); ++p) {
            const int pp = sp.parity(p);
            const int bit = pp ^ (pj & pi) ^ (pj & pp);
            int sign = sp.theta(ibar) * sp.theta(sp.conjugate(p));
            if (bit) sign = -sign;
            GradedMatrix term = tmode(r + 1, p, j) * tmode(s, sp.conjugate(p), l);
            term -= tmode(r, p, j) * tmode(s + 1, sp.conjugate(p), l);
            if (sign < 0) out -= term; else out += term;
          }
        }
        if (j == sp.conjugate(l)) {
          const int jbar = sp.conjugate(j);
          for (int p = 1; p <= sp.dim(); ++p) {
            const int pp = sp.parity(p);
            const int bit = (pk & pj) ^ (pi & pk) ^ (pi & pp);
            int sign = sp.theta(sp.conjugate(p)) * sp.theta(jbar);
            if (bit) sign = -sign;
            GradedMatrix term = tmode(s, k, sp.conjugate(p)) * tmode(r + 1, i, p);
            term -= tmode(s + 1, k, sp.conjugate(p)) * tmode(r, i, p);
            if (sign < 0) out += term; else out -= term;
          }
        }
        return out;
      };
      const std::string name = "modes r=" + std::to_string(r) + " s=" + std::to_string(s);
      ids.push_back(Identity{
          name,
          [&sp, L, lhs_cell](const std::vector<Rational>&) {
            return detail::stack_quadruples(sp, L, lhs_cell);
          },
          [&sp, L, rhs_cell](const std::vector<Rational>&) {
            return detail::stack_quadruples(sp, L, rhs_cell);
          }});
    }
  }

  CheckReport out = run_suite("modes", sp, 0, 0, {}, ids);

  // Tail check: with Q(u) = prod_j (u - a_j)(u - a_j + kappa), the matrix
  // G(u) = u^{n_max} Q(u) (T(u) - sum_{n<=n_max} T_(n) u^{-n}) is a
  // polynomial of degree <= 2L + n_max whose top n_max + 1 coefficients must
  // vanish, i.e. all divided differences of order >= 2L do.
  {
    CheckResult tail;
    tail.identity = "series tail: u^n_max Q(u) (T(u) - partial sum) has degree < 2L";
    tail.pass = true;
    const int pts_needed = 2 * L + n_max + 1;
    std::vector<Rational> xs;
    for (long c = 2; static_cast<int>(xs.size()) < pts_needed; ++c) {
      bool bad = false;
      for (const Rational& a : rep.inhomogeneities)
        if (rat(c) == a || rat(c) == Rational(a - kap)) bad = true;
      if (!bad) xs.push_back(rat(c));
    }
    std::vector<GradedMatrix> table;
    for (const Rational& x : xs) {
      Rational q = rat_pow(x, n_max);
      for (const Rational& a : rep.inhomogeneities)
        q = Rational(q * Rational(x - a) * Rational(x - a + kap));
      GradedMatrix g = monodromy(rep, x);
      for (int n = 0; n <= n_max; ++n)
        g -= rat_pow(Rational(1 / x), n) * series->mode(n);
      table.push_back(q * g);
    }
    for (int order = 1; order < pts_needed; ++order) {
      std::vector<GradedMatrix> next;
      for (std::size_t p = 0; p + 1 < table.size(); ++p) {
        GradedMatrix diff = table[p + 1] - table[p];
        next.push_back(Rational(1 / Rational(xs[p + static_cast<std::size_t>(order)] - xs[p])) *
                       diff);
      }
      table = std::move(next);
      if (order >= 2 * L && tail.pass) {
        for (const GradedMatrix& m : table) {
          std::int64_t r, c;
          Rational v;
          if (m.first_nonzero(&r, &c, &v)) {
            tail.pass = false;
            tail.witness = Witness{{rat(order)}, EntryRef{m.unflatten(r), m.unflatten(c)}, v};
            break;
          }
        }
      }
    }
    out.results.push_back(std::move(tail));
  }
  return out;
}

// Dense row-reduced span of rational vectors.
class RationalSpan {
 public:
  // Returns true if the vector enlarged the span.
  bool add(std::vector<Rational> v) {
    if (!reduce(&v)) return false;
    std::size_t piv = 0;
    while (v[piv] == 0) ++piv;
    const Rational inv = Rational(1 / v[piv]);
    for (auto& x : v) x = Rational(x * inv);
    for (std::size_t b = 0; b < basis_.size(); ++b)
      if (basis_[b][piv] != 0) {
        const Rational f = basis_[b][piv];
        for (std::size_t c = 0; c < v.size(); ++c) basis_[b][c] -= Rational(f * v[c]);
      }
    basis_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  bool contains(std::vector<Rational> v) const { return !reduce(&v); }
  std::size_t rank() const { return basis_.size(); }

 private:
  // Reduces v against the basis; returns true if a nonzero remainder is left.
  bool reduce(std::vector<Rational>* v) const {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const Rational f = (*v)[pivots_[b]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < v->size(); ++c) (*v)[c] -= Rational(f * basis_[b][c]);
    }
    for (const Rational& x : *v)
      if (x != 0) return true;
    return false;
  }

  std::vector<std::vector<Rational>> basis_;
  std::vector<std::size_t> pivots_;
};

namespace detail {

inline std::vector<Rational> dense_vector(const GradedMatrix& m) {
  std::vector<Rational> v(static_cast<std::size_t>(m.dim()) * static_cast<std::size_t>(m.dim()),
                          rat(0));
  for (std::int64_t r = 0; r < m.dim(); ++r)
    for (const auto& [c, val] : m.row(r))
      v[static_cast<std::size_t>(r) * static_cast<std::size_t>(m.dim()) +
        static_cast<std::size_t>(c)] = val;
  return v;
}

}  // namespace detail

// Structure of the order-1 modes: T^t_(1) + T_(1) vanishes, and the
// generator blocks of T_(1) span a graded Lie algebra closed under the
// graded bracket, of dimension M(M-1)/2 + N(N+1)/2 (even part) plus
// M N (odd part).
inline CheckReport check_order1(const MonodromyRep& rep) {
  const SuperSpace& sp = rep.space;
  const int L = rep.sites();
  const int d = sp.dim();
  auto series = std::make_shared<ModeSeries>(rep, 1);

  std::vector<Identity> ids;
  ids.push_back(Identity{
      "T^t_(1) + T_(1) = 0",
      [series](const std::vector<Rational>&) {
        return super_transpose(series->mode(1), 1) + series->mode(1);
      },
      [series, &sp, L](const std::vector<Rational>&) { return GradedMatrix(sp, 1 + L); }});
  CheckReport out = run_suite("order1", sp, 0, 0, {}, ids);

  std::vector<std::vector<GradedMatrix>> blocks;
  RationalSpan even_span, odd_span;
  for (int a = 1; a <= d; ++a) {
    blocks.emplace_back();
    for (int b = 1; b <= d; ++b) {
      GradedMatrix j = generator_block(series->mode(1), a, b);
      if ((sp.parity(a) ^ sp.parity(b)) & 1)
        odd_span.add(detail::dense_vector(j));
      else
        even_span.add(detail::dense_vector(j));
      blocks.back().push_back(std::move(j));
    }
  }

  {
    CheckResult closure;
    closure.identity = "order-1 blocks close under the graded bracket";
    closure.pass = true;
    for (int a = 1; a <= d && closure.pass; ++a)
      for (int b = 1; b <= d && closure.pass; ++b)
        for (int c = 1; c <= d && closure.pass; ++c)
          for (int e = 1; e <= d && closure.pass; ++e) {
            const int p1 = (sp.parity(a) ^ sp.parity(b)) & 1;
            const int p2 = (sp.parity(c) ^ sp.parity(e)) & 1;
            GradedMatrix br = blocks[a - 1][b - 1] * blocks[c - 1][e - 1];
            GradedMatrix sw = blocks[c - 1][e - 1] * blocks[a - 1][b - 1];
            if (p1 & p2) br += sw; else br -= sw;
            const RationalSpan& target = (p1 ^ p2) ? odd_span : even_span;
            if (!target.contains(detail::dense_vector(br))) {
              closure.pass = false;
              std::int64_t r, cc;
              Rational v;
              br.first_nonzero(&r, &cc, &v);
              closure.witness =
                  Witness{{rat(a), rat(b), rat(c), rat(e)}, EntryRef{br.unflatten(r), br.unflatten(cc)}, v};
            }
          }
    out.results.push_back(std::move(closure));
  }
  {
    const long m = sp.bosonic_dim(), n = sp.fermionic_dim();
    const std::size_t want_even = static_cast<std::size_t>(m * (m - 1) / 2 + n * (n + 1) / 2);
    const std::size_t want_odd = static_cast<std::size_t>(m * n);
    CheckResult dim;
    dim.identity = "order-1 span dimension is M(M-1)/2 + N(N+1)/2 + MN";
    dim.pass = even_span.rank() == want_even && odd_span.rank() == want_odd;
    if (!dim.pass)
      dim.witness = Witness{{rat(static_cast<long>(even_span.rank())),
                             rat(static_cast<long>(odd_span.rank()))},
                            EntryRef{{0}, {0}},
                            rat(static_cast<long>(even_span.rank() + odd_span.rank()))};
    out.results.push_back(std::move(dim));
  }
  return out;
}

}  // namespace yangian
