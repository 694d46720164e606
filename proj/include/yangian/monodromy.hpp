#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "yangian/graded_matrix.hpp"
#include "yangian/operator_family.hpp"
#include "yangian/rational.hpp"
#include "yangian/report.hpp"
#include "yangian/rmatrix.hpp"
#include "yangian/super_space.hpp"

namespace yangian {

// Evaluation representation data: an ordered list of sites, each carrying an
// inhomogeneity shift. The representation space is the tensor product of one
// auxiliary factor (factor 1) and one factor per site (factors 2..L+1).
struct MonodromyRep {
  SuperSpace space;
  std::vector<Rational> inhomogeneities;

  MonodromyRep(const SuperSpace& sp, std::vector<Rational> shifts)
      : space(sp), inhomogeneities(std::move(shifts)) {
    if (inhomogeneities.empty())
      throw std::invalid_argument("a monodromy needs at least one site");
    for (std::size_t i = 0; i < inhomogeneities.size(); ++i)
      for (std::size_t j = i + 1; j < inhomogeneities.size(); ++j)
        if (inhomogeneities[i] == inhomogeneities[j])
          throw std::invalid_argument("inhomogeneities must be pairwise distinct");
  }

  int sites() const { return static_cast<int>(inhomogeneities.size()); }
};

// Default shifts a_k = (-1)^k (k-1) / p_k with p_k the k-th prime:
// 0, 1/3, -2/5, 3/7, -4/11, ... Validated to stay clear of the resonances
// that would degenerate a check: equal shifts, shifts differing by 1, and
// shifts differing by +-kappa.
inline std::vector<Rational> default_inhomogeneities(const SuperSpace& sp, int sites) {
  if (sites < 1) throw std::invalid_argument("sites must be >= 1");
  std::vector<Rational> out;
  long p = 1;
  for (int k = 1; k <= sites; ++k) {
    p = detail::next_prime(p);
    Rational a = rat(k - 1, p);
    if (k % 2 == 1) a = Rational(-a);
    out.push_back(a);
  }
  const Rational kap = sp.kappa();
  for (int i = 0; i < sites; ++i) {
    for (int j = 0; j < sites; ++j) {
      if (i == j) continue;
      const Rational diff(out[i] - out[j]);
      if (diff == 0 || diff == 1 || diff == -1 || diff == kap || diff == Rational(-kap))
        throw std::logic_error(
            "default inhomogeneities hit a resonance; pass explicit shifts");
    }
  }
  return out;
}

// T(u) = R_{0L}(u - a_L) ... R_{01}(u - a_1) on 1 + L factors, auxiliary
// factor first.
inline GradedMatrix monodromy(const MonodromyRep& rep, const Rational& u) {
  const SuperSpace& sp = rep.space;
  const int L = rep.sites();
  for (int j = 1; j <= L; ++j) {
    const Rational& a = rep.inhomogeneities[j - 1];
    if (u - a == 0) throw PoleError(LinearForm(1, 0, Rational(-a)), {u});
    if (u - a + sp.kappa() == 0)
      throw PoleError(LinearForm(1, 0, Rational(sp.kappa() - a)), {u});
  }
  GradedMatrix t = GradedMatrix::identity(sp, 1 + L);
  for (int j = L; j >= 1; --j) {
    const Rational arg(u - rep.inhomogeneities[j - 1]);
    t = t * embed(r_matrix(sp, arg), {1, j + 1}, 1 + L);
  }
  return t;
}

// Slots for the two algebra copies inside the (2 + L)-factor RTT space:
// copy 1 uses auxiliary factor 1, copy 2 uses auxiliary factor 2, and both
// share the site factors 3..L+2.
inline std::vector<int> aux_slots(int copy, int sites) {
  std::vector<int> slots{copy};
  for (int j = 1; j <= sites; ++j) slots.push_back(j + 2);
  return slots;
}

// Pole forms of T(u) in a variable with sign vsign (+1 for u, -1 for -u) and
// offset: forms vsign*var + offset - a_j and the kappa-shifted companions.
inline void add_monodromy_poles(std::vector<LinearForm>& poles, const MonodromyRep& rep,
                                int ucoeff, int vcoeff, const Rational& offset) {
  for (const auto& a : rep.inhomogeneities) {
    add_pole(poles, LinearForm(ucoeff, vcoeff, Rational(offset - a)));
    add_pole(poles, LinearForm(ucoeff, vcoeff, Rational(offset - a + rep.space.kappa())));
  }
}

inline CheckReport check_rtt(const MonodromyRep& rep) {
  const SuperSpace& sp = rep.space;
  const int L = rep.sites();
  const Rational kap = sp.kappa();
  std::vector<LinearForm> poles;
  add_pole(poles, LinearForm(1, -1, rat(0)));
  add_pole(poles, LinearForm(1, -1, kap));
  add_monodromy_poles(poles, rep, 1, 0, rat(0));
  add_monodromy_poles(poles, rep, 0, 1, rat(0));
  MemoizedFamily t1([&](const Rational& u) {
    return embed(monodromy(rep, u), aux_slots(1, L), L + 2);
  });
  MemoizedFamily t2([&](const Rational& v) {
    return embed(monodromy(rep, v), aux_slots(2, L), L + 2);
  });
  MemoizedFamily r12(
      [&](const Rational& x) { return embed(r_matrix(sp, x), {1, 2}, L + 2); });
  Identity rtt{"R12(u-v) T1(u) T2(v) = T2(v) T1(u) R12(u-v)",
               [&](const std::vector<Rational>& pt) {
                 return r12(Rational(pt[0] - pt[1])) * (t1(pt[0]) * t2(pt[1]));
               },
               [&](const std::vector<Rational>& pt) {
                 return t2(pt[1]) * (t1(pt[0]) * r12(Rational(pt[0] - pt[1])));
               }};
  return run_suite("rtt", sp, 2, 2 * L + 2, poles, {rtt});
}

// All d*d generator blocks T^{ab}(u), extracted once per evaluation point.
class BlockTable {
 public:
  explicit BlockTable(const MonodromyRep& rep) : rep_(rep) {}

  const GradedMatrix& block(const Rational& u, int a, int b) const {
    auto it = cache_.find(u);
    if (it == cache_.end()) {
      const GradedMatrix t = monodromy(rep_, u);
      const int d = rep_.space.dim();
      std::vector<GradedMatrix> blocks;
      blocks.reserve(static_cast<std::size_t>(d) * d);
      for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) blocks.push_back(generator_block(t, i, j));
      it = cache_.emplace(u, std::move(blocks)).first;
    }
    const int d = rep_.space.dim();
    return it->second[static_cast<std::size_t>(a - 1) * d + (b - 1)];
  }

 private:
  MonodromyRep rep_;
  mutable std::map<Rational, std::vector<GradedMatrix>> cache_;
};

// Entrywise exchange relations between the generator families T^{ij}(u):
// the graded commutator [T^{ij}(u), T^{kl}(v)] equals the swap term
// with the 1/(u-v) factor plus the conjugation term with the 1/(u-v+kappa)
// factor. One identity per index quadruple (i,j,k,l).
inline CheckReport check_relcomm(const MonodromyRep& rep) {
  const SuperSpace& sp = rep.space;
  const int L = rep.sites();
  const int d = sp.dim();
  const Rational kap = sp.kappa();
  std::vector<LinearForm> poles;
  add_pole(poles, LinearForm(1, -1, rat(0)));
  add_pole(poles, LinearForm(1, -1, kap));
  add_monodromy_poles(poles, rep, 1, 0, rat(0));
  add_monodromy_poles(poles, rep, 0, 1, rat(0));
  auto table = std::make_shared<BlockTable>(rep);
  std::vector<Identity> ids;
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      for (int k = 1; k <= d; ++k) {
        for (int l = 1; l <= d; ++l) {
          const std::string name = "exchange (" + std::to_string(i) + "," + std::to_string(j) +
                                   "),(" + std::to_string(k) + "," + std::to_string(l) + ")";
          auto lhs = [table, &sp, i, j, k, l](const std::vector<Rational>& pt) {
            const Rational &u = pt[0], &v = pt[1];
            GradedMatrix out = table->block(u, i, j) * table->block(v, k, l);
            const int sign = (sp.parity(i) ^ sp.parity(j)) & (sp.parity(k) ^ sp.parity(l));
            const GradedMatrix swapped = table->block(v, k, l) * table->block(u, i, j);
            if (sign) out += swapped;
            else out -= swapped;
            return out;
          };
          auto rhs = [table, &sp, kap, i, j, k, l](const std::vector<Rational>& pt) {
            const Rational &u = pt[0], &v = pt[1];
            const int d = sp.dim();
            const int pi = sp.parity(i), pj = sp.parity(j), pk = sp.parity(k),
                      pl = sp.parity(l);
            GradedMatrix out(sp, table->block(u, 1, 1).factors());
            {
              const int bit = (pk & pi) ^ (pk & pj) ^ (pi & pj);
              GradedMatrix term = table->block(v, k, j) * table->block(u, i, l);
              term -= table->block(u, k, j) * table->block(v, i, l);
              Rational coeff(1 / Rational(u - v));
              if (bit) coeff = Rational(-coeff);
              out += coeff * term;
            }
            const Rational shifted(u - v + kap);
            if (i == sp.conjugate(k)) {
              const int ibar = sp.conjugate(i);
              for (int p = 1; p <= d; ++p) {
                const int pp = sp.parity(p);
                const int bit = pp ^ (pj & pi) ^ (pj & pp);
                int sign = sp.theta(ibar) * sp.theta(sp.conjugate(p));
                if (bit) sign = -sign;
                GradedMatrix term = table->block(u, p, j) * table->block(v, sp.conjugate(p), l);
                out += Rational(sign / shifted) * term;
              }
            }
            if (j == sp.conjugate(l)) {
              const int jbar = sp.conjugate(j);
              for (int p = 1; p <= d; ++p) {
                const int pp = sp.parity(p);
                const int bit = (pk & pj) ^ (pi & pk) ^ (pi & pp);
                int sign = sp.theta(sp.conjugate(p)) * sp.theta(jbar);
                if (bit) sign = -sign;
                GradedMatrix term = table->block(v, k, sp.conjugate(p)) * table->block(u, i, p);
                out -= Rational(sign / shifted) * term;
              }
            }
            return out;
          };
          ids.push_back({name, std::move(lhs), std::move(rhs)});
        }
      }
    }
  }
  return run_suite("relcomm", sp, 2, 2 * L + 2, poles, ids);
}

// C(u) = T^t(u - kappa) T(u), with the transpose taken in the auxiliary
// factor.
inline GradedMatrix central_element(const MonodromyRep& rep, const Rational& u) {
  const Rational shifted(u - rep.space.kappa());
  return super_transpose(monodromy(rep, shifted), 1) * monodromy(rep, u);
}

// Scalar value the central element takes on the evaluation representation:
// the product over sites of 1 - (u - a_j)^-2.
inline Rational central_value(const MonodromyRep& rep, const Rational& u) {
  Rational c = rat(1);
  for (const auto& a : rep.inhomogeneities) {
    const Rational x(u - a);
    if (x == 0) throw PoleError(LinearForm(1, 0, Rational(-a)), {u});
    c *= Rational(1 - 1 / (x * x));
  }
  return c;
}

inline std::vector<LinearForm> central_poles(const MonodromyRep& rep) {
  std::vector<LinearForm> poles;
  add_monodromy_poles(poles, rep, 1, 0, rat(0));
  add_monodromy_poles(poles, rep, 1, 0, Rational(-rep.space.kappa()));
  return poles;
}

// Structure of the central element at fixed sites: auxiliary-diagonal with
// equal blocks, scalar value factorizing over sites, and the swap relation
// K12 T1(u - kappa) T2(u) = T2(u) T1(u - kappa) K12 it follows from.
inline CheckReport check_center(const MonodromyRep& rep) {
  const SuperSpace& sp = rep.space;
  const int L = rep.sites();
  std::vector<LinearForm> poles = central_poles(rep);
  MemoizedFamily c([&](const Rational& u) { return central_element(rep, u); });
  MemoizedFamily t1shift([&](const Rational& u) {
    return embed(monodromy(rep, Rational(u - sp.kappa())), aux_slots(1, L), L + 2);
  });
  MemoizedFamily t2([&](const Rational& u) {
    return embed(monodromy(rep, u), aux_slots(2, L), L + 2);
  });
  const GradedMatrix k12 = embed(k_op(sp), {1, 2}, L + 2);
  std::vector<Identity> ids;
  ids.push_back({"C(u) is scalar on the auxiliary factor",
                 [&](const std::vector<Rational>& pt) { return c(pt[0]); },
                 [&](const std::vector<Rational>& pt) {
                   const int d = sp.dim();
                   const GradedMatrix first = aux_block(c(pt[0]), 1, 1);
                   std::vector<std::vector<GradedMatrix>> blocks;
                   for (int i = 1; i <= d; ++i) {
                     std::vector<GradedMatrix> row;
                     for (int j = 1; j <= d; ++j)
                       row.push_back(i == j ? first : GradedMatrix(sp, L));
                     blocks.push_back(std::move(row));
                   }
                   return from_aux_blocks(sp, blocks);
                 }});
  ids.push_back({"c(u) = prod_j (1 - (u - a_j)^-2)",
                 [&](const std::vector<Rational>& pt) { return aux_block(c(pt[0]), 1, 1); },
                 [&](const std::vector<Rational>& pt) {
                   return central_value(rep, pt[0]) * GradedMatrix::identity(sp, L);
                 }});
  ids.push_back({"K12 T1(u-kappa) T2(u) = T2(u) T1(u-kappa) K12",
                 [&](const std::vector<Rational>& pt) {
                   return k12 * (t1shift(pt[0]) * t2(pt[0]));
                 },
                 [&](const std::vector<Rational>& pt) {
                   return t2(pt[0]) * (t1shift(pt[0]) * k12);
                 }});
  return run_suite("center", sp, 1, 4 * L, poles, ids);
}

// Centrality of C(u): it commutes with every generator, and the transposed
// exchange relation behind that proof holds as stated.
inline CheckReport check_centrality(const MonodromyRep& rep) {
  const SuperSpace& sp = rep.space;
  const int L = rep.sites();
  const Rational kap = sp.kappa();
  std::vector<LinearForm> poles = central_poles(rep);
  add_monodromy_poles(poles, rep, 0, 1, rat(0));
  add_pole(poles, LinearForm(1, -1, rat(0)));
  add_pole(poles, LinearForm(1, -1, kap));
  add_pole(poles, LinearForm(1, -1, Rational(-kap)));
  add_pole(poles, LinearForm(1, -1, rat(1)));
  add_pole(poles, LinearForm(1, -1, rat(-1)));
  MemoizedFamily c1([&](const Rational& u) {
    return embed(central_element(rep, u), aux_slots(1, L), L + 2);
  });
  MemoizedFamily t1trans([&](const Rational& u) {
    return embed(super_transpose(monodromy(rep, Rational(u - kap)), 1), aux_slots(1, L),
                 L + 2);
  });
  MemoizedFamily t2([&](const Rational& v) {
    return embed(monodromy(rep, v), aux_slots(2, L), L + 2);
  });
  MemoizedFamily rinv(
      [&](const Rational& x) { return embed(invert(r_matrix(sp, x)), {1, 2}, L + 2); });
  std::vector<Identity> ids;
  ids.push_back({"C1(u) T2(v) = T2(v) C1(u)",
                 [&](const std::vector<Rational>& pt) { return c1(pt[0]) * t2(pt[1]); },
                 [&](const std::vector<Rational>& pt) { return t2(pt[1]) * c1(pt[0]); }});
  ids.push_back({"T1^t(u-kappa) R12^-1(u-v) T2(v) = T2(v) R12^-1(u-v) T1^t(u-kappa)",
                 [&](const std::vector<Rational>& pt) {
                   const Rational x(pt[0] - pt[1]);
                   return t1trans(pt[0]) * (rinv(x) * t2(pt[1]));
                 },
                 [&](const std::vector<Rational>& pt) {
                   const Rational x(pt[0] - pt[1]);
                   return t2(pt[1]) * (rinv(x) * t1trans(pt[0]));
                 }});
  const int degree = std::max(4 * L, 2 * L + 4);
  return run_suite("centrality", sp, 2, degree, poles, ids);
}

}  // namespace yangian
