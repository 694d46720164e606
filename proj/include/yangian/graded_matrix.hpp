#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "yangian/rational.hpp"
#include "yangian/super_space.hpp"

namespace yangian {

// Thrown by invert() when elimination finds no pivot; names the offending
// column as a 1-based multi-index.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(std::string column_txt, std::int64_t column_flat)
      : std::runtime_error("singular matrix: no pivot in column " + column_txt),
        column_flat_(column_flat) {}
  std::int64_t column_flat() const { return column_flat_; }

 private:
  std::int64_t column_flat_;
};

// Sparse exact matrix on a tensor power of a graded space.
//
// The grading is baked into the entries once, by the Kronecker sign rule
//   (A(x)B)[(i,k),(j,l)] = (-1)^{[k]([i]+[j])} A[i,j] B[k,l],
// so products of GradedMatrix values are ordinary matrix products. Rows and
// columns are flat 0-based indices; the multi-index view is 1-based with
// factor 1 most significant.
class GradedMatrix {
 public:
  using Entry = std::pair<std::int64_t, Rational>;  // (column, value)

  GradedMatrix(const SuperSpace& space, int factors)
      : space_(space), factors_(factors), dim_(power_dim(space, factors)), rows_(dim_) {}

  static GradedMatrix identity(const SuperSpace& space, int factors) {
    GradedMatrix a(space, factors);
    for (std::int64_t i = 0; i < a.dim_; ++i) a.rows_[i].push_back({i, rat(1)});
    return a;
  }

  // One-factor matrix unit E_ij (1-based).
  static GradedMatrix elementary(const SuperSpace& space, int i, int j) {
    GradedMatrix a(space, 1);
    if (i < 1 || i > space.dim() || j < 1 || j > space.dim())
      throw std::out_of_range("elementary index outside 1..dim");
    a.rows_[i - 1].push_back({j - 1, rat(1)});
    return a;
  }

  const SuperSpace& space() const { return space_; }
  int factors() const { return factors_; }
  std::int64_t dim() const { return dim_; }

  const std::vector<Entry>& row(std::int64_t r) const { return rows_[r]; }

  Rational entry(std::int64_t r, std::int64_t c) const {
    if (r < 0 || r >= dim_ || c < 0 || c >= dim_) throw std::out_of_range("flat index outside matrix");
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::int64_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return Rational(0);
  }

  // Multi-index accessor (1-based digits). Named differently from the flat
  // accessor so a braced single-element list cannot silently pick the wrong
  // overload.
  Rational entry_at(const std::vector<int>& r, const std::vector<int>& c) const {
    return entry(flatten(r), flatten(c));
  }

  // Builder: adds v at (r, c); entries may be touched repeatedly.
  void add_entry(std::int64_t r, std::int64_t c, const Rational& v) {
    if (v == 0) return;
    auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::int64_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
      it->second += v;
      if (it->second == 0) row.erase(it);
    } else {
      row.insert(it, {c, v});
    }
  }

  bool is_zero() const {
    for (const auto& row : rows_)
      if (!row.empty()) return false;
    return true;
  }

  std::int64_t nonzero_count() const {
    std::int64_t n = 0;
    for (const auto& row : rows_) n += static_cast<std::int64_t>(row.size());
    return n;
  }

  // The lexicographically first nonzero entry, for failure witnesses.
  bool first_nonzero(std::int64_t* r, std::int64_t* c, Rational* v) const {
    for (std::int64_t i = 0; i < dim_; ++i) {
      if (!rows_[i].empty()) {
        *r = i;
        *c = rows_[i][0].first;
        *v = rows_[i][0].second;
        return true;
      }
    }
    return false;
  }

  // Flat index <-> 1-based multi-index (factor 1 most significant).
  std::vector<int> unflatten(std::int64_t flat) const {
    std::vector<int> digits(factors_);
    const int d = space_.dim();
    for (int f = factors_ - 1; f >= 0; --f) {
      digits[f] = static_cast<int>(flat % d) + 1;
      flat /= d;
    }
    return digits;
  }

  std::int64_t flatten(const std::vector<int>& digits) const {
    if (static_cast<int>(digits.size()) != factors_)
      throw std::invalid_argument("multi-index length mismatch");
    const int d = space_.dim();
    std::int64_t flat = 0;
    for (int f = 0; f < factors_; ++f) {
      if (digits[f] < 1 || digits[f] > d) throw std::out_of_range("multi-index digit outside 1..dim");
      flat = flat * d + (digits[f] - 1);
    }
    return flat;
  }

  // Composite parity of a flat basis index: sum of factor parities mod 2.
  int flat_parity(std::int64_t flat) const {
    const int d = space_.dim();
    int p = 0;
    for (int f = 0; f < factors_; ++f) {
      p ^= space_.parity(static_cast<int>(flat % d) + 1);
      flat /= d;
    }
    return p;
  }

  GradedMatrix& operator+=(const GradedMatrix& other) {
    require_same_shape(other);
    for (std::int64_t r = 0; r < dim_; ++r) {
      if (other.rows_[r].empty()) continue;
      std::vector<Entry> merged;
      merged.reserve(rows_[r].size() + other.rows_[r].size());
      auto a = rows_[r].begin(), ae = rows_[r].end();
      auto b = other.rows_[r].begin(), be = other.rows_[r].end();
      while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == ae || b->first < a->first) {
          merged.push_back(*b++);
        } else {
          Rational v = a->second + b->second;
          if (v != 0) merged.push_back({a->first, v});
          ++a;
          ++b;
        }
      }
      rows_[r] = std::move(merged);
    }
    return *this;
  }

  GradedMatrix& operator-=(const GradedMatrix& other) {
    *this += other * rat(-1);
    return *this;
  }

  friend GradedMatrix operator+(GradedMatrix a, const GradedMatrix& b) { return a += b; }
  friend GradedMatrix operator-(GradedMatrix a, const GradedMatrix& b) { return a -= b; }

  friend GradedMatrix operator*(const GradedMatrix& a, const Rational& s) {
    GradedMatrix out(a.space_, a.factors_);
    if (s == 0) return out;
    for (std::int64_t r = 0; r < a.dim_; ++r) {
      out.rows_[r].reserve(a.rows_[r].size());
      for (const auto& [c, v] : a.rows_[r]) out.rows_[r].push_back({c, v * s});
    }
    return out;
  }
  friend GradedMatrix operator*(const Rational& s, const GradedMatrix& a) { return a * s; }

  // Ordinary sparse matrix product (Gustavson, dense accumulator per row).
  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
    a.require_same_shape(b);
    GradedMatrix out(a.space_, a.factors_);
    std::vector<Rational> acc(static_cast<size_t>(a.dim_), Rational(0));
    std::vector<std::int64_t> touched;
    for (std::int64_t r = 0; r < a.dim_; ++r) {
      touched.clear();
      for (const auto& [k, av] : a.rows_[r]) {
        for (const auto& [c, bv] : b.rows_[k]) {
          if (acc[c] == 0) touched.push_back(c);
          acc[c] += av * bv;
        }
      }
      std::sort(touched.begin(), touched.end());
      auto& row = out.rows_[r];
      row.reserve(touched.size());
      for (std::int64_t c : touched) {
        if (acc[c] != 0) row.push_back({c, acc[c]});
        acc[c] = 0;
      }
    }
    return out;
  }

  bool operator==(const GradedMatrix& other) const {
    return space_ == other.space_ && factors_ == other.factors_ && rows_ == other.rows_;
  }
  bool operator!=(const GradedMatrix& other) const { return !(*this == other); }

 private:
  static std::int64_t power_dim(const SuperSpace& space, int factors) {
    if (factors < 1) throw std::invalid_argument("factors must be >= 1");
    std::int64_t dim = 1;
    for (int f = 0; f < factors; ++f) {
      dim *= space.dim();
      if (dim > (std::int64_t{1} << 40)) throw std::invalid_argument("tensor power too large");
    }
    return dim;
  }

  void require_same_shape(const GradedMatrix& other) const {
    if (space_ != other.space_ || factors_ != other.factors_)
      throw std::invalid_argument("matrix shape/space mismatch");
  }

  SuperSpace space_;
  int factors_;
  std::int64_t dim_;
  std::vector<std::vector<Entry>> rows_;
};

// Graded Kronecker product. Signs follow the single convention stated on
// GradedMatrix; both operands may themselves be multi-factor.
inline GradedMatrix graded_kron(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.space() != b.space()) throw std::invalid_argument("kron operands on different spaces");
  GradedMatrix out(a.space(), a.factors() + b.factors());
  const std::int64_t bdim = b.dim();
  for (std::int64_t ar = 0; ar < a.dim(); ++ar) {
    const int pa_r = a.flat_parity(ar);
    for (const auto& [ac, av] : a.row(ar)) {
      const int pa_rc = pa_r ^ a.flat_parity(ac);
      for (std::int64_t br = 0; br < bdim; ++br) {
        const bool flip = pa_rc && b.flat_parity(br);
        for (const auto& [bc, bv] : b.row(br)) {
          Rational v = av * bv;
          if (flip) v = -v;
          out.add_entry(ar * bdim + br, ac * bdim + bc, v);
        }
      }
    }
  }
  return out;
}

namespace detail {

// Koszul sign of rearranging homogeneous factors: product over pairs that
// invert their relative order of (-1)^{[x][y]}. `target[f]` is the position
// (0-based) factor f moves to.
inline int koszul_sign(const std::vector<int>& parities, const std::vector<int>& target) {
  int sign = 1;
  for (size_t f = 0; f < target.size(); ++f)
    for (size_t g = f + 1; g < target.size(); ++g)
      if (target[f] > target[g] && parities[f] && parities[g]) sign = -sign;
  return sign;
}

}  // namespace detail

// Embeds a k-factor operator into an n-factor space, acting on the factor
// positions `slots` (1-based, strictly increasing) and as identity elsewhere.
// Equivalent to conjugating a (x) id^(n-k) by the graded permutation operator
// that moves the leading factors into place.
inline GradedMatrix embed(const GradedMatrix& a, const std::vector<int>& slots, int n_total) {
  const int k = a.factors();
  if (static_cast<int>(slots.size()) != k) throw std::invalid_argument("slot count != operand factors");
  for (size_t f = 0; f < slots.size(); ++f) {
    if (slots[f] < 1 || slots[f] > n_total) throw std::out_of_range("slot outside 1..n_total");
    if (f > 0 && slots[f] <= slots[f - 1]) throw std::invalid_argument("slots must be strictly increasing");
  }
  if (k == n_total) return a;

  const SuperSpace& sp = a.space();
  const int d = sp.dim();

  // Factor f (0-based) of a (x) id^(n-k) lands at position target[f].
  std::vector<int> target(n_total);
  std::vector<bool> taken(n_total, false);
  for (int f = 0; f < k; ++f) {
    target[f] = slots[f] - 1;
    taken[slots[f] - 1] = true;
  }
  int next = 0;
  for (int f = k; f < n_total; ++f) {
    while (taken[next]) ++next;
    target[f] = next++;
  }

  GradedMatrix w = graded_kron(a, GradedMatrix::identity(sp, n_total - k));

  // Basis map: digits get rearranged, entries pick up the Koszul sign of the
  // rearrangement on rows and columns.
  const std::int64_t dim = w.dim();
  std::vector<std::int64_t> perm(dim);
  std::vector<int> sign(dim);
  std::vector<int> digits(n_total), parities(n_total), moved(n_total);
  for (std::int64_t flat = 0; flat < dim; ++flat) {
    std::int64_t rest = flat;
    for (int f = n_total - 1; f >= 0; --f) {
      digits[f] = static_cast<int>(rest % d);
      rest /= d;
    }
    for (int f = 0; f < n_total; ++f) parities[f] = sp.parity(digits[f] + 1);
    for (int f = 0; f < n_total; ++f) moved[target[f]] = digits[f];
    std::int64_t to = 0;
    for (int f = 0; f < n_total; ++f) to = to * d + moved[f];
    perm[flat] = to;
    sign[flat] = detail::koszul_sign(parities, target);
  }

  GradedMatrix out(sp, n_total);
  for (std::int64_t r = 0; r < dim; ++r) {
    for (const auto& [c, v] : w.row(r)) {
      if (sign[r] * sign[c] == 1)
        out.add_entry(perm[r], perm[c], v);
      else
        out.add_entry(perm[r], perm[c], Rational(-v));
    }
  }
  return out;
}

// Super-transpose in one factor. On a single factor,
//   (A^t)[jbar, ibar] = (-1)^{[i][j]+[j]} theta_i theta_j A[i,j];
// on factor f of many, the same rule applies to the f-th row/column digits
// with an extra realization sign (-1)^{([r_f]+[c_f]) * sum_{g<f}([r_g]+[c_g])}.
inline GradedMatrix super_transpose(const GradedMatrix& a, int factor) {
  const int n = a.factors();
  if (factor < 1 || factor > n) throw std::out_of_range("transpose factor outside 1..factors");
  const SuperSpace& sp = a.space();
  const int f = factor - 1;

  GradedMatrix out(sp, n);
  for (std::int64_t r = 0; r < a.dim(); ++r) {
    if (a.row(r).empty()) continue;
    std::vector<int> rd = a.unflatten(r);
    for (const auto& [c, v] : a.row(r)) {
      std::vector<int> cd = a.unflatten(c);
      const int i = rd[f], j = cd[f];
      const int pi = sp.parity(i), pj = sp.parity(j);
      int lead = 0;
      for (int g = 0; g < f; ++g) lead ^= sp.parity(rd[g]) ^ sp.parity(cd[g]);
      int exponent = (pi & pj) ^ pj ^ (lead & (pi ^ pj));
      int s = sp.theta(i) * sp.theta(j) * (exponent ? -1 : 1);
      std::vector<int> nrd = rd, ncd = cd;
      nrd[f] = sp.conjugate(j);
      ncd[f] = sp.conjugate(i);
      if (s == 1)
        out.add_entry(a.flatten(nrd), a.flatten(ncd), v);
      else
        out.add_entry(a.flatten(nrd), a.flatten(ncd), Rational(-v));
    }
  }
  return out;
}

// Exact inverse via dense Gauss-Jordan elimination. Throws
// SingularMatrixError naming the first pivotless column.
inline GradedMatrix invert(const GradedMatrix& a) {
  const std::int64_t n = a.dim();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::int64_t r = 0; r < n; ++r) {
    for (const auto& [c, v] : a.row(r)) m[r][c] = v;
    m[r][n + r] = 1;
  }
  for (std::int64_t col = 0; col < n; ++col) {
    std::int64_t pivot = -1;
    for (std::int64_t r = col; r < n; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      std::string txt = "(";
      const std::vector<int> digits = a.unflatten(col);
      for (size_t f = 0; f < digits.size(); ++f) txt += (f ? "," : "") + std::to_string(digits[f]);
      txt += ")";
      throw SingularMatrixError(txt, col);
    }
    if (pivot != col) std::swap(m[pivot], m[col]);
    const Rational inv_p = 1 / m[col][col];
    for (std::int64_t c = col; c < 2 * n; ++c) m[col][c] *= inv_p;
    for (std::int64_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::int64_t c = col; c < 2 * n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  GradedMatrix out(a.space(), a.factors());
  for (std::int64_t r = 0; r < n; ++r)
    for (std::int64_t c = 0; c < n; ++c)
      if (m[r][n + c] != 0) out.add_entry(r, c, m[r][n + c]);
  return out;
}

// Extracts the operator sitting at auxiliary entry (i, j), i.e. the block
// B with A = sum_ij graded_kron(E_ij, B_ij); the realization sign
// (-1)^{[row]([i]+[j])} is divided back out so B is an honest operator on
// the remaining factors.
inline GradedMatrix aux_block(const GradedMatrix& a, int i, int j) {
  if (a.factors() < 2) throw std::invalid_argument("aux_block needs at least 2 factors");
  const SuperSpace& sp = a.space();
  const std::int64_t qdim = a.dim() / sp.dim();
  GradedMatrix out(sp, a.factors() - 1);
  const int pij = sp.parity(i) ^ sp.parity(j);
  const std::int64_t base_r = static_cast<std::int64_t>(i - 1) * qdim;
  const std::int64_t base_c = static_cast<std::int64_t>(j - 1) * qdim;
  for (std::int64_t qr = 0; qr < qdim; ++qr) {
    for (const auto& [c, v] : a.row(base_r + qr)) {
      if (c < base_c || c >= base_c + qdim) continue;
      const bool flip = pij && out.flat_parity(qr);
      out.add_entry(qr, c - base_c, flip ? Rational(-v) : v);
    }
  }
  return out;
}

// Matrix element T^{ij} of an operator on aux (x) rest, as a literal
// submatrix: no realization sign is divided out. This is the generator
// normalization in which the entrywise exchange relations hold; it agrees
// with aux_block on blocks of even parity and differs from it by a left
// factor of the parity operator (-1)^{[row]} on odd blocks.
inline GradedMatrix generator_block(const GradedMatrix& a, int i, int j) {
  if (a.factors() < 2) throw std::invalid_argument("generator_block needs at least 2 factors");
  const SuperSpace& sp = a.space();
  const std::int64_t qdim = a.dim() / sp.dim();
  GradedMatrix out(sp, a.factors() - 1);
  const std::int64_t base_r = static_cast<std::int64_t>(i - 1) * qdim;
  const std::int64_t base_c = static_cast<std::int64_t>(j - 1) * qdim;
  for (std::int64_t qr = 0; qr < qdim; ++qr)
    for (const auto& [c, v] : a.row(base_r + qr))
      if (c >= base_c && c < base_c + qdim) out.add_entry(qr, c - base_c, v);
  return out;
}

// Inverse of aux_block: assembles sum_ij graded_kron(E_ij, block(i,j)).
inline GradedMatrix from_aux_blocks(
    const SuperSpace& sp, const std::vector<std::vector<GradedMatrix>>& blocks) {
  const int d = sp.dim();
  if (static_cast<int>(blocks.size()) != d) throw std::invalid_argument("need dim x dim blocks");
  GradedMatrix out = graded_kron(GradedMatrix::elementary(sp, 1, 1), blocks[0][0]);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      if (i == 1 && j == 1) continue;
      out += graded_kron(GradedMatrix::elementary(sp, i, j), blocks[i - 1][j - 1]);
    }
  }
  return out;
}

}  // namespace yangian
