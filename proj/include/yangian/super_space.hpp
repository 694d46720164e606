#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "yangian/rational.hpp"

namespace yangian {

// A Z2-graded vector space C^(M|N) together with the sign data used by the
// orthosymplectic R-matrix: a global sign theta0 = +-1 selecting which block
// is even, per-index signs theta_i, the index involution i -> ibar, and the
// crossing shift kappa = (M - N - 2) * theta0 / 2.
//
// Indices are 1-based throughout the public interface. N must be even.
class SuperSpace {
 public:
  SuperSpace(int bosonic, int fermionic, int theta0)
      : m_(bosonic), n_(fermionic), theta0_(theta0) {
    if (m_ < 0 || n_ < 0) throw std::invalid_argument("M and N must be nonnegative");
    if (m_ + n_ < 1) throw std::invalid_argument("M + N must be at least 1");
    if (n_ % 2 != 0) throw std::invalid_argument("N must be even");
    if (theta0_ != 1 && theta0_ != -1) throw std::invalid_argument("theta0 must be +1 or -1");
  }

  int bosonic_dim() const { return m_; }
  int fermionic_dim() const { return n_; }
  int theta0() const { return theta0_; }
  int dim() const { return m_ + n_; }

  // [i] in {0,1}, defined by (-1)^[i] = theta0 for i <= M and -theta0 above.
  int parity(int i) const {
    check_index(i);
    const int sign = (i <= m_) ? theta0_ : -theta0_;
    return sign == 1 ? 0 : 1;
  }

  // theta_i = +1 for i <= M + N/2, -1 otherwise.
  int theta(int i) const {
    check_index(i);
    return (i <= m_ + n_ / 2) ? 1 : -1;
  }

  // The involution: ibar = M + 1 - i on the first block, 2M + N + 1 - i on
  // the second. Stays inside its block, so parity(ibar) == parity(i).
  int conjugate(int i) const {
    check_index(i);
    return (i <= m_) ? m_ + 1 - i : 2 * m_ + n_ + 1 - i;
  }

  // Crossing shift. An explicit override (negative controls) wins when set.
  Rational kappa() const {
    if (kappa_override_) return *kappa_override_;
    return rat(static_cast<long>(m_ - n_ - 2) * theta0_, 2);
  }

  Rational natural_kappa() const { return rat(static_cast<long>(m_ - n_ - 2) * theta0_, 2); }

  void override_kappa(const Rational& k) { kappa_override_ = k; }
  bool kappa_overridden() const { return kappa_override_.has_value(); }

  // Degenerate corners that stay supported but get flagged in reports:
  // a one-dimensional space, or kappa = 0 (the two R-matrix poles merge).
  bool degenerate() const { return dim() == 1 || kappa() == 0; }

  bool operator==(const SuperSpace& other) const {
    return m_ == other.m_ && n_ == other.n_ && theta0_ == other.theta0_ &&
           kappa_override_ == other.kappa_override_;
  }
  bool operator!=(const SuperSpace& other) const { return !(*this == other); }

  // Short tag used in report file names and tables, e.g. "(3,0,+1)".
  std::string label() const {
    return "(" + std::to_string(m_) + "," + std::to_string(n_) + "," +
           (theta0_ == 1 ? "+1" : "-1") + ")";
  }

 private:
  void check_index(int i) const {
    if (i < 1 || i > dim()) throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(dim()));
  }

  int m_;
  int n_;
  int theta0_;
  std::optional<Rational> kappa_override_;
};

}  // namespace yangian
