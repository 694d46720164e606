// Evaluates both sides of the Yang-Baxter identity at one exact point,
// first with the correct crossing shift and then with a deliberately
// wrong one, printing the first entry where the sides disagree.
#include <iostream>

#include "yangian/rmatrix.hpp"

using namespace yangian;

namespace {

GradedMatrix side(const SuperSpace& sp, const Rational& u, const Rational& v, bool left) {
  const GradedMatrix r12 = embed(r_matrix(sp, Rational(u - v)), {1, 2}, 3);
  const GradedMatrix r13 = embed(r_matrix(sp, u), {1, 3}, 3);
  const GradedMatrix r23 = embed(r_matrix(sp, v), {2, 3}, 3);
  return left ? r12 * (r13 * r23) : r23 * (r13 * r12);
}

void report(const SuperSpace& sp, const Rational& u, const Rational& v) {
  std::cout << "kappa = " << rat_str(sp.kappa()) << ": ";
  const GradedMatrix diff = side(sp, u, v, true) - side(sp, u, v, false);
  if (diff.is_zero()) {
    std::cout << "both sides agree exactly\n";
    return;
  }
  for (std::int64_t r = 0; r < diff.dim(); ++r)
    for (const auto& [c, val] : diff.row(r)) {
      std::cout << "sides differ at flat entry (" << r << ", " << c << ") by "
                << rat_str(val) << "\n";
      return;
    }
}

}  // namespace

int main() {
  SuperSpace sp(2, 2, 1);
  const Rational u = rat(5, 2), v = rat(7, 3);
  std::cout << "R(u) = I + P/u - K/(u + kappa) on M = 2, N = 2 at u = "
            << rat_str(u) << ", v = " << rat_str(v) << "\n";
  report(sp, u, v);

  SuperSpace wrong(2, 2, 1);
  wrong.override_kappa(Rational(wrong.natural_kappa() + 1));
  report(wrong, u, v);
  return 0;
}
