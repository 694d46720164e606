// Builds the element C(u) = T^t(u - kappa) T(u) on a two-site chain and
// shows that it acts as the exact scalar prod_j (1 - (u - a_j)^-2).
#include <iostream>

#include "yangian/monodromy.hpp"

using namespace yangian;

int main() {
  const SuperSpace sp(3, 0, 1);
  const MonodromyRep rep(sp, {rat(0), rat(1, 3)});
  std::cout << "two sites with shifts 0 and 1/3 on M = 3, N = 0\n";
  for (long n = 2; n <= 4; ++n) {
    const Rational u = rat(n);
    const GradedMatrix c = central_element(rep, u);
    const Rational value = central_value(rep, u);
    const GradedMatrix scalar = value * GradedMatrix::identity(sp, rep.sites() + 1);
    std::cout << "u = " << rat_str(u) << ": C(u) "
              << (c == scalar ? "equals" : "DOES NOT equal") << " "
              << rat_str(value) << " * I";
    Rational product = rat(1);
    for (const auto& a : rep.inhomogeneities) {
      const Rational x(u - a);
      product *= Rational(1 - 1 / (x * x));
    }
    std::cout << "  (site factors multiply to " << rat_str(product) << ")\n";
  }
  return 0;
}
