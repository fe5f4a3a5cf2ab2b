#include "kindex/exactalg/symmetric.hpp"

namespace kindex {

std::vector<Rational> power_sums_from_elementary(std::span<const Rational> elementary, std::size_t k) {
  return newton_power_sums(elementary, k, Rational(0));
}

std::vector<Rational> elementary_from_roots(std::span<const Rational> roots) {
  // Coefficients of prod (1 + r t).
  std::vector<Rational> e(roots.size() + 1, Rational(0));
  e[0] = Rational(1);
  for (std::size_t n = 0; n < roots.size(); ++n) {
    for (std::size_t j = n + 1; j >= 1; --j) e[j] += e[j - 1] * roots[n];
  }
  return {e.begin() + 1, e.end()};
}

}  // namespace kindex
