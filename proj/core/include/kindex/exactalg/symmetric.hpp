#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kindex/error.hpp"
#include "kindex/exactalg/rational.hpp"

namespace kindex {

// Newton's identities over any commutative ring T with a Rational scaling:
// given e_1..e_r (e_j = zero beyond r), return p_1..p_k.
template <typename T>
std::vector<T> newton_power_sums(std::span<const T> elementary, std::size_t k, const T& zero) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "power sum count must be at least 1");
  auto e = [&](std::size_t j) -> T { return j <= elementary.size() ? elementary[j - 1] : zero; };
  std::vector<T> p;
  p.reserve(k);
  for (std::size_t m = 1; m <= k; ++m) {
    // p_m = sum_{i=1}^{m-1} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m
    T acc = zero;
    for (std::size_t i = 1; i < m; ++i) {
      const T term = e(i) * p[m - i - 1];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    const T last = Rational(static_cast<long>(m)) * e(m);
    if (m % 2 == 1) {
      acc += last;
    } else {
      acc -= last;
    }
    p.push_back(acc);
  }
  return p;
}

std::vector<Rational> power_sums_from_elementary(std::span<const Rational> elementary, std::size_t k);

// e_1..e_n of the multiset of roots.
std::vector<Rational> elementary_from_roots(std::span<const Rational> roots);

}  // namespace kindex
