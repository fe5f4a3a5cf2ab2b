#include "kindex/circleop/toeplitz.hpp"

#include <algorithm>

#include "kindex/error.hpp"
#include "kindex/exactalg/linalg.hpp"

namespace kindex {

long toeplitz_kernel_dim(const LaurentMatrix& f, int bound) {
  if (bound < 0) throw Error(ErrorCode::InvalidArgument, "degree bound must be nonnegative");
  const std::size_t n = f.size();
  const int hi = f.max_exponent();
  const std::size_t per = static_cast<std::size_t>(bound) + 1;
  const std::size_t unknowns = n * per;
  const int top_mode = bound + std::max(hi, 0);
  const std::size_t rows = n * static_cast<std::size_t>(top_mode + 1);
  FieldMatrix<GaussianRational> m(rows, unknowns);
  // Row (mode k, component r); column (component c, degree j).
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      for (const auto& [e, a] : f(r, c).coefficients()) {
        for (int j = 0; j <= bound; ++j) {
          const int k = e + j;
          if (k < 0 || k > top_mode) continue;
          m(static_cast<std::size_t>(k) * n + r, c * per + static_cast<std::size_t>(j)) += a;
        }
      }
    }
  }
  return static_cast<long>(unknowns - matrix_rank(std::move(m)));
}

namespace {

std::pair<long, int> stabilised_kernel(const LaurentMatrix& f, int start, int ceiling) {
  std::vector<long> dims;
  for (int b = start; b <= ceiling; ++b) {
    dims.push_back(toeplitz_kernel_dim(f, b));
    const std::size_t s = dims.size();
    if (s >= 3 && dims[s - 1] == dims[s - 2] && dims[s - 2] == dims[s - 3]) return {dims.back(), b};
  }
  throw Error(ErrorCode::NoStabilization,
              "kernel dimension did not stabilise below degree bound " + std::to_string(ceiling));
}

}  // namespace

ToeplitzOracleResult toeplitz_kernel_oracle(const LaurentMatrix& f, int start_bound, std::optional<int> max_bound,
                                            const WindingOptions& opts) {
  if (f.size() == 0) return {};
  // Ellipticity check; the winding itself is not used.
  (void)wiener_hopf_index(f, opts);
  const int span = f.max_exponent() - f.min_exponent();
  const int ceiling = max_bound.value_or(64 + 8 * span);
  const int start = std::max(start_bound, 0);
  const auto [ker, kb] = stabilised_kernel(f, start, ceiling);
  const auto [coker, cb] = stabilised_kernel(f.adjoint(), start, ceiling);
  return {{ker, coker}, kb, cb};
}

GaussianRational evaluate_at_integer(const LaurentPoly& p, long n) {
  if (p.min_exponent() < 0) throw Error(ErrorCode::InvalidArgument, "expected a polynomial, got negative powers");
  GaussianRational acc(0);
  const GaussianRational x(Rational(n), Rational(0));
  for (int k = p.max_exponent(); k >= 0; --k) acc = acc * x + p.coefficient(k);
  return acc;
}

long cauchy_bound(const LaurentPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no root bound");
  const int d = p.max_exponent();
  if (d <= 0) return 0;
  const Rational lead = p.coefficient(d).norm();
  Rational worst(0);
  for (const auto& [k, c] : p.coefficients()) {
    if (k == d) continue;
    worst = std::max(worst, c.norm() / lead);
  }
  // Smallest s with s^2 >= worst, then 1 + s.
  Integer s;
  const Integer ceil_worst = (worst.numerator() + worst.denominator() - 1) / worst.denominator();
  mpz_sqrt(s.get_mpz_t(), ceil_worst.get_mpz_t());
  if (s * s < ceil_worst) s += 1;
  return 1 + s.get_si();
}

ConstCoeffResult const_coeff_index(const LaurentPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "operator with zero symbol is not elliptic");
  if (p.min_exponent() < 0) throw Error(ErrorCode::InvalidArgument, "expected a polynomial, got negative powers");
  ConstCoeffResult r;
  r.bound = cauchy_bound(p);
  for (long n = -r.bound; n <= r.bound; ++n) {
    if (evaluate_at_integer(p, n).is_zero()) r.kernel_modes.push_back(n);
  }
  // p(n) is a scalar on each mode, so kernel and cokernel see the same modes.
  const long k = static_cast<long>(r.kernel_modes.size());
  r.dims = {k, k};
  return r;
}

}  // namespace kindex
