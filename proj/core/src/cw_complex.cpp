#include "kindex/ahss/cw_complex.hpp"

#include "kindex/error.hpp"

namespace kindex {

IntMatrix CWComplex::coboundary(int p) const {
  const int n = dim();
  const std::size_t src = (p >= 0 && p <= n) ? cells[static_cast<std::size_t>(p)] : 0;
  const std::size_t dst = (p + 1 >= 0 && p + 1 <= n) ? cells[static_cast<std::size_t>(p + 1)] : 0;
  if (p >= 0 && p < n) return coboundaries[static_cast<std::size_t>(p)];
  return IntMatrix::zero(dst, src);
}

void validate(const CWComplex& x) {
  if (x.cells.empty()) throw Error(ErrorCode::InvalidArgument, "complex '" + x.name + "' has no cells");
  if (x.coboundaries.size() + 1 != x.cells.size()) {
    throw Error(ErrorCode::InvalidArgument, "complex '" + x.name + "' needs one coboundary per dimension below the top");
  }
  for (std::size_t p = 0; p < x.coboundaries.size(); ++p) {
    const IntMatrix& d = x.coboundaries[p];
    if (d.rows() != x.cells[p + 1] || d.cols() != x.cells[p]) {
      throw Error(ErrorCode::InvalidArgument, "coboundary d^" + std::to_string(p) + " of '" + x.name +
                                                  "' has shape " + std::to_string(d.rows()) + "x" +
                                                  std::to_string(d.cols()));
    }
  }
  for (std::size_t p = 0; p + 1 < x.coboundaries.size(); ++p) {
    if (!(x.coboundaries[p + 1] * x.coboundaries[p]).is_zero()) {
      throw Error(ErrorCode::CompositionNonzero,
                  "d^" + std::to_string(p + 1) + " d^" + std::to_string(p) + " != 0 in '" + x.name + "'");
    }
  }
}

CWComplex make_cw(std::string name, std::vector<std::size_t> cells, std::vector<IntMatrix> coboundaries) {
  CWComplex x{std::move(name), std::move(cells), std::move(coboundaries), std::nullopt};
  validate(x);
  return x;
}

namespace {

CWComplex zero_differentials(std::string name, std::vector<std::size_t> cells) {
  std::vector<IntMatrix> d;
  for (std::size_t p = 0; p + 1 < cells.size(); ++p) d.push_back(IntMatrix::zero(cells[p + 1], cells[p]));
  return make_cw(std::move(name), std::move(cells), std::move(d));
}

FinAbGroup z2_power(long k) {
  std::vector<Integer> orders;
  if (k > 0) orders.push_back(Integer(1) << static_cast<unsigned long>(k));
  return FinAbGroup::from_cyclic_orders(1, orders);
}

}  // namespace

CWComplex builtin_cw(std::string_view name, long n) {
  if (name == "point") {
    CWComplex x = zero_differentials("point", {1});
    x.known = KnownKGroups{FinAbGroup::free(1), FinAbGroup()};
    return x;
  }
  if (name == "sphere") {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "sphere_cw needs n >= 1");
    std::vector<std::size_t> cells(static_cast<std::size_t>(n + 1), 0);
    cells.front() = 1;
    cells.back() = 1;
    CWComplex x = zero_differentials("sphere_cw(" + std::to_string(n) + ")", cells);
    x.known = n % 2 == 0 ? KnownKGroups{FinAbGroup::free(2), FinAbGroup()}
                         : KnownKGroups{FinAbGroup::free(1), FinAbGroup::free(1)};
    return x;
  }
  if (name == "cp") {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "cp_cw needs n >= 0");
    std::vector<std::size_t> cells(static_cast<std::size_t>(2 * n + 1), 0);
    for (std::size_t p = 0; p < cells.size(); p += 2) cells[p] = 1;
    CWComplex x = zero_differentials("cp_cw(" + std::to_string(n) + ")", cells);
    x.known = KnownKGroups{FinAbGroup::free(static_cast<std::size_t>(n + 1)), FinAbGroup()};
    return x;
  }
  if (name == "rp") {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "rp_cw needs n >= 1");
    std::vector<std::size_t> cells(static_cast<std::size_t>(n + 1), 1);
    std::vector<IntMatrix> d;
    // Multiplication by 0 out of even dimensions and by 2 out of odd ones.
    for (long p = 0; p < n; ++p) d.push_back(IntMatrix{{p % 2 == 0 ? 0L : 2L}});
    CWComplex x = make_cw("rp_cw(" + std::to_string(n) + ")", cells, d);
    x.known = KnownKGroups{z2_power(n / 2), n % 2 == 1 ? FinAbGroup::free(1) : FinAbGroup()};
    return x;
  }
  throw Error(ErrorCode::UnknownComplex, "unknown complex '" + std::string(name) + "'");
}

std::vector<std::string> builtin_cw_names() { return {"point", "sphere", "cp", "rp"}; }

FinAbGroup integral_cohomology(const CWComplex& x, int p) {
  if (p < 0 || p > x.dim()) {
    throw Error(ErrorCode::DegreeOutOfRange,
                "degree " + std::to_string(p) + " outside 0.." + std::to_string(x.dim()) + " for '" + x.name + "'");
  }
  return cochain_cohomology(x.coboundary(p - 1), x.coboundary(p));
}

long euler_characteristic(const CWComplex& x) {
  long chi = 0;
  for (std::size_t p = 0; p < x.cells.size(); ++p) {
    chi += (p % 2 == 0 ? 1 : -1) * static_cast<long>(x.cells[p]);
  }
  return chi;
}

}  // namespace kindex
