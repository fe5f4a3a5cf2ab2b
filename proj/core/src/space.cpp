#include "kindex/cohomring/space.hpp"

#include "kindex/error.hpp"

namespace kindex {

namespace {

Space make_point() {
  auto ring = RingPresentation::free_truncated("point", {}, 0);
  return Space{"point", ring, GradedClass::constant(ring, Rational(1)), 0, TangentRoots{}, std::nullopt};
}

Space make_sphere(long dim) {
  if (dim < 2 || dim % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "sphere dimension must be even and at least 2, got " +
                                                std::to_string(dim));
  }
  const int d = static_cast<int>(dim);
  auto ring = RingPresentation::free_truncated("S^" + std::to_string(d), {{"u", d}}, d);
  // No root form; Td(TX (x) C) = 1 because every positive-degree class squares to zero
  // and the Todd factors of a +-root pair have no linear term.
  return Space{"sphere(" + std::to_string(d) + ")", ring, GradedClass::generator(ring, "u", Rational(2)),
               std::nullopt, std::nullopt, GradedClass::constant(ring, Rational(1))};
}

Space make_cp(long n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "cp(n) needs n >= 0");
  const int top = static_cast<int>(2 * n);
  if (n == 0) {
    Space p = make_point();
    p.name = "cp(0)";
    return p;
  }
  auto ring = RingPresentation::free_truncated("CP^" + std::to_string(n), {{"x", 2}}, top);
  const GradedClass x = GradedClass::generator(ring, "x");
  TangentRoots t{std::vector<GradedClass>(static_cast<std::size_t>(n + 1), x), -1};
  // Top elementary symmetric function of n+1 copies of x with one trivial root dropped.
  const GradedClass e = power(x, static_cast<unsigned>(n)) * Rational(n + 1);
  return Space{"cp(" + std::to_string(n) + ")", ring, e, static_cast<int>(n), t, std::nullopt};
}

Space make_surface(long g) {
  if (g < 0) throw Error(ErrorCode::InvalidArgument, "genus must be nonnegative");
  auto ring = RingPresentation::free_truncated("Sigma_" + std::to_string(g), {{"mu", 2}}, 2);
  const GradedClass root = GradedClass::generator(ring, "mu", Rational(2 - 2 * g));
  TangentRoots t{{root}, 0};
  return Space{"riemann_surface(" + std::to_string(g) + ")", ring, root, 1, t, std::nullopt};
}

}  // namespace

Space builtin_space(std::string_view name, long param) {
  if (name == "point") return make_point();
  if (name == "sphere") return make_sphere(param);
  if (name == "cp") return make_cp(param);
  if (name == "riemann_surface" || name == "surface") return make_surface(param);
  throw Error(ErrorCode::UnknownSpace, "unknown space '" + std::string(name) + "'");
}

std::vector<std::string> builtin_space_names() { return {"point", "sphere", "cp", "riemann_surface"}; }

}  // namespace kindex
