#include "kindex/circleop/ks2.hpp"

#include "kindex/cohomring/space.hpp"

namespace kindex {

std::string KS2Class::to_string() const {
  if (bott_part == 0) return std::to_string(rank_part);
  std::string b = (bott_part == 1 ? "" : (bott_part == -1 ? "-" : std::to_string(bott_part) + "*")) + "b";
  if (rank_part == 0) return b;
  if (bott_part < 0) {
    const long m = -bott_part;
    return std::to_string(rank_part) + " - " + (m == 1 ? "" : std::to_string(m) + "*") + "b";
  }
  return std::to_string(rank_part) + " + " + b;
}

KS2Class ks2_add(const KS2Class& a, const KS2Class& c) {
  return {a.rank_part + c.rank_part, a.bott_part + c.bott_part};
}

KS2Class ks2_sub(const KS2Class& a, const KS2Class& c) {
  return {a.rank_part - c.rank_part, a.bott_part - c.bott_part};
}

KS2Class ks2_mul(const KS2Class& a, const KS2Class& c) {
  return {a.rank_part * c.rank_part, a.rank_part * c.bott_part + a.bott_part * c.rank_part};
}

KS2Class line_class(long n) { return {1, -n}; }
KS2Class bott_class() { return {0, 1}; }
KS2Class lambda_one() { return {0, -1}; }

long alpha(const KS2Class& a) { return a.bott_part; }
KS2Class beta(long k) { return {0, k}; }

KS2Class clutch_class(const LaurentPoly& f, const WindingOptions& opts) {
  return line_class(winding_number(f, opts));
}

KS2Class clutch_class(const LaurentMatrix& f, const WindingOptions& opts) {
  const long deg = winding_number(determinant(f), opts);
  return ks2_add({static_cast<long>(f.size()) - 1, 0}, line_class(deg));
}

GradedClass ks2_chern_character(const KS2Class& a) {
  static const RingPtr ring = builtin_space("sphere", 2).ring;
  return GradedClass::constant(ring, Rational(a.rank_part)) + GradedClass::generator(ring, "u", Rational(a.bott_part));
}

}  // namespace kindex
