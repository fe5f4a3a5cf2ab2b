#pragma once

#include <string>

#include "kindex/circleop/laurent.hpp"
#include "kindex/circleop/winding.hpp"
#include "kindex/cohomring/ring.hpp"

namespace kindex {

// x * 1 + y * b in K(S^2), where 1 = [E_0] and b = [E_{-1}] - [E_0]; b^2 = 0.
struct KS2Class {
  long rank_part = 0;
  long bott_part = 0;

  std::string to_string() const;
  friend bool operator==(const KS2Class&, const KS2Class&) = default;
};

KS2Class ks2_add(const KS2Class& a, const KS2Class& c);
KS2Class ks2_sub(const KS2Class& a, const KS2Class& c);
KS2Class ks2_mul(const KS2Class& a, const KS2Class& c);

// [E_n] = 1 - n b: the line bundle clutched by a map of degree n.
KS2Class line_class(long n);
KS2Class bott_class();
// lambda_1 = [E_0] - [E_{-1}] = -b.
KS2Class lambda_one();

// Coefficient of b.
long alpha(const KS2Class& a);
// k * b.
KS2Class beta(long k);

// Class of the bundle clutched along the equator by f.
KS2Class clutch_class(const LaurentPoly& f, const WindingOptions& opts = {});
// Rank-N bundle clutched by a matrix function: (N - 1) + [E_{deg det f}].
KS2Class clutch_class(const LaurentMatrix& f, const WindingOptions& opts = {});

// ch on the sphere(2) ring with u[S^2] = 1: ch(x + y b) = x + y u.
GradedClass ks2_chern_character(const KS2Class& a);

}  // namespace kindex
