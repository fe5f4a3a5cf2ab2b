#pragma once

#include <cstddef>

#include "kindex/circleop/laurent.hpp"

namespace kindex {

struct WindingOptions {
  // Maximum number of interval bisections below the initial grid.
  int max_depth = 24;
};

struct WindingResult {
  long winding = 0;
  std::size_t samples = 0;  // accepted sample intervals
  int depth_reached = 0;
};

// Rational point ((1 - t^2) + 2ti) / (1 + t^2) on the unit circle.
GaussianRational circle_point(const Rational& t);

WindingResult winding_details(const LaurentPoly& q, const WindingOptions& opts = {});
long winding_number(const LaurentPoly& q, const WindingOptions& opts = {});

// Index of the Wiener-Hopf operator with symbol f: minus the winding of det f.
long wiener_hopf_index(const LaurentMatrix& f, const WindingOptions& opts = {});

struct KerCoker {
  long ker = 0;
  long coker = 0;
  long index() const { return ker - coker; }
  friend bool operator==(const KerCoker&, const KerCoker&) = default;
};

// Kernel and cokernel of the operator with symbol e^{in theta}.
KerCoker explicit_pn_dims(long n);

}  // namespace kindex
