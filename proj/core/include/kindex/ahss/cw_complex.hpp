#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kindex/exactalg/fin_ab_group.hpp"
#include "kindex/exactalg/int_matrix.hpp"

namespace kindex {

struct KnownKGroups {
  FinAbGroup k0;
  FinAbGroup k1;
};

// Finite CW complex by cell counts and cellular coboundaries
// d^p : C^p -> C^{p+1} (matrix cells[p+1] x cells[p]) for p = 0..dim-1.
struct CWComplex {
  std::string name;
  std::vector<std::size_t> cells;
  std::vector<IntMatrix> coboundaries;
  std::optional<KnownKGroups> known;

  int dim() const { return static_cast<int>(cells.size()) - 1; }
  // d^p, or the appropriate zero map outside 0..dim-1.
  IntMatrix coboundary(int p) const;
};

// Checks shapes (InvalidArgument) and d^{p+1} d^p = 0 (CompositionNonzero).
void validate(const CWComplex& x);

CWComplex make_cw(std::string name, std::vector<std::size_t> cells, std::vector<IntMatrix> coboundaries);

// point, sphere (param n), cp (param n, real dim 2n), rp (param n).
CWComplex builtin_cw(std::string_view name, long param = 0);

std::vector<std::string> builtin_cw_names();

FinAbGroup integral_cohomology(const CWComplex& x, int p);

// sum (-1)^p cells[p]
long euler_characteristic(const CWComplex& x);

}  // namespace kindex
