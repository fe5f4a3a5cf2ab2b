#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kindex/ahss/cw_complex.hpp"

namespace kindex {

// Page of the spectral sequence for complex K-theory.  Keys are (p, q mod 2);
// odd rows are always trivial.
struct SpectralTable {
  int page = 2;
  std::map<std::pair<int, int>, FinAbGroup> entries;
  std::vector<std::string> differentials_applied;

  const FinAbGroup& at(int p, int q) const;
  friend bool operator==(const SpectralTable&, const SpectralTable&) = default;
};

// d_k : E_k^{p,q} -> E_k^{p+k,q-k+1} (k odd >= 3), in the canonical generator
// bases of the two groups (torsion generators first, then free).
struct HigherDifferential {
  int k = 3;
  int p = 0;
  IntMatrix map;
};

struct KGroupsReport {
  // (p, Gr_p) for even p (K^0) and odd p (K^1), all p in 0..dim.
  std::vector<std::pair<int, FinAbGroup>> k0_graded;
  std::vector<std::pair<int, FinAbGroup>> k1_graded;
  bool extension_ambiguous = false;
  std::optional<KnownKGroups> known_answer;

  friend bool operator==(const KGroupsReport& a, const KGroupsReport& b) {
    return a.k0_graded == b.k0_graded && a.k1_graded == b.k1_graded &&
           a.extension_ambiguous == b.extension_ambiguous && a.known_answer.has_value() == b.known_answer.has_value() &&
           (!a.known_answer || (a.known_answer->k0 == b.known_answer->k0 && a.known_answer->k1 == b.known_answer->k1));
  }
};

struct AhssResult {
  SpectralTable e_infinity;
  KGroupsReport report;
};

SpectralTable ahss_e2(const CWComplex& x);

AhssResult ahss_run(const CWComplex& x, const std::vector<HigherDifferential>& higher = {});

// Cells only in even dimensions: K^0 = Z^cells, K^1 = 0.
KGroupsReport k_groups_even_cell(const CWComplex& x);

// Relation matrix of the canonical presentation: one column t_i e_i per torsion generator.
IntMatrix relation_matrix(const FinAbGroup& g);

// ker(d_out) / im(d_in) for homomorphisms between canonical presentations
// A -> B -> C.  Checks well-definedness and d_out d_in = 0.
FinAbGroup homology_of_presented(const FinAbGroup& a, const FinAbGroup& b, const FinAbGroup& c,
                                 const IntMatrix& d_in, const IntMatrix& d_out);

// Whether a graded list (in filtration order) admits a nontrivial extension.
bool extension_ambiguous(const std::vector<std::pair<int, FinAbGroup>>& graded);

}  // namespace kindex
