#include "kindex/ahss/spectral.hpp"

#include <algorithm>
#include <set>

#include "kindex/error.hpp"

namespace kindex {

const FinAbGroup& SpectralTable::at(int p, int q) const {
  static const FinAbGroup trivial;
  const auto it = entries.find({p, ((q % 2) + 2) % 2});
  return it == entries.end() ? trivial : it->second;
}

IntMatrix relation_matrix(const FinAbGroup& g) {
  const std::size_t t = g.torsion().size();
  IntMatrix r(g.generator_count(), t);
  for (std::size_t i = 0; i < t; ++i) r(i, i) = g.torsion()[i];
  return r;
}

namespace {

// Column v (as column j of m) lies in the relation lattice of g.
bool column_is_relation(const FinAbGroup& g, const IntMatrix& m, std::size_t j) {
  const std::size_t t = g.torsion().size();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r < t) {
      if (!mpz_divisible_p(m(r, j).get_mpz_t(), g.torsion()[r].get_mpz_t())) return false;
    } else if (m(r, j) != 0) {
      return false;
    }
  }
  return true;
}

void check_shape(const IntMatrix& d, const FinAbGroup& src, const FinAbGroup& dst, const std::string& what) {
  if (d.rows() != dst.generator_count() || d.cols() != src.generator_count()) {
    throw Error(ErrorCode::InvalidDifferential,
                what + " must be " + std::to_string(dst.generator_count()) + "x" +
                    std::to_string(src.generator_count()) + ", got " + std::to_string(d.rows()) + "x" +
                    std::to_string(d.cols()));
  }
}

void check_well_defined(const IntMatrix& d, const FinAbGroup& src, const FinAbGroup& dst, const std::string& what) {
  check_shape(d, src, dst, what);
  const IntMatrix image_of_relations = d * relation_matrix(src);
  for (std::size_t j = 0; j < image_of_relations.cols(); ++j) {
    if (!column_is_relation(dst, image_of_relations, j)) {
      throw Error(ErrorCode::InvalidDifferential, what + " does not respect the torsion of its source");
    }
  }
}

IntMatrix first_rows(const IntMatrix& m, std::size_t rows) {
  IntMatrix out(rows, m.cols());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

IntMatrix first_cols(const IntMatrix& m, std::size_t cols) {
  IntMatrix out(m.rows(), cols);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = m(r, c);
  }
  return out;
}

}  // namespace

FinAbGroup homology_of_presented(const FinAbGroup& a, const FinAbGroup& b, const FinAbGroup& c,
                                 const IntMatrix& d_in, const IntMatrix& d_out) {
  check_well_defined(d_in, a, b, "incoming differential");
  check_well_defined(d_out, b, c, "outgoing differential");
  const IntMatrix comp = d_out * d_in;
  for (std::size_t j = 0; j < comp.cols(); ++j) {
    if (!column_is_relation(c, comp, j)) {
      throw Error(ErrorCode::InvalidDifferential, "consecutive differentials do not compose to zero");
    }
  }
  const std::size_t m = b.generator_count();
  if (m == 0) return {};

  // Preimage of the relations of C under d_out, as a lattice in Z^m.
  IntMatrix span;
  if (c.generator_count() == 0) {
    span = IntMatrix::identity(m);
  } else {
    span = first_rows(integer_kernel(horizontal_concat(d_out, relation_matrix(c))), m);
  }
  if (span.cols() == 0) return {};
  const SmithForm sf = smith_normal_form(span);
  const std::size_t r = sf.rank();
  if (r == 0) return {};
  const IntMatrix basis = first_cols(span * sf.v, r);

  const IntMatrix rel = horizontal_concat(d_in, relation_matrix(b));
  if (rel.cols() == 0) return FinAbGroup::free(r);
  return FinAbGroup::cokernel(solve_full_column_rank(basis, rel));
}

SpectralTable ahss_e2(const CWComplex& x) {
  validate(x);
  SpectralTable t;
  t.page = 2;
  for (int p = 0; p <= x.dim(); ++p) {
    t.entries[{p, 0}] = integral_cohomology(x, p);
    t.entries[{p, 1}] = FinAbGroup();
  }
  return t;
}

bool extension_ambiguous(const std::vector<std::pair<int, FinAbGroup>>& graded) {
  // Gr_p with torsion Z/a extends by the higher filtration; Ext(Z/a, B) != 0
  // iff B has a free summand or torsion sharing a factor with a.
  for (std::size_t i = 0; i < graded.size(); ++i) {
    for (const Integer& a : graded[i].second.torsion()) {
      for (std::size_t j = 0; j < graded.size(); ++j) {
        if (graded[j].first <= graded[i].first) continue;
        const FinAbGroup& hi = graded[j].second;
        if (hi.free_rank() > 0) return true;
        for (const Integer& b : hi.torsion()) {
          Integer g;
          mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
          if (g > 1) return true;
        }
      }
    }
  }
  return false;
}

namespace {

KGroupsReport assemble(const SpectralTable& t, int dim) {
  KGroupsReport rep;
  for (int p = 0; p <= dim; ++p) {
    // Gr_p K^0 = E^{p,-p}, Gr_p K^1 = E^{p,1-p}; only even rows survive.
    if (p % 2 == 0) {
      rep.k0_graded.emplace_back(p, t.at(p, 0));
    } else {
      rep.k1_graded.emplace_back(p, t.at(p, 0));
    }
  }
  rep.extension_ambiguous = extension_ambiguous(rep.k0_graded) || extension_ambiguous(rep.k1_graded);
  return rep;
}

}  // namespace

AhssResult ahss_run(const CWComplex& x, const std::vector<HigherDifferential>& higher) {
  SpectralTable t = ahss_e2(x);
  const int dim = x.dim();
  std::set<std::pair<int, int>> seen;
  for (const auto& d : higher) {
    if (d.k < 3 || d.k % 2 == 0) {
      throw Error(ErrorCode::InvalidDifferential, "only odd differentials d_k with k >= 3 can be nonzero");
    }
    if (d.p < 0 || d.p + d.k > dim) {
      throw Error(ErrorCode::InvalidDifferential, "d_" + std::to_string(d.k) + " from p = " + std::to_string(d.p) +
                                                      " leaves the range 0.." + std::to_string(dim));
    }
    if (!seen.insert({d.k, d.p}).second) {
      throw Error(ErrorCode::InvalidDifferential, "d_" + std::to_string(d.k) + " at p = " + std::to_string(d.p) +
                                                      " given twice");
    }
  }
  t.differentials_applied.push_back("d_2 = 0");
  for (int k = 3; k <= dim; k += 2) {
    std::map<int, IntMatrix> at_page;
    for (const auto& d : higher) {
      if (d.k == k) at_page.emplace(d.p, d.map);
    }
    if (!at_page.empty()) {
      auto diff = [&](int p) -> IntMatrix {
        const auto it = at_page.find(p);
        if (it != at_page.end()) return it->second;
        return IntMatrix::zero(t.at(p + k, 0).generator_count(), t.at(p, 0).generator_count());
      };
      std::map<std::pair<int, int>, FinAbGroup> next = t.entries;
      for (int p = 0; p <= dim; ++p) {
        if (!at_page.count(p) && !at_page.count(p - k)) continue;
        next[{p, 0}] = homology_of_presented(t.at(p - k, 0), t.at(p, 0), t.at(p + k, 0), diff(p - k), diff(p));
      }
      for (const auto& [p, m] : at_page) {
        t.differentials_applied.push_back("d_" + std::to_string(k) + ": E^{" + std::to_string(p) + "} -> E^{" +
                                          std::to_string(p + k) + "} = " + m.to_string());
      }
      t.entries = std::move(next);
    }
    t.differentials_applied.push_back("d_" + std::to_string(k + 1) + " = 0");
  }
  t.page = std::max(dim + 2, 3);
  AhssResult res{t, assemble(t, dim)};
  res.report.known_answer = x.known;
  return res;
}

KGroupsReport k_groups_even_cell(const CWComplex& x) {
  validate(x);
  for (std::size_t p = 1; p < x.cells.size(); p += 2) {
    if (x.cells[p] != 0) {
      throw Error(ErrorCode::OddCellsPresent, "'" + x.name + "' has cells in dimension " + std::to_string(p));
    }
  }
  KGroupsReport rep;
  for (int p = 0; p <= x.dim(); ++p) {
    if (p % 2 == 0) {
      rep.k0_graded.emplace_back(p, FinAbGroup::free(x.cells[static_cast<std::size_t>(p)]));
    } else {
      rep.k1_graded.emplace_back(p, FinAbGroup());
    }
  }
  rep.known_answer = x.known;
  return rep;
}

}  // namespace kindex
