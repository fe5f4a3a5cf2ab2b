#include "kindex/exactalg/fin_ab_group.hpp"

#include "kindex/error.hpp"

namespace kindex {

FinAbGroup FinAbGroup::from_cyclic_orders(std::size_t free_rank, const std::vector<Integer>& orders) {
  std::vector<Integer> nonzero;
  for (const auto& d : orders) {
    if (d == 0) {
      ++free_rank;
    } else {
      nonzero.push_back(abs(d));
    }
  }
  FinAbGroup g;
  g.free_rank_ = free_rank;
  if (nonzero.empty()) return g;
  const IntMatrix diag = IntMatrix::diagonal(nonzero.size(), nonzero.size(), nonzero);
  for (const auto& d : smith_normal_form(diag).diagonal()) {
    if (d > 1) g.torsion_.push_back(d);
  }
  return g;
}

FinAbGroup FinAbGroup::cyclic(long order) {
  return from_cyclic_orders(0, {Integer(order)});
}

FinAbGroup FinAbGroup::cokernel(const IntMatrix& m) {
  const SmithForm f = smith_normal_form(m);
  FinAbGroup g;
  const std::size_t r = f.rank();
  g.free_rank_ = m.rows() - r;
  for (const auto& d : f.diagonal()) {
    if (d > 1) g.torsion_.push_back(d);
  }
  return g;
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank_ > 0) out = free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_);
  for (const auto& d : torsion_) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  return out;
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<Integer> orders = a.torsion();
  orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  return FinAbGroup::from_cyclic_orders(a.free_rank() + b.free_rank(), orders);
}

FinAbGroup cochain_cohomology(const IntMatrix& d_in, const IntMatrix& d_out) {
  if (d_in.rows() != d_out.cols()) {
    throw Error(ErrorCode::InvalidArgument, "cochain maps do not share the middle group");
  }
  if (!(d_out * d_in).is_zero()) {
    throw Error(ErrorCode::CompositionNonzero, "d_out * d_in is not zero");
  }
  const std::size_t n = d_in.rows();
  const SmithForm in = smith_normal_form(d_in);
  const SmithForm out = smith_normal_form(d_out);
  // ker(d_out) is a direct summand of Z^n containing im(d_in), so the torsion
  // of the quotient is the torsion of coker(d_in).
  std::vector<Integer> torsion;
  for (const auto& d : in.diagonal()) {
    if (d > 1) torsion.push_back(d);
  }
  return FinAbGroup::from_cyclic_orders(n - in.rank() - out.rank(), torsion);
}

}  // namespace kindex
