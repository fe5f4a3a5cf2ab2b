#include <algorithm>
#include <functional>
#include <numeric>

#include "kindex/cohomring/ring.hpp"
#include "kindex/error.hpp"

namespace kindex {

namespace {

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > m[i]) return false;
  }
  return true;
}

}  // namespace

RingPresentation::RingPresentation(std::string name, std::vector<Generator> generators,
                                   std::vector<RewriteRule> rules, int top_degree, Monomial fundamental)
    : name_(std::move(name)),
      generators_(std::move(generators)),
      rules_(std::move(rules)),
      top_degree_(top_degree),
      fundamental_(std::move(fundamental)) {
  if (top_degree_ < 0 || top_degree_ % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "ring '" + name_ + "': top degree must be even and nonnegative");
  }
  for (const auto& g : generators_) {
    if (g.degree <= 0 || g.degree % 2 != 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "ring '" + name_ + "': generator '" + g.name + "' must have even positive degree");
    }
  }
  const std::size_t n = generators_.size();
  for (const auto& r : rules_) {
    if (r.lhs.size() != n) throw Error(ErrorCode::InvalidArgument, "rewrite rule arity mismatch");
    for (const auto& [m, c] : r.rhs) {
      if (m.size() != n) throw Error(ErrorCode::InvalidArgument, "rewrite rule arity mismatch");
      if (!precedes(m, r.lhs)) {
        throw Error(ErrorCode::InvalidArgument,
                    "ring '" + name_ + "': rewrite rule does not decrease the monomial order");
      }
    }
  }
  if (fundamental_.size() != n || degree(fundamental_) != top_degree_ || !is_reduced(fundamental_)) {
    throw Error(ErrorCode::InvalidArgument,
                "ring '" + name_ + "': fundamental monomial must be a reduced monomial of top degree");
  }
}

std::shared_ptr<const RingPresentation> RingPresentation::free_truncated(std::string name,
                                                                         std::vector<Generator> generators,
                                                                         int top_degree) {
  // Fundamental monomial: fill the top degree greedily with the first generator
  // that fits; callers of free rings rarely evaluate against it.
  Monomial fundamental(generators.size(), 0);
  int remaining = top_degree;
  for (std::size_t i = 0; i < generators.size() && remaining > 0; ++i) {
    fundamental[i] = remaining / generators[i].degree;
    remaining -= fundamental[i] * generators[i].degree;
  }
  if (remaining != 0) {
    throw Error(ErrorCode::InvalidArgument, "free ring has no monomial of the top degree");
  }
  return std::make_shared<const RingPresentation>(std::move(name), std::move(generators),
                                                  std::vector<RewriteRule>{}, top_degree, fundamental);
}

std::optional<std::size_t> RingPresentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  return std::nullopt;
}

int RingPresentation::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * generators_[i].degree;
  return d;
}

bool RingPresentation::is_reduced(const Monomial& m) const {
  if (degree(m) > top_degree_) return false;
  return std::none_of(rules_.begin(), rules_.end(), [&](const RewriteRule& r) { return divides(r.lhs, m); });
}

bool RingPresentation::precedes(const Monomial& a, const Monomial& b) const {
  const int da = degree(a);
  const int db = degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Terms RingPresentation::reduce(const Terms& terms, std::span<const std::size_t> rule_order) const {
  std::vector<std::size_t> order;
  if (rule_order.empty()) {
    order.resize(rules_.size());
    std::iota(order.begin(), order.end(), 0);
  } else {
    order.assign(rule_order.begin(), rule_order.end());
  }
  Terms out;
  std::vector<std::pair<Monomial, Rational>> work(terms.begin(), terms.end());
  while (!work.empty()) {
    auto [m, c] = std::move(work.back());
    work.pop_back();
    if (c.is_zero() || degree(m) > top_degree_) continue;
    const RewriteRule* hit = nullptr;
    for (std::size_t idx : order) {
      if (divides(rules_[idx].lhs, m)) {
        hit = &rules_[idx];
        break;
      }
    }
    if (!hit) {
      out[m] += c;
      continue;
    }
    for (const auto& [rm, rc] : hit->rhs) {
      Monomial next = rm;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] += m[i] - hit->lhs[i];
      work.emplace_back(std::move(next), c * rc);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::vector<Monomial> RingPresentation::basis(int target) const {
  std::vector<Monomial> out;
  if (target < 0 || target > top_degree_) return out;
  Monomial m(generators_.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == generators_.size()) {
      if (remaining == 0 && is_reduced(m)) out.push_back(m);
      return;
    }
    for (int e = 0; e * generators_[i].degree <= remaining; ++e) {
      m[i] = e;
      rec(i + 1, remaining - e * generators_[i].degree);
    }
    m[i] = 0;
  };
  rec(0, target);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> RingPresentation::full_basis() const {
  std::vector<Monomial> out;
  for (int d = 0; d <= top_degree_; d += 2) {
    auto b = basis(d);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

bool operator==(const RingPresentation& a, const RingPresentation& b) {
  if (a.name_ != b.name_ || a.top_degree_ != b.top_degree_ || a.fundamental_ != b.fundamental_) return false;
  if (a.generators_.size() != b.generators_.size() || a.rules_.size() != b.rules_.size()) return false;
  for (std::size_t i = 0; i < a.generators_.size(); ++i) {
    if (a.generators_[i].name != b.generators_[i].name || a.generators_[i].degree != b.generators_[i].degree) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.rules_.size(); ++i) {
    if (a.rules_[i].lhs != b.rules_[i].lhs || a.rules_[i].rhs != b.rules_[i].rhs) return false;
  }
  return true;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace kindex
