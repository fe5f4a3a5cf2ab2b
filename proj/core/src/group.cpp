#include "kindex/repring/group.hpp"

#include <numeric>
#include <regex>

#include "kindex/error.hpp"

namespace kindex {

long GroupData::dimension(std::size_t alpha) const {
  if (is_circle) return 1;
  return table.at(alpha).at(0).to_rational().to_long();
}

void validate_group(const GroupData& g) {
  if (g.is_circle) return;
  auto bad = [&](const std::string& what) {
    throw Error(ErrorCode::InvalidArgument, "group '" + g.name + "': " + what);
  };
  long total = 0;
  for (const auto& c : g.classes) total += c.size;
  if (total != g.order) bad("class sizes do not add up to the order");
  if (g.table.size() != g.irreps.size() || g.irreps.size() != g.classes.size()) bad("character table is not square");
  for (const auto& row : g.table) {
    if (row.size() != g.classes.size()) bad("character table row has the wrong length");
  }
  const std::size_t n = g.classes.size();
  Rational dims(0);
  for (std::size_t a = 0; a < n; ++a) {
    const Rational d = g.table[a][0].to_rational();
    dims += d * d;
    for (std::size_t b = 0; b < n; ++b) {
      Cyclotomic s;
      for (std::size_t c = 0; c < n; ++c) {
        s += g.table[a][c] * g.table[b][c].conj() * Rational(g.classes[c].size, g.order);
      }
      if (!(s == Cyclotomic::rational(Rational(a == b ? 1 : 0)))) bad("rows are not orthonormal");
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t c2 = 0; c2 < n; ++c2) {
      Cyclotomic s;
      for (std::size_t a = 0; a < n; ++a) s += g.table[a][c] * g.table[a][c2].conj();
      const Rational want = c == c2 ? Rational(g.order, g.classes[c].size) : Rational(0);
      if (!(s == Cyclotomic::rational(want))) bad("columns are not orthogonal");
    }
  }
  if (dims != Rational(g.order)) bad("sum of squared dimensions differs from the order");
}

namespace {

long element_order_in_cyclic(long j, long k) { return k / std::gcd(j, k); }

GroupPtr cyclic(long k) {
  if (k < 1 || k > 360) throw Error(ErrorCode::UnknownGroup, "cyclic group order out of range");
  auto g = std::make_shared<GroupData>();
  g->name = k == 1 ? "trivial" : "z" + std::to_string(k);
  g->order = k;
  const auto m = static_cast<unsigned>(k);
  for (long j = 0; j < k; ++j) {
    g->classes.push_back({j == 0 ? "e" : "g^" + std::to_string(j), 1, element_order_in_cyclic(j, k)});
  }
  for (long a = 0; a < k; ++a) {
    g->irreps.push_back(k == 1 ? "trivial" : "w" + std::to_string(a));
    std::vector<Cyclotomic> row;
    for (long j = 0; j < k; ++j) row.push_back(Cyclotomic::root_power(m, a * j));
    g->table.push_back(std::move(row));
  }
  validate_group(*g);
  return g;
}

GroupPtr cyclic_product(long a, long b) {
  if (a < 1 || b < 1 || a * b > 360) throw Error(ErrorCode::UnknownGroup, "product group order out of range");
  auto g = std::make_shared<GroupData>();
  g->name = "z" + std::to_string(a) + "xz" + std::to_string(b);
  g->order = a * b;
  const long l = std::lcm(a, b);
  for (long i = 0; i < a; ++i) {
    for (long j = 0; j < b; ++j) {
      g->classes.push_back({"(" + std::to_string(i) + "," + std::to_string(j) + ")", 1,
                            std::lcm(element_order_in_cyclic(i, a), element_order_in_cyclic(j, b))});
    }
  }
  for (long al = 0; al < a; ++al) {
    for (long be = 0; be < b; ++be) {
      g->irreps.push_back("w" + std::to_string(al) + "," + std::to_string(be));
      std::vector<Cyclotomic> row;
      for (long i = 0; i < a; ++i) {
        for (long j = 0; j < b; ++j) {
          row.push_back(Cyclotomic::root_power(static_cast<unsigned>(l), al * i * (l / a) + be * j * (l / b)));
        }
      }
      g->table.push_back(std::move(row));
    }
  }
  validate_group(*g);
  return g;
}

GroupPtr symmetric3() {
  auto g = std::make_shared<GroupData>();
  g->name = "s3";
  g->order = 6;
  g->classes = {{"e", 1, 1}, {"(12)", 3, 2}, {"(123)", 2, 3}};
  g->irreps = {"trivial", "sign", "standard"};
  auto r = [](long v) { return Cyclotomic::rational(Rational(v)); };
  g->table = {{r(1), r(1), r(1)}, {r(1), r(-1), r(1)}, {r(2), r(0), r(-1)}};
  validate_group(*g);
  return g;
}

GroupPtr circle() {
  auto g = std::make_shared<GroupData>();
  g->name = "circle";
  g->order = 0;
  g->is_circle = true;
  return g;
}

}  // namespace

GroupPtr builtin_group(std::string_view name) {
  const std::string s(name);
  std::smatch m;
  if (s == "trivial") return cyclic(1);
  if (s == "s3") return symmetric3();
  if (s == "circle") return circle();
  if (std::regex_match(s, m, std::regex(R"(z(\d{1,3}))"))) return cyclic(std::stol(m[1]));
  if (std::regex_match(s, m, std::regex(R"(z(\d{1,3})xz(\d{1,3}))"))) {
    return cyclic_product(std::stol(m[1]), std::stol(m[2]));
  }
  throw Error(ErrorCode::UnknownGroup, "unknown group '" + s + "'");
}

void validate_embedding(const SubgroupEmbedding& e) {
  auto bad = [&](const std::string& what) {
    throw Error(ErrorCode::InvalidArgument, "embedding '" + e.name + "': " + what);
  };
  if (!e.ambient || !e.subgroup) bad("missing group");
  if (e.subgroup->is_circle) bad("the circle is only supported as the ambient group");
  const auto& sub = e.subgroup->classes;
  if (e.ambient->is_circle) {
    if (e.rotation.size() != sub.size() || e.circle_denominator < 1) bad("rotation list does not match classes");
    for (std::size_t j = 0; j < sub.size(); ++j) {
      const long d = e.circle_denominator;
      const long r = ((e.rotation[j] % d) + d) % d;
      if (d / std::gcd(r, d) != sub[j].element_order) bad("rotation has the wrong order");
    }
    return;
  }
  if (e.class_map.size() != sub.size()) bad("class map does not match subgroup classes");
  if (e.ambient->order % e.subgroup->order != 0) bad("subgroup order does not divide ambient order");
  std::vector<long> hits(e.ambient->classes.size(), 0);
  for (std::size_t j = 0; j < sub.size(); ++j) {
    const std::size_t c = e.class_map[j];
    if (c >= e.ambient->classes.size()) bad("class index out of range");
    if (e.ambient->classes[c].element_order != sub[j].element_order) bad("element orders differ");
    hits[c] += sub[j].size;
  }
  for (std::size_t c = 0; c < hits.size(); ++c) {
    if (hits[c] > e.ambient->classes[c].size) bad("more subgroup elements than the ambient class holds");
  }
  if (e.class_map.empty() || e.class_map[0] != 0) bad("identity must map to the identity class");
}

SubgroupEmbedding builtin_embedding(std::string_view name) {
  const std::string s(name);
  std::smatch m;
  SubgroupEmbedding e;
  e.name = s;
  if (std::regex_match(s, m, std::regex(R"(z(\d{1,3})_in_z(\d{1,3}))"))) {
    const long k = std::stol(m[1]);
    const long n = std::stol(m[2]);
    if (k < 1 || n % k != 0) throw Error(ErrorCode::UnknownGroup, "z" + std::to_string(k) + " is not a subgroup of z" +
                                                                       std::to_string(n));
    e.ambient = builtin_group("z" + std::to_string(n));
    e.subgroup = builtin_group("z" + std::to_string(k));
    for (long j = 0; j < k; ++j) e.class_map.push_back(static_cast<std::size_t>(j * (n / k)));
  } else if (s == "z3_in_s3") {
    e.ambient = builtin_group("s3");
    e.subgroup = builtin_group("z3");
    e.class_map = {0, 2, 2};
  } else if (s == "z2_in_s3") {
    e.ambient = builtin_group("s3");
    e.subgroup = builtin_group("z2");
    e.class_map = {0, 1};
  } else if (std::regex_match(s, m, std::regex(R"(z(\d{1,3})_in_circle)"))) {
    const long k = std::stol(m[1]);
    e.ambient = builtin_group("circle");
    e.subgroup = builtin_group("z" + std::to_string(k));
    for (long j = 0; j < k; ++j) e.rotation.push_back(j);
    e.circle_denominator = k;
  } else if (s.rfind("trivial_in_", 0) == 0) {
    e.ambient = builtin_group(s.substr(11));
    e.subgroup = builtin_group("trivial");
    if (e.ambient->is_circle) {
      e.rotation = {0};
    } else {
      e.class_map = {0};
    }
  } else {
    throw Error(ErrorCode::UnknownGroup, "unknown embedding '" + s + "'");
  }
  validate_embedding(e);
  return e;
}

std::vector<std::string> builtin_group_names() { return {"trivial", "z<k>", "z<a>xz<b>", "s3", "circle"}; }

std::vector<std::string> builtin_embedding_names() {
  return {"z<k>_in_z<n>", "z3_in_s3", "z2_in_s3", "trivial_in_<group>", "z<k>_in_circle"};
}

}  // namespace kindex
