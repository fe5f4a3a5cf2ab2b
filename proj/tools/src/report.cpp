#include "kindex_cli/report.hpp"

#include <algorithm>

namespace kindex::cli {

std::string count(long n) { return std::to_string(n); }

std::string list_string(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "]";
}

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const GaussianRational& z) { return Json::array({z.re().to_string(), z.im().to_string()}); }

Json to_json(const FinAbGroup& g) {
  Json torsion = Json::array();
  for (const auto& d : g.torsion()) torsion.push_back(d.get_str());
  return Json{{"rank", count(static_cast<long>(g.free_rank()))}, {"torsion", torsion}, {"text", g.to_string()}};
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(row);
  }
  return Json{{"rows", count(static_cast<long>(m.rows()))}, {"cols", count(static_cast<long>(m.cols()))},
              {"entries", rows}};
}

Json to_json(const GradedClass& c) {
  const auto& ring = *c.ring();
  Json terms = Json::array();
  for (const auto& [mono, coeff] : c.terms()) {
    Json m = Json::object();
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] != 0) m[ring.generators()[i].name] = count(mono[i]);
    }
    terms.push_back(Json{{"monomial", m}, {"coefficient", coeff.to_string()}});
  }
  return Json{{"ring", ring.name()}, {"text", c.to_string()}, {"terms", terms}};
}

Json to_json(const LaurentPoly& p) {
  Json m = Json::object();
  for (const auto& [k, c] : p.coefficients()) m[std::to_string(k)] = to_json(c);
  return m;
}

Json to_json(const KS2Class& k) {
  return Json{{"rank", count(k.rank_part)}, {"bott", count(k.bott_part)}, {"text", k.to_string()}};
}

Json to_json(const RepElement& x) {
  Json coords = Json::object();
  if (x.group()->is_circle) {
    for (const auto& [n, c] : x.modes()) coords[std::to_string(n)] = count(c);
  } else {
    for (std::size_t a = 0; a < x.coords().size(); ++a) coords[x.group()->irreps[a]] = count(x.coords()[a]);
  }
  return Json{{"group", x.group()->name}, {"coefficients", coords}, {"text", x.to_string()}};
}

namespace {

Json graded_json(const std::vector<std::pair<int, FinAbGroup>>& g) {
  Json out = Json::array();
  for (const auto& [p, grp] : g) out.push_back(Json{{"p", count(p)}, {"group", to_json(grp)}});
  return out;
}

std::string graded_text(const std::vector<std::pair<int, FinAbGroup>>& g) {
  std::vector<std::string> parts;
  for (const auto& [p, grp] : g) {
    if (!grp.is_trivial()) parts.push_back(grp.to_string());
  }
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

}  // namespace

Json to_json(const KGroupsReport& r) {
  Json j{{"k0_graded", graded_json(r.k0_graded)},
         {"k1_graded", graded_json(r.k1_graded)},
         {"k0_pieces", graded_text(r.k0_graded)},
         {"k1_pieces", graded_text(r.k1_graded)},
         {"extension_ambiguous", r.extension_ambiguous}};
  if (r.known_answer) {
    j["known_answer"] = Json{{"k0", to_json(r.known_answer->k0)}, {"k1", to_json(r.known_answer->k1)}};
  } else {
    j["known_answer"] = nullptr;
  }
  return j;
}

Json to_json(const SpectralTable& t) {
  Json entries = Json::array();
  for (const auto& [key, g] : t.entries) {
    entries.push_back(Json{{"p", count(key.first)}, {"q_parity", key.second == 0 ? "even" : "odd"},
                           {"group", to_json(g)}});
  }
  Json diffs = Json::array();
  for (const auto& d : t.differentials_applied) diffs.push_back(d);
  return Json{{"page", count(t.page)}, {"entries", entries}, {"differentials", diffs}};
}

Json intermediates_json(const std::vector<std::pair<std::string, std::string>>& items) {
  Json out = Json::array();
  for (const auto& [k, v] : items) out.push_back(Json{{"name", k}, {"value", v}});
  return out;
}

std::string emit_json(const Json& report) { return report.dump(2) + "\n"; }

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_flat_array(const Json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
}

void flatten(const Json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object()) {
    if (v.empty()) rows.emplace_back(path, "{}");
    for (const auto& [k, child] : v.items()) flatten(child, path.empty() ? k : path + "." + k, rows);
  } else if (is_flat_array(v)) {
    std::vector<std::string> parts;
    for (const auto& e : v) parts.push_back(scalar_text(e));
    rows.emplace_back(path, list_string(parts));
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(path, scalar_text(v));
  }
}

}  // namespace

std::string render_table(const Json& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return out;
}

}  // namespace kindex::cli
