#include "kindex_cli/inputs.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "kindex/error.hpp"

namespace kindex::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::string scalar_string(const Json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  bad(what + " must be an exact number written as a string or an integer");
}

long long_field(const Json& j, const char* key, const std::string& what) {
  if (!j.contains(key)) bad(what + " is missing \"" + key + "\"");
  const Rational r = Rational::parse(scalar_string(j.at(key), what + "." + key));
  if (!r.is_integer()) bad(what + "." + key + " must be an integer");
  return r.to_long();
}

const Json& require(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) bad(what + " is missing \"" + key + "\"");
  return j.at(key);
}

}  // namespace

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Json parse_json_text(std::string_view text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    bad(origin + ": line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read input file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

IntMatrix int_matrix_from_json(const Json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) bad("matrix rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational v = Rational::parse(scalar_string(j[r][c], "matrix entry"));
      if (!v.is_integer()) bad("matrix entry must be an integer");
      m(r, c) = v.numerator();
    }
  }
  return m;
}

LaurentPoly laurent_from_json(const Json& j, std::string_view var) {
  if (j.is_string()) return parse_laurent(j.get<std::string>(), var);
  if (j.is_number_integer()) return LaurentPoly::constant(GaussianRational(Rational(j.get<long>())));
  if (!j.is_object()) bad("Laurent polynomial must be a string or an {exponent: [re, im]} map");
  LaurentPoly p;
  for (const auto& [k, v] : j.items()) {
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(k, &used);
      if (used != k.size()) throw std::invalid_argument(k);
    } catch (const std::exception&) {
      bad("exponent key '" + k + "' is not an integer");
    }
    GaussianRational c;
    if (v.is_array()) {
      if (v.size() != 2) bad("coefficient must be [re, im]");
      c = GaussianRational(Rational::parse(scalar_string(v[0], "re")), Rational::parse(scalar_string(v[1], "im")));
    } else {
      c = GaussianRational::parse(scalar_string(v, "coefficient"));
    }
    p = p + LaurentPoly::monomial(e, c);
  }
  return p;
}

LaurentMatrix symbol_from_json(const Json& j, std::string_view var) {
  if (j.is_object() && j.contains("symbol")) return LaurentMatrix::scalar(laurent_from_json(j.at("symbol"), var));
  const Json& m = require(j, "matrix", "symbol file");
  if (!m.is_array() || m.empty()) bad("\"matrix\" must be a nonempty array of rows");
  std::vector<std::vector<LaurentPoly>> rows;
  for (const auto& row : m) {
    if (!row.is_array() || row.size() != m.size()) bad("symbol matrix must be square");
    std::vector<LaurentPoly> r;
    for (const auto& e : row) r.push_back(laurent_from_json(e, var));
    rows.push_back(std::move(r));
  }
  return LaurentMatrix(std::move(rows));
}

LaurentMatrix parse_matrix_text(std::string_view text, std::string_view var) {
  std::vector<std::vector<LaurentPoly>> rows;
  for (const auto& row : split(text, ';')) {
    std::vector<LaurentPoly> r;
    for (const auto& e : split(row, ',')) r.push_back(parse_laurent(e, var));
    rows.push_back(std::move(r));
  }
  for (const auto& r : rows) {
    if (r.size() != rows.size()) bad("symbol matrix must be square, got a row of length " + std::to_string(r.size()));
  }
  return LaurentMatrix(std::move(rows));
}

CWComplex cw_from_json(const Json& j) {
  const Json& cells = require(j, "cells", "CW complex");
  if (!cells.is_array() || cells.empty()) bad("\"cells\" must be a nonempty array of counts");
  std::vector<std::size_t> counts;
  for (const auto& c : cells) {
    const Rational v = Rational::parse(scalar_string(c, "cell count"));
    if (!v.is_integer() || v.sign() < 0) bad("cell counts must be nonnegative integers");
    counts.push_back(static_cast<std::size_t>(v.to_long()));
  }
  std::vector<IntMatrix> d;
  if (j.contains("coboundaries")) {
    for (const auto& m : j.at("coboundaries")) d.push_back(int_matrix_from_json(m));
  } else {
    for (std::size_t p = 0; p + 1 < counts.size(); ++p) d.push_back(IntMatrix::zero(counts[p + 1], counts[p]));
  }
  const std::string name = j.contains("name") ? scalar_string(j.at("name"), "name") : "complex";
  return make_cw(name, std::move(counts), std::move(d));
}

std::vector<HigherDifferential> differentials_from_json(const Json& j) {
  const Json& list = j.is_object() ? require(j, "differentials", "differential file") : j;
  if (!list.is_array()) bad("differentials must be an array");
  std::vector<HigherDifferential> out;
  for (const auto& d : list) {
    out.push_back({static_cast<int>(long_field(d, "k", "differential")),
                   static_cast<int>(long_field(d, "p", "differential")),
                   int_matrix_from_json(require(d, "map", "differential"))});
  }
  return out;
}

namespace {

Cyclotomic cyclotomic_from_json(const Json& e) {
  if (!e.is_object()) return Cyclotomic::rational(Rational::parse(scalar_string(e, "character value")));
  const long m = long_field(e, "order", "character value");
  if (m < 1) bad("cyclotomic order must be positive");
  const Json& coords = require(e, "coords", "character value");
  Cyclotomic out(static_cast<unsigned>(m));
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const Rational c = Rational::parse(scalar_string(coords[k], "coordinate"));
    if (!c.is_zero()) out += Cyclotomic::root_power(static_cast<unsigned>(m), static_cast<long>(k)) * c;
  }
  return out;
}

}  // namespace

GroupPtr group_from_json(const Json& j) {
  auto g = std::make_shared<GroupData>();
  g->name = j.contains("name") ? scalar_string(j.at("name"), "name") : "group";
  g->order = 0;
  for (const auto& c : require(j, "classes", "group")) {
    ConjugacyClass cc;
    cc.name = c.contains("name") ? scalar_string(c.at("name"), "class name") : "c" + std::to_string(g->classes.size());
    cc.size = long_field(c, "size", "class");
    cc.element_order = long_field(c, "order", "class");
    g->order += cc.size;
    g->classes.push_back(cc);
  }
  if (j.contains("order")) g->order = long_field(j, "order", "group");
  for (const auto& row : require(j, "table", "group")) {
    std::vector<Cyclotomic> r;
    for (const auto& e : row) r.push_back(cyclotomic_from_json(e));
    g->table.push_back(std::move(r));
  }
  if (j.contains("irreps")) {
    for (const auto& n : j.at("irreps")) g->irreps.push_back(scalar_string(n, "irrep name"));
  } else {
    for (std::size_t a = 0; a < g->table.size(); ++a) g->irreps.push_back("w" + std::to_string(a));
  }
  validate_group(*g);
  return g;
}

RepElement parse_rep(const GroupPtr& g, std::string_view text) {
  const std::string s = trim(text);
  if (s.empty() || s == "0") return RepElement(g);
  static const std::regex coords_re(R"(\s*-?\d+(\s*,\s*-?\d+)*\s*)");
  if (!g->is_circle && std::regex_match(s, coords_re)) {
    std::vector<long> c;
    for (const auto& part : split(s, ',')) c.push_back(std::stol(part));
    return RepElement(g, std::move(c));
  }
  // Terms: [+|-] [coef *] name
  static const std::regex term_re(R"(\s*([+-])?\s*(?:(\d+)\s*\*?\s*)?([A-Za-z_][A-Za-z0-9_]*(?:\^-?\d+)?|1)\s*)");
  RepElement acc(g);
  auto it = s.cbegin();
  bool first = true;
  while (it != s.cend()) {
    std::smatch m;
    if (!std::regex_search(it, s.cend(), m, term_re, std::regex_constants::match_continuous)) {
      bad("position " + std::to_string(it - s.cbegin() + 1) + ": cannot read representation term in '" + s + "'");
    }
    if (!first && !m[1].matched) bad("missing '+' or '-' between terms in '" + s + "'");
    const long sign = m[1].matched && m[1].str() == "-" ? -1 : 1;
    const long coef = m[2].matched ? std::stol(m[2].str()) : 1;
    const std::string name = m[3].str();
    long alpha = -1;
    if (g->is_circle) {
      if (name == "1") {
        alpha = 0;
      } else if (name == "z") {
        alpha = 1;
      } else if (name.rfind("z^", 0) == 0) {
        alpha = std::stol(name.substr(2));
      } else {
        bad("circle characters are written z^n, got '" + name + "'");
      }
    } else {
      for (std::size_t a = 0; a < g->irreps.size(); ++a) {
        if (g->irreps[a] == name) alpha = static_cast<long>(a);
      }
      if (alpha < 0) bad("group " + g->name + " has no irreducible named '" + name + "'");
    }
    acc += (sign * coef) * RepElement::irreducible(g, alpha);
    it += m.length(0);
    first = false;
  }
  return acc;
}

KS2Class parse_ks2(std::string_view text) {
  const std::string s = trim(text);
  if (s == "b" || s == "bott") return bott_class();
  if (s == "lambda1") return lambda_one();
  if (s == "tangent") return line_class(-2);
  std::smatch m;
  if (std::regex_match(s, m, std::regex(R"(E(-?\d+))"))) return line_class(std::stol(m[1]));
  if (std::regex_match(s, m, std::regex(R"(\s*(-?\d+)\s*,\s*(-?\d+)\s*)"))) {
    return {std::stol(m[1]), std::stol(m[2])};
  }
  bad("K(S^2) class must be 'r,k' (meaning r + k*b), b, lambda1, tangent or E<n>; got '" + s + "'");
}

}  // namespace kindex::cli
