#include "kindex_cli/gallery.hpp"

#include <algorithm>
#include <set>

#include "kindex/error.hpp"
#include "kindex_cli/app.hpp"

namespace kindex::cli {

namespace {

using Args = std::vector<std::string>;

std::vector<GalleryEntry> build() {
  std::vector<GalleryEntry> g = {
      // exact algebra
      {"alg-01", "exactalg", "Todd series through x^2", {"alg", "todd-series", "--order", "2"}, "/result/value",
       "[1, 1/2, 1/12]"},
      {"alg-02", "exactalg", "second power sum in elementary functions",
       {"alg", "power-sums", "--symbolic", "--count", "2", "--rank", "2"}, "/result/power_sums/1", "-2*e2 + e1^2"},
      // cohomology rings
      {"coh-01", "cohomring", "e(X)[X] on a genus-2 surface", {"space", "info", "--space", "riemann_surface", "--genus", "2"},
       "/result/value", "-2"},
      {"coh-02", "cohomring", "e(X)[X] on the genus-0 surface",
       {"space", "info", "--space", "riemann_surface", "--genus", "0"}, "/result/value", "2"},
      // characteristic classes
      {"cc-01", "charclass", "total Chern class of a trivial rank-2 bundle",
       {"charclass", "chern", "--space", "cp", "--n", "2", "--roots", "0,0"}, "/result/value", "1"},
      {"cc-02", "charclass", "Chern character of a trivial rank-3 bundle starts with its rank",
       {"charclass", "ch", "--space", "cp", "--n", "2", "--roots", "0,0,0"}, "/result/value", "3"},
      {"cc-03", "charclass", "Todd class of a line bundle on CP^1",
       {"charclass", "todd", "--space", "cp", "--n", "1", "--roots", "x"}, "/result/value", "1 + 1/2*x"},
      {"cc-04", "charclass", "Todd class of a trivial bundle",
       {"charclass", "todd", "--space", "cp", "--n", "2", "--roots", "0"}, "/result/value", "1"},
      {"cc-05", "charclass", "top Chern class of the tangent line of a genus-2 surface",
       {"charclass", "euler", "--space", "riemann_surface", "--genus", "2", "--roots", "-2*mu"}, "/result/value",
       "-2*mu"},
      {"cc-06", "charclass", "correction factor times Todd of the conjugate, rank 1",
       {"charclass", "mu-check", "--space", "cp", "--n", "1", "--roots", "x"}, "/result/value", "-1"},
      {"cc-07", "charclass", "conjugation negates the first Chern class",
       {"charclass", "conjugate", "--space", "cp", "--n", "2", "--roots", "x,0"}, "/result/total_chern", "1 - x"},
      {"cc-08", "charclass", "first Chern class of a tensor product of lines",
       {"charclass", "tensor", "--space", "cp", "--n", "2", "--roots", "x", "--roots2", "x"}, "/result/total_chern",
       "1 + 2*x"},
      {"cc-09", "charclass", "Todd class from c_1 alone",
       {"charclass", "multiplicative", "--space", "cp", "--n", "2", "--chern", "x", "--rank", "1"}, "/result/value",
       "1 + 1/2*x + 1/12*x^2"},
      // index theorems
      {"ix-01", "indexthm", "Dolbeault index on the sphere",
       {"index", "dolbeault", "--space", "riemann_surface", "--genus", "0"}, "/result/value", "1"},
      {"ix-02", "indexthm", "Dolbeault index on a torus",
       {"index", "dolbeault", "--space", "riemann_surface", "--genus", "1"}, "/result/value", "0"},
      {"ix-03", "indexthm", "Dolbeault index on a genus-2 surface",
       {"index", "dolbeault", "--space", "riemann_surface", "--genus", "2"}, "/result/value", "-1"},
      {"ix-04", "indexthm", "Dolbeault index on CP^1", {"index", "dolbeault", "--space", "cp", "--n", "1"},
       "/result/value", "1"},
      {"ix-05", "indexthm", "symbol-class form on the genus-0 surface",
       {"index", "form-b", "--space", "riemann_surface", "--genus", "0"}, "/result/value", "1"},
      {"ix-06", "indexthm", "symbol-class form on a genus-3 surface",
       {"index", "form-b", "--space", "riemann_surface", "--genus", "3"}, "/result/value", "-2"},
      {"ix-07", "indexthm", "de Rham index of a genus-2 surface",
       {"index", "de-rham", "--space", "riemann_surface", "--genus", "2"}, "/result/value", "-2"},
      {"ix-08", "indexthm", "de Rham index of the 2-sphere", {"index", "de-rham", "--space", "sphere", "--dim", "2"},
       "/result/value", "2"},
      {"ix-09", "indexthm", "index on the circle vanishes", {"index", "odd", "--dim", "1"}, "/result/value", "0"},
      {"ix-10", "indexthm", "index in dimension 3 vanishes", {"index", "odd", "--dim", "3"}, "/result/value", "0"},
      // circle operators
      {"circ-01", "circleop", "Wiener-Hopf index of z^3", {"circle", "index", "--symbol", "z^3"}, "/result/value", "-3"},
      {"circ-02", "circleop", "P_2 has cokernel of dimension 2", {"circle", "pn-dims", "--n", "2"}, "/result/value",
       "(0, 2)"},
      {"circ-03", "circleop", "P_-3 has kernel of dimension 3", {"circle", "pn-dims", "--n=-3"}, "/result/value",
       "(3, 0)"},
      {"circ-04", "circleop", "truncated Toeplitz count for z^2", {"circle", "oracle", "--symbol", "z^2"},
       "/result/value", "(0, 2)"},
      {"circ-05", "circleop", "d/dtheta has one-dimensional kernel and cokernel",
       {"circle", "const-coeff", "--symbol", "i*xi"}, "/result/value", "(1, 1, 0)"},
      {"circ-06", "circleop", "multiplication by e^(i theta) then projection has index -1",
       {"circle", "index", "--symbol", "z"}, "/result/value", "-1"},
      {"circ-07", "circleop", "constant-coefficient operator with kernels at two modes",
       {"rep", "homogeneous", "--symbol", "(xi-2)*(xi+5)"}, "/result/kernel_modes", "[-5, 2]"},
      // K(S^2)
      {"ks2-01", "ks2", "clutching by -z^-2 gives the complex tangent bundle", {"ks2", "clutch", "--symbol=-z^-2"},
       "/result/value", "1 + 2*b"},
      {"ks2-02", "ks2", "alpha of the Bott class", {"ks2", "alpha", "--class", "b"}, "/result/value", "1"},
      {"ks2-03", "ks2", "alpha of lambda_1", {"ks2", "alpha", "--class", "lambda1"}, "/result/value", "-1"},
      // spectral sequence
      {"ahss-01", "ahss", "H^2(RP^3)", {"ahss", "cohomology", "--space", "rp", "--n", "3", "--p", "2"},
       "/result/value", "Z/2"},
      {"ahss-02", "ahss", "H^3(RP^3)", {"ahss", "cohomology", "--space", "rp", "--n", "3", "--p", "3"},
       "/result/value", "Z"},
      {"ahss-03", "ahss", "H^0(RP^2)", {"ahss", "cohomology", "--space", "rp", "--n", "2", "--p", "0"},
       "/result/value", "Z"},
      {"ahss-04", "ahss", "H^1(RP^2)", {"ahss", "cohomology", "--space", "rp", "--n", "2", "--p", "1"},
       "/result/value", "0"},
      {"ahss-05", "ahss", "H^2(RP^2)", {"ahss", "cohomology", "--space", "rp", "--n", "2", "--p", "2"},
       "/result/value", "Z/2"},
      {"ahss-06", "ahss", "E_2 row of RP^5", {"ahss", "e2", "--space", "rp", "--n", "5"}, "/result/value",
       "[Z, 0, Z/2, 0, Z/2, Z]"},
      {"ahss-07", "ahss", "K^0 of CP^3 from the spectral sequence", {"ahss", "run", "--space", "cp", "--n", "3"},
       "/result/k0_pieces", "Z + Z + Z + Z"},
      {"ahss-08", "ahss", "K^1 of CP^3 vanishes", {"ahss", "run", "--space", "cp", "--n", "3"}, "/result/k1_pieces",
       "0"},
      {"ahss-09", "ahss", "CP^3 needs no extension choice", {"ahss", "run", "--space", "cp", "--n", "3"},
       "/result/extension_ambiguous", "false"},
      {"ahss-10", "ahss", "K^0 of S^6", {"ahss", "run", "--space", "sphere", "--n", "6"}, "/result/k0_pieces",
       "Z + Z"},
      {"ahss-11", "ahss", "K^1 of S^6 vanishes", {"ahss", "run", "--space", "sphere", "--n", "6"},
       "/result/k1_pieces", "0"},
      {"ahss-12", "ahss", "graded K^0 of RP^5", {"ahss", "run", "--space", "rp", "--n", "5"}, "/result/k0_pieces",
       "Z + Z/2 + Z/2"},
      {"ahss-13", "ahss", "graded K^1 of RP^5", {"ahss", "run", "--space", "rp", "--n", "5"}, "/result/k1_pieces", "Z"},
      {"ahss-14", "ahss", "RP^5 has an extension problem", {"ahss", "run", "--space", "rp", "--n", "5"},
       "/result/extension_ambiguous", "true"},
      {"ahss-15", "ahss", "known K^0 of RP^5", {"ahss", "run", "--space", "rp", "--n", "5"},
       "/result/known_answer/k0/text", "Z + Z/4"},
      {"ahss-16", "ahss", "known K^1 of RP^5", {"ahss", "run", "--space", "rp", "--n", "5"},
       "/result/known_answer/k1/text", "Z"},
      {"ahss-17", "ahss", "even-cell K-groups of CP^2", {"ahss", "even-cell", "--space", "cp", "--n", "2"},
       "/result/value", "Z^3, 0"},
      {"ahss-18", "ahss", "even-cell K-groups of S^4", {"ahss", "even-cell", "--space", "sphere", "--n", "4"},
       "/result/value", "Z^2, 0"},
      // representation rings
      {"rep-01", "repring", "w1 is a unit vector", {"rep", "inner", "--group", "z3", "--x", "w1", "--y", "w1"},
       "/result/value", "1"},
      {"rep-02", "repring", "distinct irreducibles are orthogonal",
       {"rep", "inner", "--group", "z3", "--x", "w1", "--y", "w2"}, "/result/value", "0"},
      {"rep-03", "repring", "d/dtheta as a homogeneous operator has index zero",
       {"rep", "homogeneous", "--symbol", "i*xi"}, "/result/value", "0"},
      {"rep-04", "repring", "d/dtheta has its kernel at the zero mode", {"rep", "homogeneous", "--symbol", "i*xi"},
       "/result/kernel_modes", "[0]"},
      {"rep-05", "repring", "operator with two kernel modes has index zero",
       {"rep", "homogeneous", "--symbol", "(xi-2)*(xi+5)"}, "/result/value", "0"},
      // command-line examples
      {"cli-01", "cli", "Dolbeault index of a genus-3 surface",
       {"index", "dolbeault", "--space", "riemann_surface", "--genus", "3"}, "/result/value", "-2"},
      {"cli-02", "cli", "Wiener-Hopf index of z^2", {"circle", "index", "--symbol", "z^2"}, "/result/value", "-2"},
      {"cli-03", "cli", "RP^5 report carries the known answer", {"ahss", "run", "--space", "rp", "--n", "5"},
       "/result/value", "K0: Z + Z/2 + Z/2; K1: Z"},
  };
  std::sort(g.begin(), g.end(), [](const GalleryEntry& a, const GalleryEntry& b) { return a.id < b.id; });
  return g;
}

std::string field_text(const Json& report, const std::string& pointer) {
  const Json::json_pointer ptr(pointer);
  if (!report.contains(ptr)) return "<missing " + pointer + ">";
  const Json& v = report.at(ptr);
  return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string join(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) {
    const bool quote = a.find(' ') != std::string::npos;
    out += (out.empty() ? "" : " ") + (quote ? "\"" + a + "\"" : a);
  }
  return out;
}

}  // namespace

const std::vector<GalleryEntry>& gallery_entries() {
  static const std::vector<GalleryEntry> entries = build();
  return entries;
}

Json run_gallery(const std::optional<std::string>& module) {
  std::set<std::string> modules;
  for (const auto& e : gallery_entries()) modules.insert(e.module);
  if (module && !modules.count(*module)) {
    throw Error(ErrorCode::InvalidArgument, "no gallery entries for module '" + *module + "'");
  }
  Json entries = Json::array();
  long passed = 0;
  long total = 0;
  for (const auto& e : gallery_entries()) {
    if (module && e.module != *module) continue;
    Args args = e.args;
    args.insert(args.begin(), {"--format", "json"});
    const Outcome o = run(args);
    const std::string computed =
        o.exit_code == 0 ? field_text(o.report, e.field) : "error " + field_text(o.report, "/error/code");
    const bool pass = o.exit_code == 0 && computed == e.expected;
    passed += pass ? 1 : 0;
    ++total;
    entries.push_back(Json{{"id", e.id},
                           {"module", e.module},
                           {"description", e.description},
                           {"command", join(e.args)},
                           {"field", e.field},
                           {"expected", e.expected},
                           {"computed", computed},
                           {"pass", pass}});
  }
  Json r;
  r["value"] = count(passed) + "/" + count(total) + " passed";
  r["all_pass"] = passed == total;
  r["passed"] = count(passed);
  r["total"] = count(total);
  r["entries"] = entries;
  return r;
}

}  // namespace kindex::cli
