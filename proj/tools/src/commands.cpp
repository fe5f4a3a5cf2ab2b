#include <algorithm>
#include <functional>
#include <map>

#include <CLI11.hpp>

#include "kindex/ahss/spectral.hpp"
#include "kindex/charclass/classes.hpp"
#include "kindex/circleop/ks2.hpp"
#include "kindex/circleop/toeplitz.hpp"
#include "kindex/circleop/winding.hpp"
#include "kindex/cohomring/parse.hpp"
#include "kindex/cohomring/space.hpp"
#include "kindex/error.hpp"
#include "kindex/exactalg/symmetric.hpp"
#include "kindex/indexthm/index.hpp"
#include "kindex/repring/homogeneous.hpp"
#include "kindex_cli/app.hpp"
#include "kindex_cli/gallery.hpp"
#include "kindex_cli/inputs.hpp"

namespace kindex::cli {

namespace {

struct Options {
  std::string format = "table";
  std::optional<int> degree_cap;
  std::optional<long> mode_bound;
  std::optional<int> grid_depth;
  std::optional<std::string> output;

  std::optional<std::string> space;
  std::optional<std::string> file;
  std::optional<long> genus;
  std::optional<long> n;
  std::optional<long> dim;
  std::optional<long> p;
  std::optional<long> k;
  std::optional<long> q;

  std::optional<std::string> roots;
  std::optional<std::string> roots2;
  int rank_adjustment = 0;
  bool tangent = false;
  std::optional<std::string> chern;
  std::string series = "todd";
  std::optional<long> rank;

  std::optional<std::string> cls;
  std::optional<std::string> cls2;
  std::optional<std::string> by;
  std::optional<std::string> u;
  std::string complex = "dolbeault";

  std::optional<std::string> symbol;
  std::optional<std::string> matrix;
  std::optional<std::string> var;
  int start_bound = 0;

  std::optional<std::string> elementary;
  long count = 4;
  bool symbolic = false;
  long order = 4;
  std::optional<std::string> int_matrix;
  std::optional<std::string> d_in;
  std::optional<std::string> d_out;
  std::optional<std::string> differentials;

  std::optional<std::string> group;
  std::optional<std::string> embedding;
  std::optional<std::string> x;
  std::optional<std::string> y;
  std::optional<std::string> m_class;
  std::optional<std::string> n_class;
  std::optional<std::string> module;
};

struct Payload {
  Json input = Json::object();
  Json result = Json::object();
  std::vector<std::pair<std::string, std::string>> intermediates;
  std::string note;
};

using Handler = std::function<Payload()>;

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

template <typename T>
const T& need(const std::optional<T>& v, const std::string& flag) {
  if (!v) usage("missing required option " + flag);
  return *v;
}

std::string strip_suffix(std::string s, const std::string& suffix) {
  if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
    s.resize(s.size() - suffix.size());
  }
  return s;
}

class Commands {
 public:
  explicit Commands(Options& o) : o_(o) {}

  WindingOptions winding_opts() const {
    WindingOptions w;
    if (o_.grid_depth) {
      if (*o_.grid_depth < 1) throw Error(ErrorCode::InvalidArgument, "--grid-depth must be positive");
      w.max_depth = *o_.grid_depth;
    }
    return w;
  }

  long space_param() const {
    if (o_.genus) return *o_.genus;
    if (o_.n) return *o_.n;
    if (o_.dim) return *o_.dim;
    return 0;
  }

  void record_space(Payload& out) const {
    out.input["space"] = *o_.space;
    if (o_.genus) out.input["genus"] = count(*o_.genus);
    if (o_.n) out.input["n"] = count(*o_.n);
    if (o_.dim) out.input["dim"] = count(*o_.dim);
  }

  Space space(Payload& out) const {
    record_space(out);
    return builtin_space(need(o_.space, "--space"), space_param());
  }

  CWComplex complex(Payload& out) const {
    if (o_.file) {
      out.input["file"] = *o_.file;
      return cw_from_json(read_json_file(*o_.file));
    }
    record_space(out);
    return builtin_cw(strip_suffix(need(o_.space, "--space or --file"), "_cw"), space_param());
  }

  std::string var(const char* fallback) const { return o_.var.value_or(fallback); }

  LaurentMatrix symbol_matrix(Payload& out, const char* fallback_var) const {
    const std::string v = var(fallback_var);
    const int sources = (o_.symbol ? 1 : 0) + (o_.matrix ? 1 : 0) + (o_.file ? 1 : 0);
    if (sources != 1) usage("give exactly one of --symbol, --matrix, --file");
    if (o_.symbol) {
      out.input["symbol"] = *o_.symbol;
      return LaurentMatrix::scalar(parse_laurent(*o_.symbol, v));
    }
    if (o_.matrix) {
      out.input["matrix"] = *o_.matrix;
      return parse_matrix_text(*o_.matrix, v);
    }
    out.input["file"] = *o_.file;
    return symbol_from_json(read_json_file(*o_.file), v);
  }

  LaurentPoly scalar_symbol(Payload& out, const char* fallback_var) const {
    const LaurentMatrix m = symbol_matrix(out, fallback_var);
    if (m.size() != 1) throw Error(ErrorCode::InvalidArgument, "this command takes a scalar symbol");
    return m(0, 0);
  }

  RootBundle bundle(const Space& s, const std::optional<std::string>& roots, const char* flag, Payload& out) const {
    if (o_.tangent && flag == std::string("--roots")) {
      if (!s.complex_tangent) {
        throw Error(ErrorCode::MissingComplexStructure, s.name + " carries no complex tangent roots");
      }
      out.input["bundle"] = "tangent";
      return RootBundle::from_tangent(s.ring, *s.complex_tangent);
    }
    const std::string text = need(roots, flag);
    out.input[std::string(flag).substr(2)] = text;
    std::vector<GradedClass> rs;
    if (!text.empty()) {
      for (const auto& part : split(text, ',')) rs.push_back(parse_class(s.ring, part));
    }
    return RootBundle(s.ring, std::move(rs), flag == std::string("--roots") ? o_.rank_adjustment : 0);
  }

  GroupPtr group(Payload& out) const {
    if (o_.file) {
      out.input["file"] = *o_.file;
      return group_from_json(read_json_file(*o_.file));
    }
    out.input["group"] = need(o_.group, "--group or --file");
    return builtin_group(*o_.group);
  }

  SubgroupEmbedding embedding(Payload& out) const {
    out.input["embedding"] = need(o_.embedding, "--embedding");
    return builtin_embedding(*o_.embedding);
  }

  // ---- alg ----
  Payload todd_series_cmd() const {
    Payload out;
    if (o_.order < 0) throw Error(ErrorCode::InvalidArgument, "--order must be nonnegative");
    out.input["order"] = count(o_.order);
    const PowerSeries s = todd_series(static_cast<std::size_t>(o_.order));
    std::vector<std::string> c;
    Json arr = Json::array();
    for (const auto& r : s.coefficients()) {
      c.push_back(r.to_string());
      arr.push_back(r.to_string());
    }
    out.result["value"] = list_string(c);
    out.result["coefficients"] = arr;
    out.note = "Taylor coefficients of x/(1 - e^-x)";
    return out;
  }

  Payload power_sums_cmd() const {
    Payload out;
    if (o_.count < 1) throw Error(ErrorCode::InvalidArgument, "--count must be at least 1");
    const auto k = static_cast<std::size_t>(o_.count);
    out.input["count"] = count(o_.count);
    std::vector<std::string> text;
    Json arr = Json::array();
    if (o_.symbolic) {
      const long r = o_.rank.value_or(o_.count);
      if (r < 1) throw Error(ErrorCode::InvalidArgument, "--rank must be at least 1");
      out.input["rank"] = count(r);
      std::vector<Generator> gens;
      for (long j = 1; j <= r; ++j) gens.push_back({"e" + std::to_string(j), static_cast<int>(2 * j)});
      const RingPtr ring = RingPresentation::free_truncated("Sym", gens, static_cast<int>(2 * k));
      std::vector<GradedClass> e;
      for (long j = 1; j <= r; ++j) e.push_back(GradedClass::generator(ring, "e" + std::to_string(j)));
      for (const auto& p : newton_power_sums<GradedClass>(e, k, GradedClass(ring))) {
        text.push_back(p.to_string());
        arr.push_back(p.to_string());
      }
    } else {
      const std::string src = need(o_.elementary, "--elementary or --symbolic");
      out.input["elementary"] = src;
      std::vector<Rational> e;
      for (const auto& part : split(src, ',')) e.push_back(Rational::parse(part));
      for (const auto& p : power_sums_from_elementary(e, k)) {
        text.push_back(p.to_string());
        arr.push_back(p.to_string());
      }
    }
    out.result["value"] = list_string(text);
    out.result["power_sums"] = arr;
    out.note = "Newton identities p_m = sum (-1)^(i-1) e_i p_(m-i) + (-1)^(m-1) m e_m";
    return out;
  }

  Payload snf_cmd() const {
    Payload out;
    const std::string src = need(o_.int_matrix, "--int-matrix");
    out.input["matrix"] = src;
    const IntMatrix m = int_matrix_from_json(parse_json_text(src, "--int-matrix"));
    const SmithForm sf = smith_normal_form(m);
    std::vector<std::string> d;
    for (const auto& x : sf.diagonal()) d.push_back(x.get_str());
    out.result["value"] = list_string(d);
    out.result["u"] = to_json(sf.u);
    out.result["s"] = to_json(sf.s);
    out.result["v"] = to_json(sf.v);
    out.result["rank"] = count(static_cast<long>(sf.rank()));
    out.intermediates.emplace_back("u*m*v == s", (sf.u * m * sf.v) == sf.s ? "true" : "false");
    out.note = "unimodular u, v with u*m*v diagonal and d_i | d_(i+1)";
    return out;
  }

  Payload cochain_cmd() const {
    Payload out;
    const std::string a = need(o_.d_in, "--d-in");
    const std::string b = need(o_.d_out, "--d-out");
    out.input["d_in"] = a;
    out.input["d_out"] = b;
    const FinAbGroup g = cochain_cohomology(int_matrix_from_json(parse_json_text(a, "--d-in")),
                                            int_matrix_from_json(parse_json_text(b, "--d-out")));
    out.result["value"] = g.to_string();
    out.result["group"] = to_json(g);
    out.note = "ker d_out / im d_in via Smith normal form";
    return out;
  }

  // ---- space ----
  Payload space_info_cmd() const {
    Payload out;
    const Space s = space(out);
    const RingPresentation& r = *s.ring;
    Json gens = Json::array();
    for (const auto& g : r.generators()) gens.push_back(Json{{"name", g.name}, {"degree", count(g.degree)}});
    out.result["value"] = evaluate_fundamental(s.euler_class).to_string();
    out.result["name"] = s.name;
    out.result["ring"] = r.name();
    out.result["generators"] = gens;
    out.result["top_degree"] = count(r.top_degree());
    out.result["basis_size"] = count(static_cast<long>(r.full_basis().size()));
    out.result["euler_class"] = to_json(s.euler_class);
    out.result["complex_dim"] = s.complex_dim ? Json(count(*s.complex_dim)) : Json(nullptr);
    out.note = "value is e(X)[X]";
    return out;
  }

  Payload space_evaluate_cmd() const {
    Payload out;
    const Space s = space(out);
    out.input["class"] = need(o_.cls, "--class");
    const GradedClass a = parse_class(s.ring, *o_.cls);
    out.result["value"] = evaluate_fundamental(a).to_string();
    out.result["class"] = to_json(a);
    out.note = "coefficient of the fundamental monomial";
    return out;
  }

  Payload space_cup_cmd() const {
    Payload out;
    const Space s = space(out);
    out.input["class"] = need(o_.cls, "--class");
    out.input["class2"] = need(o_.cls2, "--class2");
    const GradedClass c = cup(parse_class(s.ring, *o_.cls), parse_class(s.ring, *o_.cls2));
    out.result["value"] = c.to_string();
    out.result["class"] = to_json(c);
    out.note = "reduced product";
    return out;
  }

  Payload space_divide_cmd() const {
    Payload out;
    const Space s = space(out);
    out.input["class"] = need(o_.cls, "--class");
    out.input["by"] = need(o_.by, "--by");
    const GradedClass c = divide_by(parse_class(s.ring, *o_.cls), parse_class(s.ring, *o_.by));
    out.result["value"] = c.to_string();
    out.result["class"] = to_json(c);
    out.note = "degree-by-degree exact solve of b * e = a";
    return out;
  }

  // ---- charclass ----
  Payload class_of(const std::function<GradedClass(const RootBundle&)>& f, const std::string& note) const {
    Payload out;
    const Space s = space(out);
    const RootBundle b = bundle(s, o_.roots, "--roots", out);
    const GradedClass c = f(b);
    out.result["value"] = c.to_string();
    out.result["bundle"] = b.to_string();
    out.result["rank"] = count(b.rank());
    out.result["class"] = to_json(c);
    out.note = note;
    return out;
  }

  Payload chern_cmd() const {
    if (o_.k) {
      const long k = *o_.k;
      if (k < 0) throw Error(ErrorCode::InvalidArgument, "--k must be nonnegative");
      Payload out = class_of([k](const RootBundle& b) { return chern_class(b, static_cast<std::size_t>(k)); },
                             "c_k = e_k(roots)");
      out.input["k"] = count(k);
      return out;
    }
    return class_of(total_chern, "prod (1 + x_i)");
  }

  Payload mu_check_cmd() const {
    Payload out;
    const Space s = space(out);
    const RootBundle b = bundle(s, o_.roots, "--roots", out);
    const GradedClass mu = mu_class(b);
    const GradedClass with_todd = mu * todd(conjugate(b));
    const GradedClass with_euler = mu * euler_top(b);
    const GradedClass lambda = lambda_alternating_ch(b);
    out.result["value"] = with_todd.to_string();
    out.result["mu"] = mu.to_string();
    out.result["mu_times_todd_conjugate"] = with_todd.to_string();
    out.result["mu_times_euler"] = with_euler.to_string();
    out.result["lambda_alternating_ch"] = lambda.to_string();
    const bool sign_ok = with_todd == GradedClass::constant(s.ring, Rational(b.rank() % 2 == 0 ? 1 : -1));
    out.result["todd_identity"] = sign_ok;
    out.result["euler_identity"] = with_euler == lambda;
    out.note = "mu(E) td(conj E) = (-1)^rank and mu(E) e(E) = ch(sum (-1)^i Lambda^i E)";
    return out;
  }

  Payload bundle_op(const std::function<RootBundle(const RootBundle&, const RootBundle&)>& f,
                    const std::string& note) const {
    Payload out;
    const Space s = space(out);
    const RootBundle a = bundle(s, o_.roots, "--roots", out);
    const RootBundle b = bundle(s, o_.roots2, "--roots2", out);
    const RootBundle c = f(a, b);
    out.result["value"] = c.to_string();
    out.result["rank"] = count(c.rank());
    out.result["total_chern"] = total_chern(c).to_string();
    out.note = note;
    return out;
  }

  Payload conjugate_cmd() const {
    Payload out;
    const Space s = space(out);
    const RootBundle b = conjugate(bundle(s, o_.roots, "--roots", out));
    out.result["value"] = b.to_string();
    out.result["rank"] = count(b.rank());
    out.result["total_chern"] = total_chern(b).to_string();
    out.note = "roots negated";
    return out;
  }

  Payload exterior_cmd() const {
    Payload out;
    const Space s = space(out);
    const long q = need(o_.q, "--q");
    if (q < 0) throw Error(ErrorCode::InvalidArgument, "--q must be nonnegative");
    out.input["q"] = count(q);
    const RootBundle b = exterior_power(bundle(s, o_.roots, "--roots", out), static_cast<std::size_t>(q));
    out.result["value"] = b.to_string();
    out.result["rank"] = count(b.rank());
    out.result["chern_character"] = chern_character(b).to_string();
    out.note = "roots are the sums over q-element subsets";
    return out;
  }

  Payload multiplicative_cmd() const {
    Payload out;
    const Space s = space(out);
    const std::string src = need(o_.chern, "--chern");
    out.input["chern"] = src;
    out.input["series"] = o_.series;
    std::vector<GradedClass> c;
    for (const auto& part : split(src, ',')) c.push_back(parse_class(s.ring, part));
    const long rank = o_.rank.value_or(static_cast<long>(c.size()));
    if (rank < 0) throw Error(ErrorCode::InvalidArgument, "--rank must be nonnegative");
    out.input["rank"] = count(rank);
    const auto order = static_cast<std::size_t>(std::max(0, s.ring->top_degree() / 2));
    PowerSeries series(0);
    if (o_.series == "todd") {
      series = todd_series(order);
    } else if (o_.series == "mu") {
      series = mu_series(order);
    } else if (o_.series == "exp") {
      series = PowerSeries::exp(order);
    } else {
      usage("--series must be todd, mu or exp");
    }
    const GradedClass g = multiplicative_class_from_chern(s.ring, c, series, static_cast<std::size_t>(rank));
    out.result["value"] = g.to_string();
    out.result["class"] = to_json(g);
    out.note = "prod Q(x_i) rewritten in c_1..c_m";
    return out;
  }

  // ---- index ----
  static Payload index_payload(const IndexResult& r, const std::string& note) {
    Payload out;
    out.result["value"] = r.value.to_string();
    out.intermediates = r.intermediates;
    out.note = note;
    return out;
  }

  Payload dolbeault_cmd() const {
    Payload in;
    const Space s = space(in);
    Payload out = index_payload(dolbeault_index(s), "td(T X)[X], cross-checked against ch(sum (-1)^q Lambda^q)/e");
    out.input = in.input;
    return out;
  }

  Payload de_rham_cmd() const {
    Payload in;
    const Space s = space(in);
    Payload out = index_payload(de_rham_index(s), "e(X)[X]");
    out.input = in.input;
    return out;
  }

  Payload form_c_cmd() const {
    Payload in;
    const Space s = space(in);
    in.input["complex"] = o_.complex;
    EllipticComplexData data = o_.complex == "dolbeault" ? dolbeault_data(s)
                               : o_.complex == "de-rham" ? de_rham_data(s)
                                                         : (usage("--complex must be dolbeault or de-rham"), dolbeault_data(s));
    Payload out = index_payload(index_form_C(data), "(-1)^(n(n+1)/2) {ch(sum (-1)^i E^i) e(X)^-1 I(X)}[X]");
    out.input = in.input;
    return out;
  }

  Payload form_b_cmd() const {
    Payload in;
    const Space s = space(in);
    GradedClass u(s.ring);
    if (o_.u) {
      in.input["u"] = *o_.u;
      u = parse_class(s.ring, *o_.u);
    } else {
      in.input["u"] = "dolbeault quotient";
      u = euler_quotient(dolbeault_data(s));
    }
    Payload out = index_payload(index_form_B(s, u), "(-1)^(n(n+1)/2) {u I(X)}[X]");
    out.input = in.input;
    return out;
  }

  Payload odd_cmd() const {
    const long d = need(o_.dim, "--dim");
    Payload out = index_payload(odd_dim_index(static_cast<int>(d)), "index vanishes in odd dimension");
    out.input["dim"] = count(d);
    return out;
  }

  Payload index_class_cmd() const {
    Payload out;
    const Space s = space(out);
    const GradedClass c = index_class(s);
    out.result["value"] = c.to_string();
    out.result["class"] = to_json(c);
    out.note = "td(T X (x) C)";
    return out;
  }

  // ---- circle ----
  Payload winding_cmd() const {
    Payload out;
    const LaurentPoly q = scalar_symbol(out, "z");
    const WindingResult w = winding_details(q, winding_opts());
    out.result["value"] = count(w.winding);
    out.result["samples"] = count(static_cast<long>(w.samples));
    out.result["depth_reached"] = count(w.depth_reached);
    out.note = "certified quarter-turn count on the unit circle";
    return out;
  }

  Payload circle_index_cmd() const {
    Payload out;
    const LaurentMatrix f = symbol_matrix(out, "z");
    const long idx = wiener_hopf_index(f, winding_opts());
    out.result["value"] = count(idx);
    out.result["determinant"] = determinant(f).to_string("z");
    out.note = "index P_f = -winding(det f)";
    return out;
  }

  Payload pn_dims_cmd() const {
    Payload out;
    const long n = need(o_.n, "--n");
    out.input["n"] = count(n);
    const KerCoker d = explicit_pn_dims(n);
    out.result["value"] = "(" + count(d.ker) + ", " + count(d.coker) + ")";
    out.result["kernel"] = count(d.ker);
    out.result["cokernel"] = count(d.coker);
    out.result["index"] = count(d.index());
    out.note = "P_n = P z^n P + (1 - P)";
    return out;
  }

  Payload oracle_cmd() const {
    Payload out;
    const LaurentMatrix f = symbol_matrix(out, "z");
    out.input["start_bound"] = count(o_.start_bound);
    const ToeplitzOracleResult r = toeplitz_kernel_oracle(f, o_.start_bound, o_.degree_cap, winding_opts());
    out.result["value"] = "(" + count(r.dims.ker) + ", " + count(r.dims.coker) + ")";
    out.result["kernel"] = count(r.dims.ker);
    out.result["cokernel"] = count(r.dims.coker);
    out.result["index"] = count(r.dims.index());
    out.result["kernel_bound"] = count(r.kernel_bound);
    out.result["cokernel_bound"] = count(r.cokernel_bound);
    out.note = "truncated Toeplitz kernels with increasing degree bound";
    return out;
  }

  Payload const_coeff_cmd() const {
    Payload out;
    const LaurentPoly p = scalar_symbol(out, "xi");
    const ConstCoeffResult r = const_coeff_index(p);
    out.result["value"] =
        "(" + count(r.dims.ker) + ", " + count(r.dims.coker) + ", " + count(r.dims.index()) + ")";
    Json modes = Json::array();
    for (long m : r.kernel_modes) modes.push_back(count(m));
    out.result["kernel_modes"] = modes;
    out.result["bound"] = count(r.bound);
    out.note = "e^(i n theta) is an eigenvector with eigenvalue p(n)";
    return out;
  }

  // ---- ks2 ----
  Payload clutch_cmd() const {
    Payload out;
    const LaurentMatrix f = symbol_matrix(out, "z");
    const KS2Class c = f.size() == 1 ? clutch_class(f(0, 0), winding_opts()) : clutch_class(f, winding_opts());
    out.result["value"] = c.to_string();
    out.result["class"] = to_json(c);
    out.result["alpha"] = count(alpha(c));
    out.result["chern_character"] = ks2_chern_character(c).to_string();
    out.note = "[E_n] = 1 - n b with n the winding of det f";
    return out;
  }

  KS2Class ks2_input(Payload& out, const std::optional<std::string>& v, const char* flag) const {
    out.input[std::string(flag).substr(2)] = need(v, flag);
    return parse_ks2(*v);
  }

  Payload alpha_cmd() const {
    Payload out;
    const KS2Class c = ks2_input(out, o_.cls, "--class");
    out.result["value"] = count(alpha(c));
    out.result["class"] = to_json(c);
    out.note = "alpha(r + k b) = k";
    return out;
  }

  Payload beta_cmd() const {
    Payload out;
    const long k = need(o_.k, "--k");
    out.input["k"] = count(k);
    const KS2Class c = beta(k);
    out.result["value"] = c.to_string();
    out.result["class"] = to_json(c);
    out.result["alpha"] = count(alpha(c));
    out.note = "beta(k) = k b";
    return out;
  }

  Payload ks2_mul_cmd() const {
    Payload out;
    const KS2Class a = ks2_input(out, o_.cls, "--class");
    const KS2Class b = ks2_input(out, o_.cls2, "--class2");
    const KS2Class c = ks2_mul(a, b);
    out.result["value"] = c.to_string();
    out.result["class"] = to_json(c);
    out.note = "product with b^2 = 0";
    return out;
  }

  Payload ks2_ch_cmd() const {
    Payload out;
    const KS2Class c = ks2_input(out, o_.cls, "--class");
    out.result["value"] = ks2_chern_character(c).to_string();
    out.note = "ch(r + k b) = r + k u on S^2";
    return out;
  }

  // ---- ahss ----
  Payload cohomology_cmd() const {
    Payload out;
    const CWComplex x = complex(out);
    const long p = need(o_.p, "--p");
    out.input["p"] = count(p);
    const FinAbGroup g = integral_cohomology(x, static_cast<int>(p));
    out.result["value"] = g.to_string();
    out.result["group"] = to_json(g);
    out.note = "cellular cohomology";
    return out;
  }

  Payload e2_cmd() const {
    Payload out;
    const CWComplex x = complex(out);
    const SpectralTable t = ahss_e2(x);
    std::vector<std::string> row;
    for (int p = 0; p <= x.dim(); ++p) row.push_back(t.at(p, 0).to_string());
    out.result["value"] = list_string(row);
    out.result["table"] = to_json(t);
    out.note = "E_2^{p,q} = H^p(X; K^q(pt))";
    return out;
  }

  Payload run_cmd() const {
    Payload out;
    const CWComplex x = complex(out);
    std::vector<HigherDifferential> diffs;
    if (o_.differentials) {
      out.input["differentials"] = *o_.differentials;
      diffs = differentials_from_json(read_json_file(*o_.differentials));
    }
    const AhssResult r = ahss_run(x, diffs);
    const Json rep = to_json(r.report);
    out.result["value"] = "K0: " + rep["k0_pieces"].get<std::string>() + "; K1: " + rep["k1_pieces"].get<std::string>();
    for (const auto& [k, v] : rep.items()) out.result[k] = v;
    out.result["euler_characteristic"] = count(euler_characteristic(x));
    out.result["e_infinity"] = to_json(r.e_infinity);
    out.note = "graded pieces of the filtration; extensions are reported, not resolved";
    return out;
  }

  Payload even_cell_cmd() const {
    Payload out;
    const CWComplex x = complex(out);
    const KGroupsReport r = k_groups_even_cell(x);
    const Json rep = to_json(r);
    FinAbGroup k0;
    for (const auto& [p, g] : r.k0_graded) k0 = direct_sum(k0, g);
    out.result["value"] = k0.to_string() + ", 0";
    for (const auto& [k, v] : rep.items()) out.result[k] = v;
    out.note = "K^0 free on the cells, K^1 = 0";
    return out;
  }

  // ---- rep ----
  Payload table_cmd() const {
    Payload out;
    const GroupPtr g = group(out);
    if (g->is_circle) throw Error(ErrorCode::InvalidArgument, "the circle has no finite character table");
    Json classes = Json::array();
    for (const auto& c : g->classes) {
      classes.push_back(Json{{"name", c.name}, {"size", count(c.size)}, {"order", count(c.element_order)}});
    }
    Json table = Json::array();
    for (std::size_t a = 0; a < g->irrep_count(); ++a) {
      Json row = Json::array();
      for (const auto& v : g->table[a]) row.push_back(v.to_string());
      table.push_back(Json{{"irrep", g->irreps[a]}, {"values", row}});
    }
    out.result["value"] = count(g->order);
    out.result["classes"] = classes;
    out.result["table"] = table;
    out.note = "validated by row and column orthogonality";
    return out;
  }

  RepElement rep_input(Payload& out, const GroupPtr& g, const std::optional<std::string>& v, const char* flag) const {
    out.input[std::string(flag).substr(2)] = need(v, flag);
    return parse_rep(g, *v);
  }

  Payload inner_cmd() const {
    Payload out;
    const GroupPtr g = group(out);
    const RepElement x = rep_input(out, g, o_.x, "--x");
    const RepElement y = rep_input(out, g, o_.y, "--y");
    out.result["value"] = count(inner_product(x, y));
    out.note = "sum over classes |C|/|G| chi_x conj(chi_y)";
    return out;
  }

  Payload multiply_cmd() const {
    Payload out;
    const GroupPtr g = group(out);
    const RepElement r = multiply(rep_input(out, g, o_.x, "--x"), rep_input(out, g, o_.y, "--y"));
    out.result["value"] = r.to_string();
    out.result["element"] = to_json(r);
    out.note = "pointwise character product";
    return out;
  }

  Payload restrict_cmd() const {
    Payload out;
    const SubgroupEmbedding e = embedding(out);
    const RepElement r = restrict_rep(e, rep_input(out, e.ambient, o_.x, "--x"));
    out.result["value"] = r.to_string();
    out.result["element"] = to_json(r);
    out.note = "restricted character expanded in subgroup irreducibles";
    return out;
  }

  Payload induce_cmd() const {
    Payload out;
    const SubgroupEmbedding e = embedding(out);
    const RepElement x = rep_input(out, e.subgroup, o_.x, "--x");
    if (o_.mode_bound) out.input["mode_bound"] = count(*o_.mode_bound);
    const RepElement r = induce(e, x, o_.mode_bound);
    out.result["value"] = r.to_string();
    out.result["element"] = to_json(r);
    out.note = "coefficient of w_a is <restrict(w_a), x>";
    return out;
  }

  Payload frobenius_cmd() const {
    Payload out;
    const SubgroupEmbedding e = embedding(out);
    const FrobeniusReport r = check_frobenius(e, o_.mode_bound);
    Json pairs = Json::array();
    long passed = 0;
    for (const auto& p : r.pairs) {
      const std::string a = e.ambient->is_circle ? "z^" + std::to_string(p.ambient_irrep)
                                                 : e.ambient->irreps[static_cast<std::size_t>(p.ambient_irrep)];
      pairs.push_back(Json{{"ambient", a},
                           {"subgroup", e.subgroup->irreps[static_cast<std::size_t>(p.subgroup_irrep)]},
                           {"lhs", count(p.lhs)},
                           {"rhs", count(p.rhs)},
                           {"pass", p.pass}});
      passed += p.pass ? 1 : 0;
    }
    out.result["value"] = count(passed) + "/" + count(static_cast<long>(r.pairs.size()));
    out.result["all_pass"] = r.all_pass;
    out.result["pairs"] = pairs;
    out.note = "<w_a, induce(w_b)>_G = <restrict(w_a), w_b>_H";
    return out;
  }

  Payload homogeneous_cmd() const {
    Payload out;
    const LaurentMatrix p = symbol_matrix(out, "xi");
    const long bound = o_.mode_bound.value_or(0);
    out.input["mode_bound"] = count(bound);
    const HomogeneousIndexResult r = circle_homogeneous_index(p, bound);
    Json modes = Json::array();
    for (const auto& m : r.nonzero) {
      modes.push_back(Json{{"mode", count(m.mode)}, {"kernel", count(m.kernel)}, {"cokernel", count(m.cokernel)}});
    }
    std::vector<std::string> kernel_modes;
    for (const auto& m : r.nonzero) {
      if (m.kernel != 0) kernel_modes.push_back(count(m.mode));
    }
    out.result["value"] = r.total.to_string();
    out.result["total"] = to_json(r.total);
    out.result["kernel_modes"] = list_string(kernel_modes);
    out.result["nonzero_modes"] = modes;
    out.result["root_bound"] = count(r.root_bound);
    out.result["scanned_bound"] = count(r.scanned_bound);
    out.note = "mode m contributes (dim ker p(m) - dim coker p(m)) z^m";
    return out;
  }

  Payload bott_cmd() const {
    Payload out;
    const SubgroupEmbedding e = embedding(out);
    const RepElement m = rep_input(out, e.subgroup, o_.m_class, "--m-class");
    const RepElement n = rep_input(out, e.subgroup, o_.n_class, "--n-class");
    if (o_.mode_bound) out.input["mode_bound"] = count(*o_.mode_bound);
    const RepElement r = bott_homogeneous_index(e, m, n, o_.mode_bound);
    out.result["value"] = r.to_string();
    out.result["element"] = to_json(r);
    out.note = "induction of [M] - [N]";
    return out;
  }

  Payload gallery_cmd() const {
    Payload out;
    if (o_.module) out.input["module"] = *o_.module;
    out.result = run_gallery(o_.module);
    out.note = "expected values versus computed values";
    return out;
  }

 private:
  Options& o_;
};

struct Leaf {
  CLI::App* app;
  std::string path;
  Handler handler;
};

int exit_for(ErrorCode c) {
  return c == ErrorCode::ParseError || c == ErrorCode::UnknownCommand ? kExitParse : kExitDomain;
}

Json error_report(const std::string& command, const std::string& code, const std::string& message) {
  Json r;
  r["command"] = command;
  r["error"] = Json{{"code", code}, {"message", message}};
  return r;
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  Options o;
  Commands cmd(o);
  CLI::App app{"Exact K-theory, characteristic classes and index computations", "kindex"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--degree-cap", o.degree_cap, "maximum degree bound for the Toeplitz kernel oracle");
  app.add_option("--mode-bound", o.mode_bound, "largest |n| for circle modes");
  app.add_option("--grid-depth", o.grid_depth, "maximum bisection depth of the winding count");
  app.add_option("--output", o.output, "write the report to this path");

  std::vector<Leaf> leaves;
  auto group = [&](const std::string& name, const std::string& desc) {
    CLI::App* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, Handler h) {
    CLI::App* c = parent->add_subcommand(name, desc);
    c->fallthrough();
    leaves.push_back({c, parent->get_name() + " " + name, std::move(h)});
    return c;
  };
  auto space_opts = [&](CLI::App* c) {
    c->add_option("--space", o.space, "built-in space name");
    c->add_option("--genus", o.genus, "genus of a Riemann surface");
    c->add_option("--n", o.n, "dimension parameter (CP^n, RP^n, S^n)");
    c->add_option("--dim", o.dim, "real dimension (spheres)");
  };
  auto cw_opts = [&](CLI::App* c) {
    auto* s = c->add_option("--space", o.space, "built-in complex: point, sphere, cp, rp");
    auto* f = c->add_option("--file", o.file, "CW complex as a JSON tree");
    s->excludes(f);
    c->add_option("--n", o.n, "dimension parameter");
    c->add_option("--dim", o.dim, "sphere dimension");
  };
  auto symbol_opts = [&](CLI::App* c) {
    c->add_option("--symbol", o.symbol, "scalar Laurent polynomial");
    c->add_option("--matrix", o.matrix, "square matrix 'a, b; c, d'");
    c->add_option("--file", o.file, "symbol as a JSON tree");
    c->add_option("--var", o.var, "variable name");
  };
  auto bundle_opts = [&](CLI::App* c) {
    space_opts(c);
    c->add_option("--roots", o.roots, "comma-separated Chern roots");
    c->add_option("--rank-adjustment", o.rank_adjustment, "virtual rank shift");
    c->add_flag("--tangent", o.tangent, "use the complex tangent bundle");
  };

  CLI::App* alg = group("alg", "exact algebra");
  auto* c = leaf(alg, "todd-series", "coefficients of x/(1-e^-x)", [&] { return cmd.todd_series_cmd(); });
  c->add_option("--order", o.order, "truncation order");
  c = leaf(alg, "power-sums", "Newton identities", [&] { return cmd.power_sums_cmd(); });
  c->add_option("--elementary", o.elementary, "e_1,...,e_r");
  c->add_option("--count", o.count, "number of power sums");
  c->add_flag("--symbolic", o.symbolic, "express p_k in formal e_j");
  c->add_option("--rank", o.rank, "number of formal e_j");
  c = leaf(alg, "snf", "Smith normal form", [&] { return cmd.snf_cmd(); });
  c->add_option("--int-matrix", o.int_matrix, "integer matrix as JSON rows");
  c = leaf(alg, "cohomology", "cohomology of a cochain segment", [&] { return cmd.cochain_cmd(); });
  c->add_option("--d-in", o.d_in, "incoming map as JSON rows");
  c->add_option("--d-out", o.d_out, "outgoing map as JSON rows");

  CLI::App* sp = group("space", "cohomology rings of built-in spaces");
  space_opts(leaf(sp, "info", "ring, Euler class and e(X)[X]", [&] { return cmd.space_info_cmd(); }));
  c = leaf(sp, "evaluate", "evaluate a class on [X]", [&] { return cmd.space_evaluate_cmd(); });
  space_opts(c);
  c->add_option("--class", o.cls, "class text");
  c = leaf(sp, "cup", "cup product", [&] { return cmd.space_cup_cmd(); });
  space_opts(c);
  c->add_option("--class", o.cls, "first factor");
  c->add_option("--class2", o.cls2, "second factor");
  c = leaf(sp, "divide", "solve b * e = a", [&] { return cmd.space_divide_cmd(); });
  space_opts(c);
  c->add_option("--class", o.cls, "dividend");
  c->add_option("--by", o.by, "divisor");

  CLI::App* cc = group("charclass", "characteristic classes of root bundles");
  c = leaf(cc, "chern", "total or k-th Chern class", [&] { return cmd.chern_cmd(); });
  bundle_opts(c);
  c->add_option("--k", o.k, "single Chern class index");
  bundle_opts(leaf(cc, "ch", "Chern character",
                   [&] { return cmd.class_of(chern_character, "sum e^(x_i)"); }));
  bundle_opts(leaf(cc, "todd", "Todd class", [&] { return cmd.class_of(todd, "prod x_i/(1 - e^-x_i)"); }));
  bundle_opts(leaf(cc, "euler", "top Chern class", [&] { return cmd.class_of(euler_top, "prod x_i"); }));
  bundle_opts(leaf(cc, "lambda", "ch of the alternating exterior algebra",
                   [&] { return cmd.class_of(lambda_alternating_ch, "prod (1 - e^(x_i))"); }));
  bundle_opts(leaf(cc, "mu", "correction factor",
                   [&] { return cmd.class_of(mu_class, "(-1)^rank td(conj E)^-1"); }));
  bundle_opts(leaf(cc, "mu-check", "identities satisfied by the correction factor",
                   [&] { return cmd.mu_check_cmd(); }));
  bundle_opts(leaf(cc, "conjugate", "complex conjugate bundle", [&] { return cmd.conjugate_cmd(); }));
  c = leaf(cc, "sum", "direct sum", [&] { return cmd.bundle_op(sum, "roots concatenated"); });
  bundle_opts(c);
  c->add_option("--roots2", o.roots2, "roots of the second bundle");
  c = leaf(cc, "tensor", "tensor product", [&] { return cmd.bundle_op(tensor, "roots x_i + y_j"); });
  bundle_opts(c);
  c->add_option("--roots2", o.roots2, "roots of the second bundle");
  c = leaf(cc, "exterior", "exterior power", [&] { return cmd.exterior_cmd(); });
  bundle_opts(c);
  c->add_option("--q", o.q, "degree");
  c = leaf(cc, "multiplicative", "multiplicative class from Chern classes", [&] { return cmd.multiplicative_cmd(); });
  space_opts(c);
  c->add_option("--chern", o.chern, "c_1,...,c_m");
  c->add_option("--series", o.series, "todd, mu or exp");
  c->add_option("--rank", o.rank, "bundle rank");

  CLI::App* ix = group("index", "index theorems");
  space_opts(leaf(ix, "dolbeault", "Dolbeault index", [&] { return cmd.dolbeault_cmd(); }));
  space_opts(leaf(ix, "de-rham", "de Rham index", [&] { return cmd.de_rham_cmd(); }));
  c = leaf(ix, "form-c", "index from ch of the complex divided by e(X)", [&] { return cmd.form_c_cmd(); });
  space_opts(c);
  c->add_option("--complex", o.complex, "dolbeault or de-rham");
  c = leaf(ix, "form-b", "index from a symbol class", [&] { return cmd.form_b_cmd(); });
  space_opts(c);
  c->add_option("--u", o.u, "symbol class (default: Dolbeault quotient)");
  c = leaf(ix, "odd", "odd-dimensional vanishing", [&] { return cmd.odd_cmd(); });
  c->add_option("--dim", o.dim, "odd dimension");
  space_opts(leaf(ix, "class", "index class td(TX (x) C)", [&] { return cmd.index_class_cmd(); }));

  CLI::App* ci = group("circle", "operators on the circle");
  symbol_opts(leaf(ci, "winding", "winding number", [&] { return cmd.winding_cmd(); }));
  symbol_opts(leaf(ci, "index", "Wiener-Hopf index", [&] { return cmd.circle_index_cmd(); }));
  c = leaf(ci, "pn-dims", "kernel and cokernel of P_n", [&] { return cmd.pn_dims_cmd(); });
  c->add_option("--n", o.n, "winding");
  c = leaf(ci, "oracle", "truncated Toeplitz kernel dimensions", [&] { return cmd.oracle_cmd(); });
  symbol_opts(c);
  c->add_option("--start-bound", o.start_bound, "initial degree bound");
  symbol_opts(leaf(ci, "const-coeff", "constant-coefficient operator", [&] { return cmd.const_coeff_cmd(); }));

  CLI::App* ks = group("ks2", "K-theory of the 2-sphere");
  symbol_opts(leaf(ks, "clutch", "class of a clutching function", [&] { return cmd.clutch_cmd(); }));
  leaf(ks, "alpha", "alpha map to Z", [&] { return cmd.alpha_cmd(); })->add_option("--class", o.cls, "class");
  leaf(ks, "beta", "beta map from Z", [&] { return cmd.beta_cmd(); })->add_option("--k", o.k, "integer");
  c = leaf(ks, "mul", "product", [&] { return cmd.ks2_mul_cmd(); });
  c->add_option("--class", o.cls, "first factor");
  c->add_option("--class2", o.cls2, "second factor");
  leaf(ks, "ch", "Chern character", [&] { return cmd.ks2_ch_cmd(); })->add_option("--class", o.cls, "class");

  CLI::App* ah = group("ahss", "Atiyah-Hirzebruch spectral sequence");
  c = leaf(ah, "cohomology", "integral cellular cohomology", [&] { return cmd.cohomology_cmd(); });
  cw_opts(c);
  c->add_option("--p", o.p, "degree");
  cw_opts(leaf(ah, "e2", "E_2 page", [&] { return cmd.e2_cmd(); }));
  c = leaf(ah, "run", "run to E_infinity", [&] { return cmd.run_cmd(); });
  cw_opts(c);
  c->add_option("--differentials", o.differentials, "JSON file of higher differentials");
  cw_opts(leaf(ah, "even-cell", "K-groups of an even-cell complex", [&] { return cmd.even_cell_cmd(); }));

  CLI::App* rp = group("rep", "representation rings");
  auto group_opts = [&](CLI::App* a) {
    auto* g = a->add_option("--group", o.group, "built-in group");
    auto* f = a->add_option("--file", o.file, "group as a JSON tree");
    g->excludes(f);
  };
  group_opts(leaf(rp, "table", "character table", [&] { return cmd.table_cmd(); }));
  c = leaf(rp, "inner", "character inner product", [&] { return cmd.inner_cmd(); });
  group_opts(c);
  c->add_option("--x", o.x, "first element");
  c->add_option("--y", o.y, "second element");
  c = leaf(rp, "multiply", "tensor product", [&] { return cmd.multiply_cmd(); });
  group_opts(c);
  c->add_option("--x", o.x, "first element");
  c->add_option("--y", o.y, "second element");
  c = leaf(rp, "restrict", "restriction to a subgroup", [&] { return cmd.restrict_cmd(); });
  c->add_option("--embedding", o.embedding, "built-in embedding");
  c->add_option("--x", o.x, "element of the ambient group");
  c = leaf(rp, "induce", "induction from a subgroup", [&] { return cmd.induce_cmd(); });
  c->add_option("--embedding", o.embedding, "built-in embedding");
  c->add_option("--x", o.x, "element of the subgroup");
  c = leaf(rp, "frobenius", "reciprocity check on irreducible pairs", [&] { return cmd.frobenius_cmd(); });
  c->add_option("--embedding", o.embedding, "built-in embedding");
  symbol_opts(leaf(rp, "homogeneous", "rotation-invariant operator on the circle",
                   [&] { return cmd.homogeneous_cmd(); }));
  c = leaf(rp, "bott", "equivariant index of a homogeneous operator", [&] { return cmd.bott_cmd(); });
  c->add_option("--embedding", o.embedding, "built-in embedding");
  c->add_option("--m-class", o.m_class, "fibre of the source bundle");
  c->add_option("--n-class", o.n_class, "fibre of the target bundle");

  CLI::App* ga = app.add_subcommand("gallery", "reproduce the reference examples");
  ga->fallthrough();
  ga->add_option("--module", o.module, "restrict to one module");
  leaves.push_back({ga, "gallery", [&] { return cmd.gallery_cmd(); }});

  Outcome out;
  std::string command;
  for (const auto& a : args) {
    if (a.empty() || a[0] == '-') break;
    command += (command.empty() ? "" : " ") + a;
  }
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out.help = app.help();
    return out;
  } catch (const CLI::CallForAllHelp&) {
    out.help = app.help("", CLI::AppFormatMode::All);
    return out;
  } catch (const CLI::ParseError& e) {
    // No leaf reached means the command path itself was not recognised.
    const bool leaf_parsed =
        std::any_of(leaves.begin(), leaves.end(), [](const Leaf& l) { return l.app->parsed(); });
    out.format = o.format;
    out.output = o.output;
    out.exit_code = kExitParse;
    const ErrorCode code = leaf_parsed ? ErrorCode::ParseError : ErrorCode::UnknownCommand;
    out.report = error_report(command, std::string(error_code_name(code)), e.what());
    return out;
  }
  out.format = o.format;
  out.output = o.output;
  const Leaf* chosen = nullptr;
  for (const auto& l : leaves) {
    if (l.app->parsed()) chosen = &l;
  }
  if (chosen == nullptr) {
    out.exit_code = kExitParse;
    out.report = error_report(command, "UnknownCommand", "no command given");
    return out;
  }
  try {
    Payload p = chosen->handler();
    Json r;
    r["command"] = chosen->path;
    r["input"] = std::move(p.input);
    r["result"] = std::move(p.result);
    r["intermediates"] = intermediates_json(p.intermediates);
    r["note"] = p.note;
    out.report = std::move(r);
  } catch (const Error& e) {
    out.exit_code = exit_for(e.code());
    out.report = error_report(chosen->path, std::string(e.code_name()), e.what());
  } catch (const std::exception& e) {
    out.exit_code = kExitDomain;
    out.report = error_report(chosen->path, "InvalidArgument", e.what());
  }
  return out;
}

std::string render(const Outcome& o) {
  if (o.help) return *o.help;
  return o.format == "json" ? emit_json(o.report) : render_table(o.report);
}

}  // namespace kindex::cli
