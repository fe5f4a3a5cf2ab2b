#include "kindex/indexthm/index.hpp"

#include "kindex/charclass/classes.hpp"
#include "kindex/error.hpp"

namespace kindex {

namespace {

RootBundle tangent_bundle(const Space& space) {
  if (!space.complex_tangent) {
    throw Error(ErrorCode::MissingComplexStructure, space.name + " carries no complex tangent roots");
  }
  return RootBundle::from_tangent(space.ring, *space.complex_tangent);
}

RootBundle generic_tangent(const SplittingModel& model) {
  std::vector<GradedClass> roots;
  for (std::size_t i = 0; i < model.rank; ++i) {
    Monomial m(model.rank, 0);
    m[i] = 1;
    roots.push_back(GradedClass::monomial(model.ring, m));
  }
  return {model.ring, std::move(roots)};
}

GradedClass alternating_ch(const RingPtr& ring, const std::vector<RootBundle>& bundles) {
  GradedClass acc(ring);
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    if (!same_ring(bundles[i].ring(), ring)) {
      throw Error(ErrorCode::RingMismatch, "bundle E^" + std::to_string(i) + " lives over the wrong ring");
    }
    const GradedClass ch = chern_character(bundles[i]);
    if (i % 2 == 0) {
      acc += ch;
    } else {
      acc -= ch;
    }
  }
  return acc;
}

struct QuotientTrace {
  GradedClass ch_sum;
  GradedClass euler;
  GradedClass quotient;
};

QuotientTrace compute_quotient(const EllipticComplexData& data) {
  if (data.bundles.empty()) throw Error(ErrorCode::InvalidArgument, "elliptic complex has no bundles");
  const Space& space = data.space;
  const int top = space.real_dim();
  try {
    if (data.splitting) {
      const SplittingModel& model = *data.splitting;
      const RootBundle t = generic_tangent(model);
      GradedClass a = alternating_ch(model.ring, data.bundles);
      GradedClass e = euler_top(t);
      const GradedClass b = divide_by(a, e, top);
      const RootBundle tx = tangent_bundle(space);
      std::vector<GradedClass> c;
      for (std::size_t j = 1; j <= model.rank; ++j) c.push_back(chern_class(tx, j));
      return {std::move(a), std::move(e), substitute_elementary(b, space.ring, c)};
    }
    GradedClass a = alternating_ch(space.ring, data.bundles);
    GradedClass b = divide_by(a, space.euler_class, top);
    return {std::move(a), space.euler_class, std::move(b)};
  } catch (const Error& err) {
    if (err.code() == ErrorCode::NoSolution || err.code() == ErrorCode::AmbiguousTopTerm) {
      throw Error(ErrorCode::EulerDivisionFailed,
                  "ch(sum (-1)^i E^i) / e(X) is not well defined on " + space.name + ": " + err.what());
    }
    throw;
  }
}

}  // namespace

int index_sign(int real_dim) {
  const long n = real_dim;
  return ((n * (n + 1) / 2) % 2 == 0) ? 1 : -1;
}

GradedClass index_class(const Space& space) {
  if (space.precomputed_index_class) return *space.precomputed_index_class;
  if (!space.complex_tangent) {
    throw Error(ErrorCode::MissingTangentData, space.name + " has no tangent data for the index class");
  }
  const RootBundle t = tangent_bundle(space);
  return todd(t) * todd(conjugate(t));
}

SplittingModel splitting_model_for(const Space& space) {
  if (!space.complex_dim || !space.complex_tangent) {
    throw Error(ErrorCode::MissingComplexStructure, space.name + " carries no complex tangent roots");
  }
  const auto m = static_cast<std::size_t>(*space.complex_dim);
  return {generic_root_ring(m, space.real_dim() + 2 * static_cast<int>(m)), m};
}

EllipticComplexData dolbeault_data(const Space& space) {
  SplittingModel model = splitting_model_for(space);
  const RootBundle conj_t = conjugate(generic_tangent(model));
  std::vector<RootBundle> bundles;
  for (std::size_t q = 0; q <= model.rank; ++q) bundles.push_back(exterior_power(conj_t, q));
  return {space, std::move(bundles), std::move(model)};
}

EllipticComplexData de_rham_data(const Space& space) {
  SplittingModel model = splitting_model_for(space);
  const RootBundle t = generic_tangent(model);
  const RootBundle cotangent = sum(t, conjugate(t));
  std::vector<RootBundle> bundles;
  for (std::size_t k = 0; k <= 2 * model.rank; ++k) bundles.push_back(exterior_power(cotangent, k));
  return {space, std::move(bundles), std::move(model)};
}

GradedClass euler_quotient(const EllipticComplexData& data) { return compute_quotient(data).quotient; }

IndexResult index_form_C(const EllipticComplexData& data) {
  const Space& space = data.space;
  const QuotientTrace q = compute_quotient(data);
  const GradedClass ic = index_class(space);
  const int sign = index_sign(space.real_dim());
  const Rational raw = evaluate_fundamental(q.quotient * ic);
  IndexResult r{raw * Rational(sign), {}};
  r.intermediates = {
      {"ch_alternating", q.ch_sum.to_string()},
      {"euler_class", q.euler.to_string()},
      {"euler_quotient", q.quotient.to_string()},
      {"index_class", ic.to_string()},
      {"sign", std::to_string(sign)},
      {"value", r.value.to_string()},
  };
  return r;
}

IndexResult index_form_B(const Space& space, const GradedClass& u) {
  if (!same_ring(u.ring(), space.ring)) throw Error(ErrorCode::RingMismatch, "class is not on " + space.name);
  const GradedClass ic = index_class(space);
  const int sign = index_sign(space.real_dim());
  IndexResult r{evaluate_fundamental(u * ic) * Rational(sign), {}};
  r.intermediates = {
      {"symbol_class", u.to_string()},
      {"index_class", ic.to_string()},
      {"sign", std::to_string(sign)},
      {"value", r.value.to_string()},
  };
  return r;
}

IndexResult de_rham_index(const Space& space) {
  IndexResult r{evaluate_fundamental(space.euler_class), {}};
  r.intermediates.emplace_back("euler_class", space.euler_class.to_string());
  if (space.complex_tangent) {
    const IndexResult c = index_form_C(de_rham_data(space));
    r.intermediates.emplace_back("form_C", c.value.to_string());
    r.intermediates.emplace_back("form_C_agrees", c.value == r.value ? "true" : "false");
  }
  r.intermediates.emplace_back("value", r.value.to_string());
  return r;
}

IndexResult dolbeault_index(const Space& space) {
  const RootBundle t = tangent_bundle(space);
  const GradedClass td = todd(t);
  IndexResult r{evaluate_fundamental(td), {}};
  r.intermediates.emplace_back("todd", td.to_string());
  const IndexResult c = index_form_C(dolbeault_data(space));
  r.intermediates.emplace_back("form_C", c.value.to_string());
  r.intermediates.emplace_back("form_C_agrees", c.value == r.value ? "true" : "false");
  r.intermediates.emplace_back("value", r.value.to_string());
  return r;
}

IndexResult odd_dim_index(int dim) {
  if (dim < 0 || dim % 2 == 0) {
    throw Error(ErrorCode::DimensionNotOdd, "dimension " + std::to_string(dim) + " is not odd");
  }
  return {Rational(0), {{"dimension", std::to_string(dim)}, {"value", "0"}}};
}

}  // namespace kindex
