#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kindex/ahss/spectral.hpp"
#include "kindex/circleop/ks2.hpp"
#include "kindex/circleop/laurent.hpp"
#include "kindex/cohomring/ring.hpp"
#include "kindex/exactalg/fin_ab_group.hpp"
#include "kindex/exactalg/int_matrix.hpp"
#include "kindex/repring/rep.hpp"

namespace kindex::cli {

// Insertion-ordered so that emit(parse(emit(r))) is byte-identical.
using Json = nlohmann::ordered_json;

// Every exact number is a string; counts are strings too so that consumers
// never see binary floating point.
Json to_json(const Rational& r);
Json to_json(const GaussianRational& z);
Json to_json(const FinAbGroup& g);
Json to_json(const IntMatrix& m);
Json to_json(const GradedClass& c);
Json to_json(const LaurentPoly& p);
Json to_json(const KS2Class& k);
Json to_json(const RepElement& x);
Json to_json(const KGroupsReport& r);
Json to_json(const SpectralTable& t);
Json intermediates_json(const std::vector<std::pair<std::string, std::string>>& items);

std::string count(long n);
std::string list_string(const std::vector<std::string>& items);

// Two-space indented JSON followed by a newline.
std::string emit_json(const Json& report);
// Fixed-width "key  value" rendering of the flattened tree.
std::string render_table(const Json& report);

}  // namespace kindex::cli
