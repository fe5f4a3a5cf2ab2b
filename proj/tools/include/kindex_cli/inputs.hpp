#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kindex/ahss/spectral.hpp"
#include "kindex/circleop/ks2.hpp"
#include "kindex/circleop/laurent.hpp"
#include "kindex/repring/rep.hpp"
#include "kindex_cli/report.hpp"

namespace kindex::cli {

// Reads a JSON file; syntax errors become ParseError with line and column.
Json read_json_file(const std::string& path);
Json parse_json_text(std::string_view text, const std::string& origin);

IntMatrix int_matrix_from_json(const Json& j);

// A string in Laurent syntax or an {exponent: [re, im]} map.
LaurentPoly laurent_from_json(const Json& j, std::string_view var);
// {"symbol": entry} or {"matrix": [[entry, ...], ...]}.
LaurentMatrix symbol_from_json(const Json& j, std::string_view var);
// "a, b; c, d": rows split on ';', entries on ','.
LaurentMatrix parse_matrix_text(std::string_view text, std::string_view var);

// {"name", "cells": [...], "coboundaries": [matrix, ...]} with optional
// "differentials": [{"k", "p", "map"}].
CWComplex cw_from_json(const Json& j);
std::vector<HigherDifferential> differentials_from_json(const Json& j);

// {"name", "classes": [{"name", "size", "order"}], "irreps": [...],
//  "table": [[entry, ...], ...]}; entries are rational strings or
//  {"order": m, "coords": [...]} in the zeta_m power basis.
GroupPtr group_from_json(const Json& j);

// "0,1,2" as coordinates, or a combination of irreducible names
// ("w1 + 2*w2", "standard - sign", "z^-1 + 3*z^2" for the circle).
RepElement parse_rep(const GroupPtr& g, std::string_view text);

// "r,k" for r + k*b, or one of "b", "lambda1", "E<n>", "tangent".
KS2Class parse_ks2(std::string_view text);

std::vector<std::string> split(std::string_view text, char sep);

}  // namespace kindex::cli
