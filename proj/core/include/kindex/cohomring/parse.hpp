#pragma once

#include <string_view>

#include "kindex/cohomring/ring.hpp"

namespace kindex {

// Polynomial text in the ring's generators: "1 + 1/2*x - x^2", "(2-2*1)*mu",
// "-(x + 1)^2".  Implicit products such as "3x" are accepted.  Errors are
// ParseError with a 1-based position.
GradedClass parse_class(const RingPtr& ring, std::string_view text);

}  // namespace kindex
