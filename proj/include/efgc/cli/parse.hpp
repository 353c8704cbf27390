#pragma once

#include <optional>
#include <string>
#include <vector>

#include "efgc/divisor/divisor.hpp"
#include "efgc/ringkit/mpoly.hpp"

namespace efgc {

// Ring descriptors: Z, Q, F<p> (or F_p), Z/<m>, SZ2, then any number of
// suffixes "[A*]" (group ring on the given group), "[d1,d2;sym,sym]" (group
// ring on an explicit group, symbols optional) and "[t]/(monic in t)".
// Parentheses group, so the output of describe() parses back.
Ring parse_ring(const std::string& text, const std::optional<FinAbGroup>& group = std::nullopt);

// Expressions with + - * ^, integer literals and division by invertible
// constants. Names are the given variables, then the unit symbols, quotient
// variables and e, u<i> of the rings in the tower under `ring`.
MPoly parse_mpoly(const std::string& text, const Ring& ring, const std::vector<std::string>& vars);
Poly parse_poly(const std::string& text, const Ring& ring, const std::string& var = "x");
RingValue parse_value(const std::string& text, const Ring& ring);

// point(alpha), point(value), zero, full, D + D, D * D, D - D, tr(alpha, D).
// A character is written as its coordinates "1,0"; point() of anything else
// is read as a ring value.
Divisor parse_divisor(const std::string& text, const EFG& e);

}  // namespace efgc
