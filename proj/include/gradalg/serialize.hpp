#pragma once

#include "gradalg/algebra.hpp"
#include "gradalg/polynomial.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace gradalg {

using Json = nlohmann::json;

Json group_to_json(const Group& g);
Json element_to_json(const Group& g, const GroupElem& x);
/// `where` is a JSON pointer used in error messages.
Group group_from_json(const Json& j, const std::string& where = "/group");
GroupElem element_from_json(const Group& g, const Json& j, const std::string& where);

Json algebra_to_json(const GradedAlgebra& a);
/// Schema errors throw ParseError naming the offending JSON pointer; the
/// algebra constructor may still throw InvariantViolation.
GradedAlgebra algebra_from_json(const Json& j);

/// Text entry points: syntax errors report line and column.
GradedAlgebra parse_algebra(std::string_view text);
std::string emit_algebra(const GradedAlgebra& a);

/// Either a list of {coef, perm, labels} or {"n": int, "terms": [...]}.
/// perm lists 1-based variable indices in product order; labels[i] is the
/// degree of variable i+1.
MultilinearGradedPoly parse_polynomial(std::string_view text, const Group& g);
Json polynomial_to_json(const MultilinearGradedPoly& f, const Group& g);

Json parse_json_text(std::string_view text);

} // namespace gradalg
