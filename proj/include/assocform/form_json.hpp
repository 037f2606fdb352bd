#pragma once

#include "assocform/form.hpp"

#include <json.hpp>

namespace assocform {

/// {"n": int, "degree": int,
///  "terms": [{"exponents": [int, ...], "coefficient": "p/q"}, ...]}
/// Terms appear in graded-lex order; coefficients use to_string(Rational).
nlohmann::json to_json(const Form& f);

/// Inverse of to_json. Throws SyntaxError on a malformed payload.
Form form_from_json(const nlohmann::json& j);

} // namespace assocform
