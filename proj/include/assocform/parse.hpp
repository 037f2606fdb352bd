#pragma once

#include "assocform/form.hpp"

#include <string_view>

namespace assocform {

/// Parses a homogeneous polynomial in z1..zn.
///
///   expr   := term (('+'|'-') term)*
///   term   := ['-'] factor ('*' factor)*
///   factor := coeff | var | var '^' uint | '(' expr ')'
///   coeff  := int | int '/' uint
///   var    := 'z' uint
///
/// Whitespace is ignored. Throws SyntaxError, VariableRangeError or
/// InhomogeneousError.
Form parse_form(std::string_view text, int vars);

} // namespace assocform
