#ifndef PCS_NOTATION_HPP
#define PCS_NOTATION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "pcs/scheme.hpp"

namespace pcs {

/// Expands run-length notation: "0*3,5" is (0, 0, 0, 5). Surrounding
/// parentheses and blanks are ignored. Throws ParseError naming the
/// offending token, or on a length/sum mismatch with (n, m).
CensoringScheme parse_scheme_notation(std::string_view text, int n, int m);

/// Same, with n and m inferred from the expansion.
CensoringScheme parse_scheme_notation(std::string_view text);

/// Canonical run-length form: runs of two or more become "a*b".
std::string format_scheme_notation(const CensoringScheme& scheme);

}  // namespace pcs

#endif  // PCS_NOTATION_HPP
