#pragma once

#include <string_view>

#include "freenij/base.hpp"
#include "freenij/error.hpp"
#include "freenij/word.hpp"

namespace freenij {

/// Parse expression text into a normalized element of Sha(A).
///
/// Grammar (whitespace insignificant):
///   elem     := ['+'|'-'] term (('+'|'-') term)*  |  '0'
///   term     := [rational '*'] word
///   word     := letter ('|' letter)*  |  'u' nat
///   letter   := '1'  |  'x' ['^' nat]
///   rational := nat ['/' posnat]
/// 'u' words denote all-unit words (u_n has length n + 1) and are accepted
/// under every base; 'x' letters require a polynomial base. Errors carry the
/// byte position at which they were detected.
ShuffleElement parse_element(std::string_view text, const Base &base);

/// Parse a standalone rational literal such as "-3/2" (sign allowed).
Rational parse_rational(std::string_view text);

} // namespace freenij
