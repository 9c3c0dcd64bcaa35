#pragma once

#include <string>

#include "freenij/word.hpp"

namespace freenij {

/// Render to the same textual form parse_element accepts: terms in canonical
/// word order, coefficients of magnitude 1 elided, signs as separators,
/// letters joined by '|'. The zero element renders as "0".
/// parse_element(render_element(e)) == e for every element.
std::string render_element(const ShuffleElement &e);

std::string render_word(const TensorWord &w);

/// Pair and triple legs are joined by " (x) ".
std::string render_pair(const PairElement &p);
std::string render_triple(const TripleElement &t);

} // namespace freenij
