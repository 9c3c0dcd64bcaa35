#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "freenij/base.hpp"
#include "freenij/word.hpp"

namespace freenij {

/// The valid letters of a base with exponent <= max_exp (the trivial base has
/// only the unit letter regardless of the bound).
std::vector<BaseIndex> letters_up_to(const Base &base, std::uint32_t max_exp);

/// Every word of length <= max_len over letters_up_to(base, max_exp),
/// in canonical order.
std::vector<TensorWord> enumerate_words(const Base &base, std::size_t max_len,
                                        std::uint32_t max_exp);

/// Every word of degree exactly n, in canonical order. Finite for the graded
/// bases (trivial: just u_n; polynomial: compositions of the degree budget).
std::vector<TensorWord> words_of_degree(const Base &base, std::uint64_t n);

} // namespace freenij
