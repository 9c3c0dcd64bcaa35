#pragma once

#include <cstddef>

#include "freenij/base.hpp"
#include "freenij/exec.hpp"
#include "freenij/word.hpp"

namespace freenij {

/// c |-> c * 1_A, the embedding of scalars onto the unit of (Sha(A), dr).
ShuffleElement unit_embed(const Rational &c);

/// u_n = 1_A^(x)(n+1): the all-units word of length n + 1.
ShuffleElement make_u(std::size_t n);

/// The right-shift operator P_r: prepends 1_A to every word. Satisfies the
/// Nijenhuis identity P(x)P(y) = P(P(x)y) + P(xP(y)) - P^2(xy) for dr.
ShuffleElement p_right(const ShuffleElement &e, ExecMode mode = exec_mode());

/// Word-level product a dr b, by recursion on lengths:
///   heads multiply in the base; with m, n the lengths and a', b' the tails,
///   m = n = 1:  a1 b1
///   m = 1:      a1 b1 (x) b'
///   n = 1:      a1 b1 (x) a'
///   else:       a1 b1 (x) (a' dr P_r b' + P_r a' dr b' - P_r (a' dr b'))
/// Memoized per call on word pairs; the cache only short-circuits identical
/// subproducts and cannot change the result.
ShuffleElement nij_mul_words(const Base &base, const TensorWord &a, const TensorWord &b);

/// Bilinear extension of nij_mul_words: the commutative, associative, unital
/// product making Sha(A) a Nijenhuis algebra under P_r.
ShuffleElement nij_mul(const Base &base, const ShuffleElement &a, const ShuffleElement &b,
                       ExecMode mode = exec_mode());

} // namespace freenij
