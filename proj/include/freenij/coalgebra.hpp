#pragma once

#include <utility>

#include "freenij/base.hpp"
#include "freenij/exec.hpp"
#include "freenij/word.hpp"

namespace freenij {

/// Componentwise product on Sha(A) (x) Sha(A):
/// (a (x) b) . (c (x) d) = (a dr c) (x) (b dr d).
PairElement pair_mul(const Base &base, const PairElement &p, const PairElement &q,
                     ExecMode mode = exec_mode());

/// Coproduct of a single word, by recursion on length:
///   Delta(a1)            = Delta_A(a1)
///   Delta(1_A (x) a')    = (id (x) P_r) Delta(a')
///   Delta(a1 (x) a')     = Delta_A(a1) . (id (x) P_r) Delta(a')
/// (the general case subsumes the middle one since Delta_A(1_A) = 1 (x) 1).
PairElement coproduct_word(const Base &base, const TensorWord &w);

/// Linear extension of coproduct_word to Sha(A).
PairElement coproduct(const Base &base, const ShuffleElement &e, ExecMode mode = exec_mode());

/// Counit: product of the base counits of the letters.
Rational counit_word(const Base &base, const TensorWord &w);
Rational counit(const Base &base, const ShuffleElement &e);

/// (id (x) P_r) applied to a pair element.
PairElement p_right_on_right(const PairElement &p);

/// (Delta (x) id) and (id (x) Delta) applied to a pair element.
TripleElement coproduct_on_left(const Base &base, const PairElement &p);
TripleElement coproduct_on_right(const Base &base, const PairElement &p);

/// (id (x) id (x) P_r) applied to a triple element.
TripleElement p_right_on_third(const TripleElement &t);

/// (eps (x) id) resp. (id (x) eps) applied to a pair element, with the scalar
/// leg folded into the coefficient.
ShuffleElement collapse_left_by_counit(const Base &base, const PairElement &p);
ShuffleElement collapse_right_by_counit(const Base &base, const PairElement &p);

/// (eps (x) id) Delta = beta_l, the left counit law. Holds for every base.
bool left_counit_check(const Base &base, const ShuffleElement &e);

/// (id (x) eps) Delta = beta_r, the right counit law. Fails in general; the
/// second component is what the left side actually collapses to.
std::pair<bool, ShuffleElement> right_counit_check(const Base &base, const ShuffleElement &e);

/// (id (x) Delta) Delta = (Delta (x) id) Delta.
bool coassoc_check(const Base &base, const ShuffleElement &e);

} // namespace freenij
