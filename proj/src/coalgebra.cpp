#include "freenij/coalgebra.hpp"

#include "freenij/kernels.hpp"
#include "freenij/nijenhuis.hpp"

namespace freenij {

PairElement pair_mul(const Base &base, const PairElement &p, const PairElement &q, ExecMode mode)
{
    return kernels::bilinear_expand(
        p, q,
        [&base](const WordPair &x, const WordPair &y) {
            const ShuffleElement left = nij_mul_words(base, x.first, y.first);
            const ShuffleElement right = nij_mul_words(base, x.second, y.second);
            PairElement out;
            for (const auto &[wl, cl] : left.terms()) {
                for (const auto &[wr, cr] : right.terms()) {
                    out.add(WordPair(wl, wr), cl * cr);
                }
            }
            return out;
        },
        mode);
}

PairElement coproduct_word(const Base &base, const TensorWord &w)
{
    PairElement head_cp;
    for (const auto &t : base.coproduct(w.head())) {
        head_cp.add(WordPair(TensorWord({t.left}), TensorWord({t.right})), t.coeff);
    }
    if (w.length() == 1) return head_cp;

    const PairElement shifted = p_right_on_right(coproduct_word(base, w.tail()));
    return pair_mul(base, head_cp, shifted, ExecMode::serial);
}

PairElement coproduct(const Base &base, const ShuffleElement &e, ExecMode mode)
{
    return kernels::linear_expand(
        e, [&base](const TensorWord &w) { return coproduct_word(base, w); }, mode);
}

Rational counit_word(const Base &base, const TensorWord &w)
{
    Rational r(1);
    for (BaseIndex l : w.letters()) {
        r *= base.counit(l);
        if (r.is_zero()) break;
    }
    return r;
}

Rational counit(const Base &base, const ShuffleElement &e)
{
    Rational r(0);
    for (const auto &[w, c] : e.terms()) r += c * counit_word(base, w);
    return r;
}

PairElement p_right_on_right(const PairElement &p)
{
    PairElement out;
    for (const auto &[pair, c] : p.terms()) {
        out.add(WordPair(pair.first, pair.second.with_unit_prepended()), c);
    }
    return out;
}

TripleElement coproduct_on_left(const Base &base, const PairElement &p)
{
    TripleElement out;
    for (const auto &[pair, c] : p.terms()) {
        for (const auto &[inner, d] : coproduct_word(base, pair.first).terms()) {
            out.add(WordTriple(inner.first, inner.second, pair.second), c * d);
        }
    }
    return out;
}

TripleElement coproduct_on_right(const Base &base, const PairElement &p)
{
    TripleElement out;
    for (const auto &[pair, c] : p.terms()) {
        for (const auto &[inner, d] : coproduct_word(base, pair.second).terms()) {
            out.add(WordTriple(pair.first, inner.first, inner.second), c * d);
        }
    }
    return out;
}

TripleElement p_right_on_third(const TripleElement &t)
{
    TripleElement out;
    for (const auto &[triple, c] : t.terms()) {
        out.add(WordTriple(std::get<0>(triple), std::get<1>(triple),
                           std::get<2>(triple).with_unit_prepended()),
                c);
    }
    return out;
}

ShuffleElement collapse_left_by_counit(const Base &base, const PairElement &p)
{
    ShuffleElement out;
    for (const auto &[pair, c] : p.terms()) {
        out.add(pair.second, c * counit_word(base, pair.first));
    }
    return out;
}

ShuffleElement collapse_right_by_counit(const Base &base, const PairElement &p)
{
    ShuffleElement out;
    for (const auto &[pair, c] : p.terms()) {
        out.add(pair.first, c * counit_word(base, pair.second));
    }
    return out;
}

bool left_counit_check(const Base &base, const ShuffleElement &e)
{
    return collapse_left_by_counit(base, coproduct(base, e)) == e;
}

std::pair<bool, ShuffleElement> right_counit_check(const Base &base, const ShuffleElement &e)
{
    ShuffleElement actual = collapse_right_by_counit(base, coproduct(base, e));
    const bool holds = actual == e;
    return {holds, std::move(actual)};
}

bool coassoc_check(const Base &base, const ShuffleElement &e)
{
    const PairElement cp = coproduct(base, e);
    return coproduct_on_left(base, cp) == coproduct_on_right(base, cp);
}

} // namespace freenij
