#include "freenij/nijenhuis.hpp"

#include <map>
#include <utility>

#include "freenij/kernels.hpp"

namespace freenij {

namespace {

using Memo = std::map<WordPair, ShuffleElement>;

ShuffleElement p_right_word_sum(const ShuffleElement &e)
{
    ShuffleElement out;
    for (const auto &[w, c] : e.terms()) out.add(w.with_unit_prepended(), c);
    return out;
}

const ShuffleElement &mul_words_rec(const Base &base, const TensorWord &a, const TensorWord &b,
                                    Memo &memo)
{
    auto found = memo.find({a, b});
    if (found != memo.end()) return found->second;

    const std::size_t m = a.length();
    const std::size_t n = b.length();
    const BaseVector head = base.mul(a.head(), b.head());

    ShuffleElement result;
    if (m == 1 && n == 1) {
        for (const auto &[i, c] : head.terms()) result.add(TensorWord({i}), c);
    } else if (m == 1) {
        const TensorWord bt = b.tail();
        for (const auto &[i, c] : head.terms()) result.add(bt.prepended(i), c);
    } else if (n == 1) {
        const TensorWord at = a.tail();
        for (const auto &[i, c] : head.terms()) result.add(at.prepended(i), c);
    } else {
        const TensorWord at = a.tail();
        const TensorWord bt = b.tail();
        ShuffleElement inner = mul_words_rec(base, at, bt.with_unit_prepended(), memo);
        inner += mul_words_rec(base, at.with_unit_prepended(), bt, memo);
        inner -= p_right_word_sum(mul_words_rec(base, at, bt, memo));
        for (const auto &[i, c] : head.terms()) {
            for (const auto &[w, d] : inner.terms()) result.add(w.prepended(i), c * d);
        }
    }

    auto [it, inserted] = memo.emplace(WordPair(a, b), std::move(result));
    (void)inserted;
    return it->second;
}

} // namespace

ShuffleElement unit_embed(const Rational &c) { return ShuffleElement(TensorWord::unit(), c); }

ShuffleElement make_u(std::size_t n)
{
    return ShuffleElement(TensorWord::all_units(n + 1), Rational(1));
}

ShuffleElement p_right(const ShuffleElement &e, ExecMode mode)
{
    return kernels::linear_expand(
        e,
        [](const TensorWord &w) {
            return ShuffleElement(w.with_unit_prepended(), Rational(1));
        },
        mode);
}

ShuffleElement nij_mul_words(const Base &base, const TensorWord &a, const TensorWord &b)
{
    Memo memo;
    return mul_words_rec(base, a, b, memo);
}

ShuffleElement nij_mul(const Base &base, const ShuffleElement &a, const ShuffleElement &b,
                       ExecMode mode)
{
    return kernels::bilinear_expand(
        a, b,
        [&base](const TensorWord &wa, const TensorWord &wb) {
            return nij_mul_words(base, wa, wb);
        },
        mode);
}

} // namespace freenij
