#include "freenij/hopf.hpp"

#include <map>
#include <utility>

#include "freenij/coalgebra.hpp"
#include "freenij/enumerate.hpp"
#include "freenij/error.hpp"
#include "freenij/nijenhuis.hpp"

namespace freenij {

namespace {

void require_admissible(const Base &base, bool allow_inadmissible)
{
    if (base.antipode_admissible() || allow_inadmissible) return;
    throw Error("base '" + base.name() +
                "' is not admissible for the antipode: its coproduct has a component "
                "in degree (n, 0) with n > 0 (pass allow-inadmissible to compute anyway)");
}

using AntipodeMemo = std::map<TensorWord, ShuffleElement>;

const ShuffleElement &antipode_word(const Base &base, const TensorWord &w, AntipodeMemo &memo)
{
    auto found = memo.find(w);
    if (found != memo.end()) return found->second;

    ShuffleElement s = unit_embed(counit_word(base, w));
    if (!w.is_unit()) {
        const std::uint64_t n = degree(base, w);
        PairElement rc = coproduct_word(base, w);
        rc.add(WordPair(TensorWord::unit(), w), Rational(-1));
        for (const auto &[pair, c] : rc.terms()) {
            if (degree(base, pair.second) >= n) {
                // the recursion is only well-founded because right legs of the
                // reduced coproduct drop in degree; a violation is a logic bug
                throw Error("antipode recursion: right leg failed to drop in degree");
            }
            const ShuffleElement tail_s = antipode_word(base, pair.second, memo);
            s.add_scaled(
                nij_mul(base, ShuffleElement(pair.first, Rational(1)), tail_s, ExecMode::serial),
                -c);
        }
    }

    auto [it, inserted] = memo.emplace(w, std::move(s));
    (void)inserted;
    return it->second;
}

ShuffleElement apply_endo_word(const Base &base, EndoHandle f, const TensorWord &w,
                               AntipodeMemo &memo, bool allow_inadmissible)
{
    switch (f) {
    case EndoHandle::identity:
        return ShuffleElement(w, Rational(1));
    case EndoHandle::antipode:
        require_admissible(base, allow_inadmissible);
        return antipode_word(base, w, memo);
    case EndoHandle::unit_counit_e:
        return unit_embed(counit_word(base, w));
    case EndoHandle::binomial_antipode: {
        if (base.kind() != BaseKind::trivial) {
            throw Error("the binomial antipode on u-words requires the trivial base");
        }
        const bool odd = (w.length() - 1) % 2 != 0; // w = u_{length-1}
        return ShuffleElement(w, odd ? Rational(-1) : Rational(1));
    }
    }
    throw Error("unreachable endomorphism handle");
}

} // namespace

std::uint64_t degree(const Base &base, const TensorWord &w)
{
    std::uint64_t d = w.length() - 1;
    for (BaseIndex l : w.letters()) d += base.degree(l);
    return d;
}

GradedDecomposition decompose(const Base &base, const ShuffleElement &e)
{
    GradedDecomposition parts;
    for (const auto &[w, c] : e.terms()) parts[degree(base, w)].add(w, c);
    return parts;
}

PairElement reduced_coproduct(const Base &base, const ShuffleElement &e)
{
    PairElement rc = coproduct(base, e);
    for (const auto &[w, c] : e.terms()) rc.add(WordPair(TensorWord::unit(), w), -c);
    return rc;
}

ShuffleElement antipode(const Base &base, const ShuffleElement &e, bool allow_inadmissible)
{
    require_admissible(base, allow_inadmissible);
    AntipodeMemo memo;
    ShuffleElement out;
    for (const auto &[w, c] : e.terms()) out.add_scaled(antipode_word(base, w, memo), c);
    return out;
}

ShuffleElement apply_endo(const Base &base, EndoHandle f, const ShuffleElement &e,
                          bool allow_inadmissible)
{
    AntipodeMemo memo;
    ShuffleElement out;
    for (const auto &[w, c] : e.terms()) {
        out.add_scaled(apply_endo_word(base, f, w, memo, allow_inadmissible), c);
    }
    return out;
}

ShuffleElement convolve(const Base &base, EndoHandle f, EndoHandle g, const ShuffleElement &e,
                        bool allow_inadmissible, ExecMode mode)
{
    const PairElement cp = coproduct(base, e, mode);
    AntipodeMemo memo; // shared across legs so repeated words pay once
    ShuffleElement out;
    for (const auto &[pair, c] : cp.terms()) {
        const ShuffleElement left = apply_endo_word(base, f, pair.first, memo, allow_inadmissible);
        const ShuffleElement right =
            apply_endo_word(base, g, pair.second, memo, allow_inadmissible);
        out.add_scaled(nij_mul(base, left, right, mode), c);
    }
    return out;
}

bool filtration_check(const Base &base, std::uint64_t n)
{
    require_admissible(base, false);

    // coproduct shape: scalar leg only on the left, otherwise both legs of
    // positive degree, and degrees always summing to n
    for (const TensorWord &w : words_of_degree(base, n)) {
        for (const auto &[pair, c] : coproduct_word(base, w).terms()) {
            const std::uint64_t p = degree(base, pair.first);
            const std::uint64_t q = degree(base, pair.second);
            if (p + q != n) return false;
            if (p != 0 && q == 0 && n != 0) return false;
        }
    }

    // products of homogeneous words across every split p + q = n stay
    // homogeneous of degree n
    for (std::uint64_t p = 0; p <= n; ++p) {
        const auto left_words = words_of_degree(base, p);
        const auto right_words = words_of_degree(base, n - p);
        for (const TensorWord &a : left_words) {
            for (const TensorWord &b : right_words) {
                for (const auto &[w, c] : nij_mul_words(base, a, b).terms()) {
                    if (degree(base, w) != n) return false;
                }
            }
        }
    }
    return true;
}

PairElement binomial_coproduct_u(const Base &base, std::size_t n)
{
    if (base.kind() != BaseKind::trivial) {
        throw Error("the binomial coproduct on u-words requires the trivial base");
    }
    PairElement out;
    for (std::size_t i = 0; i <= n; ++i) {
        out.add(WordPair(TensorWord::all_units(i + 1), TensorWord::all_units(n - i + 1)),
                Rational(binomial(n, i)));
    }
    return out;
}

Rational binomial_counit_u(std::size_t n) { return n == 0 ? Rational(1) : Rational(0); }

ShuffleElement binomial_antipode_u(const Base &base, std::size_t n)
{
    if (base.kind() != BaseKind::trivial) {
        throw Error("the binomial antipode on u-words requires the trivial base");
    }
    return ShuffleElement(TensorWord::all_units(n + 1), n % 2 == 0 ? Rational(1) : Rational(-1));
}

} // namespace freenij
