#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "freenij/coalgebra.hpp"
#include "freenij/enumerate.hpp"
#include "freenij/nijenhuis.hpp"
#include "freenij/parse.hpp"
#include "freenij/render.hpp"

using namespace freenij;

namespace {

ShuffleElement elem(const TensorWord &w) { return ShuffleElement(w, Rational(1)); }

WordPair wp(const char *l, const char *r, const Base &base)
{
    auto one = [&base](const char *t) {
        const ShuffleElement e = parse_element(t, base);
        REQUIRE(e.size() == 1);
        return e.terms().begin()->first;
    };
    return WordPair(one(l), one(r));
}

} // namespace

TEST_CASE("componentwise pair product")
{
    const Base &base = Base::from_name("onesided");
    PairElement p(wp("x", "1", base), Rational(1));
    PairElement q(wp("x", "1|1", base), Rational(1));
    // (x (x) 1) . (x (x) 1|1) = (x dr x) (x) (1 dr 1|1) = x^2 (x) 1|1
    CHECK(pair_mul(base, p, q) == PairElement(wp("x^2", "1|1", base), Rational(1)));

    // bilinearity with coefficients
    PairElement p2 = p;
    p2 *= Rational(Int(2), Int(3));
    PairElement got = pair_mul(base, p2, q);
    PairElement want(wp("x^2", "1|1", base), Rational(Int(2), Int(3)));
    CHECK(got == want);

    CHECK(pair_mul(base, PairElement(), q).is_zero());
}

TEST_CASE("coproduct of u-words is a pure right leg")
{
    const Base &base = Base::from_name("trivial");
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(coproduct(base, make_u(n)) ==
              PairElement(WordPair(TensorWord::unit(), TensorWord::all_units(n + 1)),
                          Rational(1)));
    }
    // linearity keeps scalar weights on the coefficient
    CHECK(coproduct(base, Rational(6) * make_u(2)) ==
          Rational(6) * PairElement(WordPair(TensorWord::unit(), TensorWord::all_units(3)),
                                    Rational(1)));
}

TEST_CASE("onesided coproduct degenerates to 1 (x) w on every word")
{
    const Base &base = Base::from_name("onesided");
    for (const TensorWord &w : enumerate_words(base, 3, 2)) {
        CHECK(coproduct_word(base, w) == PairElement(WordPair(TensorWord::unit(), w), Rational(1)));
    }
}

TEST_CASE("binomial coproduct of x (x) x, frozen by hand")
{
    const Base &base = Base::from_name("binomial");
    // Delta(x (x) x) = 1 (x) (x (x) x) + x (x) (1 (x) x) + x (x) (x (x) 1)
    //                + x^2 (x) (1 (x) 1)
    PairElement expected;
    expected.add(wp("1", "x|x", base), Rational(1));
    expected.add(wp("x", "1|x", base), Rational(1));
    expected.add(wp("x", "x|1", base), Rational(1));
    expected.add(wp("x^2", "1|1", base), Rational(1));
    CHECK(coproduct(base, parse_element("x|x", base)) == expected);
}

TEST_CASE("counit multiplies letterwise counits")
{
    const Base &trivial = Base::from_name("trivial");
    for (std::size_t n = 0; n <= 8; ++n) CHECK(counit(trivial, make_u(n)) == Rational(1));

    const Base &base = Base::from_name("binomial");
    CHECK(counit_word(base, parse_element("x|1|x^2", base).terms().begin()->first) ==
          Rational(0));
    CHECK(counit(base, parse_element("1|1", base)) == Rational(1));
    CHECK(counit(base, parse_element("3/2*1 - x + 2*1|1", base)) == Rational(Int(7), Int(2)));
    CHECK(counit(base, ShuffleElement()) == Rational(0));
}

TEST_CASE("counit is invariant under the right shift")
{
    for (const char *name : {"trivial", "onesided", "binomial"}) {
        const Base &base = Base::from_name(name);
        for (const TensorWord &w : enumerate_words(base, 3, 2)) {
            CHECK(counit(base, p_right(elem(w))) == counit_word(base, w));
        }
    }
}

TEST_CASE("coproduct is a cocycle for the right shift")
{
    for (const char *name : {"trivial", "onesided", "binomial"}) {
        const Base &base = Base::from_name(name);
        for (const TensorWord &w : enumerate_words(base, 3, 2)) {
            CHECK(coproduct(base, p_right(elem(w))) ==
                  p_right_on_right(coproduct_word(base, w)));
        }
    }
}

TEST_CASE("coproduct and counit are algebra maps")
{
    for (const char *name : {"trivial", "onesided", "binomial"}) {
        const Base &base = Base::from_name(name);
        const auto words = enumerate_words(base, 2, 2);
        for (const TensorWord &a : words) {
            for (const TensorWord &b : words) {
                const ShuffleElement prod = nij_mul_words(base, a, b);
                CHECK(coproduct(base, prod) ==
                      pair_mul(base, coproduct_word(base, a), coproduct_word(base, b)));
                CHECK(counit(base, prod) == counit_word(base, a) * counit_word(base, b));
            }
        }
    }
}

TEST_CASE("coassociativity on words")
{
    for (const char *name : {"trivial", "onesided", "binomial"}) {
        const Base &base = Base::from_name(name);
        for (const TensorWord &w : enumerate_words(base, 3, 2)) {
            CHECK(coassoc_check(base, elem(w)));
        }
    }
    CHECK(coassoc_check(Base::from_name("binomial"), ShuffleElement()));
}

TEST_CASE("left counicity holds everywhere")
{
    for (const char *name : {"trivial", "onesided", "binomial"}) {
        const Base &base = Base::from_name(name);
        for (const TensorWord &w : enumerate_words(base, 3, 2)) {
            CHECK(left_counit_check(base, elem(w)));
        }
        CHECK(left_counit_check(base, ShuffleElement()));
    }
}

TEST_CASE("right counicity fails, and says what it got")
{
    const Base &base = Base::from_name("binomial");

    SUBCASE("length-1 words still satisfy it under the binomial base")
    {
        const auto [holds, actual] = right_counit_check(base, parse_element("x", base));
        CHECK(holds);
        CHECK(actual == parse_element("x", base));
    }

    SUBCASE("x (x) x collapses to x^2")
    {
        const auto [holds, actual] = right_counit_check(base, parse_element("x|x", base));
        CHECK_FALSE(holds);
        CHECK(actual == parse_element("x^2", base));
    }

    SUBCASE("u_1 collapses to u_0 under the trivial base")
    {
        const Base &trivial = Base::from_name("trivial");
        const auto [holds, actual] = right_counit_check(trivial, make_u(1));
        CHECK_FALSE(holds);
        CHECK(actual == make_u(0));
    }

    SUBCASE("the onesided base collapses every word to its counit multiple")
    {
        const Base &onesided = Base::from_name("onesided");
        const auto [holds, actual] = right_counit_check(onesided, parse_element("x", onesided));
        CHECK_FALSE(holds);
        CHECK(actual.is_zero());
    }
}

TEST_CASE("coproduct legs commute with the right shift on the second slot")
{
    for (const char *name : {"trivial", "onesided", "binomial"}) {
        const Base &base = Base::from_name(name);
        const auto words = enumerate_words(base, 2, 2);
        for (const TensorWord &a : words) {
            for (const TensorWord &b : words) {
                const PairElement pure(WordPair(a, b), Rational(1));
                const PairElement shifted = p_right_on_right(pure);
                CHECK(coproduct_on_right(base, shifted) ==
                      p_right_on_third(coproduct_on_right(base, pure)));
                CHECK(coproduct_on_left(base, shifted) ==
                      p_right_on_third(coproduct_on_left(base, pure)));
            }
        }
    }
}

TEST_CASE("triple expansion of a concrete pair")
{
    const Base &base = Base::from_name("onesided");
    const PairElement pure(wp("x", "x|x", base), Rational(1));
    // onesided coproducts are 1 (x) w, so both triple expansions are direct
    TripleElement left_expected;
    left_expected.add(WordTriple(TensorWord::unit(),
                                 parse_element("x", base).terms().begin()->first,
                                 parse_element("x|x", base).terms().begin()->first),
                      Rational(1));
    CHECK(coproduct_on_left(base, pure) == left_expected);

    TripleElement right_expected;
    right_expected.add(WordTriple(parse_element("x", base).terms().begin()->first,
                                  TensorWord::unit(),
                                  parse_element("x|x", base).terms().begin()->first),
                       Rational(1));
    CHECK(coproduct_on_right(base, pure) == right_expected);
}
