// Acceptance checks: one line per criterion, nonzero exit if any fails.
#include <cstdio>
#include <exception>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "freenij/coalgebra.hpp"
#include "freenij/enumerate.hpp"
#include "freenij/hopf.hpp"
#include "freenij/nijenhuis.hpp"
#include "freenij/parse.hpp"
#include "freenij/render.hpp"
#include "freenij/rotabaxter.hpp"
#include "freenij/suite.hpp"

using namespace freenij;

namespace {

constexpr const char *all_bases[] = {"trivial", "onesided", "binomial"};

ShuffleElement elem(const TensorWord &w) { return ShuffleElement(w, Rational(1)); }

std::vector<std::vector<Int>> pascal_rows(std::size_t max_n)
{
    std::vector<std::vector<Int>> rows(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
        rows[n].assign(n + 1, Int(1));
        for (std::size_t k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
    }
    return rows;
}

// 1. P(x)P(y) = P(P(x)y) + P(xP(y)) - P^2(xy), all words up to the bound
bool nijenhuis_identity_exhaustive()
{
    for (const char *name : all_bases) {
        const Base &base = Base::from_name(name);
        const auto words = enumerate_words(base, 3, 2);
        for (const TensorWord &a : words) {
            for (const TensorWord &b : words) {
                const ShuffleElement x = elem(a);
                const ShuffleElement y = elem(b);
                const ShuffleElement lhs = nij_mul(base, p_right(x), p_right(y));
                const ShuffleElement rhs = p_right(nij_mul(base, p_right(x), y)) +
                                           p_right(nij_mul(base, x, p_right(y))) -
                                           p_right(p_right(nij_mul(base, x, y)));
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

// 2. u_m dr u_n = u_{m+n}
bool unit_word_closed_form()
{
    const Base &base = Base::from_name("trivial");
    for (std::size_t m = 0; m <= 10; ++m) {
        for (std::size_t n = 0; n <= 10; ++n) {
            if (nij_mul(base, make_u(m), make_u(n)) != make_u(m + n)) return false;
        }
    }
    return true;
}

// 3. Delta_T and eps_T are algebra maps; the cocycle, coassociativity, and
//    the left counit law hold on every word up to the bound
bool bialgebra_laws_exhaustive()
{
    for (const char *name : all_bases) {
        const Base &base = Base::from_name(name);
        const auto words = enumerate_words(base, 3, 2);

        std::map<TensorWord, PairElement> cache;
        auto cached = [&](const TensorWord &w) -> const PairElement & {
            auto it = cache.find(w);
            if (it == cache.end()) it = cache.emplace(w, coproduct_word(base, w)).first;
            return it->second;
        };
        auto coproduct_of = [&](const ShuffleElement &e) {
            PairElement out;
            for (const auto &[w, c] : e.terms()) out.add_scaled(cached(w), c);
            return out;
        };

        for (const TensorWord &w : words) {
            if (!left_counit_check(base, elem(w))) return false;
            if (!coassoc_check(base, elem(w))) return false;
            if (coproduct_of(p_right(elem(w))) != p_right_on_right(cached(w))) return false;
            if (counit(base, p_right(elem(w))) != counit_word(base, w)) return false;
        }
        for (const TensorWord &a : words) {
            for (const TensorWord &b : words) {
                const ShuffleElement prod = nij_mul_words(base, a, b);
                if (coproduct_of(prod) != pair_mul(base, cached(a), cached(b))) return false;
                if (counit(base, prod) != counit_word(base, a) * counit_word(base, b)) {
                    return false;
                }
            }
        }
    }
    return true;
}

// 4. the right counit law fails, with the recorded witness, and the suite
//    reports the failure as expected
bool right_counicity_expected_failure()
{
    const Base &bin = Base::from_name("binomial");
    const auto [holds, actual] = right_counit_check(bin, parse_element("x|x", bin));
    if (holds) return false;
    if (actual != parse_element("x^2", bin)) return false;

    SuiteConfig cfg;
    cfg.base = "binomial";
    cfg.axioms = {"right-counicity"};
    const SuiteReport report = run_axiom_suite(cfg);
    const AxiomOutcome &a = report.axioms.front();
    return a.expected_failure && a.satisfied() && a.counterexample.has_value() &&
           report.verdict_pass();
}

// 5. coproduct filtration on the admissible bases; degree multiplicativity
//    of the product on all bases
bool filtration_and_grading()
{
    for (const char *name : {"trivial", "onesided"}) {
        const Base &base = Base::from_name(name);
        for (std::uint64_t n = 0; n <= 5; ++n) {
            if (!filtration_check(base, n)) return false;
        }
    }
    for (const char *name : all_bases) {
        const Base &base = Base::from_name(name);
        for (std::uint64_t n = 0; n <= 5; ++n) {
            for (std::uint64_t p = 0; p <= n; ++p) {
                for (const TensorWord &a : words_of_degree(base, p)) {
                    for (const TensorWord &b : words_of_degree(base, n - p)) {
                        for (const auto &[w, c] : nij_mul_words(base, a, b).terms()) {
                            if (degree(base, w) != n) return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

// 6. S is a right inverse of the identity under convolution
bool antipode_convolution_inverse()
{
    const Base &triv = Base::from_name("trivial");
    for (std::size_t n = 0; n <= 8; ++n) {
        if (antipode(triv, make_u(n)) != make_u(0)) return false;
        if (convolve(triv, EndoHandle::identity, EndoHandle::antipode, make_u(n)) !=
            unit_embed(counit(triv, make_u(n)))) {
            return false;
        }
    }
    const Base &one = Base::from_name("onesided");
    for (const TensorWord &w : enumerate_words(one, 4, 2)) {
        if (convolve(one, EndoHandle::identity, EndoHandle::antipode, elem(w)) !=
            unit_embed(counit_word(one, w))) {
            return false;
        }
    }
    return true;
}

// 7. the binomial coalgebra on unit words is Hopf with S(u_n) = (-1)^n u_n
bool binomial_hopf_on_unit_words()
{
    const Base &triv = Base::from_name("trivial");
    const auto rows = pascal_rows(10);
    for (std::size_t n = 0; n <= 10; ++n) {
        PairElement want_cp;
        for (std::size_t i = 0; i <= n; ++i) {
            want_cp.add(WordPair(TensorWord::all_units(i + 1), TensorWord::all_units(n - i + 1)),
                        Rational(rows[n][i]));
        }
        if (binomial_coproduct_u(triv, n) != want_cp) return false;
        if (binomial_antipode_u(triv, n) != (n % 2 == 0 ? make_u(n) : -make_u(n))) return false;

        ShuffleElement left, right;
        for (std::size_t i = 0; i <= n; ++i) {
            const Rational c(rows[n][i]);
            left.add_scaled(nij_mul(triv, make_u(i), binomial_antipode_u(triv, n - i)), c);
            right.add_scaled(nij_mul(triv, binomial_antipode_u(triv, i), make_u(n - i)), c);
        }
        const ShuffleElement want = binomial_counit_u(n) * make_u(0);
        if (left != want || right != want) return false;
    }
    return true;
}

// 8. the alternating coefficient identity, and the weight substitution
//    reproducing the Nijenhuis product
bool stuffle_correspondence()
{
    for (std::size_t m = 0; m <= 12; ++m) {
        for (std::size_t n = 0; n <= 12; ++n) {
            if (identity_sum(m, n) != 1) return false;
        }
    }
    const Base &triv = Base::from_name("trivial");
    for (std::size_t m = 0; m <= 10; ++m) {
        for (std::size_t n = 0; n <= 10; ++n) {
            if (nij_from_stuffle(triv, m, n) != nij_mul(triv, make_u(m), make_u(n))) {
                return false;
            }
        }
    }
    return true;
}

// 9. parse/render roundtrips on seeded random elements; byte-identical
//    suite reports across repeat runs and execution modes
bool roundtrip_and_determinism()
{
    std::mt19937_64 rng(2024);
    for (const char *name : all_bases) {
        const Base &base = Base::from_name(name);
        const std::uint32_t max_exp = base.kind() == BaseKind::trivial ? 0 : 3;
        for (int trial = 0; trial < 500; ++trial) {
            ShuffleElement e;
            const std::size_t terms = rng() % 5;
            for (std::size_t t = 0; t < terms; ++t) {
                const std::size_t len = 1 + rng() % 4;
                std::vector<BaseIndex> letters;
                for (std::size_t i = 0; i < len; ++i) {
                    letters.push_back(
                        BaseIndex{max_exp == 0 ? 0 : std::uint32_t(rng() % (max_exp + 1))});
                }
                const long num = long(rng() % 13) - 6;
                const long den = 1 + long(rng() % 4);
                e.add(TensorWord(std::move(letters)), Rational(Int(num), Int(den)));
            }
            const std::string text = render_element(e);
            if (parse_element(text, base) != e) return false;
            if (render_element(parse_element(text, base)) != text) return false;
        }
    }

    SuiteConfig cfg;
    cfg.base = "binomial";
    cfg.max_len = 2;
    cfg.max_exp = 2;
    cfg.max_u = 6;
    cfg.trials = 50;
    cfg.seed = 42;
    cfg.output = OutputMode::json;
    const SuiteReport r1 = run_axiom_suite(cfg);
    const SuiteReport r2 = run_axiom_suite(cfg);
    if (r1.to_json() != r2.to_json()) return false;
    if (r1.to_text() != r2.to_text()) return false;

    set_exec_mode(ExecMode::serial);
    const SuiteReport rs = run_axiom_suite(cfg);
    set_exec_mode(ExecMode::parallel);
    const SuiteReport rp = run_axiom_suite(cfg);
    return rs.to_json() == rp.to_json();
}

int failures = 0;

void report(int idx, const char *label, bool (*criterion)())
{
    bool ok = false;
    std::string note;
    try {
        ok = criterion();
    } catch (const std::exception &ex) {
        note = std::string(" (exception: ") + ex.what() + ")";
    }
    std::printf("[%s] %d. %s%s\n", ok ? "PASS" : "FAIL", idx, label, note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

} // namespace

int main()
{
    report(1, "Nijenhuis operator identity (exhaustive, all bases)",
           nijenhuis_identity_exhaustive);
    report(2, "unit-word product closed form u_m dr u_n = u_{m+n}", unit_word_closed_form);
    report(3, "bialgebra compatibility laws (exhaustive, all bases)",
           bialgebra_laws_exhaustive);
    report(4, "right counit law fails with the recorded witness",
           right_counicity_expected_failure);
    report(5, "coproduct filtration and degree grading", filtration_and_grading);
    report(6, "antipode is a right convolution inverse", antipode_convolution_inverse);
    report(7, "binomial Hopf structure on unit words", binomial_hopf_on_unit_words);
    report(8, "stuffle correspondence and coefficient identity", stuffle_correspondence);
    report(9, "parse/render roundtrips and report determinism", roundtrip_and_determinism);

    std::printf("acceptance: %d/9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
