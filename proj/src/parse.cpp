#include "freenij/parse.hpp"

#include <cctype>
#include <string>

namespace freenij {

namespace {

// exponents and u-word indices stay well below this; the cap just keeps a
// typo from requesting a gigabyte-long word
constexpr std::uint64_t max_small_nat = 1000000;

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end()
    {
        skip_ws();
        return pos >= text.size();
    }

    char peek()
    {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool consume(char c)
    {
        if (peek() != c) return false;
        ++pos;
        return true;
    }

    std::string digits(const char *what)
    {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError(start, std::string("expected ") + what);
        return std::string(text.substr(start, pos - start));
    }

    std::uint64_t small_nat(const char *what)
    {
        skip_ws();
        const std::size_t at = pos;
        const std::string d = digits(what);
        if (d.size() > 7) throw ParseError(at, std::string(what) + " is too large");
        const std::uint64_t value = std::stoull(d);
        if (value > max_small_nat) throw ParseError(at, std::string(what) + " is too large");
        return value;
    }
};

class Parser {
  public:
    Parser(std::string_view text, const Base &base) : s_{text}, base_(base) {}

    ShuffleElement run()
    {
        if (s_.at_end()) throw ParseError(s_.pos, "empty input");
        ShuffleElement out;
        int sign = s_.consume('-') ? -1 : (s_.consume('+'), +1);
        term_into(out, sign);
        while (!s_.at_end()) {
            if (s_.consume('+')) {
                term_into(out, +1);
            } else if (s_.consume('-')) {
                term_into(out, -1);
            } else {
                throw ParseError(s_.pos, "expected '+' or '-' between terms");
            }
        }
        return out;
    }

  private:
    void term_into(ShuffleElement &out, int sign)
    {
        const char c = s_.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t num_pos = s_.pos;
            const std::string num = s_.digits("a number");
            const char next = s_.peek();
            if (next == '/' || next == '*') {
                Rational coeff;
                if (s_.consume('/')) {
                    const std::size_t den_pos = s_.pos;
                    const Int den(s_.digits("a denominator"));
                    if (den == 0) throw ParseError(den_pos, "denominator must be positive");
                    coeff = Rational(Int(num), den);
                } else {
                    coeff = Rational(Int(num));
                }
                if (!s_.consume('*')) {
                    throw ParseError(s_.pos, "expected '*' after the coefficient");
                }
                out.add(word(), Rational(sign) * coeff);
                return;
            }
            if (num == "0") return; // the zero element contributes no term
            if (num == "1") {
                // a word starting with the unit letter: "1", "1|x", ...
                out.add(word_after_first_letter(BaseIndex{0}), Rational(sign));
                return;
            }
            throw ParseError(num_pos, "expected '*' after a coefficient");
        }
        out.add(word(), Rational(sign));
    }

    TensorWord word()
    {
        if (s_.peek() == 'u') {
            const std::size_t at = s_.pos;
            if (base_.kind() != BaseKind::trivial) {
                throw ParseError(at, "u-words require the trivial base");
            }
            ++s_.pos;
            return TensorWord::all_units(s_.small_nat("a u-word index") + 1);
        }
        return word_after_first_letter(letter());
    }

    TensorWord word_after_first_letter(BaseIndex first)
    {
        std::vector<BaseIndex> letters{first};
        while (s_.consume('|')) letters.push_back(letter());
        return TensorWord(std::move(letters));
    }

    BaseIndex letter()
    {
        const std::size_t at = s_.pos;
        if (s_.consume('1')) return BaseIndex{0};
        if (s_.consume('x')) {
            if (base_.kind() == BaseKind::trivial) {
                throw ParseError(at, "letter 'x' requires a polynomial base");
            }
            std::uint64_t e = 1;
            if (s_.consume('^')) e = s_.small_nat("an exponent");
            return BaseIndex{static_cast<std::uint32_t>(e)};
        }
        throw ParseError(s_.pos, "expected a letter ('1' or 'x')");
    }

    Scanner s_;
    const Base &base_;
};

} // namespace

ShuffleElement parse_element(std::string_view text, const Base &base)
{
    return Parser(text, base).run();
}

Rational parse_rational(std::string_view text)
{
    Scanner s{text};
    if (s.at_end()) throw ParseError(s.pos, "empty input");
    const int sign = s.consume('-') ? -1 : (s.consume('+'), +1);
    const Int num(s.digits("a number"));
    Rational r(num);
    if (s.consume('/')) {
        const std::size_t den_pos = s.pos;
        const Int den(s.digits("a denominator"));
        if (den == 0) throw ParseError(den_pos, "denominator must be positive");
        r = Rational(num, den);
    }
    if (!s.at_end()) throw ParseError(s.pos, "unexpected trailing text");
    return Rational(sign) * r;
}

} // namespace freenij
