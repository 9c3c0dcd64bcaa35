#include "freenij/render.hpp"

#include <string>

namespace freenij {

namespace {

void append_signed_term(std::string &out, const Rational &coeff, const std::string &body)
{
    if (out.empty()) {
        if (coeff.sign() < 0) out += '-';
    } else {
        out += coeff.sign() < 0 ? " - " : " + ";
    }
    const Rational mag = coeff.abs();
    if (!mag.is_one()) {
        out += mag.str();
        out += '*';
    }
    out += body;
}

} // namespace

std::string render_word(const TensorWord &w)
{
    std::string s;
    for (BaseIndex l : w.letters()) {
        if (!s.empty()) s += '|';
        if (l.exponent == 0) {
            s += '1';
        } else if (l.exponent == 1) {
            s += 'x';
        } else {
            s += "x^" + std::to_string(l.exponent);
        }
    }
    return s;
}

std::string render_element(const ShuffleElement &e)
{
    if (e.is_zero()) return "0";
    std::string s;
    for (const auto &[w, c] : e.terms()) append_signed_term(s, c, render_word(w));
    return s;
}

std::string render_pair(const PairElement &p)
{
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto &[pair, c] : p.terms()) {
        append_signed_term(s, c, render_word(pair.first) + " (x) " + render_word(pair.second));
    }
    return s;
}

std::string render_triple(const TripleElement &t)
{
    if (t.is_zero()) return "0";
    std::string s;
    for (const auto &[triple, c] : t.terms()) {
        append_signed_term(s, c,
                           render_word(std::get<0>(triple)) + " (x) " +
                               render_word(std::get<1>(triple)) + " (x) " +
                               render_word(std::get<2>(triple)));
    }
    return s;
}

} // namespace freenij
