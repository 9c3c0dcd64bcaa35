#include "freenij/base.hpp"

#include "freenij/error.hpp"

namespace freenij {

const Base &Base::from_name(std::string_view name)
{
    static const Base trivial(BaseKind::trivial, "trivial");
    static const Base onesided(BaseKind::onesided_poly, "onesided");
    static const Base binomial_(BaseKind::binomial_poly, "binomial");
    if (name == "trivial") return trivial;
    if (name == "onesided") return onesided;
    if (name == "binomial") return binomial_;
    throw Error("unknown base '" + std::string(name) +
                "' (expected trivial, onesided, or binomial)");
}

void Base::require_valid(BaseIndex i) const
{
    if (kind_ == BaseKind::trivial && i.exponent != 0) {
        throw Error("the trivial base has no letter x^" + std::to_string(i.exponent));
    }
}

BaseVector Base::mul(BaseIndex a, BaseIndex b) const
{
    require_valid(a);
    require_valid(b);
    return BaseVector(BaseIndex{a.exponent + b.exponent}, Rational(1));
}

std::vector<BaseCoproductTerm> Base::coproduct(BaseIndex a) const
{
    require_valid(a);
    switch (kind_) {
    case BaseKind::trivial:
        return {{Rational(1), BaseIndex{0}, BaseIndex{0}}};
    case BaseKind::onesided_poly:
        return {{Rational(1), BaseIndex{0}, a}};
    case BaseKind::binomial_poly: {
        std::vector<BaseCoproductTerm> terms;
        terms.reserve(a.exponent + 1);
        for (std::uint32_t i = 0; i <= a.exponent; ++i) {
            terms.push_back({Rational(binomial(a.exponent, i)), BaseIndex{i},
                             BaseIndex{a.exponent - i}});
        }
        return terms;
    }
    }
    throw Error("unreachable base kind");
}

Rational Base::counit(BaseIndex a) const
{
    require_valid(a);
    return a.exponent == 0 ? Rational(1) : Rational(0);
}

std::uint64_t Base::degree(BaseIndex a) const
{
    require_valid(a);
    return kind_ == BaseKind::trivial ? 0 : a.exponent;
}

} // namespace freenij
