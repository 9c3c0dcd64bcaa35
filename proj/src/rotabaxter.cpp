#include "freenij/rotabaxter.hpp"

#include <algorithm>

#include "freenij/error.hpp"
#include "freenij/nijenhuis.hpp"

namespace freenij {

namespace {

void require_trivial(const Base &base, const char *what)
{
    if (base.kind() != BaseKind::trivial) {
        throw Error(std::string(what) + " is defined on u-words and requires the trivial base");
    }
}

} // namespace

ShuffleElement stuffle_u(const Base &base, std::size_t m, std::size_t n, const Weight &w)
{
    require_trivial(base, "the stuffle product");
    ShuffleElement out;
    for (std::size_t k = 0; k <= std::min(m, n); ++k) {
        const Rational coeff =
            Rational(binomial(m + n - k, m) * binomial(m, k)) * w.lambda.pow(k);
        out.add(TensorWord::all_units(m + n - k + 1), coeff);
    }
    return out;
}

ShuffleElement nij_from_stuffle(const Base &base, std::size_t m, std::size_t n)
{
    require_trivial(base, "the stuffle expansion");
    ShuffleElement out;
    for (std::size_t k = 0; k <= std::min(m, n); ++k) {
        // lambda^k u_j becomes (-P_r)^k applied to u_j
        ShuffleElement term = make_u(m + n - k);
        for (std::size_t i = 0; i < k; ++i) term = -p_right(term, ExecMode::serial);
        out.add_scaled(term, Rational(binomial(m + n - k, m) * binomial(m, k)));
    }
    return out;
}

Int identity_sum(std::size_t m, std::size_t n)
{
    Int sum(0);
    for (std::size_t k = 0; k <= std::min(m, n); ++k) {
        const Int term = binomial(m + n - k, m) * binomial(m, k);
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

} // namespace freenij
