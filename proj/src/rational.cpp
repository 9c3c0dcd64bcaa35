#include "freenij/rational.hpp"

#include <algorithm>

namespace freenij {

Int binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) return Int(0);
    k = std::min(k, n - k);
    Int r(1);
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r holds C(n-k+i-1, i-1); multiplying first keeps the division exact
        r *= Int(static_cast<unsigned long>(n - k + i));
        r /= Int(static_cast<unsigned long>(i));
    }
    return r;
}

} // namespace freenij
