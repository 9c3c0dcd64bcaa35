#pragma once

#include <cstddef>

#include "freenij/base.hpp"
#include "freenij/rational.hpp"
#include "freenij/word.hpp"

namespace freenij {

/// Weight of a Rota-Baxter-style stuffle product.
struct Weight {
    Rational lambda;
};

/// Weighted stuffle product on u-words (trivial base only):
/// u_m *_lambda u_n = sum_{k=0}^{min(m,n)} C(m+n-k, m) C(m, k) lambda^k u_{m+n-k}.
ShuffleElement stuffle_u(const Base &base, std::size_t m, std::size_t n, const Weight &w);

/// The same expansion with lambda^k replaced by (-P_r)^k applied to u_{m+n-k},
/// i.e. the operator-weight substitution lambda -> -P_r. Reproduces
/// nij_mul(u_m, u_n) = u_{m+n}.
ShuffleElement nij_from_stuffle(const Base &base, std::size_t m, std::size_t n);

/// sum_{k=0}^{min(m,n)} (-1)^k C(m+n-k, m) C(m, k); equals 1 for all m, n.
Int identity_sum(std::size_t m, std::size_t n);

} // namespace freenij
