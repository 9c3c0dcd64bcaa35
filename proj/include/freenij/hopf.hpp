#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include "freenij/base.hpp"
#include "freenij/exec.hpp"
#include "freenij/word.hpp"

namespace freenij {

/// deg(a_1 (x) ... (x) a_m) = sum deg_A(a_i) + (m - 1).
std::uint64_t degree(const Base &base, const TensorWord &w);

/// Homogeneous components keyed by degree. Invariants: no zero components;
/// the components sum back to the original element.
using GradedDecomposition = std::map<std::uint64_t, ShuffleElement>;

GradedDecomposition decompose(const Base &base, const ShuffleElement &e);

/// Delta~(x) = Delta(x) - 1_A (x) x, extended linearly. For a homogeneous
/// word of degree n >= 1 every right leg has degree < n, which is what makes
/// the antipode recursion below terminate.
PairElement reduced_coproduct(const Base &base, const ShuffleElement &e);

/// Right antipode S: S(w) = eps(w) 1_A - sum_(Delta~) w' dr S(w''), so that
/// id * S = e in the convolution algebra. Requires an admissible base unless
/// allow_inadmissible is set (the recursion still terminates, but the Hopf
/// interpretation is not claimed).
ShuffleElement antipode(const Base &base, const ShuffleElement &e,
                        bool allow_inadmissible = false);

/// Named endomorphisms of Sha(A) usable as convolution operands.
enum class EndoHandle {
    identity,
    antipode,
    unit_counit_e,     // e = u_T eps_T, the left unit of convolution
    binomial_antipode, // u_n |-> (-1)^n u_n; trivial base only
};

ShuffleElement apply_endo(const Base &base, EndoHandle f, const ShuffleElement &e,
                          bool allow_inadmissible = false);

/// Convolution (f * g)(e) = dr . (f (x) g) . Delta(e).
ShuffleElement convolve(const Base &base, EndoHandle f, EndoHandle g, const ShuffleElement &e,
                        bool allow_inadmissible = false, ExecMode mode = exec_mode());

/// Verifies on every word of degree n that the coproduct lands in
/// U^(0) (x) U^(n) (+) sum_{p+q=n, p,q>0} U^(p) (x) U^(q), and that products
/// of homogeneous words of degrees p and q (p + q = n) are homogeneous of
/// degree n. Requires an admissible base.
bool filtration_check(const Base &base, std::uint64_t n);

/// The separate binomial coalgebra on the u-words (trivial base only):
/// Delta(u_n) = sum_i C(n,i) u_i (x) u_{n-i}, eps(u_n) = [n = 0],
/// S(u_n) = (-1)^n u_n. Together with dr these make a Hopf algebra.
PairElement binomial_coproduct_u(const Base &base, std::size_t n);
Rational binomial_counit_u(std::size_t n);
ShuffleElement binomial_antipode_u(const Base &base, std::size_t n);

} // namespace freenij
