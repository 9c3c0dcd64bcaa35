#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "freenij/formal_sum.hpp"
#include "freenij/rational.hpp"

namespace freenij {

/// Basis monomial x^exponent of the base algebra. Exponent 0 is the unit 1_A.
struct BaseIndex {
    std::uint32_t exponent = 0;

    friend auto operator<=>(const BaseIndex &, const BaseIndex &) = default;
};

/// Element of the base algebra as a sparse basis expansion.
using BaseVector = FormalSum<BaseIndex>;

/// One term c * (left (x) right) of a base coproduct.
struct BaseCoproductTerm {
    Rational coeff;
    BaseIndex left;
    BaseIndex right;
};

enum class BaseKind {
    trivial,       // the ground field k; only the unit letter exists
    onesided_poly, // k[x] with Delta(x^n) = 1 (x) x^n (left counital only)
    binomial_poly, // k[x] with Delta(x^n) = sum_i C(n,i) x^i (x) x^(n-i)
};

/// A pluggable base bialgebra: commutative unital product, coproduct, counit,
/// and a degree function additive under the product. Immutable; safe to share
/// across threads.
class Base {
  public:
    /// Look up a base by name: "trivial" | "onesided" | "binomial".
    static const Base &from_name(std::string_view name);

    BaseKind kind() const { return kind_; }
    const std::string &name() const { return name_; }

    /// Whether every letter of positive degree has a coproduct supported in
    /// strictly graded pairs (no x (x) 1 component). This is what the antipode
    /// construction and the coproduct filtration rely on.
    bool antipode_admissible() const { return kind_ != BaseKind::binomial_poly; }

    /// Throws unless the index denotes a basis element of this base
    /// (the trivial base has only the unit letter).
    void require_valid(BaseIndex i) const;

    BaseVector mul(BaseIndex a, BaseIndex b) const;
    std::vector<BaseCoproductTerm> coproduct(BaseIndex a) const;
    Rational counit(BaseIndex a) const;
    std::uint64_t degree(BaseIndex a) const;

  private:
    Base(BaseKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

    BaseKind kind_;
    std::string name_;
};

} // namespace freenij
