#pragma once

#include <map>
#include <utility>

#include "freenij/rational.hpp"

namespace freenij {

/// Finite formal sum of basis keys with exact rational coefficients, stored
/// sparsely in canonical key order. Invariant: no stored coefficient is zero,
/// so structural equality is semantic equality.
template <typename Key>
class FormalSum {
  public:
    using TermMap = std::map<Key, Rational>;

    FormalSum() = default;
    FormalSum(Key key, const Rational &coeff) { add(std::move(key), coeff); }

    // the rvalue overload keeps range-for over a temporary's terms() valid
    const TermMap &terms() const & { return terms_; }
    TermMap terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Key &key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const Key &key, const Rational &coeff)
    {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add_scaled(const FormalSum &other, const Rational &scale)
    {
        if (scale.is_zero()) return;
        for (const auto &[key, coeff] : other.terms_) add(key, coeff * scale);
    }

    FormalSum &operator+=(const FormalSum &other)
    {
        for (const auto &[key, coeff] : other.terms_) add(key, coeff);
        return *this;
    }

    FormalSum &operator-=(const FormalSum &other)
    {
        for (const auto &[key, coeff] : other.terms_) add(key, -coeff);
        return *this;
    }

    FormalSum &operator*=(const Rational &scale)
    {
        if (scale.is_zero()) {
            terms_.clear();
        } else {
            for (auto &[key, coeff] : terms_) coeff *= scale;
        }
        return *this;
    }

    FormalSum operator-() const
    {
        FormalSum r(*this);
        r *= Rational(-1);
        return r;
    }

    friend FormalSum operator+(FormalSum a, const FormalSum &b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum &b) { return a -= b; }
    friend FormalSum operator*(const Rational &scale, FormalSum a) { return a *= scale; }

    friend bool operator==(const FormalSum &a, const FormalSum &b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const FormalSum &a, const FormalSum &b) { return !(a == b); }

  private:
    TermMap terms_;
};

} // namespace freenij
