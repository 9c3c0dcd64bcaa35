#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "freenij/error.hpp"

namespace freenij {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Exact rational scalar. Invariants: always in lowest terms, denominator
/// positive, zero represented as 0/1. Arithmetic never loses precision.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit on purpose, small literals read naturally
    explicit Rational(const Int &n) : v_(n) {}
    Rational(const Int &num, const Int &den)
    {
        if (den == 0) throw Error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }

    Rational &operator+=(const Rational &o)
    {
        v_ += o.v_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        v_ -= o.v_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        v_ *= o.v_;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) throw Error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    Rational operator-() const
    {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    Rational abs() const
    {
        Rational r;
        r.v_ = ::abs(v_);
        return r;
    }

    /// Exact integer power with non-negative exponent.
    Rational pow(std::uint64_t e) const
    {
        Rational r(1);
        for (std::uint64_t i = 0; i < e; ++i) r *= *this;
        return r;
    }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational &a, const Rational &b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational &a, const Rational &b) { return a.v_ < b.v_; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

  private:
    mpq_class v_;
};

/// Binomial coefficient C(n, k) as an exact integer, via the multiplicative
/// recurrence (every intermediate division is exact).
Int binomial(std::uint64_t n, std::uint64_t k);

} // namespace freenij
