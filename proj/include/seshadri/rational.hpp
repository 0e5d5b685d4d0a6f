#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

#include "seshadri/errors.hpp"

namespace seshadri {

using Int = mpz_class;

/// Exact arbitrary-precision fraction, always stored reduced with a
/// positive denominator. The scalar of every inequality in this library.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    explicit Rational(const Int& n) : q_(n) {}
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); check_den(); }

    Rational(const Int& num, const Int& den) : q_(num, den) {
        check_den();
        q_.canonicalize();
    }

    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    // Accepts "p" or "p/q" in base 10.
    static Rational parse(const std::string& text);

    Int numerator() const { return q_.get_num(); }
    Int denominator() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return q_ == 0; }
    int sign() const { return sgn(q_); }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const { return q_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // Exact k-th power; k = 0 gives 1.
    Rational pow(unsigned long k) const;

    const mpq_class& raw() const { return q_; }

private:
    void check_den() const {
        if (q_.get_den() == 0)
            throw DomainError("zero_denominator", "rational with zero denominator");
    }

    mpq_class q_;  // invariant: canonical (reduced, denominator > 0)
};

Int factorial(unsigned long n);
Int pow2(unsigned long k);

}  // namespace seshadri
