#pragma once

#include <compare>
#include <string>

#include "seshadri/rational.hpp"

namespace seshadri {

/// A real number of the form radicand^(1/index) with radicand a nonnegative
/// rational and index >= 1, kept in minimal-index canonical form: whenever
/// the radicand is an exact p-th power of a rational for a prime p dividing
/// the index, the root is extracted and the index divided by p. Canonical
/// form is unique, so equality of values is structural equality.
class Radical {
public:
    Radical() : radicand_(0), index_(1) {}

    // Index-1 (rational) value; rejects negatives.
    explicit Radical(const Rational& value);

    const Rational& radicand() const { return radicand_; }
    unsigned index() const { return index_; }
    bool is_rational() const { return index_ == 1; }

    bool operator==(const Radical& other) const = default;

    // Display form: "4/3", "2^(1/2)", "(6/7)^(1/3)".
    std::string str() const;

private:
    friend Radical canonicalize(const Rational& radicand, unsigned index);

    Radical(Rational q, unsigned d) : radicand_(std::move(q)), index_(d) {}

    Rational radicand_;  // >= 0
    unsigned index_;     // >= 1, minimal
};

/// Minimal-index form of radicand^(1/index). Rejects negative radicands
/// and index 0.
Radical canonicalize(const Rational& radicand, unsigned index);

/// Exact ordering of the real values a^(1/da) vs b^(1/db): cross-powers both
/// radicands to the lcm of the indices and compares rationals. No floating
/// point anywhere.
std::strong_ordering rad_cmp(const Radical& a, const Radical& b);

/// Canonical form of a^k, k >= 1.
Radical rad_pow(const Radical& a, unsigned long k);

/// Floor of the square root: the unique s with s^2 <= n < (s+1)^2. n >= 0.
Int isqrt(const Int& n);

/// Decimal approximation with the given number of significant digits,
/// correctly rounded (MPFR). Display only, never used in comparisons.
std::string approx_str(const Radical& r, int significant_digits = 12);

}  // namespace seshadri
