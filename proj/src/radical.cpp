#include "seshadri/radical.hpp"

#include <numeric>
#include <optional>
#include <vector>

#include <mpfr.h>

namespace seshadri {

namespace {

// Exact p-th root of a nonnegative integer, if one exists.
std::optional<Int> exact_root(const Int& n, unsigned long p) {
    Int r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), p);
    if (exact != 0) return r;
    return std::nullopt;
}

// Exact p-th root of a nonnegative rational. Numerator and denominator are
// coprime, so q = r^p forces both to be p-th powers separately.
std::optional<Rational> exact_root(const Rational& q, unsigned long p) {
    auto num = exact_root(q.numerator(), p);
    if (!num) return std::nullopt;
    auto den = exact_root(q.denominator(), p);
    if (!den) return std::nullopt;
    return Rational(*num, *den);
}

}  // namespace

Radical::Radical(const Rational& value) : radicand_(value), index_(1) {
    if (value.sign() < 0)
        throw NegativeRadicand("radical of negative rational " + value.str());
}

Radical canonicalize(const Rational& radicand, unsigned index) {
    if (index == 0)
        throw DomainError("zero_index", "radical index must be >= 1");
    if (radicand.sign() < 0)
        throw NegativeRadicand("radical of negative rational " + radicand.str());

    Rational q = radicand;
    unsigned d = index;
    if (q.is_zero() || q == Rational(1))
        return Radical(q, 1);

    // Strip each divisor p of the index while the radicand is an exact
    // p-th power. A failed extraction at p stays failed after later
    // extractions, so a single ascending pass suffices. Indices are at
    // most the ambient dimension, so plain trial division.
    for (unsigned p = 2; p <= d;) {
        if (d % p == 0) {
            if (auto r = exact_root(q, p)) {
                q = *r;
                d /= p;
                continue;  // same p may divide again
            }
        }
        ++p;
    }
    return Radical(q, d);
}

std::string Radical::str() const {
    if (index_ == 1) return radicand_.str();
    std::string base = radicand_.is_integer() ? radicand_.str() : "(" + radicand_.str() + ")";
    return base + "^(1/" + std::to_string(index_) + ")";
}

std::strong_ordering rad_cmp(const Radical& a, const Radical& b) {
    unsigned long l = std::lcm<unsigned long>(a.index(), b.index());
    // x >= 0, y >= 0: x^(1/da) < y^(1/db) iff x^(l/da) < y^(l/db).
    Rational pa = a.radicand().pow(l / a.index());
    Rational pb = b.radicand().pow(l / b.index());
    return pa <=> pb;
}

Radical rad_pow(const Radical& a, unsigned long k) {
    if (k == 0)
        throw DomainError("zero_exponent", "rad_pow exponent must be >= 1");
    return canonicalize(a.radicand().pow(k), a.index());
}

Int isqrt(const Int& n) {
    if (n < 0)
        throw DomainError("negative_isqrt", "isqrt of negative integer");
    Int s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    return s;
}

std::string approx_str(const Radical& r, int significant_digits) {
    mpfr_t x;
    mpfr_init2(x, 256);
    mpfr_set_q(x, r.radicand().raw().get_mpq_t(), MPFR_RNDN);
    mpfr_rootn_ui(x, x, r.index(), MPFR_RNDN);
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", significant_digits, x);
    mpfr_clear(x);
    return buf;
}

}  // namespace seshadri
