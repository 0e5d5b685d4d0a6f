#include <doctest.h>

#include <random>
#include <vector>

#include "seshadri/radical.hpp"
#include "support/float_oracle.hpp"

using namespace seshadri;

namespace {

Radical random_radical(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> val(1, 1000000);
    std::uniform_int_distribution<unsigned> idx(1, 6);
    return canonicalize(Rational(val(rng), val(rng)), idx(rng));
}

}  // namespace

TEST_CASE("canonicalize extracts perfect powers") {
    CHECK(canonicalize(Rational(8), 3) == Radical(Rational(2)));
    CHECK(canonicalize(Rational(4, 9), 2) == Radical(Rational(2, 3)));

    Radical r = canonicalize(Rational(6, 7), 2);
    CHECK(r.radicand() == Rational(6, 7));
    CHECK(r.index() == 2);

    // composite index, stepwise extraction
    CHECK(canonicalize(Rational(64), 6) == Radical(Rational(2)));
    CHECK(canonicalize(Rational(64), 4).radicand() == Rational(8));
    CHECK(canonicalize(Rational(64), 4).index() == 2);

    CHECK(canonicalize(Rational(0), 5) == Radical(Rational(0)));
    CHECK(canonicalize(Rational(1), 7) == Radical(Rational(1)));

    CHECK_THROWS_AS(canonicalize(Rational(-2), 2), NegativeRadicand);
    CHECK_THROWS_AS(Radical(Rational(-1)), NegativeRadicand);
    CHECK_THROWS_AS(canonicalize(Rational(2), 0), DomainError);
}

TEST_CASE("canonicalize is idempotent") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        Radical r = random_radical(rng);
        CHECK(canonicalize(r.radicand(), r.index()) == r);
    }
}

TEST_CASE("rad_cmp decides orderings by cross-powering") {
    // 4/3 < 2^(1/2): cross-powers 16/9 < 2
    CHECK(rad_cmp(Radical(Rational(4, 3)), canonicalize(Rational(2), 2)) ==
          std::strong_ordering::less);
    CHECK(rad_cmp(canonicalize(Rational(5), 2), canonicalize(Rational(5), 2)) ==
          std::strong_ordering::equal);
    // lcm 6: (6/7)^3 = 216/343 vs 6^2 = 36
    CHECK(rad_cmp(canonicalize(Rational(6, 7), 2), canonicalize(Rational(6), 3)) ==
          std::strong_ordering::less);
}

TEST_CASE("rad_pow squares and re-canonicalizes") {
    CHECK(rad_pow(canonicalize(Rational(2), 2), 2) == Radical(Rational(2)));
    CHECK(rad_pow(Radical(Rational(4, 3)), 2) == Radical(Rational(16, 9)));
    CHECK(rad_pow(canonicalize(Rational(6, 7), 2), 2) == Radical(Rational(6, 7)));
    // 2^(1/6) squared is 2^(1/3)
    CHECK(rad_pow(canonicalize(Rational(2), 6), 2) == canonicalize(Rational(2), 3));
    CHECK_THROWS_AS(rad_pow(Radical(Rational(2)), 0), DomainError);
}

TEST_CASE("rad_cmp is a total order consistent with canonical equality") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 4000; ++i) {
        Radical a = random_radical(rng);
        Radical b = random_radical(rng);
        Radical c = random_radical(rng);

        auto ab = rad_cmp(a, b);
        auto ba = rad_cmp(b, a);
        // antisymmetry
        CHECK(ab == (ba == std::strong_ordering::less      ? std::strong_ordering::greater
                     : ba == std::strong_ordering::greater ? std::strong_ordering::less
                                                           : std::strong_ordering::equal));
        // equality is structural on canonical forms
        CHECK((ab == std::strong_ordering::equal) == (a == b));

        // transitivity
        if (ab != std::strong_ordering::greater &&
            rad_cmp(b, c) != std::strong_ordering::greater)
            CHECK(rad_cmp(a, c) != std::strong_ordering::greater);
    }
}

TEST_CASE("rad_cmp agrees with the 200-bit interval oracle") {
    std::mt19937_64 rng(13);
    int decided = 0;
    for (int i = 0; i < 5000; ++i) {
        Radical a = random_radical(rng);
        Radical b = random_radical(rng);
        if (auto expected = testing::float_oracle_cmp(a, b)) {
            CHECK(rad_cmp(a, b) == *expected);
            ++decided;
        }
    }
    CHECK(decided > 4000);  // the oracle decides almost all random pairs
}

TEST_CASE("rad_pow is monotone above 1") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> val(1, 1000);
    std::uniform_int_distribution<unsigned> idx(1, 6);
    std::uniform_int_distribution<unsigned long> exp(1, 5);
    for (int i = 0; i < 2000; ++i) {
        long num = val(rng), den = val(rng);
        if (num < den) std::swap(num, den);  // radicand >= 1
        Radical a = canonicalize(Rational(num, den), idx(rng));
        CHECK(rad_cmp(rad_pow(a, exp(rng)), a) != std::strong_ordering::less);
    }
}

TEST_CASE("isqrt returns the integer part of the square root") {
    CHECK(isqrt(Int(0)) == 0);
    CHECK(isqrt(Int(128)) == 11);  // floor(8*sqrt(2)): 121 <= 128 < 144
    CHECK(isqrt(Int(200)) == 14);  // floor(10*sqrt(2)): 196 <= 200 < 225
    CHECK(isqrt(Int(1)) == 1);
    CHECK(isqrt(Int(3)) == 1);
    CHECK(isqrt(Int(4)) == 2);
    CHECK_THROWS_AS(isqrt(Int(-1)), DomainError);

    // brute-force oracle on a small range
    for (long n = 0; n <= 3000; ++n) {
        long s = 0;
        while ((s + 1) * (s + 1) <= n) ++s;
        CHECK(isqrt(Int(n)) == s);
    }
}

TEST_CASE("isqrt bracket property for random 512-bit inputs") {
    gmp_randstate_t state;
    gmp_randinit_default(state);
    gmp_randseed_ui(state, 19);
    for (int i = 0; i < 100000; ++i) {
        Int n;
        mpz_urandomb(n.get_mpz_t(), state, 512);
        Int s = isqrt(n);
        CHECK(s * s <= n);
        CHECK((s + 1) * (s + 1) > n);
    }
    gmp_randclear(state);
}

TEST_CASE("radical display strings") {
    CHECK(Radical(Rational(4, 3)).str() == "4/3");
    CHECK(canonicalize(Rational(2), 2).str() == "2^(1/2)");
    CHECK(canonicalize(Rational(6, 7), 2).str() == "(6/7)^(1/2)");
    CHECK(approx_str(canonicalize(Rational(2), 2)).substr(0, 6) == "1.4142");
}
