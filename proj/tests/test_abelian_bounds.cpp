#include <doctest.h>

#include <random>

#include "seshadri/abelian_bounds.hpp"

using namespace seshadri;

TEST_CASE("odd theta characteristic counts") {
    CHECK(odd_theta_count(2) == 6);
    CHECK(odd_theta_count(3) == 28);
    CHECK(odd_theta_count(4) == 120);
    CHECK_THROWS_AS(odd_theta_count(1), DomainError);
}

TEST_CASE("hyperelliptic bound 2g/(g+1) is strictly submaximal") {
    auto g2 = hyperelliptic_upper(2);
    CHECK(g2.value == Radical(Rational(4, 3)));
    CHECK(g2.maximal == canonicalize(Rational(2), 2));
    CHECK(g2.strictness == std::strong_ordering::less);

    auto g3 = hyperelliptic_upper(3);
    CHECK(g3.value == Radical(Rational(3, 2)));
    CHECK(g3.maximal == canonicalize(Rational(6), 3));

    auto g10 = hyperelliptic_upper(10);
    CHECK(g10.value == Radical(Rational(20, 11)));
    CHECK(g10.strictness == std::strong_ordering::less);

    CHECK_THROWS_AS(hyperelliptic_upper(1), DomainError);
}

TEST_CASE("general ppav bound (4 g! / (2^(g-1)(2^g-1)))^(1/(g-1))") {
    CHECK(ppav_general_upper(2).value == Radical(Rational(4, 3)));
    CHECK(ppav_general_upper(3).value == canonicalize(Rational(6, 7), 2));
    CHECK(ppav_general_upper(4).value == canonicalize(Rational(4, 5), 3));

    // radicand straight from the formula
    for (unsigned g = 2; g <= 10; ++g) {
        Int denom = pow2(g - 1) * (pow2(g) - 1);
        Rational q(4 * factorial(g), denom);
        CHECK(ppav_general_upper(g).value == canonicalize(q, g - 1));
    }

    // the g = 3 value drops below 1; the report flags it
    auto g3 = ppav_general_upper(3);
    bool flagged = false;
    for (const auto& note : g3.notes)
        if (note.find("below 1") != std::string::npos) flagged = true;
    CHECK(flagged);
}

TEST_CASE("bounds are strictly submaximal for g up to 16") {
    for (unsigned g = 2; g <= 16; ++g) {
        CHECK(hyperelliptic_upper(g).strictness == std::strong_ordering::less);
        CHECK(ppav_general_upper(g).strictness == std::strong_ordering::less);
    }
}

TEST_CASE("every report value reproduces through witness_upper") {
    for (unsigned g = 2; g <= 16; ++g) {
        auto h = hyperelliptic_upper(g);
        CHECK(witness_upper(h.witness) == h.value);
        auto p = ppav_general_upper(g);
        CHECK(witness_upper(p.witness) == p.value);
    }
}

TEST_CASE("three independent paths give 4/3 at g = 2") {
    CHECK(hyperelliptic_upper(2).value == Radical(Rational(4, 3)));
    CHECK(ppav_general_upper(2).value == Radical(Rational(4, 3)));
    CHECK(ppas_exact().bound.value == Radical(Rational(4, 3)));
}

TEST_CASE("the overridable image-class coefficient changes the witness degree") {
    auto standard = ppav_general_upper(3);
    CHECK(standard.witness.degree == Rational(24));
    auto other = ppav_general_upper(3, 2);
    CHECK(other.witness.degree == Rational(12));
    CHECK(other.value == canonicalize(Rational(12, 28), 2));
    bool noted = false;
    for (const auto& note : other.notes)
        if (note.find("overridden") != std::string::npos) noted = true;
    CHECK(noted);
}

TEST_CASE("genus-2 exclusion checks") {
    // a = 1, b = 2: candidate (1/2 < 2/3) but pairing 8 - 12 < 0
    CHECK(ppas_candidate(1, 2));
    CHECK(ppas_pair_value(1, 2) == Rational(-4));
    CHECK(ppas_excluded(1, 2));

    // a = 1, b = 1 is no candidate (1 > 2/3), pairing 2 >= 0
    CHECK_FALSE(ppas_candidate(1, 1));
    CHECK(ppas_pair_value(1, 1) == Rational(2));

    CHECK_THROWS_AS(ppas_candidate(0, 1), DomainError);
}

TEST_CASE("the combined genus-2 system is infeasible") {
    CHECK(ppas_infeasibility_scan(500, 500).empty());
    CHECK(ppas_infeasibility_scan(1000, 1000).empty());
}

TEST_CASE("ppas_exact assembles equal two-sided bounds") {
    auto r = ppas_exact();
    CHECK(r.bounds.exact);
    CHECK(r.bounds.lower.value == Radical(Rational(4, 3)));
    CHECK(r.bounds.upper.value == Radical(Rational(4, 3)));
    CHECK(r.bound.strictness == std::strong_ordering::less);
    CHECK(r.steps.size() == 3);
    // the closing step 9a < 8a never holds for positive a
    for (long a = 1; a <= 50; ++a) CHECK_FALSE(r.steps[2].holds_at(a, 1));
}

TEST_CASE("scale_bounds multiplies both endpoints") {
    auto base = ppas_exact().bounds;
    auto scaled = scale_bounds(base, 8);
    CHECK(scaled.lower.value == Radical(Rational(32, 3)));
    CHECK(scaled.upper.value == Radical(Rational(32, 3)));
    CHECK(scaled.exact);

    SeshadriBounds mixed = make_bounds({Radical(Rational(1)), "a"},
                                       {canonicalize(Rational(2), 2), "b"});
    auto same = scale_bounds(mixed, 1);
    CHECK(same.lower.value == mixed.lower.value);
    CHECK(same.upper.value == mixed.upper.value);

    auto tripled = scale_bounds(mixed, 3);
    CHECK(tripled.lower.value == Radical(Rational(3)));
    CHECK(tripled.upper.value == canonicalize(Rational(18), 2));  // 3*sqrt(2) = sqrt(18)
    CHECK_FALSE(tripled.exact);

    CHECK_THROWS_AS(scale_bounds(mixed, 0), DomainError);
}

TEST_CASE("scaling composes multiplicatively") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> val(1, 200);
    std::uniform_int_distribution<long> factor(1, 50);
    std::uniform_int_distribution<unsigned> idx(1, 4);
    for (int i = 0; i < 500; ++i) {
        Radical a = canonicalize(Rational(val(rng), val(rng)), idx(rng));
        Radical b = canonicalize(Rational(val(rng), val(rng)), idx(rng));
        if (rad_cmp(a, b) == std::strong_ordering::greater) std::swap(a, b);
        SeshadriBounds bounds = make_bounds({a, "x"}, {b, "y"});
        Int p(factor(rng)), q(factor(rng));
        Int pq = p * q;
        auto twice = scale_bounds(scale_bounds(bounds, p), q);
        auto once = scale_bounds(bounds, pq);
        CHECK(twice.lower.value == once.lower.value);
        CHECK(twice.upper.value == once.upper.value);
    }
}

TEST_CASE("floor_scan flags the strict drops below the floor bound") {
    auto rows = floor_scan(8, 12);
    REQUIRE(rows.size() == 5);

    CHECK(rows[0].nu == 8);
    CHECK(rows[0].lhs == Rational(32, 3));
    CHECK(rows[0].floor_rhs == 11);
    CHECK(rows[0].is_counterexample);

    CHECK(rows[1].nu == 9);
    CHECK(rows[1].lhs == Rational(12));
    CHECK(rows[1].floor_rhs == 12);
    CHECK_FALSE(rows[1].is_counterexample);

    CHECK(rows[2].nu == 10);
    CHECK(rows[2].lhs == Rational(40, 3));
    CHECK(rows[2].floor_rhs == 14);
    CHECK(rows[2].is_counterexample);

    CHECK(rows[3].nu == 11);
    CHECK(rows[3].is_counterexample);

    CHECK(rows[4].nu == 12);
    CHECK(rows[4].lhs == Rational(16));
    CHECK(rows[4].floor_rhs == 16);
    CHECK_FALSE(rows[4].is_counterexample);

    CHECK_THROWS_AS(floor_scan(5, 4), DomainError);
    CHECK_THROWS_AS(floor_scan(0, 4), DomainError);
}

TEST_CASE("abelian model data") {
    AbelianModel m{3, true, 1};
    CHECK(m.top_self_intersection() == 6);
    CHECK(m.polarized().dimension == 3);
    CHECK_THROWS_AS(AbelianModel{1}.validate(), DomainError);
}
