#include "seshadri/abelian_bounds.hpp"

namespace seshadri {

Int odd_theta_count(unsigned g) {
    if (g < 2)
        throw DomainError("bad_model", "abelian dimension must be >= 2");
    return pow2(g - 1) * (pow2(g) - 1);
}

BoundReport::BoundReport(unsigned g_, Radical value_, DivisorWitness witness_,
                         std::vector<std::string> notes_)
    : g(g_),
      value(std::move(value_)),
      witness(std::move(witness_)),
      maximal(canonicalize(Rational(factorial(g_)), g_)),
      strictness(rad_cmp(value, maximal)),
      notes(std::move(notes_)) {
    if (strictness != std::strong_ordering::less)
        throw DomainError("internal", "bound is not strictly submaximal");
    if (rad_cmp(value, Radical(Rational(1))) == std::strong_ordering::less)
        notes.push_back("bound is below 1 although the polarization is ample");
}

BoundReport hyperelliptic_upper(unsigned g) {
    if (g < 2)
        throw DomainError("bad_model", "hyperelliptic bound needs g >= 2");
    // Curve witness: image of the hyperelliptic curve under multiplication
    // by two, degree Theta.C' = 4g, with a Weierstrass-point image of
    // multiplicity 2g+2.
    Int degree = 4 * Int(g);
    Int mult = 2 * Int(g) + 2;
    DivisorWitness w{1, Rational(degree), mult};
    return BoundReport(g, witness_upper(w), w,
                       {"hyperelliptic Jacobian with Neron-Severi rank 1"});
}

BoundReport ppav_general_upper(unsigned g, unsigned image_class_coeff) {
    if (g < 2)
        throw DomainError("bad_model", "general bound needs g >= 2");
    if (image_class_coeff < 1)
        throw DomainError("bad_model", "image class coefficient must be >= 1");
    // Witness: the image of the theta divisor under multiplication by two,
    // numerically coeff*Theta, so degree Theta^(g-1).Theta' = coeff * g!,
    // through the odd two-torsion points with multiplicity
    // 2^(g-1)(2^g - 1).
    Int degree = Int(image_class_coeff) * factorial(g);
    DivisorWitness w{g - 1, Rational(degree), odd_theta_count(g)};
    std::vector<std::string> notes{"general principally polarized abelian variety"};
    if (image_class_coeff != 4)
        notes.push_back("image class coefficient overridden to " +
                        std::to_string(image_class_coeff));
    return BoundReport(g, witness_upper(w), w, std::move(notes));
}

bool ppas_candidate(const Int& a, const Int& b) {
    if (a < 1 || b < 1)
        throw DomainError("bad_input", "curve class data must be positive");
    return Rational(a, b) < Rational(2, 3);
}

Rational ppas_pair_value(const Int& a, const Int& b) {
    // C' == 4*Theta and C~ == a*Theta on the genus-2 model, so
    // C'.C~ = 4a * Theta^2 = 8a; multiplicities 6 = 2g+2 and b.
    Int eight_a = 8 * a;
    return surface_pair(Rational(eight_a), 6, b);
}

bool ppas_excluded(const Int& a, const Int& b) {
    return ppas_candidate(a, b) && ppas_pair_value(a, b).sign() < 0;
}

std::vector<std::pair<Int, Int>> ppas_infeasibility_scan(const Int& a_max, const Int& b_max) {
    std::vector<std::pair<Int, Int>> hits;
    for (Int a = 1; a <= a_max; ++a) {
        for (Int b = 1; b <= b_max; ++b) {
            if (9 * a < 6 * b && 6 * b <= 8 * a) hits.emplace_back(a, b);
        }
    }
    return hits;
}

PpasExactResult ppas_exact() {
    BoundReport bound = hyperelliptic_upper(2);

    // Symbolic system in (a, b): a violating class gives 9a < 6b, component
    // disjointness gives 6b <= 8a, and chaining yields 9a < 8a, impossible
    // for a >= 1.
    IntPoly2 nine_a{{{1, 0}, 9}};
    IntPoly2 six_b{{{0, 1}, 6}};
    IntPoly2 eight_a{{{1, 0}, 8}};
    std::vector<InequalityStep> steps;
    steps.push_back({"violating_class", kTagViolation, nine_a, Relation::lt, six_b});
    steps.push_back({"component_disjoint_pairing", "pair_nonnegative", six_b, Relation::le,
                     eight_a});
    steps.push_back({"strict_cycle", kTagContradiction, nine_a, Relation::lt, eight_a});

    Int scan_limit = 500;
    if (!ppas_infeasibility_scan(scan_limit, scan_limit).empty())
        throw DomainError("internal", "infeasible system has solutions");

    TaggedRadical lower{bound.value,
                        "no curve class beats 4/3: the system 9a < 6b <= 8a is infeasible"};
    TaggedRadical upper{bound.value, "witness curve of degree 8 and multiplicity 6"};
    SeshadriBounds bounds = make_bounds(std::move(lower), std::move(upper));

    return {std::move(bound), std::move(steps), std::move(scan_limit), std::move(bounds)};
}

SeshadriBounds scale_bounds(const SeshadriBounds& b, const Int& nu) {
    if (nu < 1)
        throw DomainError("bad_input", "scale factor must be >= 1");
    auto scale = [&](const TaggedRadical& t) {
        // nu * q^(1/d) = (nu^d * q)^(1/d)
        Int nu_pow;
        mpz_pow_ui(nu_pow.get_mpz_t(), nu.get_mpz_t(), t.value.index());
        Radical scaled = canonicalize(t.value.radicand() * Rational(nu_pow), t.value.index());
        return TaggedRadical{scaled, t.provenance + "; scaled by " + nu.get_str()};
    };
    return make_bounds(scale(b.lower), scale(b.upper));
}

std::vector<FloorScanRow> floor_scan(const Int& nu_min, const Int& nu_max) {
    if (nu_min < 1 || nu_min > nu_max)
        throw DomainError("bad_range", "need 1 <= nu_min <= nu_max");
    std::vector<FloorScanRow> rows;
    for (Int nu = nu_min; nu <= nu_max; ++nu) {
        Rational lhs(4 * nu, 3);          // nu * epsilon(Theta,x) = 4nu/3
        Int two_nu_sq = 2 * nu * nu;      // L^2 for L = nu*Theta
        Int rhs = isqrt(two_nu_sq);
        bool counterexample = lhs < Rational(rhs);
        rows.push_back({nu, lhs, rhs, counterexample});
    }
    return rows;
}

}  // namespace seshadri
