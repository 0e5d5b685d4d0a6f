#include "seshadri/surface_certificates.hpp"

#include <random>

namespace seshadri {

const char* const kTagElBound = "el_bound";
const char* const kTagViolation = "violation";
const char* const kTagIntegrality = "integrality";
const char* const kTagContradiction = "contradiction";

Int el_bound(const Int& m) {
    if (m < 1)
        throw DomainError("bad_multiplicity", "multiplicity must be >= 1");
    return m * (m - 1);
}

namespace {

// Template of the certificate chain in (d, m): the three component
// inequalities of the strict cycle, plus the closing contradiction.
std::vector<InequalityStep> chain_steps(const Int& l2, const Int& alpha) {
    IntPoly2 mm1{{{0, 2}, 1}, {{0, 1}, -1}};  // m^2 - m
    IntPoly2 d2l2{{{2, 0}, l2}};              // L^2 * d^2
    IntPoly2 adm{{{1, 1}, alpha}};            // alpha * d * m

    std::vector<InequalityStep> steps;
    steps.push_back({"moving_multiplicity_bound", kTagElBound, mm1, Relation::le, d2l2});
    steps.push_back({"violation_times_degree", kTagViolation, d2l2, Relation::lt, adm});
    steps.push_back({"integrality_times_multiplicity", kTagIntegrality, adm, Relation::le, mm1});
    steps.push_back({"strict_cycle", kTagContradiction, mm1, Relation::lt, mm1});
    return steps;
}

}  // namespace

LowerBoundCertificate certify_lower_bound(const SurfaceModel& model, const Int& alpha) {
    model.validate();
    if (model.picard_rank != 1)
        throw PicardRankUnsupported("lower-bound certificate needs Picard rank 1, got rank " +
                                    std::to_string(model.picard_rank));
    if (alpha < 1)
        throw DomainError("bad_alpha", "alpha must be >= 1");
    if (alpha * alpha > model.l_self)
        throw AlphaTooLarge("alpha^2 = " + Int(alpha * alpha).get_str() + " exceeds L^2 = " +
                            model.l_self.get_str());

    LowerBoundCertificate cert;
    cert.l_self = model.l_self;
    cert.alpha = alpha;
    cert.steps = chain_steps(model.l_self, alpha);
    cert.conclusion =
        "epsilon(L,x) >= " + alpha.get_str() + " at a very general point";
    return cert;
}

VerifyReport verify_certificate_report(const LowerBoundCertificate& cert) {
    // Unreplayable structure first.
    if (cert.steps.size() != 4)
        throw MalformedCertificate(static_cast<int>(cert.steps.size()),
                                   "certificate must carry exactly 4 steps");
    const char* expected_tags[4] = {kTagElBound, kTagViolation, kTagIntegrality,
                                    kTagContradiction};
    for (int i = 0; i < 4; ++i) {
        if (cert.steps[i].tag != expected_tags[i])
            throw MalformedCertificate(i, "unexpected step tag '" + cert.steps[i].tag + "'");
        if (cert.steps[i].lhs.empty() || cert.steps[i].rhs.empty())
            throw MalformedCertificate(i, "step with empty side");
    }

    auto fail = [](int step, std::string reason) {
        return VerifyReport{false, step, std::move(reason)};
    };

    // The given: alpha >= 1 and alpha^2 <= L^2.
    if (cert.alpha < 1) return fail(-1, "alpha < 1");
    if (cert.alpha * cert.alpha > cert.l_self) return fail(-1, "alpha^2 > L^2");

    // Exact template check against the canonical chain.
    auto expected = chain_steps(cert.l_self, cert.alpha);
    for (int i = 0; i < 4; ++i) {
        if (cert.steps[i].lhs != expected[i].lhs || cert.steps[i].rhs != expected[i].rhs)
            return fail(i, "step template mismatch");
        if (cert.steps[i].rel != expected[i].rel)
            return fail(i, "step relation mismatch");
    }

    // Chain closure: consecutive sides meet, the cycle returns to the first
    // side, and at least one relation is strict.
    for (int i = 0; i + 1 < 3; ++i) {
        if (cert.steps[i].rhs != cert.steps[i + 1].lhs)
            return fail(i + 1, "chain does not connect");
    }
    if (cert.steps[2].rhs != cert.steps[0].lhs)
        return fail(2, "cycle does not close");
    bool strict = cert.steps[0].rel == Relation::lt || cert.steps[1].rel == Relation::lt ||
                  cert.steps[2].rel == Relation::lt;
    if (!strict) return fail(-1, "cycle has no strict step");

    // Randomized integer instantiation of the two derivation lemmas and of
    // the cycle's infeasibility. Deterministic seed: replays are stable.
    std::mt19937_64 rng(0x53534841u);
    std::uniform_int_distribution<long> small(1, 1000);
    std::uniform_int_distribution<long> large(1, 1000000);
    for (int iter = 0; iter < 4000; ++iter) {
        Int d(iter % 2 == 0 ? small(rng) : large(rng));
        Int m(iter % 3 == 0 ? small(rng) : large(rng));

        // violation d*L^2 < alpha*m together with alpha^2 <= L^2 forces
        // alpha*d < m.
        if (d * cert.l_self < cert.alpha * m) {
            if (!(cert.alpha * d < m))
                return fail(1, "violation lemma fails at d=" + d.get_str() + " m=" + m.get_str());
        }
        // integrality: alpha*d < m forces alpha*d <= m-1.
        if (cert.alpha * d < m) {
            if (!(cert.alpha * d <= m - 1))
                return fail(2, "integrality lemma fails at d=" + d.get_str() +
                                   " m=" + m.get_str());
        }
        // The three stored inequalities can never hold simultaneously.
        if (cert.steps[0].holds_at(d, m) && cert.steps[1].holds_at(d, m) &&
            cert.steps[2].holds_at(d, m))
            return fail(3, "cycle satisfied at d=" + d.get_str() + " m=" + m.get_str());
    }

    return {true, -1, ""};
}

bool verify_certificate(const LowerBoundCertificate& cert) {
    return verify_certificate_report(cert).ok;
}

std::vector<std::pair<Int, Int>> violation_scan(const SurfaceModel& model, const Int& alpha,
                                                const Int& d_max, const Int& m_max) {
    model.validate();
    if (model.picard_rank != 1)
        throw PicardRankUnsupported("violation scan needs Picard rank 1, got rank " +
                                    std::to_string(model.picard_rank));
    if (alpha < 1)
        throw DomainError("bad_alpha", "alpha must be >= 1");

    std::vector<std::pair<Int, Int>> hits;
    const Int& l2 = model.l_self;
    for (Int d = 1; d <= d_max; ++d) {
        // d*L^2 < alpha*m  <=>  m >= floor(d*L^2 / alpha) + 1
        Int m_lo;
        mpz_fdiv_q(m_lo.get_mpz_t(), Int(d * l2).get_mpz_t(), alpha.get_mpz_t());
        m_lo += 1;
        Int cap = d * d * l2;  // EL admissibility: m(m-1) <= d^2 L^2
        for (Int m = std::max(Int(1), m_lo); m <= m_max && m * (m - 1) <= cap; ++m)
            hits.emplace_back(d, m);
    }
    return hits;
}

SeshadriBounds make_bounds(TaggedRadical lower, TaggedRadical upper) {
    auto order = rad_cmp(lower.value, upper.value);
    if (order == std::strong_ordering::greater)
        throw DomainError("internal", "lower bound exceeds upper bound");
    SeshadriBounds b{std::move(lower), std::move(upper),
                     order == std::strong_ordering::equal};
    return b;
}

SeshadriBounds very_general_bounds(const SurfaceModel& model) {
    model.validate();
    if (model.picard_rank != 1)
        throw PicardRankUnsupported("two-sided bounds need Picard rank 1, got rank " +
                                    std::to_string(model.picard_rank));

    Int a = isqrt(model.l_self);
    TaggedRadical lower{Radical(Rational(a)),
                        "lower-bound certificate at a very general point, alpha = " +
                            a.get_str()};
    TaggedRadical upper{canonicalize(Rational(model.l_self), 2),
                        "nef threshold (L^2)^(1/2)"};
    return make_bounds(std::move(lower), std::move(upper));
}

}  // namespace seshadri
