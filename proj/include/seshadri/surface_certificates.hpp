#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seshadri/inequality_steps.hpp"
#include "seshadri/intersection.hpp"

namespace seshadri {

/// Numerical data of a polarized surface (X, L): L^2 and the Picard rank.
/// Certificate operations require picard_rank = 1 (L an ample generator).
struct SurfaceModel {
    Int l_self = 1;  // L^2
    unsigned picard_rank = 1;

    void validate() const {
        if (l_self < 1)
            throw DomainError("bad_model", "L^2 must be >= 1");
    }
};

/// Minimum self-intersection forced on a curve moving in a nontrivial
/// family with a point of multiplicity >= m: m(m-1). (Ein-Lazarsfeld.)
Int el_bound(const Int& m);

/// Machine-checkable certificate that epsilon(L,x) >= alpha at a very
/// general point of a Picard-rank-1 surface with alpha^2 <= L^2. The steps
/// are symbolic in the degree d and multiplicity m of a hypothetical
/// violating curve C == dL with L.C < alpha*m, and chain into the strict
/// cycle  m(m-1) <= d^2 L^2 < alpha*d*m <= m(m-1).
struct LowerBoundCertificate {
    Int l_self;
    Int alpha;
    std::string var_degree = "d";
    std::string var_mult = "m";
    std::vector<InequalityStep> steps;
    std::string conclusion;
};

extern const char* const kTagElBound;        // "el_bound"
extern const char* const kTagViolation;      // "violation"
extern const char* const kTagIntegrality;    // "integrality"
extern const char* const kTagContradiction;  // "contradiction"

/// Builds the lower-bound certificate for (model, alpha). Throws
/// PicardRankUnsupported when picard_rank != 1 and AlphaTooLarge when
/// alpha^2 > L^2. The output always passes verify_certificate.
LowerBoundCertificate certify_lower_bound(const SurfaceModel& model, const Int& alpha);

struct VerifyReport {
    bool ok = false;
    int failing_step = -1;  // -1 when not tied to a step
    std::string reason;
};

/// Replays a certificate: structural shape of the chain, the given
/// alpha^2 <= L^2, the exact step templates, and randomized integer
/// instantiations of the derivation lemmas and of the closing cycle's
/// infeasibility. Malformed step lists (unreplayable) throw
/// MalformedCertificate with the failing index; replayable but incorrect
/// certificates report ok = false.
VerifyReport verify_certificate_report(const LowerBoundCertificate& cert);
bool verify_certificate(const LowerBoundCertificate& cert);

/// Independent brute-force oracle: every pair (d, m) in the box
/// [1,d_max] x [1,m_max] that is EL-admissible (d^2 L^2 >= m(m-1)) and
/// witnesses epsilon < alpha (d L^2 < alpha*m). Ascending lexicographic.
/// Empty whenever alpha^2 <= L^2.
std::vector<std::pair<Int, Int>> violation_scan(const SurfaceModel& model, const Int& alpha,
                                                const Int& d_max, const Int& m_max);

struct TaggedRadical {
    Radical value;
    std::string provenance;
};

/// Certified interval for epsilon(L,x); exact when the endpoints coincide.
struct SeshadriBounds {
    TaggedRadical lower;
    TaggedRadical upper;
    bool exact = false;
};

SeshadriBounds make_bounds(TaggedRadical lower, TaggedRadical upper);

/// Two-sided bounds at a very general point of a rank-1 surface:
/// floor(sqrt(L^2)) from the lower-bound certificate, sqrt(L^2) from the
/// nef threshold. Exact exactly when L^2 is a perfect square.
SeshadriBounds very_general_bounds(const SurfaceModel& model);

}  // namespace seshadri
