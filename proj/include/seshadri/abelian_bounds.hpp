#pragma once

#include <string>
#include <vector>

#include "seshadri/surface_certificates.hpp"

namespace seshadri {

/// Numerical data of an abelian variety of dimension g >= 2 with a
/// polarization; principal means Theta^g = g!.
struct AbelianModel {
    unsigned g = 2;
    bool principal = true;
    unsigned picard_rank = 1;

    void validate() const {
        if (g < 2)
            throw DomainError("bad_model", "abelian dimension must be >= 2");
    }

    Int top_self_intersection() const { return factorial(g); }
    PolarizedModel polarized() const { return {g, top_self_intersection(), picard_rank}; }
};

/// Number of odd theta characteristics in dimension g: 2^(g-1) (2^g - 1).
/// These are the two-torsion points the theta divisor passes through.
Int odd_theta_count(unsigned g);

/// An upper bound for epsilon(Theta,x) together with the witness that
/// produced it and the exact comparison against the maximal possible value
/// (g!)^(1/g). Every bound this module emits is strictly submaximal.
struct BoundReport {
    unsigned g = 2;
    Radical value;
    DivisorWitness witness;
    Radical maximal;                  // (g!)^(1/g)
    std::strong_ordering strictness;  // value vs maximal; always less
    std::vector<std::string> notes;

    BoundReport(unsigned g_, Radical value_, DivisorWitness witness_,
                std::vector<std::string> notes_ = {});
};

/// Hyperelliptic Jacobian bound 2g/(g+1), from the curve witness of degree
/// 4g with a point of multiplicity 2g+2.
BoundReport hyperelliptic_upper(unsigned g);

/// General principally polarized bound (4 g! / (2^(g-1)(2^g-1)))^(1/(g-1)),
/// from the image of the theta divisor under multiplication by two: a
/// (g-1)-dimensional witness of degree image_class_coeff * g! with
/// multiplicity odd_theta_count(g). The coefficient of the image class
/// defaults to 4 (pullback of Theta under multiplication by two acts by 4);
/// it is a parameter so alternatives can be explored.
BoundReport ppav_general_upper(unsigned g, unsigned image_class_coeff = 4);

/// Per-pair checks of the genus-2 lower-bound argument. A curve class
/// a*Theta with multiplicity b would beat the 4/3 bound when 3a < 2b, but
/// sharing no component with the multiplicity-6 witness curve forces
/// surface_pair(8a, 6, b) = 8a - 6b >= 0; the combined system
/// 9a < 6b <= 8a has no positive integer solutions.
bool ppas_candidate(const Int& a, const Int& b);   // a/b < 2/3
Rational ppas_pair_value(const Int& a, const Int& b);  // 8a - 6b
bool ppas_excluded(const Int& a, const Int& b);    // candidate but pair < 0

/// All (a, b) in [1,a_max] x [1,b_max] satisfying the combined system
/// {9a < 6b, 6b <= 8a}; ascending lexicographic, expected empty.
std::vector<std::pair<Int, Int>> ppas_infeasibility_scan(const Int& a_max, const Int& b_max);

/// Exact value 4/3 on a principally polarized abelian surface: the witness
/// upper bound together with the infeasibility certificate for anything
/// smaller, assembled as two-sided bounds with equal endpoints.
struct PpasExactResult {
    BoundReport bound;                  // the 4/3 witness bound, g = 2
    std::vector<InequalityStep> steps;  // symbolic system in (a, b) + closing step
    Int scan_limit;                     // exhaustive box checked at build time
    SeshadriBounds bounds;              // [4/3, 4/3], exact
};

PpasExactResult ppas_exact();

/// Homogeneity: bounds for L = nu * Theta from bounds for Theta. Both
/// endpoints are multiplied by nu (radicand scaled by nu^index).
SeshadriBounds scale_bounds(const SeshadriBounds& b, const Int& nu);

/// One row of the floor-bound scan at L = nu*Theta on the genus-2 model:
/// lhs = epsilon(L,x) = 4nu/3 exactly, floor_rhs = floor(sqrt(L^2)) =
/// isqrt(2 nu^2). is_counterexample means epsilon < floor(sqrt(L^2)), i.e.
/// the general floor lower bound fails at this nu.
struct FloorScanRow {
    Int nu;
    Rational lhs;
    Int floor_rhs;
    bool is_counterexample;
};

std::vector<FloorScanRow> floor_scan(const Int& nu_min, const Int& nu_max);

}  // namespace seshadri
