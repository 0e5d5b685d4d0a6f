#pragma once

#include "seshadri/radical.hpp"

namespace seshadri {

/// Numerical data of a polarized variety (X, L): the dimension n and the
/// top self-intersection L^n. Nothing of the variety itself is represented.
struct PolarizedModel {
    unsigned dimension = 1;
    Int top_self_intersection = 1;
    unsigned picard_rank = 1;  // informational here

    void validate() const {
        if (dimension < 1)
            throw DomainError("bad_model", "dimension must be >= 1");
        if (top_self_intersection < 1)
            throw DomainError("bad_model", "top self-intersection must be >= 1");
    }
};

/// Numerical data (dim p, degree L^p.Y, multiplicity m_x(Y)) of a
/// p-dimensional subvariety Y through the point x. dim = 1 is the curve
/// case with degree L.C and multiplicity m_x(C).
struct DivisorWitness {
    unsigned dim = 1;
    Rational degree;
    Int mult = 1;
};

/// Intersection of two strict transforms on the blow-up of a surface at x:
/// (phi*C1 - m1 E).(phi*C2 - m2 E) = C1.C2 - m1*m2, using E^2 = -1 and the
/// vanishing of phi*A.E. The caller supplies the product C1.C2 directly.
Rational surface_pair(const Rational& c1_dot_c2, const Int& m1, const Int& m2);

struct SurfaceFormSign {
    int sign;            // sign of L.C - delta*m
    Rational threshold;  // L.C / m, the delta where the pairing vanishes
};

/// Sign of (phi*L - delta E).(phi*C - m E) = L.C - delta*m, decided exactly,
/// together with the vanishing threshold L.C/m.
SurfaceFormSign seshadri_form_surface(const Rational& l_dot_c, const Int& m,
                                      const Radical& delta);

struct TopFormSign {
    int sign;           // sign of Ltop.D - eps^(g-1)*m
    Radical threshold;  // (Ltop.D / m)^(1/(g-1))
};

/// Sign of (phi*L - eps E)^(g-1).(phi*D - m E) = Ltop.D - eps^(g-1)*m on the
/// blow-up of a g-fold, with the mixed terms vanishing and E^g contributing
/// the multiplicity term. Exact via rad_pow / rad_cmp.
TopFormSign seshadri_form_top(unsigned g, const Rational& ltop_dot_d, const Int& m,
                              const Radical& eps);

/// The nef-threshold upper bound (L^n)^(1/n): no multiple of phi*L - delta E
/// with delta above this value has nonnegative top self-intersection.
Radical kleiman_upper(const PolarizedModel& model);

/// Upper bound (degree/mult)^(1/dim) for the Seshadri constant forced by a
/// single subvariety witness through x.
Radical witness_upper(const DivisorWitness& w);

/// The unique delta >= 0 with (phi*L - delta E)^d.Y = 0 given L^d.Y and the
/// exceptional contribution m: delta = (Ld_dot_Y/m)^(1/d). Its d-th power is
/// always rational; the result is verified by substituting back into the
/// vanishing equation before being returned.
Radical rationality_solve(unsigned d, const Rational& ld_dot_y, const Rational& m);

}  // namespace seshadri
