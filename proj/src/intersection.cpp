#include "seshadri/intersection.hpp"

namespace seshadri {

namespace {

int sign_from_order(std::strong_ordering delta_vs_threshold) {
    // pairing = m * (threshold - delta), m > 0
    if (delta_vs_threshold == std::strong_ordering::less) return +1;
    if (delta_vs_threshold == std::strong_ordering::greater) return -1;
    return 0;
}

}  // namespace

Rational surface_pair(const Rational& c1_dot_c2, const Int& m1, const Int& m2) {
    Int prod = m1 * m2;
    return c1_dot_c2 - Rational(prod);
}

SurfaceFormSign seshadri_form_surface(const Rational& l_dot_c, const Int& m,
                                      const Radical& delta) {
    if (m <= 0)
        throw DomainError("bad_multiplicity", "multiplicity must be >= 1");
    if (l_dot_c.sign() <= 0)
        throw DomainError("bad_degree", "L.C must be positive");
    Rational threshold = l_dot_c / Rational(m);
    int s = sign_from_order(rad_cmp(delta, Radical(threshold)));
    return {s, threshold};
}

TopFormSign seshadri_form_top(unsigned g, const Rational& ltop_dot_d, const Int& m,
                              const Radical& eps) {
    if (g < 2)
        throw DomainError("bad_dimension", "top form needs g >= 2");
    if (m <= 0)
        throw DomainError("bad_multiplicity", "multiplicity must be >= 1");
    if (ltop_dot_d.sign() <= 0)
        throw DomainError("bad_degree", "degree must be positive");
    Rational q = ltop_dot_d / Rational(m);
    Radical threshold = canonicalize(q, g - 1);
    int s = sign_from_order(rad_cmp(rad_pow(eps, g - 1), Radical(q)));
    return {s, threshold};
}

Radical kleiman_upper(const PolarizedModel& model) {
    model.validate();
    return canonicalize(Rational(model.top_self_intersection), model.dimension);
}

Radical witness_upper(const DivisorWitness& w) {
    if (w.dim < 1)
        throw DomainError("bad_dimension", "witness dimension must be >= 1");
    if (w.mult < 1)
        throw DomainError("bad_multiplicity", "witness multiplicity must be >= 1");
    if (w.degree.sign() <= 0)
        throw DomainError("bad_degree", "witness degree must be positive");
    return canonicalize(w.degree / Rational(w.mult), w.dim);
}

Radical rationality_solve(unsigned d, const Rational& ld_dot_y, const Rational& m) {
    if (d < 1)
        throw DomainError("bad_dimension", "subvariety dimension must be >= 1");
    if (m.sign() <= 0)
        throw DomainError("bad_multiplicity", "exceptional contribution must be positive");
    if (ld_dot_y.sign() <= 0)
        throw DomainError("bad_degree", "degree must be positive");

    Rational q = ld_dot_y / m;
    Radical delta = canonicalize(q, d);

    // delta^d must come back rational and reproduce the vanishing
    // Ld_dot_Y - delta^d * m = 0.
    Radical dth = rad_pow(delta, d);
    if (!dth.is_rational() || dth.radicand() != q)
        throw DomainError("internal", "solved threshold fails back-substitution");
    return delta;
}

}  // namespace seshadri
