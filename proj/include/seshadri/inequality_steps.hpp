#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seshadri/rational.hpp"

namespace seshadri {

/// Integer polynomial in two symbols, used as one side of a certificate
/// inequality. Exponent pair -> coefficient; zero coefficients are not
/// stored.
class IntPoly2 {
public:
    using Key = std::pair<unsigned, unsigned>;  // (x exponent, y exponent)

    IntPoly2() = default;
    IntPoly2(std::initializer_list<std::pair<Key, Int>> terms);

    void set(unsigned xe, unsigned ye, Int coeff);
    const std::map<Key, Int>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    Int eval(const Int& x, const Int& y) const;

    // "m^2 - m", "16*d^2", ... with the given symbol names.
    std::string text(const std::string& xvar, const std::string& yvar) const;

    bool operator==(const IntPoly2& other) const = default;

private:
    std::map<Key, Int> terms_;
};

enum class Relation { le, lt };

std::string relation_str(Relation r);

/// One named inequality of a certificate chain: lhs REL rhs, both sides
/// integer polynomials in the certificate's two symbols, plus the tag the
/// step carries in the source argument (el_bound, violation, integrality,
/// contradiction, ...).
struct InequalityStep {
    std::string name;
    std::string tag;
    IntPoly2 lhs;
    Relation rel = Relation::le;
    IntPoly2 rhs;

    bool holds_at(const Int& x, const Int& y) const;

    bool operator==(const InequalityStep& other) const = default;
};

}  // namespace seshadri
