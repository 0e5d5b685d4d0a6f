#pragma once

// Test-only cross-check: brackets radicand^(1/index) between 200-bit
// directed-rounding evaluations and reports an ordering only when the two
// brackets are disjoint. Never used by the library itself.

#include <optional>

#include <mpfr.h>

#include "seshadri/radical.hpp"

namespace seshadri::testing {

inline std::optional<std::strong_ordering> float_oracle_cmp(const Radical& a, const Radical& b) {
    constexpr mpfr_prec_t kPrec = 200;
    mpfr_t alo, ahi, blo, bhi;
    mpfr_inits2(kPrec, alo, ahi, blo, bhi, static_cast<mpfr_ptr>(nullptr));

    auto bracket = [](const Radical& r, mpfr_t lo, mpfr_t hi) {
        mpfr_set_q(lo, r.radicand().raw().get_mpq_t(), MPFR_RNDD);
        mpfr_rootn_ui(lo, lo, r.index(), MPFR_RNDD);
        mpfr_set_q(hi, r.radicand().raw().get_mpq_t(), MPFR_RNDU);
        mpfr_rootn_ui(hi, hi, r.index(), MPFR_RNDU);
    };
    bracket(a, alo, ahi);
    bracket(b, blo, bhi);

    std::optional<std::strong_ordering> out;
    if (mpfr_cmp(ahi, blo) < 0)
        out = std::strong_ordering::less;
    else if (mpfr_cmp(bhi, alo) < 0)
        out = std::strong_ordering::greater;

    mpfr_clears(alo, ahi, blo, bhi, static_cast<mpfr_ptr>(nullptr));
    return out;
}

}  // namespace seshadri::testing
