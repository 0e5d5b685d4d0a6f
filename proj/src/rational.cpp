#include "seshadri/rational.hpp"

namespace seshadri {

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw DomainError("bad_rational", "cannot parse rational: '" + text + "'");
    if (q.get_den() == 0)
        throw DomainError("zero_denominator", "rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.q_ == 0)
        throw DomainError("division_by_zero", "rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(unsigned long k) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), k);
    // num/den coprime implies num^k/den^k coprime; no canonicalize needed
    return Rational(r);
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int pow2(unsigned long k) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

}  // namespace seshadri
