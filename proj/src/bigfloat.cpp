#include "largeness/bigfloat.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace largeness {

BigFloat::BigFloat(long prec_bits) {
    mpfr_init2(v_, prec_bits);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat::BigFloat(double x, long prec_bits) {
    mpfr_init2(v_, prec_bits);
    mpfr_set_d(v_, x, MPFR_RNDN);
}

BigFloat::BigFloat(long x, long prec_bits) {
    mpfr_init2(v_, prec_bits);
    mpfr_set_si(v_, x, MPFR_RNDN);
}

BigFloat::BigFloat(const Int& x, long prec_bits) {
    mpfr_init2(v_, prec_bits);
    mpfr_set_z(v_, x.backend().data(), MPFR_RNDN);
}

BigFloat::BigFloat(const Rat& x, long prec_bits) {
    mpfr_init2(v_, prec_bits);
    mpfr_set_q(v_, x.backend().data(), MPFR_RNDN);
}

BigFloat BigFloat::parse(const std::string& s, long prec_bits) {
    BigFloat r(prec_bits);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("unparsable float literal '" + s + "'");
    return r;
}

BigFloat BigFloat::two_pow(long e, long prec_bits) {
    BigFloat r(prec_bits);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::at_precision(long prec_bits) const {
    BigFloat r(prec_bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

Int BigFloat::floor_to_int() const {
    mpz_t z;
    mpz_init(z);
    mpfr_get_z(z, v_, MPFR_RNDD);
    Int r;
    mpz_set(r.backend().data(), z);
    mpz_clear(z);
    return r;
}

Int BigFloat::ceil_to_int() const {
    mpz_t z;
    mpz_init(z);
    mpfr_get_z(z, v_, MPFR_RNDU);
    Int r;
    mpz_set(r.backend().data(), z);
    mpz_clear(z);
    return r;
}

std::string BigFloat::str() const {
    size_t digits = static_cast<size_t>(std::ceil(precision() * 0.30103)) + 3;
    return str(digits);
}

std::string BigFloat::str(size_t digits10) const {
    if (is_nan()) return "nan";
    if (is_inf()) return sign() > 0 ? "inf" : "-inf";
    if (is_zero()) return "0";
    mpfr_exp_t e;
    char* mant = mpfr_get_str(nullptr, &e, 10, digits10, v_, MPFR_RNDN);
    std::string m(mant);
    mpfr_free_str(mant);
    std::string sgn;
    if (!m.empty() && m[0] == '-') {
        sgn = "-";
        m = m.substr(1);
    }
    // mantissa digits d1 d2 ... represent 0.d1d2... * 10^e
    std::string out = sgn + m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

static long prec2(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(prec2(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(prec2(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(prec2(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(prec2(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, long b) {
    BigFloat r(a.precision());
    mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, long b) {
    BigFloat r(a.precision());
    mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}

int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()); }

BigFloat abs(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

BigFloat exp(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

BigFloat hypot(const BigFloat& a, const BigFloat& b) {
    BigFloat r(prec2(a, b));
    mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat pow_si(const BigFloat& a, long e) {
    BigFloat r(a.precision());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0 ? a : b; }
BigFloat min(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0 ? a : b; }

BigFloat root_ui(const BigFloat& a, unsigned long k) {
    BigFloat r(a.precision());
#if MPFR_VERSION_MAJOR >= 4
    mpfr_rootn_ui(r.raw(), a.raw(), k, MPFR_RNDN);
#else
    mpfr_root(r.raw(), a.raw(), k, MPFR_RNDN);
#endif
    return r;
}

BigFloat const_log2(long prec_bits) {
    BigFloat r(prec_bits);
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

BigFloat log_rational(const Rat& q, long prec_bits) {
    if (q <= 0) throw std::domain_error("log_rational requires a positive rational");
    BigFloat x(q, prec_bits + 32);
    return log(x).at_precision(prec_bits);
}

}  // namespace largeness
