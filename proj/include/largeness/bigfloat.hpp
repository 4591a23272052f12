#pragma once

#include <mpfr.h>

#include <string>

#include "largeness/numeric.hpp"

namespace largeness {

/**
 * BigFloat: arbitrary-precision binary float over MPFR.
 *
 * Every value carries its own precision in bits; binary operations round
 * to the wider of the two operand precisions (round-to-nearest).
 */
class BigFloat {
public:
    explicit BigFloat(long prec_bits = 64);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    BigFloat(double x, long prec_bits);
    BigFloat(long x, long prec_bits);
    BigFloat(const Int& x, long prec_bits);
    BigFloat(const Rat& x, long prec_bits);

    static BigFloat parse(const std::string& s, long prec_bits);
    static BigFloat two_pow(long e, long prec_bits);  // 2^e, exact

    long precision() const { return mpfr_get_prec(v_); }
    BigFloat at_precision(long prec_bits) const;

    int sign() const { return mpfr_sgn(v_); }  // -1, 0, +1
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    Int floor_to_int() const;
    Int ceil_to_int() const;

    /// Decimal string with enough digits to round-trip at this precision.
    std::string str() const;
    std::string str(size_t digits10) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a);
BigFloat operator*(const BigFloat& a, long b);
BigFloat operator/(const BigFloat& a, long b);

int cmp(const BigFloat& a, const BigFloat& b);
inline bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
inline bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }
inline bool operator==(const BigFloat& a, const BigFloat& b) { return cmp(a, b) == 0; }
inline bool operator!=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) != 0; }

BigFloat abs(const BigFloat& a);
BigFloat log(const BigFloat& a);
BigFloat exp(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat hypot(const BigFloat& a, const BigFloat& b);
BigFloat pow_si(const BigFloat& a, long e);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat min(const BigFloat& a, const BigFloat& b);
BigFloat root_ui(const BigFloat& a, unsigned long k);  // k-th root, a >= 0
BigFloat const_log2(long prec_bits);

/// log of a positive rational, evaluated at the given precision.
BigFloat log_rational(const Rat& q, long prec_bits);

}  // namespace largeness
