#pragma once

#include "largeness/bigfloat.hpp"

namespace largeness {

/// Complex number over BigFloat (MPFR has no complex type of its own).
struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(long prec_bits = 64) : re(prec_bits), im(prec_bits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(double r, double i, long prec_bits) : re(r, prec_bits), im(i, prec_bits) {}

    long precision() const { return std::max(re.precision(), im.precision()); }
    BigComplex at_precision(long p) const { return {re.at_precision(p), im.at_precision(p)}; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

inline BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
}

inline BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
}

inline BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }

inline BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }

inline BigFloat norm_sq(const BigComplex& a) { return a.re * a.re + a.im * a.im; }

inline BigFloat abs(const BigComplex& a) { return hypot(a.re, a.im); }

inline BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat d = norm_sq(b);
    BigComplex n = a * conj(b);
    return {n.re / d, n.im / d};
}

inline BigComplex operator*(const BigComplex& a, const BigFloat& s) {
    return {a.re * s, a.im * s};
}

}  // namespace largeness
