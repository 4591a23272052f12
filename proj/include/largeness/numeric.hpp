#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace largeness {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

/// Parses "n", "n/d" or a plain decimal like "1.5" into an exact rational.
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        return Rat(num) / Rat(den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("bad decimal literal '" + s + "'");
        Int num(digits);
        Int den = 1;
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rat(num) / Rat(den);
    }
    return Rat(Int(s));
}

/// Canonical "num/den" form used by the on-disk element format.
inline std::string rational_string(const Rat& q) {
    return rat_num(q).str() + "/" + rat_den(q).str();
}

inline Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    Rat base = e > 0 ? q : Rat(1) / q;
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

}  // namespace largeness
