#pragma once

#include <vector>

#include "largeness/bigcomplex.hpp"
#include "largeness/numeric.hpp"

namespace largeness {

/// Dense polynomial over Q, constant term first. The zero polynomial is {}.
using PolyQ = std::vector<Rat>;

PolyQ trim(PolyQ p);
int degree(const PolyQ& p);  // -1 for the zero polynomial
bool is_zero_poly(const PolyQ& p);

PolyQ poly_from_ints(const std::vector<Int>& c);
PolyQ derivative(const PolyQ& p);

PolyQ poly_add(const PolyQ& a, const PolyQ& b);
PolyQ poly_sub(const PolyQ& a, const PolyQ& b);
PolyQ poly_mul(const PolyQ& a, const PolyQ& b);
PolyQ poly_scale(const PolyQ& a, const Rat& s);

/// Euclidean division a = q*b + r with deg r < deg b. Requires b != 0.
std::pair<PolyQ, PolyQ> poly_divrem(const PolyQ& a, const PolyQ& b);

/// Monic gcd over Q.
PolyQ poly_gcd(PolyQ a, PolyQ b);

/// Extended gcd: returns (g, u) with u*a = g mod m and g = gcd(a, m), g monic.
std::pair<PolyQ, PolyQ> poly_half_xgcd(const PolyQ& a, const PolyQ& m);

Rat poly_eval(const PolyQ& p, const Rat& x);
BigFloat poly_eval(const PolyQ& p, const BigFloat& x, long prec_bits);
BigComplex poly_eval(const PolyQ& p, const BigComplex& x, long prec_bits);

/// Exact number of distinct real roots of a squarefree rational polynomial.
int sturm_real_root_count(const PolyQ& p);

/// True when gcd(p, p') is constant.
bool is_squarefree(const PolyQ& p);

}  // namespace largeness
