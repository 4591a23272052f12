#pragma once

#include <vector>

#include "largeness/config.hpp"
#include "largeness/field.hpp"

namespace largeness {

/**
 * A floor function built from a generator pi of a degree-one prime with
 * residue characteristic p and a complete digit set R containing 0.
 * The residue map sends theta to the integer g with f(g) = 0 mod p.
 */
struct SpecialType {
    NumberField K;
    FieldElement pi;
    std::vector<FieldElement> digits;
    Int p;
    Int theta_image;        // g, normalized into [0, p)
    long ramification = 1;  // valuation of p at the prime of pi
};

SpecialType make_special_type(const NumberField& K, const FieldElement& pi,
                              const std::vector<FieldElement>& digits, const Int& g,
                              const RunConfig& cfg = {});

/// Residue in [0, p) of an element with integer coordinates.
Int residue(const FieldElement& x, const SpecialType& T);

/// Exact valuation of alpha at the prime of T. alpha != 0, with denominator
/// supported only at that prime (alpha * pi^m integral for some m <= 64).
long prime_valuation(const FieldElement& alpha, const SpecialType& T);

/// Laurent digit expansion truncated at index j_max.
struct DigitExpansion {
    long n0 = 0;  // valuation = index of the first digit (digits empty for 0)
    std::vector<FieldElement> digits;
    bool terminated = false;  // expansion is exactly the listed digits
};

DigitExpansion padic_digits(const FieldElement& alpha, const SpecialType& T, long j_max);

/// Truncation at index 0: sum of c_j pi^j over j <= 0. The floor function.
FieldElement floor_value(const FieldElement& alpha, const SpecialType& T);

/// Per-embedding bound C_sigma = L_sigma * lambda_sigma / (lambda_sigma - 1)
/// with lambda_sigma = |sigma(pi)| and L_sigma the max digit modulus.
/// Requires pi strictly large.
std::vector<BigFloat> boundedness_certificate(const SpecialType& T, const RunConfig& cfg = {});

}  // namespace largeness
