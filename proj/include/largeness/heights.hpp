#pragma once

#include <stdexcept>

#include "largeness/config.hpp"
#include "largeness/field.hpp"

namespace largeness {

/// Raised when a sign cannot be resolved within the precision cap.
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Ternary { True, False, Undecided };

struct LargeCheck {
    Ternary verdict = Ternary::Undecided;
    BigFloat margin;      // min over embeddings of log|sigma(x)|
    long prec_used = 0;
    bool exact_boundary = false;  // margin known to be exactly 0
};

struct HeightReport {
    BigFloat h;  // Weil height
    BigFloat n;  // logarithmic norm
    bool is_large_element = false;
    bool is_strictly_large_element = false;
    BigFloat margin;
};

enum class SchinzelVerdict { NotLarge, Inconclusive };

/// log|N(x)| / d. Requires x != 0.
BigFloat log_norm(const FieldElement& x, const NumberField& K);

/// Weil height of an algebraic integer: (1/d) * sum over all d embeddings of
/// max(0, log|sigma(x)|). Rejects elements with non-integer coordinates
/// (the power basis is assumed integral).
BigFloat weil_height_integer(const FieldElement& x, const NumberField& K);

/**
 * Decides min log|sigma(x)| >= 0 (strict: > 0) by precision escalation,
 * with exact tie-breaks at the boundary: a unit is large iff it is a root
 * of unity (Kronecker), and a non-unit boundary requires the reciprocal
 * part of its minimal polynomial to be nontrivial.
 */
LargeCheck large_element_check(const FieldElement& x, const NumberField& K, bool strict,
                               const RunConfig& cfg = {});

/// Exact test: x^m = 1 for some m with phi(m) <= d.
bool is_root_of_unity(const FieldElement& x, const NumberField& K);

/**
 * Height-based non-largeness criterion for CM / totally real fields:
 * NOT_LARGE when n(x) < (1/2) log((1+sqrt 5)/2), else INCONCLUSIVE.
 * Requires the field's CM flag, x a non-unit algebraic integer.
 * The comparison is exact (Lucas/Fibonacci arithmetic).
 */
SchinzelVerdict schinzel_nonlarge(const FieldElement& x, const NumberField& K);

/// The constant (1/2) log((1+sqrt 5)/2).
BigFloat schinzel_constant(long prec_bits);

/// Exact form of the criterion: log(norm_abs)/d < (1/2)log((1+sqrt5)/2),
/// i.e. norm_abs^2 < ((1+sqrt5)/2)^d, decided in integer arithmetic.
bool schinzel_fires_exact(const Int& norm_abs, long d);

/// Exact test of p < 5^(phi/12), i.e. p^12 < 5^phi.
bool power_five_bound_holds_exact(const Int& p, long phi);

long euler_phi(long n);

HeightReport height_report(const FieldElement& x, const NumberField& K, const RunConfig& cfg = {});

/// Minimal polynomial of x over Q (monic, exact).
PolyQ minimal_polynomial(const FieldElement& x, const NumberField& K);

}  // namespace largeness
