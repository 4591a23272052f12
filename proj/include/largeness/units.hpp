#pragma once

#include <vector>

#include "largeness/config.hpp"
#include "largeness/field.hpp"
#include "largeness/linalg.hpp"

namespace largeness {

/**
 * Unit group data: a torsion generator with its order and r = s-1
 * multiplicatively independent free generators, together with the r x s
 * matrix L whose rows are the logarithmic embeddings of the free generators.
 * Immutable after construction.
 */
struct UnitGroup {
    FieldElement torsion_gen;
    int torsion_order = 1;
    std::vector<FieldElement> free_gens;
    FMat L;  // r x s, complex columns doubled

    int rank() const { return static_cast<int>(free_gens.size()); }
};

/// Validates all invariants (unit norms, torsion order, row count, L V = 0,
/// numeric rank) and fails loudly on any violation.
UnitGroup build_unit_group(const FieldElement& torsion_gen, int torsion_order,
                           const std::vector<FieldElement>& free_gens, const NumberField& K,
                           const RunConfig& cfg = {});

struct RegulatorResult {
    BigFloat value;
    bool rank_zero_convention = false;  // r = 0: value 1 by convention
};

/// |det| of L with one column deleted; verified invariant (<= 1e-10 relative)
/// across every column choice.
RegulatorResult regulator(const UnitGroup& U);

/// Successive minima of the row lattice of L under the Euclidean norm,
/// by exhaustive Fincke-Pohst style enumeration. Rank capped at 4.
std::vector<BigFloat> successive_minima(const UnitGroup& U, const RunConfig& cfg = {});

struct CoveringRadiusBounds {
    BigFloat lower_regulator;  // (1/2) R^(1/r)
    BigFloat lower_minima;     // lambda_r / (2 sqrt s)
    BigFloat upper_minima;     // (sqrt s / 2) lambda_r
    BigFloat regulator;
    BigFloat fundamental_volume;  // sqrt(s) * R
    std::vector<BigFloat> minima;
};

CoveringRadiusBounds covering_radius_bounds(const UnitGroup& U, const NumberField& K,
                                            const RunConfig& cfg = {});

enum class SufficientVerdict { StrictlyLarge, Inconclusive };

/// Certified sufficient criterion: n(x) above the certified upper bound for
/// the sup-norm covering radius forces strict largeness. Never refutes.
SufficientVerdict sufficient_largeness(const FieldElement& x, const NumberField& K,
                                       const UnitGroup& U, const RunConfig& cfg = {});

/// Smallest j such that every non-trivial principal ideal is strictly large
/// after adjoining j-th roots of all units (uses the certified upper bound).
long uniform_extension_degree(const NumberField& K, const UnitGroup& U,
                              const RunConfig& cfg = {});

struct PellSolution {
    Int x, y;       // minimal solution of x^2 - D y^2 = +-1 with y >= 1
    int norm_sign;  // +1 or -1
};

/// Minimal integral Pell solution via the continued fraction of sqrt(D).
PellSolution pell_solution(long D);

/// Fundamental unit of the maximal order of Q(sqrt D) as an element in the
/// power basis of x^2 - D (continued fraction of (1+sqrt D)/2 when D = 1
/// mod 4, of sqrt D otherwise). D must be squarefree, 2 <= D <= 10^4.
FieldElement pell_fundamental_unit(long D);

}  // namespace largeness
