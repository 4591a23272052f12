#pragma once

#include <vector>

#include "largeness/bigcomplex.hpp"
#include "largeness/numeric.hpp"

namespace largeness {

/// Roots of a monic squarefree integer polynomial, split by type.
/// Real roots ascending; complex roots have positive imaginary part and are
/// sorted by (re, im) ascending.
struct EmbeddingRoots {
    std::vector<BigFloat> reals;
    std::vector<BigComplex> complexes;
    long prec_bits = 0;
};

/**
 * Simultaneous-iteration (Durand-Kerner) root solver over big floats with
 * residual-certified stopping. Each returned root rho satisfies
 * |p(rho)| <= 2^-(prec_bits+8) * max(1,|rho|)^d, well inside the
 * 2^-(prec_bits/2) certification budget downstream code assumes.
 *
 * Throws std::runtime_error if the iteration fails to converge or the
 * real/complex classification (cross-checked against an exact Sturm count)
 * cannot be certified.
 */
EmbeddingRoots find_roots(const std::vector<Int>& monic_coeffs, long prec_bits);

}  // namespace largeness
