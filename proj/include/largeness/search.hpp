#pragma once

#include <string>
#include <vector>

#include "largeness/config.hpp"
#include "largeness/field.hpp"
#include "largeness/heights.hpp"
#include "largeness/units.hpp"

namespace largeness {

enum class SearchStatus {
    StrictlyLarge,
    LargeBoundary,
    NotLarge,
    NormTooSmall,
    UndecidedPrecision
};

std::string to_string(SearchStatus s);
SearchStatus search_status_from_string(const std::string& s);

struct SolutionWitness {
    std::vector<long> exponents;  // unit exponent vector U
    long torsion_k = 0;           // torsion multiples are equally valid; 0 is reported
    FieldElement witness;         // x * prod u_i^{U_i}
    BigFloat margin;              // min over sigma of log|sigma(w)| - log B
    bool exact_boundary = false;
};

struct NearMiss {
    std::vector<long> exponents;
    FVec row;  // U L + X at working precision
    BigFloat min_entry;
};

struct LargenessReport {
    SearchStatus status = SearchStatus::UndecidedPrecision;
    std::string stage;  // quick_reject | rank0 | sufficient | exhaustive
    long precision_bits = 0;
    long long candidates_tested = 0;
    BigFloat bound_estimate;
    std::vector<SolutionWitness> solutions;
    std::vector<NearMiss> near_misses;             // best rejected candidates (capped)
    std::vector<std::vector<long>> unresolved;     // candidates undecided at the cap
};

/**
 * The reformulated feasibility problem U L + X >= 0 with X = l(x) - L(B),
 * together with the derived matrices M, N+, N- and the integer search box.
 * column_order records the embedding permutation the matrices are built in
 * (identity by default; tests may impose a reference order).
 */
struct SearchProblem {
    FieldElement x;
    Rat B;
    NumberField K;
    UnitGroup U;
    std::vector<int> column_order;
    FMat L;        // r x s (columns permuted)
    FMat M;        // s x r, last permuted row zero
    FMat N_plus;   // s x r, >= 0
    FMat N_minus;  // s x r, <= 0
    FVec X;        // length s
    std::vector<Int> box_lo, box_hi;
};

/// Exact rejection: |N(x)| < B^d means no unit multiple can clear B everywhere.
bool quick_reject(const FieldElement& x, const Rat& B, const NumberField& K);

/// (B^{#S}, B^{#S-d} |N(x)|): bounds for prod over any subset S of size
/// subset_size of |sigma(xu)| at a solution u.
std::pair<BigFloat, BigFloat> subset_norm_bounds(const FieldElement& x, const Rat& B,
                                                 const NumberField& K, int subset_size);

/// Builds matrices and the slack-padded integer box. Requires rank >= 1,
/// x != 0 and quick_reject false.
SearchProblem build_problem(const FieldElement& x, const Rat& B, const NumberField& K,
                            const UnitGroup& U, const RunConfig& cfg = {},
                            std::vector<int> column_order = {});

/// The proof's explicit bound (log N - d log B + 1)^r * prod_j (max M_j - min M_j + 1)
/// on the number of candidates; requires log N - d log B >= 0.
BigFloat enumeration_size_bound(const SearchProblem& P);

/// Enumerates the box, certifies accepted candidates at escalating precision,
/// and aggregates the verdict.
LargenessReport solve(const SearchProblem& P, const RunConfig& cfg = {});

/// Independent oracle: direct test of every exponent vector in [-w, w]^r via
/// exact element arithmetic and embeddings. Rank <= 3, w <= 10.
std::vector<std::vector<long>> brute_force_solutions(const FieldElement& x, const Rat& B,
                                                     const NumberField& K, const UnitGroup& U,
                                                     long box_halfwidth,
                                                     const RunConfig& cfg = {});

/// Orchestration: quick_reject, then the rank-0 direct check or the
/// sufficient criterion (fast positive), then the exhaustive search.
/// force_exhaustive suppresses the sufficient-stage shortcut so witnesses
/// are always produced.
LargenessReport classify_ideal(const FieldElement& x, const NumberField& K, const UnitGroup& U,
                               const RunConfig& cfg = {}, const Rat& B = Rat(1),
                               bool force_exhaustive = false);

}  // namespace largeness
