#include "largeness/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace largeness {

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::StrictlyLarge: return "strictly_large";
        case SearchStatus::LargeBoundary: return "large_boundary";
        case SearchStatus::NotLarge: return "not_large";
        case SearchStatus::NormTooSmall: return "norm_too_small";
        case SearchStatus::UndecidedPrecision: return "undecided_precision";
    }
    return "unknown";
}

SearchStatus search_status_from_string(const std::string& s) {
    if (s == "strictly_large") return SearchStatus::StrictlyLarge;
    if (s == "large_boundary") return SearchStatus::LargeBoundary;
    if (s == "not_large") return SearchStatus::NotLarge;
    if (s == "norm_too_small") return SearchStatus::NormTooSmall;
    if (s == "undecided_precision") return SearchStatus::UndecidedPrecision;
    throw std::invalid_argument("unknown status '" + s + "'");
}

bool quick_reject(const FieldElement& x, const Rat& B, const NumberField& K) {
    if (x.is_zero()) return true;
    if (B <= 0) throw std::invalid_argument("quick_reject: B must be positive");
    Rat N = rat_abs(exact_norm(x, K));
    return N < rat_pow(B, K.d);
}

std::pair<BigFloat, BigFloat> subset_norm_bounds(const FieldElement& x, const Rat& B,
                                                 const NumberField& K, int subset_size) {
    if (subset_size < 1 || subset_size > K.d)
        throw std::invalid_argument("subset_norm_bounds: 1 <= #S <= d required");
    if (B <= 0) throw std::invalid_argument("subset_norm_bounds: B must be positive");
    Rat N = rat_abs(exact_norm(x, K));
    Rat lower = rat_pow(B, subset_size);
    Rat upper = rat_pow(B, subset_size - K.d) * N;
    long prec = K.prec_bits;
    return {BigFloat(lower, prec), BigFloat(upper, prec)};
}

namespace {

// Embedding weights in a given column order: 1 at real positions, 2 complex.
std::vector<int> weights_for_order(const NumberField& K, const std::vector<int>& order) {
    std::vector<int> w;
    w.reserve(order.size());
    for (int j : order) w.push_back(j < K.r1 ? 1 : 2);
    return w;
}

FVec permute(const std::vector<BigFloat>& v, const std::vector<int>& order) {
    FVec out;
    out.reserve(order.size());
    for (int j : order) out.push_back(v[j]);
    return out;
}

/// Margin check of a single witness element against the bound B under
/// precision escalation, with exact boundary handling at B = 1.
struct WitnessCheck {
    Ternary meets = Ternary::Undecided;  // all log|sigma(w)| >= log B
    bool strict = false;                 // all strictly above, certified
    bool exact_boundary = false;
    BigFloat margin;  // min over sigma of log|sigma(w)| - log B
    long prec_used = 0;
};

WitnessCheck check_witness(const FieldElement& w, const Rat& B, const NumberField& K,
                           const RunConfig& cfg) {
    WitnessCheck out;
    if (B == 1) {
        LargeCheck nonstrict = large_element_check(w, K, false, cfg);
        out.meets = nonstrict.verdict;
        out.margin = nonstrict.margin;
        out.prec_used = nonstrict.prec_used;
        out.exact_boundary = nonstrict.exact_boundary;
        if (nonstrict.verdict == Ternary::True) {
            if (nonstrict.exact_boundary) {
                out.strict = false;
            } else {
                LargeCheck strict = large_element_check(w, K, true, cfg);
                out.strict = strict.verdict == Ternary::True;
                if (strict.verdict == Ternary::Undecided) out.meets = Ternary::Undecided;
            }
        }
        return out;
    }
    long prec = std::max(K.prec_bits, cfg.precision_bits);
    while (true) {
        NumberField Kp = prec == K.prec_bits ? K : with_precision(K, prec);
        auto logs = embedding_abs_logs(w, Kp);
        BigFloat logB = log_rational(B, prec);
        BigFloat m = logs[0] - logB;
        for (const auto& v : logs) m = min(m, v - logB);
        BigFloat tol = BigFloat::two_pow(-prec / 4, 64);
        out.margin = m;
        out.prec_used = prec;
        if (m > tol) {
            out.meets = Ternary::True;
            out.strict = true;
            return out;
        }
        if (m < -tol) {
            out.meets = Ternary::False;
            return out;
        }
        if (prec * 2 > cfg.precision_cap) {
            out.meets = Ternary::Undecided;  // boundary at B != 1: no exact assist
            return out;
        }
        prec *= 2;
    }
}

FieldElement witness_element(const FieldElement& x, const UnitGroup& U,
                             const std::vector<long>& exps, const NumberField& K) {
    FieldElement w = x;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        w = mul(w, element_pow(U.free_gens[i], exps[i], K), K);
    }
    return w;
}

}  // namespace

SearchProblem build_problem(const FieldElement& x, const Rat& B, const NumberField& K,
                            const UnitGroup& U, const RunConfig& cfg,
                            std::vector<int> column_order) {
    cfg.validate();
    const int r = U.rank();
    const int s = K.s();
    if (r < 1) throw std::invalid_argument("build_problem: rank >= 1 required");
    if (x.is_zero()) throw std::invalid_argument("build_problem: x must be nonzero");
    if (quick_reject(x, B, K))
        throw std::invalid_argument("build_problem: instance is rejected by the norm bound");
    if (column_order.empty()) {
        column_order.resize(s);
        for (int j = 0; j < s; ++j) column_order[j] = j;
    }
    if (static_cast<int>(column_order.size()) != s)
        throw std::invalid_argument("build_problem: column order must have s entries");

    SearchProblem P;
    P.x = x;
    P.B = B;
    P.K = K;
    P.U = U;
    P.column_order = column_order;
    const long prec = K.prec_bits + 32;

    P.L = FMat(r, s, prec);
    for (int i = 0; i < r; ++i) {
        auto row = permute(log_embedding(U.free_gens[i], K), column_order);
        for (int j = 0; j < s; ++j) P.L.at(i, j) = row[j];
    }

    // Invert L with its last column removed, then append a zero row.
    FMat Ltrunc(r, r, prec);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) Ltrunc.at(i, j) = P.L.at(i, j);
    FMat M0;
    try {
        M0 = invert(Ltrunc);
    } catch (const std::runtime_error&) {
        throw std::runtime_error(
            "build_problem: truncated L is singular (unit generators dependent?)");
    }
    P.M = FMat(s, r, prec);
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) P.M.at(j, k) = M0.at(j, k);
    // last row stays zero

    P.N_plus = FMat(s, r, prec);
    P.N_minus = FMat(s, r, prec);
    for (int j = 0; j < r; ++j) {
        BigFloat lo = P.M.at(0, j), hi = P.M.at(0, j);
        for (int i = 1; i < s; ++i) {
            lo = min(lo, P.M.at(i, j));
            hi = max(hi, P.M.at(i, j));
        }
        for (int i = 0; i < s; ++i) {
            P.N_plus.at(i, j) = P.M.at(i, j) - lo;
            P.N_minus.at(i, j) = P.M.at(i, j) - hi;
        }
    }

    auto weights = weights_for_order(K, column_order);
    auto lx = permute(log_embedding(x, K), column_order);
    BigFloat logB = log_rational(B, prec);
    P.X.clear();
    for (int j = 0; j < s; ++j) P.X.push_back(lx[j] - logB * weights[j]);

    // Consistency checks: L M = L N+ = L N- = I within tolerance, signs of N+-.
    BigFloat tol = BigFloat::two_pow(-K.prec_bits / 2 + 10, 64);
    for (const FMat* N : {&P.M, &P.N_plus, &P.N_minus}) {
        FMat LN = matmul(P.L, *N);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                BigFloat want(i == j ? 1L : 0L, prec);
                if (abs(LN.at(i, j) - want) > tol)
                    throw std::runtime_error("build_problem: L*N != I beyond tolerance");
            }
    }
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < r; ++j) {
            if (P.N_plus.at(i, j) < -tol)
                throw std::runtime_error("build_problem: N+ has a negative entry");
            if (P.N_minus.at(i, j) > tol)
                throw std::runtime_error("build_problem: N- has a positive entry");
        }

    // Box: -X N+ <= U <= -X N-, padded outward against floating error.
    BigFloat slack = BigFloat::two_pow(-K.prec_bits / 4, 64) * 10L;
    FVec lo_raw = row_times(P.X, P.N_plus);
    FVec hi_raw = row_times(P.X, P.N_minus);
    for (int j = 0; j < r; ++j) {
        P.box_lo.push_back((-lo_raw[j] - slack).ceil_to_int());
        P.box_hi.push_back((-hi_raw[j] + slack).floor_to_int());
    }
    return P;
}

BigFloat enumeration_size_bound(const SearchProblem& P) {
    const long prec = P.K.prec_bits + 32;
    Rat N = rat_abs(exact_norm(P.x, P.K));
    BigFloat arg = log_rational(N, prec) - log_rational(P.B, prec) * static_cast<long>(P.K.d);
    if (arg.sign() < 0)
        throw std::invalid_argument("enumeration_size_bound: log N - d log B < 0 (rejected case)");
    BigFloat bound = pow_si(arg + BigFloat(1L, prec), P.U.rank());
    for (int j = 0; j < P.U.rank(); ++j) {
        BigFloat lo = P.M.at(0, j), hi = P.M.at(0, j);
        for (int i = 1; i < P.M.rows; ++i) {
            lo = min(lo, P.M.at(i, j));
            hi = max(hi, P.M.at(i, j));
        }
        bound = bound * (hi - lo + BigFloat(1L, prec));
    }
    return bound;
}

LargenessReport solve(const SearchProblem& P, const RunConfig& cfg) {
    cfg.validate();
    const int r = P.U.rank();
    const int s = P.K.s();
    const long prec = P.K.prec_bits;
    BigFloat cert_tol = BigFloat::two_pow(-prec / 4, 64);

    LargenessReport rep;
    rep.stage = "exhaustive";
    rep.precision_bits = prec;
    rep.bound_estimate = enumeration_size_bound(P);

    Int total(1);
    for (int j = 0; j < r; ++j) {
        Int w = P.box_hi[j] - P.box_lo[j] + 1;
        if (w <= 0) w = 0;
        total *= w;
    }
    if (total > Int(cfg.budget))
        throw std::runtime_error("solve: box size exceeds enumeration budget");
    rep.candidates_tested = total.convert_to<long long>();
    if (total == 0) {
        rep.status = SearchStatus::NotLarge;
        return rep;
    }

    std::vector<long> lo(r), hi(r), u(r);
    for (int j = 0; j < r; ++j) {
        lo[j] = P.box_lo[j].convert_to<long>();
        hi[j] = P.box_hi[j].convert_to<long>();
        u[j] = lo[j];
    }

    std::vector<std::vector<long>> accepted;
    const size_t near_cap = 8;
    while (true) {
        // row = U L + X
        FVec row = P.X;
        for (int i = 0; i < r; ++i) {
            if (u[i] == 0) continue;
            for (int j = 0; j < s; ++j) row[j] = row[j] + P.L.at(i, j) * u[i];
        }
        BigFloat m = row[0];
        for (const auto& v : row) m = min(m, v);
        if (m >= -cert_tol) {
            accepted.emplace_back(u.begin(), u.end());
        } else {
            NearMiss nm;
            nm.exponents.assign(u.begin(), u.end());
            nm.row = row;
            nm.min_entry = m;
            rep.near_misses.push_back(std::move(nm));
            std::sort(rep.near_misses.begin(), rep.near_misses.end(),
                      [](const NearMiss& a, const NearMiss& b) {
                          int c = cmp(a.min_entry, b.min_entry);
                          if (c != 0) return c > 0;
                          return a.exponents < b.exponents;
                      });
            if (rep.near_misses.size() > near_cap) rep.near_misses.resize(near_cap);
        }
        int k = r - 1;
        while (k >= 0 && u[k] == hi[k]) {
            u[k] = lo[k];
            --k;
        }
        if (k < 0) break;
        ++u[k];
    }

    bool any_strict = false, any_boundary = false;
    for (const auto& exps : accepted) {
        FieldElement w = witness_element(P.x, P.U, exps, P.K);
        WitnessCheck c = check_witness(w, P.B, P.K, cfg);
        if (c.meets == Ternary::True) {
            SolutionWitness sol;
            sol.exponents = exps;
            sol.witness = w;
            sol.margin = c.margin;
            sol.exact_boundary = c.exact_boundary;
            rep.solutions.push_back(std::move(sol));
            if (c.strict)
                any_strict = true;
            else
                any_boundary = true;
        } else if (c.meets == Ternary::Undecided) {
            rep.unresolved.push_back(exps);
        }
        // certified below B: a spurious box candidate, dropped
    }
    std::sort(rep.solutions.begin(), rep.solutions.end(),
              [](const SolutionWitness& a, const SolutionWitness& b) {
                  return a.exponents < b.exponents;
              });

    if (any_strict)
        rep.status = SearchStatus::StrictlyLarge;
    else if (any_boundary)
        rep.status = SearchStatus::LargeBoundary;
    else if (!rep.unresolved.empty())
        rep.status = SearchStatus::UndecidedPrecision;
    else
        rep.status = SearchStatus::NotLarge;
    return rep;
}

std::vector<std::vector<long>> brute_force_solutions(const FieldElement& x, const Rat& B,
                                                     const NumberField& K, const UnitGroup& U,
                                                     long box_halfwidth, const RunConfig& cfg) {
    const int r = U.rank();
    if (r > 3) throw std::invalid_argument("brute_force_solutions: rank <= 3 required");
    if (box_halfwidth < 0 || box_halfwidth > 10)
        throw std::invalid_argument("brute_force_solutions: box_halfwidth <= 10 required");
    if (x.is_zero()) throw std::invalid_argument("brute_force_solutions: x must be nonzero");

    BigFloat cert_tol = BigFloat::two_pow(-K.prec_bits / 4, 64);
    BigFloat logB = log_rational(B, K.prec_bits + 32);
    std::vector<std::vector<long>> out;
    std::vector<long> u(r, -box_halfwidth);
    while (true) {
        FieldElement w = witness_element(x, U, u, K);
        auto logs = embedding_abs_logs(w, K);
        bool ok = true;
        for (const auto& v : logs)
            if (v < logB - cert_tol) {
                ok = false;
                break;
            }
        if (ok) out.emplace_back(u.begin(), u.end());
        int k = r - 1;
        while (k >= 0 && u[k] == box_halfwidth) {
            u[k] = -box_halfwidth;
            --k;
        }
        if (k < 0) break;
        ++u[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

LargenessReport classify_ideal(const FieldElement& x, const NumberField& K, const UnitGroup& U,
                               const RunConfig& cfg, const Rat& B, bool force_exhaustive) {
    cfg.validate();
    if (x.is_zero()) throw std::invalid_argument("classify_ideal: x must be nonzero");

    LargenessReport rep;
    rep.precision_bits = K.prec_bits;
    rep.bound_estimate = BigFloat(0L, 64);

    if (quick_reject(x, B, K)) {
        rep.status = SearchStatus::NormTooSmall;
        rep.stage = "quick_reject";
        return rep;
    }

    if (U.rank() == 0) {
        // Every generator is a torsion multiple of x; absolute values agree.
        rep.stage = "rank0";
        WitnessCheck c = check_witness(x, B, K, cfg);
        rep.precision_bits = c.prec_used;
        if (c.meets == Ternary::True) {
            SolutionWitness sol;
            sol.witness = x;
            sol.margin = c.margin;
            sol.exact_boundary = c.exact_boundary;
            rep.solutions.push_back(std::move(sol));
            rep.status = c.strict ? SearchStatus::StrictlyLarge : SearchStatus::LargeBoundary;
        } else if (c.meets == Ternary::False) {
            rep.status = SearchStatus::NotLarge;
        } else {
            rep.status = SearchStatus::UndecidedPrecision;
        }
        rep.candidates_tested = 1;
        return rep;
    }

    const bool is_unit = rat_abs(exact_norm(x, K)) == 1;
    if (!force_exhaustive && !is_unit && U.rank() <= 4) {
        try {
            if (sufficient_largeness(x, K, U, cfg) == SufficientVerdict::StrictlyLarge) {
                rep.status = SearchStatus::StrictlyLarge;
                rep.stage = "sufficient";
                return rep;
            }
        } catch (const std::runtime_error&) {
            // minima enumeration unavailable; fall through to the search
        }
    }

    SearchProblem P = build_problem(x, B, K, U, cfg);
    LargenessReport out = solve(P, cfg);
    return out;
}

}  // namespace largeness
