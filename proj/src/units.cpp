#include "largeness/units.hpp"

#include <algorithm>
#include <stdexcept>

#include "largeness/heights.hpp"

namespace largeness {

namespace {

FMat log_matrix(const std::vector<FieldElement>& gens, const NumberField& K) {
    const int r = static_cast<int>(gens.size());
    const int s = K.s();
    FMat L(r, s, K.prec_bits + 32);
    for (int i = 0; i < r; ++i) {
        auto row = log_embedding(gens[i], K);
        for (int j = 0; j < s; ++j) L.at(i, j) = row[j];
    }
    return L;
}

BigFloat deleted_column_det(const FMat& L, int skip_col) {
    const int r = L.rows;
    FMat M(r, r, L.a.empty() ? 64 : L.a[0].precision());
    for (int i = 0; i < r; ++i) {
        int jj = 0;
        for (int j = 0; j < L.cols; ++j) {
            if (j == skip_col) continue;
            M.at(i, jj++) = L.at(i, j);
        }
    }
    return abs(det(M));
}

}  // namespace

UnitGroup build_unit_group(const FieldElement& torsion_gen, int torsion_order,
                           const std::vector<FieldElement>& free_gens, const NumberField& K,
                           const RunConfig& cfg) {
    cfg.validate();
    const int r = K.rank();
    if (static_cast<int>(free_gens.size()) != r)
        throw std::invalid_argument("build_unit_group: expected exactly rank-many free generators");
    if (torsion_order < 1) throw std::invalid_argument("build_unit_group: torsion order >= 1");

    if (rat_abs(exact_norm(torsion_gen, K)) != 1)
        throw std::invalid_argument("build_unit_group: torsion generator is not a unit");
    for (const auto& g : free_gens)
        if (rat_abs(exact_norm(g, K)) != 1)
            throw std::invalid_argument("build_unit_group: free generator has |norm| != 1");

    if (element_pow(torsion_gen, torsion_order, K) != FieldElement::one(K.d))
        throw std::invalid_argument("build_unit_group: torsion generator order mismatch");
    for (int q = 2; q <= torsion_order; ++q) {
        if (torsion_order % q != 0) continue;
        bool prime = true;
        for (int t = 2; t * t <= q; ++t)
            if (q % t == 0) prime = false;
        if (!prime) continue;
        if (element_pow(torsion_gen, torsion_order / q, K) == FieldElement::one(K.d))
            throw std::invalid_argument("build_unit_group: torsion order not minimal");
    }

    UnitGroup U;
    U.torsion_gen = torsion_gen;
    U.torsion_order = torsion_order;
    U.free_gens = free_gens;
    U.L = log_matrix(free_gens, K);

    // L V = 0: each row sums to log of the unit's absolute norm.
    BigFloat tol = BigFloat::two_pow(-K.prec_bits / 2 + 10, 64);
    for (int i = 0; i < r; ++i) {
        BigFloat sum(0L, K.prec_bits + 32);
        for (int j = 0; j < K.s(); ++j) sum = sum + U.L.at(i, j);
        if (abs(sum) > tol)
            throw std::invalid_argument("build_unit_group: row sum of L not zero (not a unit?)");
    }

    if (r >= 1) {
        BigFloat d = deleted_column_det(U.L, K.s() - 1);
        if (d < BigFloat::parse("1e-20", 64))
            throw std::invalid_argument(
                "build_unit_group: L is rank deficient (generators multiplicatively dependent)");
    }
    return U;
}

RegulatorResult regulator(const UnitGroup& U) {
    const int r = U.rank();
    if (r == 0) {
        RegulatorResult res;
        res.value = BigFloat(1L, 64);
        res.rank_zero_convention = true;
        return res;
    }
    const int s = U.L.cols;
    std::vector<BigFloat> dets;
    dets.reserve(s);
    for (int j = 0; j < s; ++j) dets.push_back(deleted_column_det(U.L, j));
    BigFloat ref = dets.back();  // last-column deletion is the canonical choice
    for (const auto& d : dets) {
        BigFloat rel = abs(d - ref) / ref;
        if (rel > BigFloat::parse("1e-10", 64))
            throw std::runtime_error("regulator: column-choice invariance violated");
    }
    RegulatorResult res;
    res.value = ref;
    return res;
}

std::vector<BigFloat> successive_minima(const UnitGroup& U, const RunConfig& cfg) {
    cfg.validate();
    const int r = U.rank();
    if (r < 1) throw std::invalid_argument("successive_minima: rank >= 1 required");
    if (r > 4) throw std::invalid_argument("successive_minima: rank exceeds enumeration cap (4)");
    const long prec = U.L.a[0].precision();

    // Gram matrix of the rows of L.
    FMat G(r, r, prec);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            BigFloat s(0L, prec);
            for (int k = 0; k < U.L.cols; ++k) s = s + U.L.at(i, k) * U.L.at(j, k);
            G.at(i, j) = s;
        }

    // Search radius: the max row norm already yields r independent vectors.
    BigFloat R2 = G.at(0, 0);
    for (int i = 1; i < r; ++i) R2 = max(R2, G.at(i, i));
    R2 = R2 * (BigFloat(1L, prec) + BigFloat::two_pow(-40, 64));

    FMat Ginv = invert(G);
    std::vector<long> bound(r);
    Int box_size(1);
    for (int i = 0; i < r; ++i) {
        BigFloat b = sqrt(R2 * Ginv.at(i, i)) + BigFloat::parse("1e-9", 64);
        bound[i] = static_cast<long>(b.floor_to_int());
        box_size *= Int(2 * bound[i] + 1);
    }
    if (box_size > Int(cfg.budget))
        throw std::runtime_error("successive_minima: enumeration budget exceeded");

    struct Entry {
        BigFloat q;
        std::vector<Int> c;
    };
    std::vector<Entry> entries;
    std::vector<long> c(r, 0);
    for (int i = 0; i < r; ++i) c[i] = -bound[i];
    while (true) {
        bool zero = true, canonical_sign = false;
        for (int i = 0; i < r; ++i)
            if (c[i] != 0) {
                zero = false;
                canonical_sign = c[i] > 0;
                break;
            }
        if (!zero && canonical_sign) {
            BigFloat q(0L, prec);
            for (int i = 0; i < r; ++i) {
                if (c[i] == 0) continue;
                for (int j = 0; j < r; ++j) {
                    if (c[j] == 0) continue;
                    q = q + G.at(i, j) * c[i] * c[j];
                }
            }
            if (q <= R2) {
                Entry e;
                e.q = q;
                e.c.assign(c.begin(), c.end());
                entries.push_back(std::move(e));
            }
        }
        int k = r - 1;
        while (k >= 0 && c[k] == bound[k]) {
            c[k] = -bound[k];
            --k;
        }
        if (k < 0) break;
        ++c[k];
    }

    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        int cq = cmp(a.q, b.q);
        if (cq != 0) return cq < 0;
        return a.c < b.c;
    });

    std::vector<BigFloat> minima;
    std::vector<std::vector<Int>> chosen;
    for (const auto& e : entries) {
        if (static_cast<int>(minima.size()) == r) break;
        auto trial = chosen;
        trial.push_back(e.c);
        if (rank_int(trial) == static_cast<int>(trial.size())) {
            chosen = std::move(trial);
            minima.push_back(sqrt(e.q));
        }
    }
    if (static_cast<int>(minima.size()) != r)
        throw std::runtime_error("successive_minima: failed to realize full rank within radius");
    return minima;
}

CoveringRadiusBounds covering_radius_bounds(const UnitGroup& U, const NumberField& K,
                                            const RunConfig& cfg) {
    const int r = U.rank();
    if (r < 1) throw std::invalid_argument("covering_radius_bounds: rank >= 1 required");
    const long prec = K.prec_bits + 32;

    CoveringRadiusBounds B;
    B.minima = successive_minima(U, cfg);
    B.regulator = regulator(U).value;
    BigFloat sqrt_s = sqrt(BigFloat(static_cast<long>(K.s()), prec));
    BigFloat lambda_r = B.minima.back();
    B.lower_regulator = root_ui(B.regulator, static_cast<unsigned long>(r)) / 2L;
    B.lower_minima = lambda_r / (sqrt_s * 2L);
    B.upper_minima = sqrt_s * lambda_r / 2L;
    B.fundamental_volume = sqrt_s * B.regulator;
    return B;
}

SufficientVerdict sufficient_largeness(const FieldElement& x, const NumberField& K,
                                       const UnitGroup& U, const RunConfig& cfg) {
    if (x.is_zero()) throw std::domain_error("sufficient_largeness: zero element");
    if (rat_abs(exact_norm(x, K)) == 1)
        throw std::domain_error("sufficient_largeness: units excluded (n = 0 never exceeds bound)");
    if (U.rank() == 0) {
        // Covering radius 0: any generator is as large as its torsion multiples.
        LargeCheck c = large_element_check(x, K, true, cfg);
        return c.verdict == Ternary::True ? SufficientVerdict::StrictlyLarge
                                          : SufficientVerdict::Inconclusive;
    }
    CoveringRadiusBounds B = covering_radius_bounds(U, K, cfg);
    BigFloat n = log_norm(x, K);
    BigFloat guard = BigFloat::two_pow(-K.prec_bits / 4, 64);
    if (n > B.upper_minima + guard) return SufficientVerdict::StrictlyLarge;
    return SufficientVerdict::Inconclusive;
}

long uniform_extension_degree(const NumberField& K, const UnitGroup& U, const RunConfig& cfg) {
    if (U.rank() == 0) return 1;
    CoveringRadiusBounds B = covering_radius_bounds(U, K, cfg);
    BigFloat v = B.upper_minima * static_cast<long>(K.d) / const_log2(K.prec_bits + 32);
    Int fl = v.floor_to_int();
    return fl.convert_to<long>() + 1;
}

namespace {

bool is_squarefree_long(long D) {
    for (long p = 2; p * p <= D; ++p)
        if (D % (p * p) == 0) return false;
    return true;
}

}  // namespace

PellSolution pell_solution(long D) {
    if (D < 2 || D > 10000) throw std::invalid_argument("pell_solution: 2 <= D <= 10^4 required");
    if (!is_squarefree_long(D)) throw std::invalid_argument("pell_solution: D must be squarefree");
    Int a0 = sqrt(Int(D));
    // Continued fraction of sqrt(D): period ends when a_i = 2*a0.
    Int m = 0, dd = 1, a = a0;
    Int p_prev = 1, p_cur = a0, q_prev = 0, q_cur = 1;
    for (int iter = 0; iter < 100000; ++iter) {
        Int val = p_cur * p_cur - Int(D) * q_cur * q_cur;
        if (val == 1 || val == -1) {
            PellSolution s;
            s.x = p_cur;
            s.y = q_cur;
            s.norm_sign = val == 1 ? 1 : -1;
            return s;
        }
        m = dd * a - m;
        dd = (Int(D) - m * m) / dd;
        a = (a0 + m) / dd;
        Int p_next = a * p_cur + p_prev;
        Int q_next = a * q_cur + q_prev;
        p_prev = p_cur;
        p_cur = p_next;
        q_prev = q_cur;
        q_cur = q_next;
    }
    throw std::runtime_error("pell_solution: period not found (iteration cap)");
}

FieldElement pell_fundamental_unit(long D) {
    if (D < 2 || D > 10000) throw std::invalid_argument("pell_fundamental_unit: 2 <= D <= 10^4");
    if (!is_squarefree_long(D))
        throw std::invalid_argument("pell_fundamental_unit: D must be squarefree");

    if (D % 4 != 1) {
        PellSolution s = pell_solution(D);
        return FieldElement({Rat(s.x), Rat(s.y)});
    }

    // Continued fraction of w = (1+sqrt D)/2; convergents p/q are scanned for
    // the first unit p - q*conj(w) of the maximal order.
    Int a0 = sqrt(Int(D));
    Int P = 1, Q = 2;
    auto floor_step = [&](const Int& Pv, const Int& Qv) {
        // floor((Pv + sqrt(D)) / Qv), exact for irrational sqrt(D)
        Int num = Pv + a0;
        if (Qv > 0) {
            Int q = num / Qv;
            if (num < 0 && num % Qv != 0) q -= 1;
            return q;
        }
        Int nq = -Qv;
        Int q = num / nq;
        if (num < 0 && num % nq != 0) q -= 1;
        return Int(-(q + 1));
    };
    Int a = floor_step(P, Q);
    Int p_prev = 1, p_cur = a, q_prev = 0, q_cur = 1;
    for (int iter = 0; iter < 100000; ++iter) {
        // u = p - q*(1 - sqrt D)/2 = (2p - q)/2 + (q/2) sqrt D
        Int two_p_minus_q = 2 * p_cur - q_cur;
        Int val = two_p_minus_q * two_p_minus_q - Int(D) * q_cur * q_cur;  // 4*N(u)
        if (val == 4 || val == -4) {
            return FieldElement({Rat(two_p_minus_q) / 2, Rat(q_cur) / 2});
        }
        P = a * Q - P;
        Q = (Int(D) - P * P) / Q;
        if (Q == 0) throw std::runtime_error("pell_fundamental_unit: degenerate state");
        a = floor_step(P, Q);
        Int p_next = a * p_cur + p_prev;
        Int q_next = a * q_cur + q_prev;
        p_prev = p_cur;
        p_cur = p_next;
        q_prev = q_cur;
        q_cur = q_next;
    }
    throw std::runtime_error("pell_fundamental_unit: unit not found (iteration cap)");
}

}  // namespace largeness
