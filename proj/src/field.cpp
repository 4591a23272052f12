#include "largeness/field.hpp"

#include <stdexcept>

#include "largeness/linalg.hpp"
#include "largeness/roots.hpp"

namespace largeness {

NumberField make_field(const std::vector<Int>& coeffs, long precision_bits, bool cm_flag) {
    if (coeffs.size() < 2) throw std::invalid_argument("make_field: degree >= 1 required");
    if (coeffs.back() != 1) throw std::invalid_argument("make_field: polynomial must be monic");
    if (precision_bits < 8) throw std::invalid_argument("make_field: precision too small");

    NumberField K;
    K.poly = coeffs;
    K.d = static_cast<int>(coeffs.size()) - 1;

    PolyQ f = poly_from_ints(coeffs);
    if (!is_squarefree(f))
        throw std::invalid_argument("make_field: repeated roots (polynomial not squarefree)");

    EmbeddingRoots roots = find_roots(coeffs, precision_bits);
    K.r1 = static_cast<int>(roots.reals.size());
    K.r2 = static_cast<int>(roots.complexes.size());
    K.prec_bits = precision_bits;
    K.real_roots = std::move(roots.reals);
    K.complex_roots = std::move(roots.complexes);
    K.cm_or_totally_real = cm_flag || (K.r2 == 0);
    return K;
}

NumberField with_precision(const NumberField& K, long precision_bits) {
    return make_field(K.poly, precision_bits, K.cm_or_totally_real);
}

bool FieldElement::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_integral() const {
    for (const auto& c : coords_)
        if (denominator(c) != 1) return false;
    return true;
}

PolyQ FieldElement::to_poly() const {
    PolyQ p(coords_.begin(), coords_.end());
    return trim(std::move(p));
}

static void check_same_dim(const FieldElement& a, const FieldElement& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("field elements of different degree");
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
    check_same_dim(a, b);
    std::vector<Rat> c = a.coords();
    for (int i = 0; i < a.dim(); ++i) c[i] += b.coords()[i];
    return FieldElement(std::move(c));
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
    check_same_dim(a, b);
    std::vector<Rat> c = a.coords();
    for (int i = 0; i < a.dim(); ++i) c[i] -= b.coords()[i];
    return FieldElement(std::move(c));
}

FieldElement neg(const FieldElement& a) {
    std::vector<Rat> c = a.coords();
    for (auto& x : c) x = -x;
    return FieldElement(std::move(c));
}

FieldElement scale(const FieldElement& a, const Rat& s) {
    std::vector<Rat> c = a.coords();
    for (auto& x : c) x *= s;
    return FieldElement(std::move(c));
}

// Reduce a coefficient vector of length <= 2d-1 modulo the monic defining
// polynomial, in place, and truncate to d coordinates.
static std::vector<Rat> reduce_mod_poly(std::vector<Rat> c, const NumberField& K) {
    const int d = K.d;
    for (int i = static_cast<int>(c.size()) - 1; i >= d; --i) {
        Rat f = c[i];
        if (f == 0) continue;
        c[i] = 0;
        for (int j = 0; j < d; ++j) c[i - d + j] -= f * Rat(K.poly[j]);
    }
    c.resize(d, Rat(0));
    return c;
}

FieldElement mul(const FieldElement& a, const FieldElement& b, const NumberField& K) {
    check_same_dim(a, b);
    if (a.dim() != K.d) throw std::invalid_argument("element does not belong to this field");
    std::vector<Rat> c(2 * K.d - 1, Rat(0));
    for (int i = 0; i < K.d; ++i) {
        if (a.coords()[i] == 0) continue;
        for (int j = 0; j < K.d; ++j) {
            if (b.coords()[j] == 0) continue;
            c[i + j] += a.coords()[i] * b.coords()[j];
        }
    }
    return FieldElement(reduce_mod_poly(std::move(c), K));
}

FieldElement inverse(const FieldElement& a, const NumberField& K) {
    if (a.is_zero()) throw std::domain_error("division by zero field element");
    PolyQ f = poly_from_ints(K.poly);
    auto [g, u] = poly_half_xgcd(a.to_poly(), f);
    if (degree(g) != 0)
        throw std::domain_error("element not invertible (defining polynomial reducible?)");
    // g is monic constant 1, so u * a = 1 mod f.
    std::vector<Rat> c(u.begin(), u.end());
    c.resize(K.d, Rat(0));
    return FieldElement(std::move(c));
}

FieldElement divide(const FieldElement& a, const FieldElement& b, const NumberField& K) {
    return mul(a, inverse(b, K), K);
}

FieldElement element_pow(const FieldElement& a, long e, const NumberField& K) {
    if (e < 0) return element_pow(inverse(a, K), -e, K);
    FieldElement acc = FieldElement::one(K.d);
    FieldElement base = a;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc = mul(acc, base, K);
        base = mul(base, base, K);
        n >>= 1;
    }
    return acc;
}

Rat exact_norm(const FieldElement& x, const NumberField& K) {
    if (x.dim() != K.d) throw std::invalid_argument("element does not belong to this field");
    const int d = K.d;
    // Columns: coordinates of x * theta^j.
    std::vector<std::vector<Rat>> cols;
    cols.reserve(d);
    std::vector<Rat> cur = x.coords();
    cols.push_back(cur);
    for (int j = 1; j < d; ++j) {
        std::vector<Rat> shifted(d + 1, Rat(0));
        for (int i = 0; i < d; ++i) shifted[i + 1] = cur[i];
        cur = reduce_mod_poly(std::move(shifted), K);
        cols.push_back(cur);
    }
    Int den(1);
    for (const auto& col : cols)
        for (const auto& q : col) den = lcm(den, rat_den(q));
    std::vector<std::vector<Int>> m(d, std::vector<Int>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Rat scaled = cols[j][i] * Rat(den);
            m[i][j] = rat_num(scaled);  // exact integer after scaling
        }
    Int det = det_int(std::move(m));
    Rat denom = rat_pow(Rat(den), d);
    return Rat(det) / denom;
}

std::vector<BigComplex> embedding_values(const FieldElement& x, const NumberField& K) {
    if (x.dim() != K.d) throw std::invalid_argument("element does not belong to this field");
    const long wp = K.prec_bits + 32;
    PolyQ g = x.to_poly();
    std::vector<BigComplex> vals;
    vals.reserve(K.s());
    for (const auto& rho : K.real_roots)
        vals.emplace_back(poly_eval(g, rho, wp), BigFloat(0L, wp));
    for (const auto& rho : K.complex_roots) vals.push_back(poly_eval(g, rho, wp));
    return vals;
}

std::vector<BigFloat> embedding_abs_logs(const FieldElement& x, const NumberField& K) {
    if (x.is_zero()) throw std::domain_error("logarithmic embedding of zero");
    auto vals = embedding_values(x, K);
    std::vector<BigFloat> logs;
    logs.reserve(vals.size());
    for (const auto& v : vals) logs.push_back(log(abs(v)));
    return logs;
}

std::vector<BigFloat> log_embedding(const FieldElement& x, const NumberField& K) {
    auto logs = embedding_abs_logs(x, K);
    for (int j = K.r1; j < K.s(); ++j) logs[j] = logs[j] * 2L;
    return logs;
}

}  // namespace largeness
