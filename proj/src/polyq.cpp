#include "largeness/polyq.hpp"

#include <stdexcept>

namespace largeness {

PolyQ trim(PolyQ p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int degree(const PolyQ& p) { return static_cast<int>(p.size()) - 1; }

bool is_zero_poly(const PolyQ& p) { return p.empty(); }

PolyQ poly_from_ints(const std::vector<Int>& c) {
    PolyQ p;
    p.reserve(c.size());
    for (const auto& x : c) p.emplace_back(x);
    return trim(std::move(p));
}

PolyQ derivative(const PolyQ& p) {
    PolyQ d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    return trim(std::move(d));
}

PolyQ poly_add(const PolyQ& a, const PolyQ& b) {
    PolyQ r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(std::move(r));
}

PolyQ poly_sub(const PolyQ& a, const PolyQ& b) {
    PolyQ r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return trim(std::move(r));
}

PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
    if (a.empty() || b.empty()) return {};
    PolyQ r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(std::move(r));
}

PolyQ poly_scale(const PolyQ& a, const Rat& s) {
    if (s == 0) return {};
    PolyQ r = a;
    for (auto& c : r) c *= s;
    return r;
}

std::pair<PolyQ, PolyQ> poly_divrem(const PolyQ& a, const PolyQ& b) {
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    PolyQ r = a;
    int db = degree(b);
    if (degree(a) < db) return {{}, trim(std::move(r))};
    PolyQ q(a.size() - b.size() + 1, Rat(0));
    for (int i = degree(a); i >= db; --i) {
        size_t ui = static_cast<size_t>(i);
        if (ui >= r.size() || r[ui] == 0) continue;
        Rat f = r[ui] / b[db];
        q[ui - db] = f;
        for (int j = 0; j <= db; ++j) r[ui - db + j] -= f * b[j];
    }
    return {trim(std::move(q)), trim(std::move(r))};
}

static PolyQ make_monic(PolyQ p) {
    if (p.empty()) return p;
    Rat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        PolyQ r = poly_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a));
}

std::pair<PolyQ, PolyQ> poly_half_xgcd(const PolyQ& a, const PolyQ& m) {
    // Maintain r = u*a (mod m); stop when r is the gcd.
    PolyQ r0 = trim(m), r1 = poly_divrem(trim(a), m).second;
    PolyQ u0 = {}, u1 = {Rat(1)};
    while (!r1.empty()) {
        auto [q, r2] = poly_divrem(r0, r1);
        PolyQ u2 = poly_sub(u0, poly_mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.empty()) return {r0, u0};
    Rat lead = r0.back();
    return {poly_scale(r0, Rat(1) / lead), poly_scale(u0, Rat(1) / lead)};
}

Rat poly_eval(const PolyQ& p, const Rat& x) {
    Rat acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

BigFloat poly_eval(const PolyQ& p, const BigFloat& x, long prec_bits) {
    BigFloat acc(0L, prec_bits);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + BigFloat(p[i], prec_bits);
    return acc;
}

BigComplex poly_eval(const PolyQ& p, const BigComplex& x, long prec_bits) {
    BigComplex acc(prec_bits);
    for (size_t i = p.size(); i-- > 0;) {
        acc = acc * x;
        acc.re = acc.re + BigFloat(p[i], prec_bits);
    }
    return acc;
}

static int sign_at_plus_infinity(const PolyQ& p) {
    if (p.empty()) return 0;
    return p.back() > 0 ? 1 : -1;
}

static int sign_at_minus_infinity(const PolyQ& p) {
    if (p.empty()) return 0;
    int s = p.back() > 0 ? 1 : -1;
    return (degree(p) % 2 == 0) ? s : -s;
}

int sturm_real_root_count(const PolyQ& p) {
    PolyQ f = trim(p);
    if (degree(f) <= 0) return 0;
    std::vector<PolyQ> chain{f, derivative(f)};
    while (!chain.back().empty() && degree(chain.back()) > 0) {
        PolyQ r = poly_divrem(chain[chain.size() - 2], chain.back()).second;
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    auto variations = [&](auto sign_of) {
        int var = 0, last = 0;
        for (const auto& q : chain) {
            int s = sign_of(q);
            if (s == 0) continue;
            if (last != 0 && s != last) ++var;
            last = s;
        }
        return var;
    };
    return variations(sign_at_minus_infinity) - variations(sign_at_plus_infinity);
}

bool is_squarefree(const PolyQ& p) {
    PolyQ g = poly_gcd(p, derivative(p));
    return degree(g) <= 0;
}

}  // namespace largeness
