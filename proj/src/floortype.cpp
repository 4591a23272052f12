#include "largeness/floortype.hpp"

#include <gmp.h>

#include <map>
#include <stdexcept>

#include "largeness/heights.hpp"

namespace largeness {

namespace {

Int mod_norm(Int a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.backend().data(), 40) != 0;
}

}  // namespace

Int residue(const FieldElement& x, const SpecialType& T) {
    if (!x.is_integral())
        throw std::invalid_argument("residue: integer coordinates required");
    Int acc = 0;
    Int gpow = 1;
    for (const auto& c : x.coords()) {
        acc = mod_norm(acc + rat_num(c) * gpow, T.p);
        gpow = mod_norm(gpow * T.theta_image, T.p);
    }
    return acc;
}

SpecialType make_special_type(const NumberField& K, const FieldElement& pi,
                              const std::vector<FieldElement>& digits, const Int& g,
                              const RunConfig& cfg) {
    cfg.validate();
    if (pi.is_zero()) throw std::invalid_argument("make_special_type: pi must be nonzero");
    if (!pi.is_integral())
        throw std::invalid_argument("make_special_type: pi must have integer coordinates");

    Rat N = rat_abs(exact_norm(pi, K));
    if (!is_integer(N) || !is_prime(rat_num(N)))
        throw std::invalid_argument("make_special_type: pi is not of prime norm");
    SpecialType T;
    T.K = K;
    T.pi = pi;
    T.p = rat_num(N);
    if (T.p > 1000000)
        throw std::invalid_argument("make_special_type: residue characteristic too large");
    T.theta_image = mod_norm(g, T.p);

    // f(g) = 0 mod p
    Int acc = 0, gpow = 1;
    for (const auto& c : K.poly) {
        acc = mod_norm(acc + c * gpow, T.p);
        gpow = mod_norm(gpow * T.theta_image, T.p);
    }
    if (acc != 0)
        throw std::invalid_argument("make_special_type: g is not a root of the defining polynomial mod p");

    if (residue(pi, T) != 0)
        throw std::invalid_argument("make_special_type: residue map inconsistent with pi");

    if (Int(static_cast<long>(digits.size())) != T.p)
        throw std::invalid_argument("make_special_type: digit set must have exactly p elements");
    bool has_zero = false;
    std::map<Int, int> seen;
    for (const auto& c : digits) {
        if (!c.is_integral())
            throw std::invalid_argument("make_special_type: digits must have integer coordinates");
        if (c.is_zero()) has_zero = true;
        Int r = residue(c, T);
        if (seen.count(r))
            throw std::invalid_argument("make_special_type: digit residues not pairwise distinct");
        seen[r] = 1;
    }
    if (!has_zero) throw std::invalid_argument("make_special_type: digit set must contain 0");
    T.digits = digits;

    // ramification index: valuation of the rational prime p at this prime
    FieldElement pe = FieldElement::from_int(Rat(T.p), K.d);
    long e = 0;
    FieldElement z = pe;
    while (residue(z, T) == 0) {
        z = divide(z, pi, K);
        if (!z.is_integral())
            throw std::logic_error("make_special_type: inexact division while computing ramification");
        ++e;
    }
    T.ramification = e;
    return T;
}

long prime_valuation(const FieldElement& alpha, const SpecialType& T) {
    if (alpha.is_zero()) throw std::domain_error("prime_valuation of zero");
    const int denom_cap = 64;
    FieldElement y = alpha;
    long shift = 0;
    while (!y.is_integral() && shift <= denom_cap) {
        y = mul(y, T.pi, T.K);
        ++shift;
    }
    if (!y.is_integral())
        throw std::invalid_argument(
            "prime_valuation: denominator not supported at the prime of this type");
    long v = 0;
    while (residue(y, T) == 0) {
        y = divide(y, T.pi, T.K);
        if (!y.is_integral())
            throw std::logic_error("prime_valuation: inexact division");
        ++v;
    }
    return v - shift;
}

DigitExpansion padic_digits(const FieldElement& alpha, const SpecialType& T, long j_max) {
    DigitExpansion ex;
    if (alpha.is_zero()) {
        ex.terminated = true;
        return ex;
    }
    long v = prime_valuation(alpha, T);
    if (j_max < v)
        throw std::invalid_argument("padic_digits: j_max below the valuation of alpha");
    ex.n0 = v;

    std::map<Int, size_t> digit_of_residue;
    for (size_t i = 0; i < T.digits.size(); ++i) digit_of_residue[residue(T.digits[i], T)] = i;

    FieldElement beta = mul(alpha, element_pow(T.pi, -v, T.K), T.K);
    if (!beta.is_integral()) throw std::logic_error("padic_digits: shifted element not integral");
    for (long j = v; j <= j_max; ++j) {
        Int r = residue(beta, T);
        const FieldElement& c = T.digits[digit_of_residue.at(r)];
        ex.digits.push_back(c);
        beta = divide(sub(beta, c), T.pi, T.K);
        if (!beta.is_integral()) throw std::logic_error("padic_digits: inexact digit step");
        if (beta.is_zero()) {
            ex.terminated = true;
            break;
        }
    }
    return ex;
}

FieldElement floor_value(const FieldElement& alpha, const SpecialType& T) {
    if (alpha.is_zero()) return FieldElement::zero(T.K.d);
    long v = prime_valuation(alpha, T);
    if (v > 0) return FieldElement::zero(T.K.d);  // all digits at j <= 0 vanish
    DigitExpansion ex = padic_digits(alpha, T, 0);
    FieldElement acc = FieldElement::zero(T.K.d);
    for (size_t i = 0; i < ex.digits.size(); ++i) {
        long j = ex.n0 + static_cast<long>(i);
        acc = add(acc, mul(ex.digits[i], element_pow(T.pi, j, T.K), T.K));
    }
    return acc;
}

std::vector<BigFloat> boundedness_certificate(const SpecialType& T, const RunConfig& cfg) {
    LargeCheck strict = large_element_check(T.pi, T.K, true, cfg);
    if (strict.verdict != Ternary::True)
        throw std::domain_error(
            "boundedness_certificate: pi is not strictly large; no certificate");
    auto pi_vals = embedding_values(T.pi, T.K);
    std::vector<std::vector<BigComplex>> digit_vals;
    digit_vals.reserve(T.digits.size());
    for (const auto& c : T.digits) digit_vals.push_back(embedding_values(c, T.K));
    const long prec = T.K.prec_bits + 32;
    std::vector<BigFloat> C;
    C.reserve(pi_vals.size());
    for (size_t j = 0; j < pi_vals.size(); ++j) {
        BigFloat lambda = abs(pi_vals[j]);
        BigFloat L(0L, prec);
        for (const auto& dv : digit_vals) L = max(L, abs(dv[j]));
        C.push_back(L * lambda / (lambda - BigFloat(1L, prec)));
    }
    return C;
}

}  // namespace largeness
