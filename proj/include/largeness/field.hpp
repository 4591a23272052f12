#pragma once

#include <vector>

#include "largeness/bigcomplex.hpp"
#include "largeness/numeric.hpp"
#include "largeness/polyq.hpp"

namespace largeness {

/**
 * A number field Q[X]/(f) with f monic, squarefree, integer coefficients,
 * together with its Archimedean embeddings at a working precision.
 *
 * Embedding order is canonical: real roots ascending, then complex roots
 * (positive imaginary part) by ascending (re, im). Immutable after
 * construction; safe to share across threads.
 */
struct NumberField {
    std::vector<Int> poly;  // constant term first, monic
    int d = 0;
    int r1 = 0, r2 = 0;
    bool cm_or_totally_real = false;
    long prec_bits = 0;
    std::vector<BigFloat> real_roots;
    std::vector<BigComplex> complex_roots;

    int s() const { return r1 + r2; }
    int rank() const { return s() - 1; }
};

/// Builds a NumberField; verifies monicity and squarefreeness, finds and
/// classifies roots. cm_flag asserts the field is CM (auto-true when r2 = 0).
NumberField make_field(const std::vector<Int>& coeffs, long precision_bits, bool cm_flag);

/// Same field with roots recomputed at a (typically higher) precision.
NumberField with_precision(const NumberField& K, long precision_bits);

/// Element of a number field in the power basis 1, theta, ..., theta^(d-1),
/// with exact rational coordinates.
class FieldElement {
public:
    FieldElement() = default;
    explicit FieldElement(std::vector<Rat> coords) : coords_(std::move(coords)) {}

    static FieldElement zero(int d) { return FieldElement(std::vector<Rat>(d, Rat(0))); }
    static FieldElement one(int d) {
        std::vector<Rat> c(d, Rat(0));
        c[0] = 1;
        return FieldElement(std::move(c));
    }
    static FieldElement from_int(const Rat& q, int d) {
        std::vector<Rat> c(d, Rat(0));
        c[0] = q;
        return FieldElement(std::move(c));
    }

    const std::vector<Rat>& coords() const { return coords_; }
    int dim() const { return static_cast<int>(coords_.size()); }
    bool is_zero() const;
    bool is_integral() const;  // all coordinates have denominator 1
    bool operator==(const FieldElement& o) const { return coords_ == o.coords_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    PolyQ to_poly() const;

private:
    std::vector<Rat> coords_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement mul(const FieldElement& a, const FieldElement& b, const NumberField& K);
FieldElement divide(const FieldElement& a, const FieldElement& b, const NumberField& K);
FieldElement inverse(const FieldElement& a, const NumberField& K);
FieldElement element_pow(const FieldElement& a, long e, const NumberField& K);
FieldElement scale(const FieldElement& a, const Rat& s);

/// Exact field norm N_{K/Q}(x), sign included (determinant of the
/// multiplication-by-x matrix on the power basis).
Rat exact_norm(const FieldElement& x, const NumberField& K);

/// Values of x at the s representative embeddings, canonical order.
std::vector<BigComplex> embedding_values(const FieldElement& x, const NumberField& K);

/// log|sigma_j(x)| at each representative embedding (complex counted once).
std::vector<BigFloat> embedding_abs_logs(const FieldElement& x, const NumberField& K);

/// The logarithmic embedding: log|sigma(x)| at real embeddings and
/// 2 log|sigma(x)| at complex ones. Requires x != 0.
std::vector<BigFloat> log_embedding(const FieldElement& x, const NumberField& K);

}  // namespace largeness
