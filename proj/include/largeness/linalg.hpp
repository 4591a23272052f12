#pragma once

#include <vector>

#include "largeness/bigfloat.hpp"
#include "largeness/numeric.hpp"

namespace largeness {

using FVec = std::vector<BigFloat>;

/// Small dense row-major matrix over BigFloat.
struct FMat {
    int rows = 0, cols = 0;
    std::vector<BigFloat> a;

    FMat() = default;
    FMat(int r, int c, long prec_bits)
        : rows(r), cols(c), a(static_cast<size_t>(r) * c, BigFloat(prec_bits)) {}

    BigFloat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const BigFloat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

FMat identity(int n, long prec_bits);
FMat matmul(const FMat& A, const FMat& B);
FVec row_times(const FVec& x, const FMat& A);   // x^T A
FVec mat_times(const FMat& A, const FVec& x);   // A x

/// Gauss-Jordan inverse with partial pivoting. Throws on (numerically) singular input.
FMat invert(const FMat& A);
BigFloat det(const FMat& A);

/// Exact determinant of an integer matrix (fraction-free Bareiss elimination).
Int det_int(std::vector<std::vector<Int>> m);

/// Exact rank of a set of integer vectors (Gaussian elimination over Q).
int rank_int(const std::vector<std::vector<Int>>& vecs);

}  // namespace largeness
