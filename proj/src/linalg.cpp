#include "largeness/linalg.hpp"

#include <stdexcept>

namespace largeness {

FMat identity(int n, long prec_bits) {
    FMat I(n, n, prec_bits);
    for (int i = 0; i < n; ++i) I.at(i, i) = BigFloat(1L, prec_bits);
    return I;
}

FMat matmul(const FMat& A, const FMat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("matmul: shape mismatch");
    long p = std::max(A.a.empty() ? 64 : A.a[0].precision(),
                      B.a.empty() ? 64 : B.a[0].precision());
    FMat C(A.rows, B.cols, p);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < B.cols; ++j) {
            BigFloat s(0L, p);
            for (int k = 0; k < A.cols; ++k) s = s + A.at(i, k) * B.at(k, j);
            C.at(i, j) = s;
        }
    return C;
}

FVec row_times(const FVec& x, const FMat& A) {
    if (static_cast<int>(x.size()) != A.rows) throw std::invalid_argument("row_times: shape mismatch");
    long p = x.empty() ? 64 : x[0].precision();
    FVec y;
    y.reserve(A.cols);
    for (int j = 0; j < A.cols; ++j) {
        BigFloat s(0L, p);
        for (int i = 0; i < A.rows; ++i) s = s + x[i] * A.at(i, j);
        y.push_back(s);
    }
    return y;
}

FVec mat_times(const FMat& A, const FVec& x) {
    if (static_cast<int>(x.size()) != A.cols) throw std::invalid_argument("mat_times: shape mismatch");
    long p = x.empty() ? 64 : x[0].precision();
    FVec y;
    y.reserve(A.rows);
    for (int i = 0; i < A.rows; ++i) {
        BigFloat s(0L, p);
        for (int j = 0; j < A.cols; ++j) s = s + A.at(i, j) * x[j];
        y.push_back(s);
    }
    return y;
}

FMat invert(const FMat& A) {
    if (A.rows != A.cols) throw std::invalid_argument("invert: square matrix required");
    int n = A.rows;
    long p = A.a.empty() ? 64 : A.a[0].precision();
    FMat M = A;
    FMat I = identity(n, p);
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int i = c + 1; i < n; ++i)
            if (abs(M.at(i, c)) > abs(M.at(piv, c))) piv = i;
        if (M.at(piv, c).is_zero()) throw std::runtime_error("invert: singular matrix");
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(M.at(piv, j), M.at(c, j));
                std::swap(I.at(piv, j), I.at(c, j));
            }
        BigFloat d = M.at(c, c);
        for (int j = 0; j < n; ++j) {
            M.at(c, j) = M.at(c, j) / d;
            I.at(c, j) = I.at(c, j) / d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c) continue;
            BigFloat f = M.at(i, c);
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                M.at(i, j) = M.at(i, j) - f * M.at(c, j);
                I.at(i, j) = I.at(i, j) - f * I.at(c, j);
            }
        }
    }
    return I;
}

BigFloat det(const FMat& A) {
    if (A.rows != A.cols) throw std::invalid_argument("det: square matrix required");
    int n = A.rows;
    long p = A.a.empty() ? 64 : A.a[0].precision();
    FMat M = A;
    BigFloat d(1L, p);
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int i = c + 1; i < n; ++i)
            if (abs(M.at(i, c)) > abs(M.at(piv, c))) piv = i;
        if (M.at(piv, c).is_zero()) return BigFloat(0L, p);
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(M.at(piv, j), M.at(c, j));
            d = -d;
        }
        d = d * M.at(c, c);
        for (int i = c + 1; i < n; ++i) {
            BigFloat f = M.at(i, c) / M.at(c, c);
            if (f.is_zero()) continue;
            for (int j = c; j < n; ++j) M.at(i, j) = M.at(i, j) - f * M.at(c, j);
        }
    }
    return d;
}

Int det_int(std::vector<std::vector<Int>> m) {
    size_t n = m.size();
    if (n == 0) return Int(1);
    for (auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_int: square matrix required");
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return Int(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num / prev;  // Bareiss: division is exact
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

int rank_int(const std::vector<std::vector<Int>>& vecs) {
    if (vecs.empty()) return 0;
    size_t cols = vecs[0].size();
    std::vector<std::vector<Rat>> m;
    m.reserve(vecs.size());
    for (const auto& v : vecs) {
        if (v.size() != cols) throw std::invalid_argument("rank_int: ragged input");
        std::vector<Rat> row;
        row.reserve(cols);
        for (const auto& x : v) row.emplace_back(x);
        m.push_back(std::move(row));
    }
    int rank = 0;
    size_t pivot_col = 0;
    for (size_t r = 0; r < m.size() && pivot_col < cols; ++pivot_col) {
        size_t piv = r;
        while (piv < m.size() && m[piv][pivot_col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][pivot_col] == 0) continue;
            Rat f = m[i][pivot_col] / m[r][pivot_col];
            for (size_t j = pivot_col; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace largeness
