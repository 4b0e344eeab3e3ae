#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <optional>
#include <vector>

#include "symtor/rational.hpp"

namespace symtor {

using QMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Reduced row echelon form in place. Returns the rank; pivot columns are
/// appended to *pivots when given.
inline int rref_inplace(QMat& m, std::vector<int>* pivots = nullptr) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r) {
            if (m(r, col) != 0) { piv = r; break; }
        }
        if (piv < 0) continue;
        if (piv != rank) m.row(piv).swap(m.row(rank));
        Rational inv = Rational(1) / m(rank, col);
        for (int c = col; c < cols; ++c) m(rank, c) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m(r, col) == 0) continue;
            Rational f = m(r, col);
            for (int c = col; c < cols; ++c) m(r, c) -= f * m(rank, c);
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

inline int rank_of(QMat m) { return rref_inplace(m); }

/// Columns of the result span the nullspace of m.
inline QMat kernel(QMat m) {
    const int cols = static_cast<int>(m.cols());
    std::vector<int> pivots;
    int rank = rref_inplace(m, &pivots);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    QMat out = QMat::Zero(cols, cols - rank);
    int k = 0;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        out(free_col, k) = 1;
        for (int r = 0; r < rank; ++r) out(pivots[r], k) = -m(r, free_col);
        ++k;
    }
    return out;
}

/// One exact solution of A x = b, or nullopt when inconsistent.
inline std::optional<QVec> solve(const QMat& A, const QVec& b) {
    const int rows = static_cast<int>(A.rows());
    const int cols = static_cast<int>(A.cols());
    QMat aug(rows, cols + 1);
    aug.leftCols(cols) = A;
    aug.col(cols) = b;
    std::vector<int> pivots;
    int rank = rref_inplace(aug, &pivots);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    QVec x = QVec::Zero(cols);
    for (int r = 0; r < rank; ++r) x(pivots[r]) = aug(r, cols);
    return x;
}

/// True when v lies in the column span of basis.
inline bool in_span(const QMat& basis, const QVec& v) {
    if (v.isZero(0)) return true;
    if (basis.cols() == 0) return false;
    return solve(basis, v).has_value();
}

inline bool same_span(const QMat& a, const QMat& b) {
    QMat stacked(a.rows(), a.cols() + b.cols());
    if (a.rows() != b.rows()) return false;
    stacked.leftCols(a.cols()) = a;
    stacked.rightCols(b.cols()) = b;
    int ra = rank_of(a);
    int rb = rank_of(b);
    return ra == rb && rank_of(stacked) == ra;
}

/// Greedily selects a maximal independent subset of the given columns;
/// returns their indices in input order.
inline std::vector<int> independent_columns(const QMat& cols) {
    std::vector<int> chosen;
    if (cols.cols() == 0) return chosen;
    QMat acc(cols.rows(), 0);
    int rank = 0;
    for (int c = 0; c < cols.cols(); ++c) {
        QMat trial(cols.rows(), acc.cols() + 1);
        trial.leftCols(acc.cols()) = acc;
        trial.col(acc.cols()) = cols.col(c);
        if (rank_of(trial) > rank) {
            acc = trial;
            ++rank;
            chosen.push_back(c);
        }
    }
    return chosen;
}

} // namespace symtor
