#ifndef DS_LINALG_HPP
#define DS_LINALG_HPP

#include <utility>
#include <vector>

#include "ds/rational.hpp"

namespace ds {

// Dense exact-rational matrix. Immutable workflows: operations return copies.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : r_(rows), c_(cols), a_(rows, std::vector<Rat>(cols, 0)) {}
    static RationalMatrix identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rat& at(int i, int j) { return a_[i][j]; }
    const Rat& at(int i, int j) const { return a_[i][j]; }

    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix transpose() const;
    bool operator==(const RationalMatrix& o) const { return a_ == o.a_; }

    // Reduced row echelon form; pivots are leftmost-nonzero column indices.
    std::pair<RationalMatrix, std::vector<int>> rref() const;
    int rank() const;
    // Canonical null-space basis: free variables set to unit vectors in index order.
    std::vector<std::vector<Rat>> kernel() const;
    // v in the row space?
    bool member(const std::vector<Rat>& v) const;

private:
    int r_ = 0, c_ = 0;
    std::vector<std::vector<Rat>> a_;
};

// Sparse row over an indexed column set: sorted (col, coeff) pairs, coeffs nonzero.
using SparseRow = std::vector<std::pair<int, Rat>>;

SparseRow sparse_axpy(const SparseRow& a, const Rat& s, const SparseRow& b); // a + s*b

// Incremental reduced echelon basis with deterministic pivots (smallest column
// index first). Rows are normalized to leading coefficient 1 and fully reduced
// against each other.
class EchelonBasis {
public:
    // Reduces r against the basis; returns the remainder (empty if r was in the span).
    SparseRow reduce(SparseRow r) const;
    // Reduce-then-insert; returns true if the row added a new pivot.
    bool insert(SparseRow r);

    int rank() const { return (int)rows_.size(); }
    const std::vector<SparseRow>& rows() const { return rows_; }
    bool has_pivot(int col) const;

private:
    std::vector<SparseRow> rows_;           // sorted by pivot column
    std::vector<int> pivots_;               // pivot column of rows_[i]
};

} // namespace ds

#endif
