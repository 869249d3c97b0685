#pragma once

#include <utility>
#include <vector>

#include "poltan/rational.hpp"

namespace poltan {

// Sparse matrix over the rationals. Rows hold (column, value) pairs sorted
// by column with no explicit zeros.
struct SparseMatrix {
    int row_count = 0;
    int col_count = 0;
    std::vector<std::vector<std::pair<int, Rational>>> rows;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : row_count(r), col_count(c), rows(r) {}

    // Entries may arrive unsorted; duplicates sum.
    void set_row(int r, std::vector<std::pair<int, Rational>> entries);
};

// (rank, nullity) by fraction-free elimination on integer-primitive rows.
// Deterministic: rows are processed in order, each pivoting at its leading
// column.
std::pair<int, int> rank_nullity(const SparseMatrix& m);

int rank(const SparseMatrix& m);

// Basis of {v : Mv = 0} from the reduced echelon form, one vector per free
// column (ascending), with the free coordinate set to 1.
std::vector<std::vector<Rational>> nullspace_basis(const SparseMatrix& m);

// Incremental echelonization: feed rows one at a time, read off the rank.
// Used directly where building a full SparseMatrix first would be wasteful.
class Echelon {
  public:
    explicit Echelon(int cols) : cols_(cols) {}

    // Returns true if the row was independent of those seen so far.
    bool add_row(const std::vector<std::pair<int, Rational>>& entries);

    int rank() const { return static_cast<int>(pivots_.size()); }
    int cols() const { return cols_; }

    // Pivot rows brought to reduced echelon form (pivot entries 1), as
    // (pivot column, dense-free sparse row) pairs sorted by pivot column.
    std::vector<std::pair<int, std::vector<std::pair<int, Rational>>>> reduced_rows() const;

  private:
    using IntRow = std::vector<std::pair<int, BigInt>>;

    int cols_;
    // pivot column -> primitive integer row with that leading column
    std::vector<std::pair<int, IntRow>> pivots_;  // sorted by pivot column
};

}  // namespace poltan
