#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace rp3 {

// Sparse matrix over Q stored by rows; entries are (column, value) pairs.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, mpq_class>>> data;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), data(r) {}
    void add(int r, int c, const mpq_class& v);  // accumulates
    void normalize();                            // sorts, merges, drops zeros
    SparseMatrix select(const std::vector<int>& row_ids, const std::vector<int>& col_ids) const;
    size_t nonzeros() const;
};

// Exact rank by sparse Gaussian elimination with Markowitz-style pivoting.
int rank(SparseMatrix m);

}  // namespace rp3
