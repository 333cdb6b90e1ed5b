#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pierirank/integers.hpp"

namespace pierirank {

/// Coordinate-format sparse matrix with exact integer entries.  Entries are
/// kept sorted by (row, col), deduplicated, and zero-free.
class SparseIntMatrix {
public:
    struct Entry {
        int row;
        int col;
        Int value;
        bool operator==(const Entry&) const = default;
    };

    SparseIntMatrix() = default;
    SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Entry>& entries() const { return entries_; }
    size_t nnz() const { return entries_.size(); }

    /// Accumulates into (i, j).  Call finalize() before reading.
    void add(int i, int j, Int v);
    void set_shape(int rows, int cols);
    /// Sorts, merges duplicates, and drops zeros.
    void finalize();

    SparseIntMatrix transpose() const;
    bool operator==(const SparseIntMatrix&) const = default;

    /// Largest |entry|, 0 for the empty matrix.
    Int max_abs() const;

    /// Direct sum, placed on the block diagonal.
    static SparseIntMatrix block_diag(const SparseIntMatrix& a, const SparseIntMatrix& b);
    /// Matrix product (exact).
    static SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);
    static SparseIntMatrix subtract(const SparseIntMatrix& a, const SparseIntMatrix& b);
    static SparseIntMatrix identity(int n);
    bool is_zero() const { return entries_.empty(); }

    /// MatrixMarket "coordinate integer general" encoding.
    void write_matrix_market(std::ostream& os) const;
    static SparseIntMatrix read_matrix_market(std::istream& is);
    void save(const std::string& path) const;
    static SparseIntMatrix load(const std::string& path);

    /// Stable content hash of shape and entries (FNV-1a over the text form).
    uint64_t content_hash() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    bool finalized_ = true;
    std::vector<Entry> entries_;
};

}  // namespace pierirank
