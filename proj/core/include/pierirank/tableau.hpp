#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pierirank/partition.hpp"

namespace pierirank {

/// Filling of a Young diagram with entries in {1..n}, stored row-major.
struct Tableau {
    Partition shape;
    std::vector<uint8_t> entries;

    uint8_t at(int row, int col) const;  // 1-based
    bool is_semistandard() const;
    /// Content vector of length n: multiplicity of each value.
    Weight content(int n) const;
    /// Rows concatenated top to bottom; the basis order key.
    std::vector<uint8_t> row_word() const;
    std::string to_string() const;
    bool operator==(const Tableau&) const = default;
};

/// All semistandard fillings with entries <= n, ordered lexicographically by
/// row-reading word.  Empty when lambda has more than n rows.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int n);

/// Strictly increasing column of entries.
using Column = std::vector<uint8_t>;
/// Columns of weakly decreasing lengths (the conjugate shape).
using ColumnTableau = std::vector<Column>;

ColumnTableau to_columns(const Tableau& t);
Tableau from_columns(const Partition& shape, const ColumnTableau& ct);
std::string encode_columns(const ColumnTableau& ct);

}  // namespace pierirank
