#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pierirank/integers.hpp"

namespace pierirank {

/// Arbitrary integer sequence of fixed length; entries may be negative and
/// need not be monotone.  Used for Weyl-group operands and dual weights.
using Weight = std::vector<int64_t>;

/// Weakly decreasing sequence of non-negative integers.  Trailing zeros are
/// stripped on construction so that equality is structural.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int64_t> parts);
    explicit Partition(std::vector<int64_t> parts);

    const std::vector<int64_t>& parts() const { return parts_; }
    /// Number of nonzero parts, l(lambda).
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// Sum of the parts, |lambda|.
    int64_t size() const;
    /// part(i) is 1-based and returns 0 beyond the length.
    int64_t part(int i) const;
    int64_t operator[](int i) const { return part(i + 1); }

    Partition conjugate() const;
    bool contains(const Partition& inner) const;
    /// Pads with zeros to exactly n entries (requires length() <= n).
    Weight padded(int n) const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;

private:
    std::vector<int64_t> parts_;
};

/// Parses "6,2" (or "" for the empty partition).  Throws on bad input.
Partition parse_partition(const std::string& text);
Weight parse_weight(const std::string& text);
std::string weight_to_string(const Weight& w);

/// Returns true if the sequence is a valid weakly decreasing non-negative
/// pattern (trailing zeros allowed).
bool is_partition_shape(const std::vector<int64_t>& seq);

/// Hook lengths h(i,j), one row per row of the diagram.
std::vector<std::vector<int64_t>> hook_lengths(const Partition& lambda);

/// Dimension of the Schur module for glue(n) by the hook content formula,
/// exact big-integer arithmetic.  Zero when lambda has more than n rows.
Int schur_dim(const Partition& lambda, int n);

/// Same dimension by brute-force enumeration of semistandard fillings with
/// entries in {1..n}; the independent oracle for schur_dim.
Int ssyt_count(const Partition& lambda, int n);

enum class PieriKind { symmetric, exterior };

/// All mu obtained from lambda by adding d boxes, no two in the same column
/// (symmetric) or row (exterior), with at most n rows.
std::vector<Partition> pieri_summands(const Partition& lambda, int d,
                                      PieriKind kind, int n);

struct StripType {
    enum Kind {
        same_row,
        same_column,
        other_horizontal_strip,
        other_vertical_strip,
        not_a_strip,
        not_contained,
    } kind;
    /// 1-based row/column index for same_row/same_column; 0 for the
    /// degenerate equal-partition case.
    int index = 0;
    int boxes = 0;

    std::string to_string() const;
};

/// Classifies the skew shape mu/lambda.
StripType strip_type(const Partition& lambda, const Partition& mu);

/// (-w_n, ..., -w_1): the highest weight of the dual module.
Weight dual_weight(const Weight& w);
/// Adds k to every entry (determinant twist).
Weight twist(const Weight& w, int64_t k);
Partition twist(const Partition& p, int64_t k, int n);
/// (k, lambda_1, lambda_2, ...): prepends a long first row; requires
/// k >= lambda_1.
Partition lift(const Partition& lambda, int64_t k);

}  // namespace pierirank
