#pragma once

#include <optional>
#include <string>

#include "pierirank/pieri_tensor.hpp"
#include "pierirank/rank.hpp"

namespace pierirank {

/// Contraction of f1 (x) f2 over U: maps S_mu (x) S_lambda to
/// S_lambda (x) S_mu by x (x) y -> sum_a A_a x (x) M_a y.  Square of side
/// k*l, weight-block diagonal in the combined torus grading.
SparseIntMatrix build_flattening(const PieriTensor& t);

enum class RankMode { modp, exact };

struct FlatteningReport {
    Partition lambda, mu;
    UKind u;
    int n = 0;
    int k = 0, l = 0;
    Int matrix_size;  // k*l
    size_t nnz = 0;
    int weight_blocks = 0;
    RankCertificate rank;
    bool is_isomorphism = false;
    StripType strip;
    /// Whether the strip shape falls under the full-rank theorem (same row
    /// with Sym^d, same column with Wedge^d, or a single box).
    bool theorem_applies = false;
    bool matches_prediction = true;
};

/// Builds the tensor (cache-aware), assembles the flattening, and measures
/// its rank.  Seed feeds the random prime choice in mod-p mode.
FlatteningReport flattening_report(const Partition& lambda, const Partition& mu, const UKind& u,
                                   int n, RankMode mode, uint64_t seed,
                                   const CacheConfig* cache = nullptr);

/// Full-rank prediction for a strip classification under the given U.
bool full_rank_predicted(const StripType& strip, const UKind& u);

}  // namespace pierirank
