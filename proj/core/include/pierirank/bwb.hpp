#pragma once

#include <optional>

#include "pierirank/partition.hpp"

namespace pierirank {

/// Cohomology of a twisted Schur bundle on the Grassmannian of hyperplanes:
/// either everything vanishes, or a single group survives in one degree.
struct BwbResult {
    bool vanishing = false;
    int degree = 0;   // length of the sorting permutation
    Weight weight;    // dominant weight of the surviving group

    bool operator==(const BwbResult&) const = default;
};

/// lambda has length n-1 and must be weakly decreasing (entries may be
/// negative); d is the twist.  Forms mu = (d, lambda) and runs the dotted
/// S_n straightening with rho = (n-1, ..., 0).
BwbResult bwb(const Weight& lambda, int64_t d, int n);

}  // namespace pierirank
