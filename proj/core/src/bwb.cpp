#include "pierirank/bwb.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pierirank {

BwbResult bwb(const Weight& lambda, int64_t d, int n) {
    if (n <= 0) throw std::invalid_argument("n must be positive");
    if (static_cast<int>(lambda.size()) != n - 1)
        throw std::invalid_argument("lambda must have length n-1");
    for (size_t i = 0; i + 1 < lambda.size(); ++i)
        if (lambda[i] < lambda[i + 1])
            throw std::invalid_argument("lambda must be weakly decreasing");

    Weight mu;
    mu.reserve(static_cast<size_t>(n));
    mu.push_back(d);
    mu.insert(mu.end(), lambda.begin(), lambda.end());

    Weight shifted(mu.size());
    for (int i = 0; i < n; ++i) shifted[static_cast<size_t>(i)] = mu[static_cast<size_t>(i)] + (n - 1 - i);

    std::set<int64_t> dedup(shifted.begin(), shifted.end());
    if (static_cast<int>(dedup.size()) < n) return {true, 0, {}};

    int inversions = 0;
    for (size_t i = 0; i < shifted.size(); ++i)
        for (size_t j = i + 1; j < shifted.size(); ++j)
            if (shifted[i] < shifted[j]) ++inversions;

    Weight sorted = shifted;
    std::sort(sorted.rbegin(), sorted.rend());
    for (int i = 0; i < n; ++i) sorted[static_cast<size_t>(i)] -= (n - 1 - i);
    return {false, inversions, sorted};
}

}  // namespace pierirank
