#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pierirank/sparse_matrix.hpp"

namespace pierirank {

struct RankCertificate {
    enum class Mode { mod_p_probable, exact_certified };

    int rank = 0;
    Mode mode = Mode::exact_certified;
    std::vector<uint64_t> primes;  // empty in exact mode
    /// Per-prime ranks (mod_p mode); rank above is their max.
    std::vector<int> prime_ranks;
    bool small_prime_warning = false;
    double elapsed_ms = 0.0;
    long pivots = 0;

    std::string mode_string() const {
        return mode == Mode::mod_p_probable ? "mod_p_probable" : "exact_certified";
    }
};

/// Rank over GF(p) for each prime, reported as the max (a lower bound on the
/// rational rank).  Throws std::invalid_argument on a composite "prime".
RankCertificate rank_mod_p(const SparseIntMatrix& m, const std::vector<uint64_t>& primes);

/// Two random 62-bit primes drawn from the seeded generator.
RankCertificate rank_mod_p_random(const SparseIntMatrix& m, uint64_t seed, int num_primes = 2);

struct ExactRankOptions {
    /// Refuse dense fraction-free elimination on any connected block with
    /// more than this many cells.
    long max_block_cells = 4'000'000;
};

/// Certified rational rank by fraction-free (Bareiss) elimination, performed
/// per connected block.  Throws std::runtime_error with a mod-p suggestion
/// when a block exceeds the memory budget.
RankCertificate rank_exact(const SparseIntMatrix& m, const ExactRankOptions& opts = {});

}  // namespace pierirank
