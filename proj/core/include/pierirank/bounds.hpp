#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pierirank/flatten.hpp"
#include "pierirank/pieri_tensor.hpp"
#include "pierirank/rank.hpp"

namespace pierirank {

struct ProbeResult {
    int trials = 0;
    uint64_t seed = 0;
    int64_t coefficient_bound = 0;
    std::vector<int> ranks;  // per trial
    int max_rank = 0;
    bool constant = true;    // all nonzero samples agree
    std::string rank_mode;   // exact_certified or mod_p_probable
};

/// Samples u with independent uniform integer coefficients in [-B, B] and
/// measures rank phi(u).  Exact fraction-free elimination when
/// max(k,l) <= 200, otherwise two random 62-bit primes.
ProbeResult generic_rank_probe(const PieriTensor& t, int trials, uint64_t seed,
                               int64_t bound = 1'000'000);

enum class FamilyVerdict { certified_not_minimal, outside_known_families };

struct ConstraintReport {
    FamilyVerdict verdict = FamilyVerdict::outside_known_families;
    std::string family;      // which hypothesis applies ("v-row-k", "sym2-row2", "wedge2-col23")
    std::string detail;      // human-readable condition evaluation
    bool strip_ok = false;   // the box pattern matches the family
    bool numeric_ok = false; // the mu-inequality (d=2) or row condition (d=1)
    bool dim_ok = true;      // dim S_lambda <= dim S_mu where required
};

ConstraintReport check_family_constraint(const Partition& lambda, const Partition& mu,
                                         const UKind& u, int n);

/// The closed-form generic-rank constants.  Auxiliary sequences are built
/// literally; a sequence contributes dimension zero when its nonzero parts
/// exceed n.  For U = V both the lambda- and mu-routes are reported along
/// with the alternative reading (any sequence longer than n entries counts
/// as zero), which differs only at the k = 2 / k = n-1 boundary.
struct CFormula {
    bool applicable = false;
    std::string family;
    // d = 2 case
    std::vector<int64_t> alpha_prime, alpha;
    // U = V case
    std::vector<int64_t> lambda_prime, lambda_second, mu_prime, mu_second;
    std::optional<Int> c;            // d = 2
    std::optional<Int> c1, c2;       // U = V, nonzero-parts convention
    std::optional<Int> c1_alt, c2_alt;  // U = V, length convention
    std::optional<Int> r_predicted;  // canonical prediction (see notes)
    bool routes_agree = true;
    std::string notes;
};

CFormula c_constant(const Partition& lambda, const Partition& mu, const UKind& u, int n);

enum class RankSource { theorem_c, oracle, both };

struct BoundReport {
    Partition lambda, mu;
    UKind u;
    int n = 0;
    Int dim_u, k, l;
    ConstraintReport constraint;
    CFormula c_formula;
    std::optional<ProbeResult> probe;
    Int flattening_rank;
    bool flattening_measured = false;  // false: full rank by the strip theorem
    std::optional<Int> r_oracle;
    std::optional<Int> r_theorem;
    bool r_disagreement = false;
    Int r_used;
    Int lower_bound;
    bool exceeds_trivial = false;  // bound > max(dim U, k, l)
};

BoundReport border_rank_bound(const Partition& lambda, const Partition& mu, const UKind& u,
                              int n, RankSource source, int trials = 5, uint64_t seed = 42,
                              const CacheConfig* cache = nullptr);

struct Table1Row {
    int index = 0;
    UKind u;
    Partition lambda, mu;
    int n = 0;
    // printed values
    Int paper_dim_u, paper_k, paper_l, paper_bound;
    // computed values
    Int dim_u, k, l;
    Int r_oracle, r_theorem;
    Int bound;
    bool dims_match = false;
    bool bound_matches = false;
    bool r_consistent = false;  // oracle vs c-formula
    std::string note;
};

/// Reproduces the six published example rows end to end; discrepancies are
/// flagged, never corrected.
std::vector<Table1Row> table1(int trials = 5, uint64_t seed = 42,
                              const CacheConfig* cache = nullptr);

}  // namespace pierirank
