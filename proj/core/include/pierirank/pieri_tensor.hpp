#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pierirank/partition.hpp"
#include "pierirank/schur_module.hpp"
#include "pierirank/sparse_matrix.hpp"

namespace pierirank {

/// The auxiliary factor U: V itself, a symmetric power, or an exterior power.
struct UKind {
    enum Family { v, symd, wedged } family = v;
    int d = 1;

    static UKind V() { return {v, 1}; }
    static UKind Sym(int d) { return {symd, d}; }
    static UKind Wedge(int d) { return {wedged, d}; }
    static UKind parse(const std::string& s);

    PieriKind pieri_kind() const { return family == wedged ? PieriKind::exterior : PieriKind::symmetric; }
    int boxes() const { return family == v ? 1 : d; }
    Int dimension(int n) const;
    std::string to_string() const;
    bool operator==(const UKind&) const = default;
};

/// Basis-indexed realization of U with its generator matrices.  Basis order:
/// V: e_1..e_n; Sym^d: weakly increasing index tuples, lex; Wedge^d: strictly
/// increasing index tuples, lex.
WeightedModule u_module(const UKind& u, int n);

struct SolveOptions {
    /// Reverse the per-block generator sweep; the solution must agree up to
    /// global sign (multiplicity one).
    bool reverse_generators = false;
};

/// Unique-up-to-scalar equivariant map from `source` into `target`, with the
/// source highest weight sent to the joint e-kernel of the matching target
/// block.  Entries are primitive integers, first nonzero (column-major)
/// positive.  Throws when the kernel is not one-dimensional or a block
/// system is inconsistent.
SparseIntMatrix solve_intertwiner(const WeightedModule& source, const Weight& source_hw,
                                  const WeightedModule& target,
                                  const SolveOptions& opts = {});

/// The tensor of one Pieri pair: f1 embeds S_mu into S_lambda (x) U, f2
/// embeds S_lambda into S_mu (x) U^*, and phi(u) = sum u_a M_a maps
/// S_lambda -> S_mu on the monomial basis of U.
struct PieriTensor {
    Partition lambda, mu;
    UKind u;
    int n = 0;
    int k = 0;      // dim S_lambda
    int l = 0;      // dim S_mu
    int dim_u = 0;

    SparseIntMatrix f1;  // (k * dim_u) x l, row index a*dim_u + alpha
    SparseIntMatrix f2;  // (l * dim_u) x k, row index b*dim_u + alpha
    std::vector<SparseIntMatrix> f1_slices;   // A_alpha: k x l
    std::vector<SparseIntMatrix> phi_slices;  // M_alpha: l x k (slices of f2)
    std::string scale_note;

    SparseIntMatrix phi_at(const std::vector<Int>& u_coeffs) const;
};

struct CacheConfig;  // see cache.hpp

/// Requires mu to be a Pieri summand of lambda for the given U.  When a cache
/// is supplied, f1/f2 are reused from disk if the manifest checks out.
PieriTensor build_pieri_tensor(const Partition& lambda, const Partition& mu, const UKind& u,
                               int n, const CacheConfig* cache = nullptr,
                               const SolveOptions& opts = {});

/// The partner intertwiner f2 (already part of the build).
inline const SparseIntMatrix& dual_pieri(const PieriTensor& t) { return t.f2; }

/// Current basis-order version; bumped whenever the tableau order or the
/// monomial order changes, so cached matrices are never misread.
inline constexpr int kBasisVersion = 1;

}  // namespace pierirank
