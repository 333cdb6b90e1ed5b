#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "pierirank/partition.hpp"
#include "pierirank/sparse_matrix.hpp"
#include "pierirank/tableau.hpp"

namespace pierirank {

/// A gl(n)-module presented by basis contents and Chevalley generator
/// matrices: e[i]/f[i] are the raising/lowering operators for i = 1..n-1
/// (stored at index i-1); h_i acts diagonally by content differences.
struct WeightedModule {
    int n = 0;
    int dim = 0;
    std::vector<Weight> content;                    // per basis vector
    std::map<Weight, std::vector<int>> blocks;      // content -> basis indices
    std::vector<SparseIntMatrix> e;
    std::vector<SparseIntMatrix> f;

    SparseIntMatrix h_matrix(int i) const;  // diagonal, for identity checks
    void build_blocks();
};

/// Leibniz-rule tensor product: generators act as x (x) 1 + 1 (x) x; basis
/// index (ia, ib) -> ia * b.dim + ib.
WeightedModule tensor_modules(const WeightedModule& a, const WeightedModule& b);
/// Dual module on the dual basis: generator matrices are negated transposes.
WeightedModule dual_module(const WeightedModule& m);

/// Explicit Schur module on the semistandard tableau basis (lex order on
/// row-reading words).  Generator actions are computed by entry replacement
/// on column tableaux followed by Garnir straightening.
class SchurModule {
public:
    SchurModule(Partition lambda, int n);

    const Partition& highest_weight() const { return lambda_; }
    int n() const { return module_.n; }
    int dim() const { return module_.dim; }
    const std::vector<Tableau>& basis() const { return basis_; }
    const WeightedModule& weighted() const { return module_; }
    /// Index of the canonical highest weight tableau (row i filled with i);
    /// -1 for the zero module.
    int hwv_index() const { return hwv_index_; }

    /// Expands an arbitrary column-strict filling in the semistandard basis.
    std::vector<std::pair<int, Int>> straighten(const ColumnTableau& ct) const;

    /// Process-wide memo cache (shared readers, serialized writers).
    static std::shared_ptr<const SchurModule> get(const Partition& lambda, int n);

private:
    void build();
    std::vector<std::pair<int, Int>> straighten_impl(const ColumnTableau& ct) const;
    Partition lambda_;
    std::vector<Tableau> basis_;
    std::map<std::vector<uint8_t>, int> index_of_;
    WeightedModule module_;
    int hwv_index_ = -1;
    mutable std::mutex straighten_mutex_;
    mutable std::map<std::string, std::vector<std::pair<int, Int>>> straighten_memo_;
};

/// Joint kernel of all e_i on the module restricted to one content block,
/// as primitive integer column vectors over the block's indices.
std::vector<std::vector<Int>> highest_weight_vectors(const WeightedModule& m,
                                                     const Weight& block_content);

/// The residual rho_tgt(x) f - f rho_src(x) for a generator (exactly zero for
/// an intertwiner).  `lowering` selects f_i over e_i.
SparseIntMatrix intertwiner_residual(const WeightedModule& src, const WeightedModule& tgt,
                                     const SparseIntMatrix& f, int generator, bool lowering);

}  // namespace pierirank
