#include "pierirank/flatten.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace pierirank {

SparseIntMatrix build_flattening(const PieriTensor& t) {
    const int k = t.k, l = t.l;
    const int64_t side = static_cast<int64_t>(k) * l;
    if (side > 40'000'000)
        throw std::runtime_error("flattening side too large to assemble");
    SparseIntMatrix out(static_cast<int>(side), static_cast<int>(side));
    // row (s, m') = s*l + m', column (m, s') = m*k + s'
    std::unordered_map<int64_t, Int> acc;
    for (int a = 0; a < t.dim_u; ++a) {
        const auto& A = t.f1_slices[static_cast<size_t>(a)];   // k x l
        const auto& B = t.phi_slices[static_cast<size_t>(a)];  // l x k
        for (const auto& ea : A.entries()) {
            for (const auto& eb : B.entries()) {
                int64_t row = static_cast<int64_t>(ea.row) * l + eb.row;
                int64_t col = static_cast<int64_t>(ea.col) * k + eb.col;
                acc[row * side + col] += ea.value * eb.value;
            }
        }
    }
    for (auto& [key, v] : acc) {
        if (v == 0) continue;
        out.add(static_cast<int>(key / side), static_cast<int>(key % side), std::move(v));
    }
    out.finalize();
    return out;
}

bool full_rank_predicted(const StripType& strip, const UKind& u) {
    if (u.boxes() == 1)
        return strip.kind == StripType::same_row || strip.kind == StripType::same_column;
    if (strip.kind == StripType::same_row) return u.family != UKind::wedged;
    if (strip.kind == StripType::same_column) return u.family == UKind::wedged;
    return false;
}

FlatteningReport flattening_report(const Partition& lambda, const Partition& mu, const UKind& u,
                                   int n, RankMode mode, uint64_t seed,
                                   const CacheConfig* cache) {
    PieriTensor t = build_pieri_tensor(lambda, mu, u, n, cache);
    FlatteningReport rep;
    rep.lambda = lambda;
    rep.mu = mu;
    rep.u = u;
    rep.n = n;
    rep.k = t.k;
    rep.l = t.l;
    rep.matrix_size = Int(t.k) * Int(t.l);
    rep.strip = strip_type(lambda, mu);
    rep.theorem_applies = full_rank_predicted(rep.strip, u);

    SparseIntMatrix flat = build_flattening(t);
    rep.nnz = flat.nnz();
    {
        // combined content blocks, for the report
        auto sl = SchurModule::get(lambda, n);
        auto sm = SchurModule::get(mu, n);
        std::set<Weight> combined;
        for (const auto& cm : sm->weighted().content)
            for (const auto& cl : sl->weighted().content) {
                Weight w = cm;
                for (size_t q = 0; q < w.size(); ++q) w[q] += cl[q];
                combined.insert(std::move(w));
            }
        rep.weight_blocks = static_cast<int>(combined.size());
    }
    // a single prime suffices: full rank mod p certifies full rational rank
    rep.rank = mode == RankMode::exact ? rank_exact(flat) : rank_mod_p_random(flat, seed, 1);
    rep.is_isomorphism = Int(rep.rank.rank) == rep.matrix_size;
    rep.matches_prediction = !rep.theorem_applies || rep.is_isomorphism;
    return rep;
}

}  // namespace pierirank
