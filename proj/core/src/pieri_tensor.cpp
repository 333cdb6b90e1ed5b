#include "pierirank/pieri_tensor.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "pierirank/cache.hpp"
#include "ratmat.hpp"

namespace pierirank {

UKind UKind::parse(const std::string& s) {
    if (s == "v" || s == "V") return V();
    if (s == "sym2") return Sym(2);
    if (s == "wedge2") return Wedge(2);
    if (s.rfind("symd:", 0) == 0) return Sym(std::stoi(s.substr(5)));
    if (s.rfind("wedged:", 0) == 0) return Wedge(std::stoi(s.substr(7)));
    throw std::invalid_argument("unknown U kind: " + s +
                                " (expected v, sym2, wedge2, symd:D, wedged:D)");
}

Int UKind::dimension(int n) const {
    if (family == v) return n;
    Int num = 1, den = 1;
    for (int i = 0; i < d; ++i) {
        num *= family == symd ? Int(n + d - 1 - i) : Int(n - i);
        den *= Int(i + 1);
    }
    return divexact(num, den);
}

std::string UKind::to_string() const {
    switch (family) {
        case v: return "v";
        case symd: return d == 2 ? "sym2" : "symd:" + std::to_string(d);
        case wedged: return d == 2 ? "wedge2" : "wedged:" + std::to_string(d);
    }
    return "?";
}

WeightedModule u_module(const UKind& u, int n) {
    WeightedModule m;
    m.n = n;
    // basis tuples
    std::vector<std::vector<int>> tuples;
    const int d = u.family == UKind::v ? 1 : u.d;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(cur.size()) == d) {
            tuples.push_back(cur);
            return;
        }
        for (int x = lo; x <= n; ++x) {
            cur.push_back(x);
            rec(u.family == UKind::wedged ? x + 1 : x);
            cur.pop_back();
        }
    };
    rec(1);
    if (u.family == UKind::wedged && d > n) tuples.clear();
    m.dim = static_cast<int>(tuples.size());
    std::map<std::vector<int>, int> index_of;
    for (int i = 0; i < m.dim; ++i) {
        index_of[tuples[static_cast<size_t>(i)]] = i;
        Weight c(static_cast<size_t>(n), 0);
        for (int x : tuples[static_cast<size_t>(i)]) c[static_cast<size_t>(x - 1)]++;
        m.content.push_back(std::move(c));
    }
    m.e.assign(static_cast<size_t>(std::max(0, n - 1)), SparseIntMatrix());
    m.f.assign(static_cast<size_t>(std::max(0, n - 1)), SparseIntMatrix());
    for (int g = 1; g < n; ++g) {
        SparseIntMatrix& em = m.e[static_cast<size_t>(g - 1)];
        SparseIntMatrix& fm = m.f[static_cast<size_t>(g - 1)];
        em.set_shape(m.dim, m.dim);
        fm.set_shape(m.dim, m.dim);
        for (int i = 0; i < m.dim; ++i) {
            const auto& tup = tuples[static_cast<size_t>(i)];
            for (int dir = 0; dir < 2; ++dir) {
                int from = dir == 0 ? g + 1 : g;
                int to = dir == 0 ? g : g + 1;
                for (size_t slot = 0; slot < tup.size(); ++slot) {
                    if (tup[slot] != from) continue;
                    std::vector<int> moved = tup;
                    moved[slot] = to;
                    if (u.family == UKind::wedged) {
                        if (std::count(moved.begin(), moved.end(), to) > 1) continue;
                        std::sort(moved.begin(), moved.end());
                        // adjacent value swap never reorders a strict tuple
                    } else {
                        std::sort(moved.begin(), moved.end());
                    }
                    int idx = index_of.at(moved);
                    if (dir == 0)
                        em.add(idx, i, 1);
                    else
                        fm.add(idx, i, 1);
                }
            }
        }
        em.finalize();
        fm.finalize();
    }
    m.build_blocks();
    return m;
}

namespace {

std::vector<Rat> sparse_matvec(const SparseIntMatrix& m, const std::vector<Rat>& x) {
    std::vector<Rat> y(static_cast<size_t>(m.rows()), Rat(0));
    for (const auto& e : m.entries())
        y[static_cast<size_t>(e.row)] += Rat(e.value) * x[static_cast<size_t>(e.col)];
    return y;
}

}  // namespace

SparseIntMatrix solve_intertwiner(const WeightedModule& source, const Weight& source_hw,
                                  const WeightedModule& target, const SolveOptions& opts) {
    if (source.n != target.n) throw std::invalid_argument("modules over different gl(n)");
    const int n = source.n;

    auto hw_block_it = source.blocks.find(source_hw);
    if (hw_block_it == source.blocks.end() || hw_block_it->second.size() != 1)
        throw std::runtime_error("source highest weight block is not one-dimensional");
    const int source_hwv = hw_block_it->second[0];

    auto kernel = highest_weight_vectors(target, source_hw);
    if (kernel.size() != 1)
        throw std::runtime_error(
            "multiplicity error: joint raising kernel has dimension " +
            std::to_string(kernel.size()) + " (expected 1)");
    auto tit = target.blocks.find(source_hw);
    const std::vector<int>& hw_tblock = tit->second;

    // dense columns of the solution, filled block by block
    std::vector<std::vector<Rat>> img(static_cast<size_t>(source.dim));
    std::vector<char> solved(static_cast<size_t>(source.dim), 0);
    {
        std::vector<Rat> col(static_cast<size_t>(target.dim), Rat(0));
        for (size_t t = 0; t < hw_tblock.size(); ++t)
            col[static_cast<size_t>(hw_tblock[t])] = Rat(kernel[0][t]);
        img[static_cast<size_t>(source_hwv)] = std::move(col);
        solved[static_cast<size_t>(source_hwv)] = 1;
    }

    // process source blocks in lexicographically decreasing content order;
    // lowering by f_i always moves strictly down in this order
    std::vector<const std::pair<const Weight, std::vector<int>>*> order;
    for (const auto& kv : source.blocks) order.push_back(&kv);
    std::sort(order.begin(), order.end(),
              [](const auto* a, const auto* b) { return a->first > b->first; });

    std::vector<int> gens;
    for (int g = 1; g < n; ++g) gens.push_back(g);
    if (opts.reverse_generators) std::reverse(gens.begin(), gens.end());

    for (const auto* kv : order) {
        const Weight& w = kv->first;
        const std::vector<int>& block = kv->second;
        if (w == source_hw) continue;
        std::vector<int> col_of(static_cast<size_t>(source.dim), -1);
        for (size_t c = 0; c < block.size(); ++c)
            col_of[static_cast<size_t>(block[c])] = static_cast<int>(c);

        // gather propagation pairs (v, y): v = f_g applied to a solved basis
        // vector restricted to this block, y = its image
        std::vector<std::vector<Rat>> vs, ys;
        for (int g : gens) {
            Weight up = w;
            up[static_cast<size_t>(g - 1)] += 1;
            up[static_cast<size_t>(g)] -= 1;
            auto uit = source.blocks.find(up);
            if (uit == source.blocks.end()) continue;
            const SparseIntMatrix& fs = source.f[static_cast<size_t>(g - 1)];
            const SparseIntMatrix& ft = target.f[static_cast<size_t>(g - 1)];
            // column access: entries of f_g in the solved columns
            for (int j : uit->second) {
                if (!solved[static_cast<size_t>(j)])
                    throw std::logic_error("propagation order violated");
                std::vector<Rat> v(block.size(), Rat(0));
                bool nonzero = false;
                for (const auto& e : fs.entries()) {
                    if (e.col != j) continue;
                    int c = col_of[static_cast<size_t>(e.row)];
                    if (c < 0) continue;  // entry escapes the block; cannot happen
                    v[static_cast<size_t>(c)] = Rat(e.value);
                    nonzero = true;
                }
                if (!nonzero) continue;
                vs.push_back(std::move(v));
                ys.push_back(sparse_matvec(ft, img[static_cast<size_t>(j)]));
            }
        }

        // select a spanning subset of the v's by incremental row reduction,
        // one echelon row per leading column
        const size_t bdim = block.size();
        std::vector<size_t> chosen;
        std::map<size_t, std::vector<Rat>> echelon;  // leading column -> row
        for (size_t t = 0; t < vs.size() && chosen.size() < bdim; ++t) {
            std::vector<Rat> v = vs[t];
            for (size_t col = 0; col < bdim; ++col) {
                if (v[col] == 0) continue;
                auto it = echelon.find(col);
                if (it == echelon.end()) {
                    echelon.emplace(col, std::move(v));
                    chosen.push_back(t);
                    break;
                }
                Rat f = v[col] / it->second[col];
                for (size_t q = col; q < bdim; ++q) v[q] -= f * it->second[q];
            }
        }
        if (chosen.size() != bdim)
            throw std::runtime_error("internal-consistency error: block of dim " +
                                     std::to_string(bdim) + " not spanned by lowering images");

        // solve X * V_B = Y_B with V_B invertible bdim x bdim
        detail::RatMat aug(bdim, std::vector<Rat>(2 * bdim, Rat(0)));
        for (size_t c = 0; c < bdim; ++c) {
            for (size_t r = 0; r < bdim; ++r) aug[r][c] = vs[chosen[c]][r];
            aug[c][bdim + c] = 1;
        }
        if (detail::row_reduce(aug).size() != bdim)
            throw std::logic_error("selected propagation columns are singular");
        // aug now holds [I | V_B^{-1}]
        for (size_t r = 0; r < bdim; ++r) {
            std::vector<Rat> col(static_cast<size_t>(target.dim), Rat(0));
            // img[block[r]] = sum_c Y_B[., c] * inv[c][r]
            for (size_t c = 0; c < bdim; ++c) {
                const Rat& w8 = aug[c][bdim + r];
                if (w8 == 0) continue;
                const std::vector<Rat>& y = ys[chosen[c]];
                for (size_t q = 0; q < col.size(); ++q) col[q] += w8 * y[q];
            }
            img[static_cast<size_t>(block[r])] = std::move(col);
            solved[static_cast<size_t>(block[r])] = 1;
        }

        // consistency: every unchosen pair must match
        for (size_t t = 0; t < vs.size(); ++t) {
            if (std::find(chosen.begin(), chosen.end(), t) != chosen.end()) continue;
            std::vector<Rat> pred(static_cast<size_t>(target.dim), Rat(0));
            for (size_t r = 0; r < bdim; ++r) {
                const Rat& coef = vs[t][r];
                if (coef == 0) continue;
                const auto& col = img[static_cast<size_t>(block[r])];
                for (size_t q = 0; q < pred.size(); ++q) pred[q] += coef * col[q];
            }
            if (pred != ys[t])
                throw std::runtime_error("internal-consistency error: redundant lowering images disagree");
        }
    }

    for (int j = 0; j < source.dim; ++j)
        if (!solved[static_cast<size_t>(j)])
            throw std::logic_error("unsolved source basis vector");

    // global primitive integer normalization, first nonzero (column-major) positive
    Int den = 1;
    for (const auto& col : img)
        for (const auto& x : col) den = lcm(den, Int(x.get_den()));
    Int g = 0;
    std::vector<std::vector<Int>> icols(img.size());
    for (size_t j = 0; j < img.size(); ++j) {
        icols[j].resize(img[j].size());
        for (size_t i = 0; i < img[j].size(); ++i) {
            Rat scaled = img[j][i] * Rat(den);
            scaled.canonicalize();
            icols[j][i] = scaled.get_num();
            g = gcd(g, icols[j][i]);
        }
    }
    if (g == 0) throw std::logic_error("zero intertwiner");
    int sign = 0;
    for (size_t j = 0; j < icols.size() && sign == 0; ++j)
        for (size_t i = 0; i < icols[j].size() && sign == 0; ++i)
            if (icols[j][i] != 0) sign = icols[j][i] > 0 ? 1 : -1;
    if (sign < 0) g = -g;

    SparseIntMatrix out(target.dim, source.dim);
    for (size_t j = 0; j < icols.size(); ++j)
        for (size_t i = 0; i < icols[j].size(); ++i)
            if (icols[j][i] != 0)
                out.add(static_cast<int>(i), static_cast<int>(j), divexact(icols[j][i], g));
    out.finalize();
    return out;
}

namespace {

std::vector<SparseIntMatrix> reslice(const SparseIntMatrix& stacked, int outer_dim, int dim_u) {
    // stacked row index = a * dim_u + alpha
    std::vector<SparseIntMatrix> slices(static_cast<size_t>(dim_u));
    for (auto& s : slices) s.set_shape(outer_dim, stacked.cols());
    for (const auto& e : stacked.entries())
        slices[static_cast<size_t>(e.row % dim_u)].add(e.row / dim_u, e.col, e.value);
    for (auto& s : slices) s.finalize();
    return slices;
}

}  // namespace

SparseIntMatrix PieriTensor::phi_at(const std::vector<Int>& u_coeffs) const {
    if (static_cast<int>(u_coeffs.size()) != dim_u)
        throw std::invalid_argument("phi_at expects dim U coefficients");
    SparseIntMatrix out(l, k);
    for (int a = 0; a < dim_u; ++a) {
        if (u_coeffs[static_cast<size_t>(a)] == 0) continue;
        for (const auto& e : phi_slices[static_cast<size_t>(a)].entries())
            out.add(e.row, e.col, e.value * u_coeffs[static_cast<size_t>(a)]);
    }
    out.finalize();
    return out;
}

PieriTensor build_pieri_tensor(const Partition& lambda, const Partition& mu, const UKind& u,
                               int n, const CacheConfig* cache, const SolveOptions& opts) {
    auto summands = pieri_summands(lambda, u.boxes(), u.pieri_kind(), n);
    if (std::find(summands.begin(), summands.end(), mu) == summands.end())
        throw std::invalid_argument("multiplicity error: " + mu.to_string() +
                                    " is not a Pieri summand of " + lambda.to_string() +
                                    " for U = " + u.to_string());

    PieriTensor t;
    t.lambda = lambda;
    t.mu = mu;
    t.u = u;
    t.n = n;
    Int du = u.dimension(n);
    t.dim_u = static_cast<int>(du.get_si());

    auto sl = SchurModule::get(lambda, n);
    auto sm = SchurModule::get(mu, n);
    t.k = sl->dim();
    t.l = sm->dim();

    bool loaded = false;
    if (cache != nullptr) loaded = cache_try_load(*cache, t);
    if (!loaded) {
        WeightedModule um = u_module(u, n);
        WeightedModule target1 = tensor_modules(sl->weighted(), um);
        t.f1 = solve_intertwiner(sm->weighted(), mu.padded(n), target1, opts);

        WeightedModule um_dual = dual_module(um);
        WeightedModule target2 = tensor_modules(sm->weighted(), um_dual);
        t.f2 = solve_intertwiner(sl->weighted(), lambda.padded(n), target2, opts);
        if (cache != nullptr) cache_store(*cache, t);
    }

    t.f1_slices = reslice(t.f1, t.k, t.dim_u);
    t.phi_slices = reslice(t.f2, t.l, t.dim_u);
    t.scale_note = "primitive integer entries, first nonzero entry positive (column-major)";
    return t;
}

}  // namespace pierirank
