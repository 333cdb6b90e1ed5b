#include "pierirank/schur_module.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "ratmat.hpp"

namespace pierirank {

SparseIntMatrix WeightedModule::h_matrix(int i) const {
    if (i < 1 || i >= n) throw std::out_of_range("h index out of range");
    SparseIntMatrix m(dim, dim);
    for (int b = 0; b < dim; ++b) {
        int64_t v = content[static_cast<size_t>(b)][static_cast<size_t>(i - 1)] -
                    content[static_cast<size_t>(b)][static_cast<size_t>(i)];
        if (v != 0) m.add(b, b, Int(v));
    }
    m.finalize();
    return m;
}

void WeightedModule::build_blocks() {
    blocks.clear();
    for (int b = 0; b < dim; ++b) blocks[content[static_cast<size_t>(b)]].push_back(b);
}

WeightedModule tensor_modules(const WeightedModule& a, const WeightedModule& b) {
    if (a.n != b.n) throw std::invalid_argument("tensor factors over different gl(n)");
    WeightedModule t;
    t.n = a.n;
    t.dim = a.dim * b.dim;
    t.content.resize(static_cast<size_t>(t.dim));
    for (int ia = 0; ia < a.dim; ++ia) {
        for (int ib = 0; ib < b.dim; ++ib) {
            Weight c = a.content[static_cast<size_t>(ia)];
            const Weight& cb = b.content[static_cast<size_t>(ib)];
            for (size_t q = 0; q < c.size(); ++q) c[q] += cb[q];
            t.content[static_cast<size_t>(ia * b.dim + ib)] = std::move(c);
        }
    }
    t.e.resize(a.e.size());
    t.f.resize(a.f.size());
    for (size_t g = 0; g < a.e.size(); ++g) {
        for (int part = 0; part < 2; ++part) {
            const SparseIntMatrix& ma = part == 0 ? a.e[g] : a.f[g];
            const SparseIntMatrix& mb = part == 0 ? b.e[g] : b.f[g];
            SparseIntMatrix& mt = part == 0 ? t.e[g] : t.f[g];
            mt.set_shape(t.dim, t.dim);
            for (const auto& en : ma.entries())
                for (int ib = 0; ib < b.dim; ++ib)
                    mt.add(en.row * b.dim + ib, en.col * b.dim + ib, en.value);
            for (const auto& en : mb.entries())
                for (int ia = 0; ia < a.dim; ++ia)
                    mt.add(ia * b.dim + en.row, ia * b.dim + en.col, en.value);
            mt.finalize();
        }
    }
    t.build_blocks();
    return t;
}

WeightedModule dual_module(const WeightedModule& m) {
    WeightedModule d;
    d.n = m.n;
    d.dim = m.dim;
    d.content.resize(static_cast<size_t>(d.dim));
    for (int b = 0; b < d.dim; ++b) {
        Weight c = m.content[static_cast<size_t>(b)];
        for (auto& x : c) x = -x;
        d.content[static_cast<size_t>(b)] = std::move(c);
    }
    auto neg_transpose = [](const SparseIntMatrix& a) {
        SparseIntMatrix t(a.cols(), a.rows());
        for (const auto& e : a.entries()) t.add(e.col, e.row, -e.value);
        t.finalize();
        return t;
    };
    for (const auto& em : m.e) d.e.push_back(neg_transpose(em));
    for (const auto& fm : m.f) d.f.push_back(neg_transpose(fm));
    d.build_blocks();
    return d;
}

namespace {

struct GarnirTerm {
    ColumnTableau ct;
    int sign;
};

/// Merges two sorted runs into one strictly increasing column; returns false
/// on a repeated value.  sign picks up one factor -1 per crossing.
bool merge_column(const Column& upper, const Column& lower, Column& out, int& sign) {
    out.clear();
    size_t i = 0, j = 0;
    int crossings = 0;
    while (i < upper.size() || j < lower.size()) {
        if (j == lower.size() || (i < upper.size() && upper[i] < lower[j])) {
            out.push_back(upper[i++]);
        } else if (i == upper.size() || lower[j] < upper[i]) {
            crossings += static_cast<int>(upper.size() - i);
            out.push_back(lower[j++]);
        } else {
            return false;  // equal entries in one column
        }
    }
    if (crossings % 2) sign = -sign;
    return true;
}

int permutation_sign_by_positions(const std::vector<int>& positions) {
    int inv = 0;
    for (size_t i = 0; i < positions.size(); ++i)
        for (size_t j = i + 1; j < positions.size(); ++j)
            if (positions[i] > positions[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

/// Expands the Garnir relation at the violation (row r, columns j, j+1),
/// 0-based, returning the equivalent combination of higher terms.
std::vector<GarnirTerm> garnir_expand(const ColumnTableau& ct, size_t j, size_t r) {
    const Column& left = ct[j];
    const Column& right = ct[j + 1];
    std::vector<uint8_t> a_vals(left.begin() + static_cast<long>(r), left.end());
    std::vector<uint8_t> b_vals(right.begin(), right.begin() + static_cast<long>(r) + 1);
    std::vector<uint8_t> x_vals;  // all of B < all of A, so B then A is sorted
    x_vals.insert(x_vals.end(), b_vals.begin(), b_vals.end());
    x_vals.insert(x_vals.end(), a_vals.begin(), a_vals.end());
    const size_t total = x_vals.size();
    const size_t pick = b_vals.size();

    // source order: A then B
    std::vector<int> source_pos(total);
    for (size_t t = 0; t < total; ++t)
        source_pos[t] = t < pick ? static_cast<int>(a_vals.size() + t) : static_cast<int>(t - pick);
    // source_pos[x index] = position of x_vals[t] in the (A,B) concatenation:
    // x-order is B (indices 0..pick-1) then A.

    std::vector<GarnirTerm> out;
    std::vector<size_t> comb(pick);
    for (size_t t = 0; t < pick; ++t) comb[t] = t;  // subset of x indices going right

    auto emit = [&]() {
        // skip the identity split (right gets exactly B)
        bool identity = true;
        for (size_t t = 0; t < pick; ++t)
            if (comb[t] != t) { identity = false; break; }
        if (identity) return;

        std::vector<char> to_right(total, 0);
        for (size_t t : comb) to_right[t] = 1;
        std::vector<uint8_t> new_bottom, new_top;
        std::vector<int> perm;
        perm.reserve(total);
        for (size_t t = 0; t < total; ++t)
            if (!to_right[t]) {
                new_bottom.push_back(x_vals[t]);
                perm.push_back(source_pos[t]);
            }
        for (size_t t = 0; t < total; ++t)
            if (to_right[t]) {
                new_top.push_back(x_vals[t]);
                perm.push_back(source_pos[t]);
            }
        int sign = permutation_sign_by_positions(perm);

        Column upper_left(left.begin(), left.begin() + static_cast<long>(r));
        Column lower_right(right.begin() + static_cast<long>(r) + 1, right.end());
        GarnirTerm term;
        term.ct = ct;
        if (!merge_column(upper_left, new_bottom, term.ct[j], sign)) return;
        if (!merge_column(new_top, lower_right, term.ct[j + 1], sign)) return;
        term.sign = sign;
        out.push_back(std::move(term));
    };

    // enumerate size-`pick` subsets of {0..total-1}
    for (;;) {
        emit();
        // next combination
        size_t t = pick;
        while (t > 0) {
            --t;
            if (comb[t] != t + total - pick) {
                ++comb[t];
                for (size_t q = t + 1; q < pick; ++q) comb[q] = comb[q - 1] + 1;
                break;
            }
            if (t == 0) return out;
        }
        if (pick == 0) return out;
    }
}

/// Finds the leftmost column pair with a row violation; returns (col, row)
/// 0-based, or col = -1 when column-strict semistandard.
std::pair<int, int> find_violation(const ColumnTableau& ct) {
    for (size_t j = 0; j + 1 < ct.size(); ++j) {
        for (size_t r = 0; r < ct[j + 1].size(); ++r) {
            if (ct[j][r] > ct[j + 1][r]) return {static_cast<int>(j), static_cast<int>(r)};
        }
    }
    return {-1, -1};
}

}  // namespace

SchurModule::SchurModule(Partition lambda, int n) : lambda_(std::move(lambda)) {
    module_.n = n;
    build();
}

std::vector<std::pair<int, Int>> SchurModule::straighten(const ColumnTableau& ct) const {
    std::lock_guard<std::mutex> lock(straighten_mutex_);
    return straighten_impl(ct);
}

std::vector<std::pair<int, Int>> SchurModule::straighten_impl(const ColumnTableau& ct) const {
    std::string key = encode_columns(ct);
    auto hit = straighten_memo_.find(key);
    if (hit != straighten_memo_.end()) return hit->second;

    std::vector<std::pair<int, Int>> result;
    auto [j, r] = find_violation(ct);
    if (j < 0) {
        Tableau t = from_columns(lambda_, ct);
        auto it = index_of_.find(t.row_word());
        if (it == index_of_.end())
            throw std::logic_error("straightened tableau missing from basis");
        result.emplace_back(it->second, Int(1));
    } else {
        std::map<int, Int> acc;
        for (const auto& term : garnir_expand(ct, static_cast<size_t>(j), static_cast<size_t>(r))) {
            auto sub = straighten_impl(term.ct);
            for (const auto& [idx, coeff] : sub) acc[idx] += Int(-term.sign) * coeff;
        }
        for (auto& [idx, coeff] : acc)
            if (coeff != 0) result.emplace_back(idx, std::move(coeff));
    }
    straighten_memo_.emplace(std::move(key), result);
    return result;
}

void SchurModule::build() {
    const int n = module_.n;
    basis_ = enumerate_ssyt(lambda_, n);
    module_.dim = static_cast<int>(basis_.size());
    for (int i = 0; i < module_.dim; ++i) {
        index_of_[basis_[static_cast<size_t>(i)].row_word()] = i;
        module_.content.push_back(basis_[static_cast<size_t>(i)].content(n));
    }
    module_.build_blocks();

    // canonical highest weight tableau: row i filled with value i
    if (module_.dim > 0) {
        Tableau hw;
        hw.shape = lambda_;
        for (int i = 1; i <= lambda_.length(); ++i)
            for (int64_t c = 0; c < lambda_.part(i); ++c)
                hw.entries.push_back(static_cast<uint8_t>(i));
        auto it = index_of_.find(hw.row_word());
        hwv_index_ = it == index_of_.end() ? -1 : it->second;
    }

    module_.e.assign(static_cast<size_t>(std::max(0, n - 1)), SparseIntMatrix());
    module_.f.assign(static_cast<size_t>(std::max(0, n - 1)), SparseIntMatrix());
    for (int g = 1; g < n; ++g) {
        SparseIntMatrix& em = module_.e[static_cast<size_t>(g - 1)];
        SparseIntMatrix& fm = module_.f[static_cast<size_t>(g - 1)];
        em.set_shape(module_.dim, module_.dim);
        fm.set_shape(module_.dim, module_.dim);
        for (int m = 0; m < module_.dim; ++m) {
            ColumnTableau ct = to_columns(basis_[static_cast<size_t>(m)]);
            for (int dir = 0; dir < 2; ++dir) {
                uint8_t from = dir == 0 ? static_cast<uint8_t>(g + 1) : static_cast<uint8_t>(g);
                uint8_t to = dir == 0 ? static_cast<uint8_t>(g) : static_cast<uint8_t>(g + 1);
                for (size_t c = 0; c < ct.size(); ++c) {
                    auto pos = std::find(ct[c].begin(), ct[c].end(), from);
                    if (pos == ct[c].end()) continue;
                    if (std::find(ct[c].begin(), ct[c].end(), to) != ct[c].end()) continue;
                    ColumnTableau moved = ct;
                    moved[c][static_cast<size_t>(pos - ct[c].begin())] = to;
                    std::sort(moved[c].begin(), moved[c].end());
                    for (const auto& [idx, coeff] : straighten(moved)) {
                        if (dir == 0)
                            em.add(idx, m, coeff);
                        else
                            fm.add(idx, m, coeff);
                    }
                }
            }
        }
        em.finalize();
        fm.finalize();
    }
}

std::shared_ptr<const SchurModule> SchurModule::get(const Partition& lambda, int n) {
    static std::shared_mutex mutex;
    static std::map<std::pair<std::vector<int64_t>, int>, std::shared_ptr<const SchurModule>> cache;
    auto key = std::make_pair(lambda.parts(), n);
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto built = std::make_shared<const SchurModule>(lambda, n);
    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.emplace(key, built);
    return it->second;
}

std::vector<std::vector<Int>> highest_weight_vectors(const WeightedModule& m,
                                                     const Weight& block_content) {
    auto bit = m.blocks.find(block_content);
    if (bit == m.blocks.end()) return {};
    const std::vector<int>& block = bit->second;
    std::vector<int> col_of(static_cast<size_t>(m.dim), -1);
    for (size_t c = 0; c < block.size(); ++c) col_of[static_cast<size_t>(block[c])] = static_cast<int>(c);

    // stack restricted raising operators; rows keyed by (generator, target row)
    std::map<std::pair<int, int>, std::vector<Rat>> rows;
    for (size_t g = 0; g < m.e.size(); ++g) {
        for (const auto& en : m.e[g].entries()) {
            int c = col_of[static_cast<size_t>(en.col)];
            if (c < 0) continue;
            auto& row = rows[{static_cast<int>(g), en.row}];
            if (row.empty()) row.assign(block.size(), Rat(0));
            row[static_cast<size_t>(c)] += Rat(en.value);
        }
    }
    detail::RatMat mat;
    mat.reserve(rows.size());
    for (auto& [key, row] : rows) mat.push_back(std::move(row));
    auto kernel = detail::kernel_basis(std::move(mat), block.size());
    std::vector<std::vector<Int>> out;
    for (const auto& v : kernel) out.push_back(detail::primitive_integer(v));
    return out;
}

SparseIntMatrix intertwiner_residual(const WeightedModule& src, const WeightedModule& tgt,
                                     const SparseIntMatrix& f, int generator, bool lowering) {
    const SparseIntMatrix& ms = lowering ? src.f[static_cast<size_t>(generator - 1)]
                                         : src.e[static_cast<size_t>(generator - 1)];
    const SparseIntMatrix& mt = lowering ? tgt.f[static_cast<size_t>(generator - 1)]
                                         : tgt.e[static_cast<size_t>(generator - 1)];
    return SparseIntMatrix::subtract(SparseIntMatrix::multiply(mt, f),
                                     SparseIntMatrix::multiply(f, ms));
}

}  // namespace pierirank
