#include "pierirank/rank.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "pierirank/primes.hpp"

namespace pierirank {

namespace {

uint64_t mod_reduce(const Int& v, uint64_t p) {
    Int r = v % Int(mpz_class(static_cast<unsigned long>(p)));
    if (r < 0) r += Int(static_cast<unsigned long>(p));
    return r.get_ui();
}

uint64_t mulmod_u(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t invmod_u(uint64_t a, uint64_t p) {
    // extended Euclid; p prime, a != 0 mod p
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a % p);
    while (newr != 0) {
        int64_t q = r / newr;
        std::swap(t, newt);
        newt -= q * t;
        std::swap(r, newr);
        newr -= q * r;
    }
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

/// Split entry indices into connected blocks (rows/cols sharing a nonzero).
struct Blocks {
    std::vector<std::vector<size_t>> entry_groups;
};

Blocks connected_blocks(const SparseIntMatrix& m) {
    const auto& es = m.entries();
    std::vector<int> parent(static_cast<size_t>(m.rows() + m.cols()));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const auto& e : es) {
        int a = find(e.row), b = find(m.rows() + e.col);
        if (a != b) parent[static_cast<size_t>(a)] = b;
    }
    std::vector<std::vector<size_t>> groups;
    std::vector<int> group_of(parent.size(), -1);
    Blocks out;
    for (size_t k = 0; k < es.size(); ++k) {
        int r = find(es[k].row);
        if (group_of[static_cast<size_t>(r)] < 0) {
            group_of[static_cast<size_t>(r)] = static_cast<int>(out.entry_groups.size());
            out.entry_groups.emplace_back();
        }
        out.entry_groups[static_cast<size_t>(group_of[static_cast<size_t>(r)])].push_back(k);
    }
    return out;
}

/// Sparse elimination over GF(p) with a fill-reducing pivot rule: pick the
/// shortest active row, within it the entry whose column is rarest.
int rank_block_mod_p(const SparseIntMatrix& m, const std::vector<size_t>& group,
                     uint64_t p, long& pivots) {
    // local row/col compression
    std::vector<int> rows, cols;
    for (size_t k : group) {
        rows.push_back(m.entries()[k].row);
        cols.push_back(m.entries()[k].col);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    auto row_id = [&](int r) {
        return static_cast<int>(std::lower_bound(rows.begin(), rows.end(), r) - rows.begin());
    };
    auto col_id = [&](int c) {
        return static_cast<int>(std::lower_bound(cols.begin(), cols.end(), c) - cols.begin());
    };
    const int nr = static_cast<int>(rows.size());
    const int nc = static_cast<int>(cols.size());

    using Row = std::vector<std::pair<int, uint64_t>>;  // sorted by col id
    std::vector<Row> mat(static_cast<size_t>(nr));
    for (size_t k : group) {
        const auto& e = m.entries()[k];
        uint64_t v = mod_reduce(e.value, p);
        if (v) mat[static_cast<size_t>(row_id(e.row))].emplace_back(col_id(e.col), v);
    }
    for (auto& r : mat) std::sort(r.begin(), r.end());

    std::vector<int> col_count(static_cast<size_t>(nc), 0);
    for (const auto& r : mat)
        for (const auto& [c, v] : r) col_count[static_cast<size_t>(c)]++;

    std::vector<char> row_done(static_cast<size_t>(nr), 0);
    int rank = 0;
    Row tmp;
    for (;;) {
        // pivot choice
        int prow = -1;
        size_t best_len = SIZE_MAX;
        for (int i = 0; i < nr; ++i) {
            if (row_done[static_cast<size_t>(i)] || mat[static_cast<size_t>(i)].empty()) continue;
            if (mat[static_cast<size_t>(i)].size() < best_len) {
                best_len = mat[static_cast<size_t>(i)].size();
                prow = i;
            }
        }
        if (prow < 0) break;
        int pcol = -1;
        int best_cc = INT32_MAX;
        uint64_t pval = 0;
        for (const auto& [c, v] : mat[static_cast<size_t>(prow)]) {
            if (col_count[static_cast<size_t>(c)] < best_cc) {
                best_cc = col_count[static_cast<size_t>(c)];
                pcol = c;
                pval = v;
            }
        }
        ++rank;
        ++pivots;
        row_done[static_cast<size_t>(prow)] = 1;
        const Row piv_row = mat[static_cast<size_t>(prow)];
        for (const auto& [c, v] : piv_row) col_count[static_cast<size_t>(c)]--;
        mat[static_cast<size_t>(prow)].clear();
        const uint64_t piv_inv = invmod_u(pval, p);

        for (int i = 0; i < nr; ++i) {
            if (row_done[static_cast<size_t>(i)]) continue;
            Row& r = mat[static_cast<size_t>(i)];
            auto it = std::lower_bound(r.begin(), r.end(), std::make_pair(pcol, uint64_t{0}),
                                       [](const auto& a, const auto& b) { return a.first < b.first; });
            if (it == r.end() || it->first != pcol) continue;
            const uint64_t factor = mulmod_u(it->second, piv_inv, p);
            // r -= factor * piv_row (merge)
            tmp.clear();
            tmp.reserve(r.size() + piv_row.size());
            auto ia = r.begin();
            auto ib = piv_row.begin();
            while (ia != r.end() || ib != piv_row.end()) {
                if (ib == piv_row.end() || (ia != r.end() && ia->first < ib->first)) {
                    tmp.push_back(*ia++);
                } else if (ia == r.end() || ib->first < ia->first) {
                    uint64_t sub = mulmod_u(factor, ib->second, p);
                    if (sub) tmp.emplace_back(ib->first, p - sub);
                    ++ib;
                } else {
                    uint64_t sub = mulmod_u(factor, ib->second, p);
                    uint64_t nv = ia->second >= sub ? ia->second - sub : ia->second + (p - sub);
                    if (nv) tmp.emplace_back(ia->first, nv);
                    ++ia;
                    ++ib;
                }
            }
            for (const auto& [c, v] : r) col_count[static_cast<size_t>(c)]--;
            for (const auto& [c, v] : tmp) col_count[static_cast<size_t>(c)]++;
            r = tmp;
        }
    }
    return rank;
}

int rank_block_bareiss(const SparseIntMatrix& m, const std::vector<size_t>& group,
                       long max_cells, long& pivots) {
    std::vector<int> rows, cols;
    for (size_t k : group) {
        rows.push_back(m.entries()[k].row);
        cols.push_back(m.entries()[k].col);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    const long nr = static_cast<long>(rows.size());
    const long nc = static_cast<long>(cols.size());
    if (nr * nc > max_cells)
        throw std::runtime_error(
            "rank_exact: block of " + std::to_string(nr) + "x" + std::to_string(nc) +
            " exceeds the dense budget; use rank_mod_p instead");

    std::vector<std::vector<Int>> a(static_cast<size_t>(nr), std::vector<Int>(static_cast<size_t>(nc), Int(0)));
    for (size_t k : group) {
        const auto& e = m.entries()[k];
        long i = std::lower_bound(rows.begin(), rows.end(), e.row) - rows.begin();
        long j = std::lower_bound(cols.begin(), cols.end(), e.col) - cols.begin();
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] = e.value;
    }

    Int prev = 1;
    long r = 0, c = 0;
    int rank = 0;
    while (r < nr && c < nc) {
        // pivot search: any nonzero in column c at row >= r, else next column
        long pr = -1;
        for (long i = r; i < nr; ++i) {
            if (a[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) { pr = i; break; }
        }
        if (pr < 0) { ++c; continue; }
        std::swap(a[static_cast<size_t>(r)], a[static_cast<size_t>(pr)]);
        const Int piv = a[static_cast<size_t>(r)][static_cast<size_t>(c)];
        for (long i = r + 1; i < nr; ++i) {
            Int& lead = a[static_cast<size_t>(i)][static_cast<size_t>(c)];
            for (long j = c + 1; j < nc; ++j) {
                Int& x = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
                x = divexact(piv * x - lead * a[static_cast<size_t>(r)][static_cast<size_t>(j)], prev);
            }
            lead = 0;
        }
        prev = piv;
        ++rank;
        ++pivots;
        ++r;
        ++c;
    }
    return rank;
}

}  // namespace

RankCertificate rank_mod_p(const SparseIntMatrix& m, const std::vector<uint64_t>& primes) {
    if (primes.empty()) throw std::invalid_argument("need at least one prime");
    for (uint64_t p : primes)
        if (!is_prime_u64(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    auto t0 = std::chrono::steady_clock::now();
    RankCertificate cert;
    cert.mode = RankCertificate::Mode::mod_p_probable;
    cert.primes = primes;
    const uint64_t dim = static_cast<uint64_t>(std::max(m.rows(), m.cols()));
    for (uint64_t p : primes)
        if (p <= dim) cert.small_prime_warning = true;
    Blocks blocks = connected_blocks(m);
    for (uint64_t p : primes) {
        int rank = 0;
        for (const auto& g : blocks.entry_groups) rank += rank_block_mod_p(m, g, p, cert.pivots);
        cert.prime_ranks.push_back(rank);
        cert.rank = std::max(cert.rank, rank);
    }
    cert.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return cert;
}

RankCertificate rank_mod_p_random(const SparseIntMatrix& m, uint64_t seed, int num_primes) {
    std::mt19937_64 rng(seed);
    std::vector<uint64_t> primes;
    while (static_cast<int>(primes.size()) < num_primes) {
        uint64_t p = random_prime(62, rng);
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    }
    return rank_mod_p(m, primes);
}

RankCertificate rank_exact(const SparseIntMatrix& m, const ExactRankOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    RankCertificate cert;
    cert.mode = RankCertificate::Mode::exact_certified;
    Blocks blocks = connected_blocks(m);
    for (const auto& g : blocks.entry_groups)
        cert.rank += rank_block_bareiss(m, g, opts.max_block_cells, cert.pivots);
    cert.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return cert;
}

}  // namespace pierirank
