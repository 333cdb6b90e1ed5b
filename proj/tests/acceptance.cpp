// Acceptance suite: one self-contained check per published claim the
// artifact is required to reproduce.  Each criterion prints a PASS/FAIL line;
// the exit status is the number of failing criteria.

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "pierirank/bounds.hpp"
#include "pierirank/bwb.hpp"
#include "pierirank/cache.hpp"
#include "pierirank/euler.hpp"
#include "pierirank/flatten.hpp"
#include "pierirank/weyl.hpp"

using namespace pierirank;

namespace {

struct Checker {
    int failures = 0;
    int checks = 0;
    std::ostringstream log;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            log << "    FAILED: " << what << "\n";
        }
    }
};

std::vector<Partition> partitions_up_to(int max_size, int max_rows) {
    std::vector<Partition> out;
    std::vector<int64_t> cur;
    std::function<void(int64_t, int64_t)> rec = [&](int64_t remaining, int64_t cap) {
        out.push_back(Partition(cur));
        if (static_cast<int>(cur.size()) == max_rows) return;
        for (int64_t next = std::min(cap, remaining); next >= 1; --next) {
            cur.push_back(next);
            rec(remaining - next, next);
            cur.pop_back();
        }
    };
    rec(max_size, max_size);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Partitions with at most `rows` rows and first part at most `cap`.
std::vector<Partition> partitions_in_box(int cap, int rows) {
    std::vector<Partition> out;
    std::vector<int64_t> cur;
    std::function<void(int64_t)> rec = [&](int64_t prev) {
        out.push_back(Partition(cur));
        if (static_cast<int>(cur.size()) == rows) return;
        for (int64_t next = prev; next >= 1; --next) {
            cur.push_back(next);
            rec(next);
            cur.pop_back();
        }
    };
    rec(cap);
    return out;
}

// ---------------------------------------------------------------- criterion 1
Checker criterion1() {
    Checker c;
    auto shapes = partitions_up_to(8, 8);
    for (const auto& lambda : shapes) {
        for (int n = 1; n <= 5; ++n) {
            Int a = schur_dim(lambda, n);
            Int b = ssyt_count(lambda, n);
            c.expect(a == b, "schur_dim vs ssyt_count at " + lambda.to_string() + " n=" +
                                 std::to_string(n) + ": " + a.get_str() + " vs " + b.get_str());
        }
    }
    c.log << "    " << shapes.size() << " partitions, n <= 5, exact equality\n";
    return c;
}

// ---------------------------------------------------------------- criterion 2
Checker criterion2() {
    Checker c;
    CacheConfig cache = default_cache();
    auto rows = table1(5, 42, &cache);
    const int64_t expected_r[6] = {54, 140, 36, 108, 135};
    const int64_t expected_bound[5] = {72, 293, 63, 182, 227};
    int probe_idx = 0;
    for (const auto& r : rows) {
        std::ostringstream tag;
        tag << "row " << r.index;
        if (r.index == 5) {
            c.expect(!r.dims_match, tag.str() + " must be flagged as a dimension discrepancy");
            c.expect(r.l == 20, tag.str() + " computed dim of the second factor must be 20, got " +
                                    r.l.get_str());
            c.expect(!r.bound_matches, tag.str() + " printed bound must not be silently matched");
            c.log << "    row 5 flagged: computed dims (" << r.dim_u.get_str() << ","
                  << r.k.get_str() << "," << r.l.get_str() << ") vs printed (6,36,36); computed bound "
                  << r.bound.get_str() << " vs printed 65\n";
            continue;
        }
        c.expect(r.dims_match, tag.str() + " tensor space dimensions");
        c.expect(r.bound_matches, tag.str() + " lower bound " + r.bound.get_str() + " vs printed " +
                                      r.paper_bound.get_str());
        c.expect(r.r_oracle == Int(expected_r[probe_idx]),
                 tag.str() + " oracle rank " + r.r_oracle.get_str() + " vs expected " +
                     std::to_string(expected_r[probe_idx]));
        c.expect(r.r_theorem == Int(expected_r[probe_idx]),
                 tag.str() + " c-formula rank " + r.r_theorem.get_str() + " vs expected " +
                     std::to_string(expected_r[probe_idx]));
        c.expect(r.bound == Int(expected_bound[probe_idx]), tag.str() + " frozen bound");
        ++probe_idx;
    }
    // the CLI contract: table1 exits 1 because row 5 is flagged
    if (const char* bin = std::getenv("PIERI_RANK_BIN")) {
        std::string cmd = std::string(bin) + " table1 --trials 2 --seed 42 --format json > /dev/null 2>&1";
        int rc = std::system(cmd.c_str());
        c.expect(WEXITSTATUS(rc) == 1, "table1 CLI exits 1 on the row-5 discrepancy");
    }
    return c;
}

// ---------------------------------------------------------------- criterion 7 helpers
struct Crit7Stats {
    long tensors = 0;
    Checker* c = nullptr;
};

void check_tensor_properties(const PieriTensor& t, Crit7Stats& stats) {
    Checker& c = *stats.c;
    ++stats.tensors;
    auto sl = SchurModule::get(t.lambda, t.n);
    auto sm = SchurModule::get(t.mu, t.n);
    WeightedModule um = u_module(t.u, t.n);
    WeightedModule tgt1 = tensor_modules(sl->weighted(), um);
    WeightedModule tgt2 = tensor_modules(sm->weighted(), dual_module(um));
    std::string tag = t.lambda.to_string() + "->" + t.mu.to_string() + " u=" + t.u.to_string() +
                      " n=" + std::to_string(t.n);
    for (int g = 1; g < t.n; ++g) {
        for (bool lowering : {false, true}) {
            c.expect(intertwiner_residual(sm->weighted(), tgt1, t.f1, g, lowering).is_zero(),
                     "f1 equivariance residual " + tag);
            c.expect(intertwiner_residual(sl->weighted(), tgt2, t.f2, g, lowering).is_zero(),
                     "f2 equivariance residual " + tag);
        }
    }
    // weight preservation
    bool weights_ok = true;
    for (const auto& e : t.f1.entries()) {
        int a = e.row / t.dim_u, alpha = e.row % t.dim_u;
        Weight lhs = sl->weighted().content[static_cast<size_t>(a)];
        const Weight& uc = um.content[static_cast<size_t>(alpha)];
        for (size_t q = 0; q < lhs.size(); ++q) lhs[q] += uc[q];
        if (lhs != sm->weighted().content[static_cast<size_t>(e.col)]) weights_ok = false;
    }
    c.expect(weights_ok, "f1 weight preservation " + tag);
    // permuted propagation order agrees after normalization
    SolveOptions rev;
    rev.reverse_generators = true;
    PieriTensor t2 = build_pieri_tensor(t.lambda, t.mu, t.u, t.n, nullptr, rev);
    c.expect(t.f1 == t2.f1 && t.f2 == t2.f2, "permuted-order re-solve " + tag);
}

// ---------------------------------------------------------------- criterion 3
Checker criterion3(bool with_crit7, Checker* c7 = nullptr) {
    Checker c;
    Crit7Stats stats;
    stats.c = c7;
    long pairs = 0;

    auto run_pair = [&](const Partition& lambda, const Partition& mu, const UKind& u, int n) {
        PieriTensor t = build_pieri_tensor(lambda, mu, u, n);
        SparseIntMatrix flat = build_flattening(t);
        Int side = Int(t.k) * Int(t.l);
        RankCertificate cert = rank_mod_p_random(flat, 42 + pairs, 1);
        c.expect(Int(cert.rank) == side,
                 "full rank for " + lambda.to_string() + "->" + mu.to_string() + " u=" +
                     u.to_string() + " n=" + std::to_string(n) + ": rank " +
                     std::to_string(cert.rank) + " of " + side.get_str());
        ++pairs;
        if (with_crit7 && c7 != nullptr) check_tensor_properties(t, stats);
    };

    // d = 1 pairs, lambda normalized (last part zero), kl <= 4000
    for (int n = 1; n <= 4; ++n) {
        int cap = n <= 2 ? 70 : 14;
        for (const auto& lambda : partitions_in_box(cap, n - 1)) {
            Int k = schur_dim(lambda, n);
            for (const auto& mu : pieri_summands(lambda, 1, PieriKind::symmetric, n)) {
                Int l = schur_dim(mu, n);
                if (k * l > 4000) continue;
                run_pair(lambda, mu, UKind::V(), n);
            }
        }
    }
    long d1_pairs = pairs;

    // d = 2 same-row / same-column pairs, kl <= 2500
    for (int n = 2; n <= 4; ++n) {
        int cap = n <= 2 ? 55 : 12;
        for (const auto& lambda : partitions_in_box(cap, n - 1)) {
            Int k = schur_dim(lambda, n);
            for (const auto& mu : pieri_summands(lambda, 2, PieriKind::symmetric, n)) {
                if (strip_type(lambda, mu).kind != StripType::same_row) continue;
                if (k * schur_dim(mu, n) > 2500) continue;
                run_pair(lambda, mu, UKind::Sym(2), n);
            }
            for (const auto& mu : pieri_summands(lambda, 2, PieriKind::exterior, n)) {
                if (strip_type(lambda, mu).kind != StripType::same_column) continue;
                if (k * schur_dim(mu, n) > 2500) continue;
                run_pair(lambda, mu, UKind::Wedge(2), n);
            }
        }
    }
    c.log << "    " << d1_pairs << " single-box pairs and " << (pairs - d1_pairs)
          << " two-box strip pairs, all full rank (single-prime certificates)\n"
          << "    pairs are normalized so the last part of lambda vanishes; a determinant twist\n"
          << "    identifies every other pair with one of these\n";
    // spot-check twist invariance of the normalization
    {
        PieriTensor t = build_pieri_tensor(Partition{3, 2, 1}, Partition{3, 2, 2}, UKind::V(), 3);
        SparseIntMatrix flat = build_flattening(t);
        c.expect(rank_exact(flat).rank == t.k * t.l,
                 "twisted representative (3,2,1)->(3,2,2) stays full rank");
    }
    if (c7 != nullptr) c7->log << "    " << stats.tensors << " tensors from criterion 3\n";
    return c;
}

// ---------------------------------------------------------------- criterion 4
Checker criterion4(Checker* c7) {
    Checker c;
    Crit7Stats stats;
    stats.c = c7;
    long pairs = 0;
    for (int n = 2; n <= 4; ++n) {
        for (const auto& lambda : partitions_up_to(5, n)) {
            Int k = schur_dim(lambda, n);
            for (const auto& mu : pieri_summands(lambda, 1, PieriKind::symmetric, n)) {
                Int l = schur_dim(mu, n);
                PieriTensor t = build_pieri_tensor(lambda, mu, UKind::V(), n);
                ProbeResult p = generic_rank_probe(t, 10, 7 + pairs);
                std::string tag = lambda.to_string() + "->" + mu.to_string() + " n=" +
                                  std::to_string(n);
                c.expect(p.constant, "constant rank across samples " + tag);
                int row = strip_type(lambda, mu).index;
                Int min_dim = std::min(k, l);
                if (row == 1 || row == n)
                    c.expect(Int(p.max_rank) == min_dim, "full rank expected " + tag);
                else
                    c.expect(Int(p.max_rank) < min_dim, "rank deficiency expected " + tag);
                ++pairs;
                if (c7 != nullptr) check_tensor_properties(t, stats);
            }
        }
    }
    c.log << "    " << pairs << " pairs, 10 samples each\n";
    if (c7 != nullptr) c7->log << "    " << stats.tensors << " tensors from criterion 4\n";
    return c;
}

// ---------------------------------------------------------------- criterion 5
Checker criterion5() {
    Checker c;
    // C4 worked example, cell for cell
    {
        RootDatum c4 = RootDatum::make(CartanType::C, 4);
        SyzygyTable t = kostant_weights(c4, 4, {1, 1, 1, 0}, 3);
        struct Cell {
            int degree;
            const char* word;
            Weight action;
            Weight dual;
        };
        const std::vector<Cell> expected = {
            {0, "id", {1, 1, 1, 0}, {0, -1, -1, -1}},
            {1, "t", {1, 1, 1, -2}, {2, -1, -1, -1}},
            {2, "s3t", {1, 1, -1, -4}, {4, 1, -1, -1}},
            {3, "ts3t", {1, 1, -3, -4}, {4, 3, -1, -1}},
            {3, "s2s3t", {1, 0, -1, -5}, {5, 1, 0, -1}},
        };
        c.expect(t.entries.size() == expected.size(), "C4 table has five rows");
        for (const auto& cell : expected) {
            bool found = false;
            for (const auto& e : t.entries)
                if (e.degree == cell.degree && e.w.to_string(c4) == cell.word &&
                    e.action == cell.action && e.dual_weight == cell.dual)
                    found = true;
            c.expect(found, std::string("C4 cell for w = ") + cell.word);
        }
    }
    // D5 coset representatives at lengths 0..3
    {
        RootDatum d5 = RootDatum::make(CartanType::D, 5);
        auto reps = minimal_coset_reps(d5, 5, 3);
        auto names = [&](int len) {
            std::set<std::string> out;
            for (const auto& w : reps[static_cast<size_t>(len)]) out.insert(w.to_string(d5));
            return out;
        };
        c.expect(names(0) == std::set<std::string>{"id"}, "D5 length 0");
        c.expect(names(1) == std::set<std::string>{"t"}, "D5 length 1");
        c.expect(names(2) == std::set<std::string>{"s3t"}, "D5 length 2");
        c.expect(names(3) == std::set<std::string>{"s4s3t", "s2s3t"}, "D5 length 3");
    }
    // E6 symbolic rows on 20 random non-negative tuples
    {
        RootDatum e6 = RootDatum::make(CartanType::E6, 6);
        std::mt19937_64 rng(2026);
        for (int trial = 0; trial < 20; ++trial) {
            Weight a(6);
            for (auto& x : a) x = static_cast<int64_t>(rng() % 9);
            auto row = [&](std::vector<int> letters) {
                return dotted_action(e6, WeylWord(std::move(letters)).inverse(), a);
            };
            c.expect(row({6}) == Weight{a[0], a[1], 1 + a[2] + a[5], a[3], a[4], -2 - a[5]},
                     "E6 row s6");
            c.expect(row({3, 6}) == Weight{a[0], 1 + a[1] + a[2], a[5], 1 + a[2] + a[3], a[4],
                                           -3 - a[2] - a[5]},
                     "E6 row s3s6");
            c.expect(row({4, 3, 6}) == Weight{a[0], 2 + a[1] + a[2] + a[3], a[5], a[2],
                                              1 + a[3] + a[4], -4 - a[2] - a[3] - a[5]},
                     "E6 row s4s3s6");
            c.expect(row({2, 3, 6}) == Weight{1 + a[0] + a[1], a[2], a[5], 2 + a[1] + a[2] + a[3],
                                              a[4], -4 - a[1] - a[2] - a[5]},
                     "E6 row s2s3s6");
        }
    }
    return c;
}

// ---------------------------------------------------------------- criterion 6
Checker criterion6() {
    Checker c;
    WeightComplex g;
    g.n_source = 4;
    g.terms = {
        {0, {Partition{3, 1}}, 0},       {1, {Partition{3, 3}}, 0},
        {2, {Partition{5, 5, 2, 2}}, 0}, {3, {Partition{5, 5, 4, 2}}, 0},
        {4, {Partition{5, 5, 5, 3}}, 0}, {5, {Partition{5, 5, 5, 5}}, 0},
    };
    RatPoly chi = euler_poly(g, 5);
    RatPoly printed(std::vector<Rat>{Rat(-240), Rat(-72), Rat(118), Rat(78), Rat(8)});
    c.expect(chi == printed,
             "Euler polynomial equals the printed 8k^4+78k^3+118k^2-72k-240 "
             "(computed: " + chi.to_string() + ")");
    if (chi != printed) {
        c.log << "    computed chi(k) = " << chi.to_string() << "\n"
              << "    the printed quartic violates the leading-coefficient identity the\n"
              << "    construction guarantees: the alternating dimension sum over the source\n"
              << "    space is 9, so the leading coefficient must be 9/4! = 3/8, not 8\n"
              << "    (see README, Building); the computed polynomial is cross-checked below\n";
        // the computed polynomial is verified against direct dimension sums
        bool lift_ok = true;
        for (int64_t k = 6; k <= 12; ++k) {
            Int direct = 0;
            for (const auto& t : g.terms)
                for (const auto& w : t.weights)
                    direct += Int(t.degree % 2 == 0 ? 1 : -1) * schur_dim(lift(w, k), 5);
            if (chi.eval_int(k) != direct) lift_ok = false;
        }
        c.expect(lift_ok, "computed polynomial matches direct lifted dimension sums");
    }
    c.expect(exceptional_k(chi, 5).empty(), "no exceptional lifts above l = 5");

    // leading-coefficient law on 50 random partitions
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);  // n <= 6
        std::vector<int64_t> parts;
        int rows = static_cast<int>(rng() % n);  // at most n-1 rows
        int64_t prev = 1 + static_cast<int64_t>(rng() % 6);
        for (int i = 0; i < rows; ++i) {
            parts.push_back(prev);
            prev = std::max<int64_t>(1, prev - static_cast<int64_t>(rng() % 3));
        }
        Partition nu(parts);
        DimPolynomial p = dim_poly(nu, n);  // asserts the law internally
        Rat lead = Rat(schur_dim(nu, n - 1));
        for (int i = 1; i < n; ++i) lead /= i;
        c.expect(p.poly.leading() == lead,
                 "leading coefficient law for " + nu.to_string() + " n=" + std::to_string(n));
    }
    return c;
}

// ---------------------------------------------------------------- criterion 8
Checker criterion8() {
    Checker c;
    std::mt19937_64 rng(808);
    int full_rank_spots = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 40);
        int cols = 1 + static_cast<int>(rng() % 40);
        double density = 0.05 + 0.5 * (static_cast<double>(rng() % 100) / 100.0);
        auto m = oracles::random_sparse_matrix(rows, cols, density, 50, rng);
        int expected = oracles::dense_rational_rank(m);
        auto exact = rank_exact(m);
        c.expect(exact.rank == expected, "exact rank vs dense rational oracle, trial " +
                                             std::to_string(trial));
        auto modp = rank_mod_p_random(m, rng(), 2);
        c.expect(modp.rank <= exact.rank, "mod-p rank is a lower bound, trial " +
                                              std::to_string(trial));
        if (full_rank_spots < 20 && modp.rank == std::min(rows, cols)) {
            c.expect(exact.rank == std::min(rows, cols),
                     "full rank mod p implies full rational rank, trial " + std::to_string(trial));
            ++full_rank_spots;
        }
    }
    c.expect(full_rank_spots >= 20, "at least 20 full-rank spot checks, got " +
                                        std::to_string(full_rank_spots));
    c.log << "    200 random matrices up to 40x40, " << full_rank_spots
          << " full-rank certificates spot-verified\n";
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
    }
    // criterion 7 accumulates over the tensors built by criteria 3 and 4
    Checker c7;
    bool ran7 = false;

    struct Entry {
        int index;
        const char* title;
        std::function<Checker()> run;
    };
    std::vector<Entry> entries = {
        {1, "dimension oracle equivalence (|lambda| <= 8, n <= 5)", criterion1},
        {2, "published example rows with the row-5 discrepancy flagged", criterion2},
        {3, "flattening isomorphism suite (kl <= 4000 / 2500)",
         [&]() { ran7 = true; return criterion3(true, &c7); }},
        {4, "constant-rank dichotomy for U = V (|lambda| <= 5, n <= 4)",
         [&]() { ran7 = true; return criterion4(&c7); }},
        {5, "Kostant tables: C4 cells, D5 cosets, E6 symbolic rows", criterion5},
        {6, "Euler polynomial of the published lifted complex", criterion6},
        {7, "intertwiner equivariance, weight blocks, re-solve stability",
         [&]() {
             if (!ran7) {
                 criterion3(true, &c7);
                 criterion4(&c7);
             }
             return std::move(c7);
         }},
        {8, "exact linear algebra vs independent oracles", criterion8},
    };

    int failed_criteria = 0;
    for (auto& e : entries) {
        if (only != 0 && e.index != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Checker result = e.run();
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = result.failures == 0;
        if (!pass) ++failed_criteria;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << e.index << ": " << e.title
                  << " (" << result.checks << " checks, " << std::fixed << std::setprecision(1)
                  << secs << "s)\n";
        std::string detail = result.log.str();
        if (!detail.empty()) std::cout << detail;
    }
    return failed_criteria;
}
