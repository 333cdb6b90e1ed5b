#include <doctest.h>

#include "oracles.hpp"
#include "pierirank/flatten.hpp"

using namespace pierirank;

TEST_CASE("trivial flattening is the identity-sized full rank matrix") {
    FlatteningReport rep = flattening_report(Partition{}, Partition{1}, UKind::V(), 3,
                                             RankMode::exact, 1);
    CHECK(rep.matrix_size == 3);
    CHECK(rep.rank.rank == 3);
    CHECK(rep.is_isomorphism);
    CHECK(rep.theorem_applies);
    CHECK(rep.matches_prediction);
}

TEST_CASE("polarization flattening against a dense brute force") {
    // lambda = (1), mu = (2), n = 2: contract the polarization with the
    // multiplication map by hand on the monomial bases
    PieriTensor t = build_pieri_tensor(Partition{1}, Partition{2}, UKind::V(), 2);
    SparseIntMatrix flat = build_flattening(t);
    CHECK(flat.rows() == 6);
    CHECK(flat.cols() == 6);
    CHECK(rank_exact(flat).rank == 6);
    // independent construction: T'[(s,m'),(m,s')] = sum_a f1[s,a;m] f2[m',a;s']
    SparseIntMatrix direct(6, 6);
    auto f1_at = [&](int s, int a, int m) {
        for (const auto& e : t.f1.entries())
            if (e.row == s * 2 + a && e.col == m) return e.value;
        return Int(0);
    };
    auto f2_at = [&](int m2, int a, int s2) {
        for (const auto& e : t.f2.entries())
            if (e.row == m2 * 2 + a && e.col == s2) return e.value;
        return Int(0);
    };
    for (int s = 0; s < 2; ++s)
        for (int m2 = 0; m2 < 3; ++m2)
            for (int m = 0; m < 3; ++m)
                for (int s2 = 0; s2 < 2; ++s2) {
                    Int v = 0;
                    for (int a = 0; a < 2; ++a) v += f1_at(s, a, m) * f2_at(m2, a, s2);
                    if (v != 0) direct.add(s * 3 + m2, m * 2 + s2, v);
                }
    direct.finalize();
    CHECK(flat == direct);
}

TEST_CASE("same-column wedge pair is an isomorphism") {
    FlatteningReport rep = flattening_report(Partition{2, 2}, Partition{3, 3}, UKind::Wedge(2), 3,
                                             RankMode::exact, 7);
    CHECK(rep.k == 6);
    CHECK(rep.l == 10);
    CHECK(rep.matrix_size == 60);
    CHECK(rep.strip.kind == StripType::same_column);
    CHECK(rep.theorem_applies);
    CHECK(rep.rank.rank == 60);
    CHECK(rep.is_isomorphism);
}

TEST_CASE("flattening entries preserve the combined torus weight") {
    PieriTensor t = build_pieri_tensor(Partition{2, 1}, Partition{2, 2}, UKind::V(), 3);
    SparseIntMatrix flat = build_flattening(t);
    auto sl = SchurModule::get(t.lambda, t.n);
    auto sm = SchurModule::get(t.mu, t.n);
    for (const auto& e : flat.entries()) {
        int s = e.row / t.l, m2 = e.row % t.l;
        int m = e.col / t.k, s2 = e.col % t.k;
        Weight lhs = sl->weighted().content[static_cast<size_t>(s)];
        const Weight& c1 = sm->weighted().content[static_cast<size_t>(m2)];
        Weight rhs = sm->weighted().content[static_cast<size_t>(m)];
        const Weight& c2 = sl->weighted().content[static_cast<size_t>(s2)];
        for (size_t q = 0; q < lhs.size(); ++q) {
            lhs[q] += c1[q];
            rhs[q] += c2[q];
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("rank is invariant under rescaling either factor") {
    PieriTensor t = build_pieri_tensor(Partition{2, 1}, Partition{3, 1}, UKind::V(), 3);
    SparseIntMatrix flat = build_flattening(t);
    int base = rank_exact(flat).rank;
    PieriTensor scaled = t;
    SparseIntMatrix f1s(t.f1.rows(), t.f1.cols());
    for (const auto& e : t.f1.entries()) f1s.add(e.row, e.col, e.value * 7);
    f1s.finalize();
    scaled.f1 = f1s;
    scaled.f1_slices.clear();
    for (const auto& s : t.f1_slices) {
        SparseIntMatrix m(s.rows(), s.cols());
        for (const auto& e : s.entries()) m.add(e.row, e.col, e.value * 7);
        m.finalize();
        scaled.f1_slices.push_back(std::move(m));
    }
    CHECK(rank_exact(build_flattening(scaled)).rank == base);
}

TEST_CASE("non-strip pairs are labeled outside the theorem") {
    // (1) -> (2,1) by two boxes in different row and column
    FlatteningReport rep = flattening_report(Partition{1}, Partition{2, 1}, UKind::Sym(2), 2,
                                             RankMode::exact, 3);
    CHECK_FALSE(rep.theorem_applies);
    CHECK(rep.matches_prediction);  // nothing predicted, nothing violated
}

TEST_CASE("mod-p certificate on a mid-sized isomorphism") {
    FlatteningReport rep = flattening_report(Partition{3, 1}, Partition{3, 2}, UKind::V(), 3,
                                             RankMode::modp, 11);
    CHECK(rep.matrix_size == Int(15) * 15);
    CHECK(rep.rank.rank == 225);
    CHECK(rep.is_isomorphism);
    CHECK(rep.rank.mode == RankCertificate::Mode::mod_p_probable);
}

TEST_CASE("two random 62-bit primes agree on the first published flattening") {
    PieriTensor t = build_pieri_tensor(Partition{6, 2}, Partition{6, 3}, UKind::V(), 3);
    SparseIntMatrix flat = build_flattening(t);
    RankCertificate cert = rank_mod_p_random(flat, 97, 2);
    CHECK(cert.rank == 3840);
    REQUIRE(cert.prime_ranks.size() == 2);
    CHECK(cert.prime_ranks[0] == cert.prime_ranks[1]);
    CHECK_FALSE(cert.small_prime_warning);
}

TEST_CASE("block ranks sum to the total rank") {
    PieriTensor t = build_pieri_tensor(Partition{3, 1}, Partition{3, 2}, UKind::V(), 3);
    SparseIntMatrix flat = build_flattening(t);
    auto sl = SchurModule::get(t.lambda, t.n);
    auto sm = SchurModule::get(t.mu, t.n);
    // partition the rows by combined content and rank each block separately
    std::map<Weight, SparseIntMatrix> blocks;
    std::map<Weight, std::map<int, int>> row_of, col_of;
    auto content_of_row = [&](int row) {
        Weight w = sl->weighted().content[static_cast<size_t>(row / t.l)];
        const Weight& c = sm->weighted().content[static_cast<size_t>(row % t.l)];
        for (size_t q = 0; q < w.size(); ++q) w[q] += c[q];
        return w;
    };
    for (const auto& e : flat.entries()) {
        Weight w = content_of_row(e.row);
        auto& rows = row_of[w];
        auto& cols = col_of[w];
        rows.emplace(e.row, static_cast<int>(rows.size()));
        cols.emplace(e.col, static_cast<int>(cols.size()));
    }
    for (auto& [w, rows] : row_of) {
        SparseIntMatrix b(static_cast<int>(rows.size()), static_cast<int>(col_of[w].size()));
        blocks.emplace(w, std::move(b));
    }
    for (const auto& e : flat.entries()) {
        Weight w = content_of_row(e.row);
        blocks.at(w).add(row_of[w][e.row], col_of[w][e.col], e.value);
    }
    int total = 0;
    for (auto& [w, b] : blocks) {
        b.finalize();
        total += rank_exact(b).rank;
    }
    CHECK(total == rank_exact(flat).rank);
}
