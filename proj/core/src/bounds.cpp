#include "pierirank/bounds.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pierirank {

namespace {

/// Exact rank is affordable up to this side length; the probe falls back to
/// two random 62-bit primes beyond it.
constexpr int kProbeExactLimit = 200;

Int dim_of_sequence(const std::vector<int64_t>& seq, int n, bool zero_when_longer_than_n) {
    if (zero_when_longer_than_n && static_cast<int>(seq.size()) > n) return 0;
    int nonzero = 0;
    for (int64_t x : seq)
        if (x != 0) ++nonzero;
    if (nonzero > n) return 0;
    if (!is_partition_shape(seq)) return 0;  // cannot arise for valid inputs
    return schur_dim(Partition(seq), n);
}

std::string seq_str(const std::vector<int64_t>& s) {
    std::string out = "(";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + ")";
}

}  // namespace

ProbeResult generic_rank_probe(const PieriTensor& t, int trials, uint64_t seed, int64_t bound) {
    if (trials <= 0) throw std::invalid_argument("trials must be positive");
    ProbeResult res;
    res.trials = trials;
    res.seed = seed;
    res.coefficient_bound = bound;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int64_t> dist(-bound, bound);
    const bool exact = std::max(t.k, t.l) <= kProbeExactLimit;
    res.rank_mode = exact ? "exact_certified" : "mod_p_probable";
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<Int> u(static_cast<size_t>(t.dim_u));
        bool nonzero = false;
        do {
            for (auto& x : u) {
                int64_t v = dist(rng);
                x = Int(static_cast<long>(v));
                if (v != 0) nonzero = true;
            }
        } while (!nonzero);
        SparseIntMatrix m = t.phi_at(u);
        RankCertificate cert =
            exact ? rank_exact(m) : rank_mod_p_random(m, seed ^ (0x9e3779b97f4a7c15ull * (trial + 1)), 2);
        res.ranks.push_back(cert.rank);
        res.max_rank = std::max(res.max_rank, cert.rank);
    }
    for (int r : res.ranks)
        if (r != res.ranks.front()) res.constant = false;
    return res;
}

ConstraintReport check_family_constraint(const Partition& lambda, const Partition& mu,
                                         const UKind& u, int n) {
    ConstraintReport rep;
    StripType strip = strip_type(lambda, mu);
    std::ostringstream detail;
    if (u.family == UKind::v || (u.family == UKind::symd && u.d == 1)) {
        rep.family = "v-row-k";
        rep.strip_ok = strip.kind == StripType::same_row && strip.boxes == 1;
        int row = strip.index;
        rep.numeric_ok = rep.strip_ok && row != 1 && row != n;
        detail << "box row " << row << (rep.numeric_ok ? " differs from 1 and n" : " is 1 or n");
    } else if (u.family == UKind::symd && u.d == 2) {
        rep.family = "sym2-row2";
        rep.strip_ok = strip.kind == StripType::same_row && strip.index == 2 && strip.boxes == 2;
        int64_t lhs = mu.part(1) + mu.part(3) + 3, rhs = 2 * mu.part(2);
        rep.numeric_ok = lhs <= rhs;
        rep.dim_ok = schur_dim(lambda, n) <= schur_dim(mu, n);
        detail << "mu1+mu3+3 = " << lhs << (rep.numeric_ok ? " <= " : " > ") << rhs << " = 2mu2";
        if (!rep.dim_ok) detail << "; dim condition k <= l fails";
    } else if (u.family == UKind::wedged && u.d == 2) {
        rep.family = "wedge2-col23";
        rep.strip_ok = strip.kind == StripType::same_column && strip.boxes == 2 &&
                       mu.part(2) == lambda.part(2) + 1 && mu.part(3) == lambda.part(3) + 1;
        int64_t lhs = mu.part(1) + mu.part(4) + 2, rhs = 2 * mu.part(2);
        rep.numeric_ok = lhs <= rhs;
        rep.dim_ok = schur_dim(lambda, n) <= schur_dim(mu, n);
        detail << "mu1+mu4+2 = " << lhs << (rep.numeric_ok ? " <= " : " > ") << rhs << " = 2mu2";
        if (!rep.dim_ok) detail << "; dim condition k <= l fails";
    } else {
        rep.family = "none";
        detail << "no published family covers U = " << u.to_string();
    }
    rep.detail = detail.str();
    rep.verdict = rep.strip_ok && rep.numeric_ok && rep.dim_ok
                      ? FamilyVerdict::certified_not_minimal
                      : FamilyVerdict::outside_known_families;
    return rep;
}

CFormula c_constant(const Partition& lambda, const Partition& mu, const UKind& u, int n) {
    CFormula out;
    ConstraintReport cons = check_family_constraint(lambda, mu, u, n);
    if (cons.verdict != FamilyVerdict::certified_not_minimal) {
        out.applicable = false;
        out.notes = "hypothesis not satisfied: " + cons.detail;
        return out;
    }
    out.applicable = true;
    out.family = cons.family;
    Int k = schur_dim(lambda, n), l = schur_dim(mu, n);

    if (cons.family == "v-row-k") {
        StripType strip = strip_type(lambda, mu);
        const int kr = strip.index;
        auto lam = [&](int i) { return lambda.part(i); };
        auto muv = [&](int i) { return mu.part(i); };
        // lambda' = (lambda_1..lambda_{k-2}, lambda_k, lambda_k, lambda_{k+1}..lambda_n)
        for (int i = 1; i <= kr - 2; ++i) out.lambda_prime.push_back(lam(i));
        out.lambda_prime.push_back(lam(kr));
        out.lambda_prime.push_back(lam(kr));
        for (int i = kr + 1; i <= n; ++i) out.lambda_prime.push_back(lam(i));
        // lambda'' = (lambda_1..lambda_{k-3}, lambda_{k-1}-1, lambda_k, lambda_k, ...)
        for (int i = 1; i <= kr - 3; ++i) out.lambda_second.push_back(lam(i));
        out.lambda_second.push_back(lam(kr - 1) - 1);
        out.lambda_second.push_back(lam(kr));
        out.lambda_second.push_back(lam(kr));
        for (int i = kr + 1; i <= n; ++i) out.lambda_second.push_back(lam(i));
        // mu' = (mu_1..mu_k, mu_k, mu_{k+2}..mu_n)
        for (int i = 1; i <= kr; ++i) out.mu_prime.push_back(muv(i));
        out.mu_prime.push_back(muv(kr));
        for (int i = kr + 2; i <= n; ++i) out.mu_prime.push_back(muv(i));
        // mu'' = (mu_1..mu_k, mu_k, mu_{k+1}+1, mu_{k+3}..mu_n)
        for (int i = 1; i <= kr; ++i) out.mu_second.push_back(muv(i));
        out.mu_second.push_back(muv(kr));
        out.mu_second.push_back(muv(kr + 1) + 1);
        for (int i = kr + 3; i <= n; ++i) out.mu_second.push_back(muv(i));

        Int dlp = dim_of_sequence(out.lambda_prime, n, false);
        Int dls = dim_of_sequence(out.lambda_second, n, false);
        Int dls_alt = dim_of_sequence(out.lambda_second, n, true);
        Int dmp = dim_of_sequence(out.mu_prime, n, false);
        Int dms = dim_of_sequence(out.mu_second, n, false);
        Int dms_alt = dim_of_sequence(out.mu_second, n, true);
        out.c1 = dlp - dls;
        out.c1_alt = dlp - dls_alt;
        out.c2 = dmp - dms;
        out.c2_alt = dmp - dms_alt;

        const bool clean1 = *out.c1 == *out.c1_alt;
        const bool clean2 = *out.c2 == *out.c2_alt;
        Int r1 = k - *out.c1, r2 = l - *out.c2;
        std::ostringstream notes;
        if (clean1 && clean2) {
            out.routes_agree = r1 == r2;
            out.r_predicted = r2;
            if (!out.routes_agree)
                notes << "k-c1 = " << r1.get_str() << " and l-c2 = " << r2.get_str()
                      << " disagree; reporting the mu-route";
        } else if (clean2) {
            out.routes_agree = clean1 ? r1 == r2 : true;
            out.r_predicted = r2;
            notes << "lambda'' = " << seq_str(out.lambda_second)
                  << " has more than n entries; readings differ (c1 = " << out.c1->get_str()
                  << " vs " << out.c1_alt->get_str() << "), mu-route used";
        } else if (clean1) {
            out.r_predicted = r1;
            notes << "mu'' = " << seq_str(out.mu_second)
                  << " has more than n entries; readings differ, lambda-route used";
        } else {
            out.r_predicted = r2;
            notes << "both auxiliary sequences exceed n entries; mu-route reading reported";
        }
        out.notes = notes.str();
        return out;
    }

    // d = 2 families
    if (cons.family == "sym2-row2") {
        out.alpha_prime.push_back(mu.part(2) - 1);
        out.alpha_prime.push_back(2 * mu.part(2) - mu.part(1) - 3);
        for (int i = 3; i <= n; ++i) out.alpha_prime.push_back(mu.part(i));
        out.alpha.push_back(mu.part(2) - 3);
        out.alpha.push_back(2 * mu.part(2) - mu.part(1) - 3);
        for (int i = 3; i <= n; ++i) out.alpha.push_back(mu.part(i));
    } else {
        out.alpha_prime.push_back(mu.part(2) - 1);
        out.alpha_prime.push_back(mu.part(2) - 1);
        out.alpha_prime.push_back(2 * mu.part(2) - mu.part(1) - 2);
        for (int i = 4; i <= n; ++i) out.alpha_prime.push_back(mu.part(i));
        out.alpha.push_back(mu.part(2) - 2);
        out.alpha.push_back(mu.part(2) - 2);
        out.alpha.push_back(2 * mu.part(2) - mu.part(1) - 2);
        for (int i = 4; i <= n; ++i) out.alpha.push_back(mu.part(i));
    }
    out.c = dim_of_sequence(out.alpha_prime, n, false) - dim_of_sequence(out.alpha, n, false);
    out.r_predicted = k - *out.c;
    return out;
}

BoundReport border_rank_bound(const Partition& lambda, const Partition& mu, const UKind& u,
                              int n, RankSource source, int trials, uint64_t seed,
                              const CacheConfig* cache) {
    BoundReport rep;
    rep.lambda = lambda;
    rep.mu = mu;
    rep.u = u;
    rep.n = n;
    PieriTensor t = build_pieri_tensor(lambda, mu, u, n, cache);
    rep.dim_u = Int(t.dim_u);
    rep.k = Int(t.k);
    rep.l = Int(t.l);
    rep.constraint = check_family_constraint(lambda, mu, u, n);
    rep.c_formula = c_constant(lambda, mu, u, n);

    StripType strip = strip_type(lambda, mu);
    if (full_rank_predicted(strip, u)) {
        rep.flattening_rank = rep.k * rep.l;
        rep.flattening_measured = false;
    } else {
        Int side = rep.k * rep.l;
        if (side > 6000)
            throw std::runtime_error("flattening outside the strip theorem and too large to measure");
        SparseIntMatrix flat = build_flattening(t);
        rep.flattening_rank = Int(rank_mod_p_random(flat, seed, 2).rank);
        rep.flattening_measured = true;
    }

    if (source == RankSource::oracle || source == RankSource::both) {
        rep.probe = generic_rank_probe(t, trials, seed);
        rep.r_oracle = Int(rep.probe->max_rank);
    }
    if (rep.c_formula.applicable) rep.r_theorem = rep.c_formula.r_predicted;
    if (source == RankSource::theorem_c && !rep.r_theorem)
        throw std::runtime_error("theorem_c rank source requested but no family hypothesis holds");

    if (rep.r_oracle && rep.r_theorem) {
        rep.r_disagreement = *rep.r_oracle != *rep.r_theorem;
        rep.r_used = *rep.r_oracle;  // the oracle is authoritative
    } else if (rep.r_oracle) {
        rep.r_used = *rep.r_oracle;
    } else {
        rep.r_used = *rep.r_theorem;
    }
    if (rep.r_used == 0) throw std::runtime_error("degenerate pair: generic rank is zero");
    rep.lower_bound = ceil_div(rep.flattening_rank, rep.r_used);
    Int trivial = std::max(std::max(rep.dim_u, rep.k), rep.l);
    rep.exceeds_trivial = rep.lower_bound > trivial;
    return rep;
}

std::vector<Table1Row> table1(int trials, uint64_t seed, const CacheConfig* cache) {
    struct Spec {
        UKind u;
        Partition lambda, mu;
        int n;
        int64_t pdu, pk, pl, pbound;
        const char* note;
    };
    const std::vector<Spec> rows = {
        {UKind::V(), {6, 2}, {6, 3}, 3, 3, 60, 64, 72, ""},
        {UKind::V(), {5, 2, 1}, {5, 2, 2}, 4, 4, 256, 160, 293, ""},
        {UKind::Sym(2), {3, 1}, {3, 3}, 4, 10, 45, 50, 63, ""},
        {UKind::Sym(2), {4, 2, 1}, {4, 4, 1}, 4, 10, 140, 140, 182, ""},
        {UKind::Wedge(2), {3, 2, 2}, {3, 3, 3}, 4, 6, 36, 36, 65,
         "printed dim of the second Schur factor disagrees with the hook-length formula"},
        {UKind::Wedge(2), {3, 2, 2, 1}, {3, 3, 3, 1}, 5, 10, 175, 175, 227, ""},
    };
    std::vector<Table1Row> out;
    for (size_t i = 0; i < rows.size(); ++i) {
        const Spec& s = rows[i];
        Table1Row row;
        row.index = static_cast<int>(i + 1);
        row.u = s.u;
        row.lambda = s.lambda;
        row.mu = s.mu;
        row.n = s.n;
        row.paper_dim_u = s.pdu;
        row.paper_k = s.pk;
        row.paper_l = s.pl;
        row.paper_bound = s.pbound;
        BoundReport rep = border_rank_bound(s.lambda, s.mu, s.u, s.n, RankSource::both, trials,
                                            seed + i, cache);
        row.dim_u = rep.dim_u;
        row.k = rep.k;
        row.l = rep.l;
        row.r_oracle = rep.r_oracle.value_or(0);
        row.r_theorem = rep.r_theorem.value_or(0);
        row.bound = rep.lower_bound;
        row.dims_match = row.dim_u == row.paper_dim_u && row.k == row.paper_k && row.l == row.paper_l;
        row.bound_matches = row.bound == row.paper_bound;
        row.r_consistent = rep.r_theorem && !rep.r_disagreement;
        row.note = s.note;
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace pierirank
