#include "pierirank/weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pierirank {

namespace {

const std::vector<std::vector<int64_t>> kE6Cartan = {
    {2, -1, 0, 0, 0, 0},
    {-1, 2, -1, 0, 0, 0},
    {0, -1, 2, -1, 0, -1},
    {0, 0, -1, 2, -1, 0},
    {0, 0, 0, -1, 2, 0},
    {0, 0, -1, 0, 0, 2},
};

std::string key_of(const Weight& v) {
    std::string s;
    for (int64_t x : v) {
        s += std::to_string(x);
        s += ',';
    }
    return s;
}

}  // namespace

std::string cartan_type_name(CartanType t) {
    switch (t) {
        case CartanType::A: return "A";
        case CartanType::C: return "C";
        case CartanType::D: return "D";
        case CartanType::E6: return "E6";
    }
    return "?";
}

CartanType parse_cartan_type(const std::string& s) {
    if (s == "A" || s == "a") return CartanType::A;
    if (s == "C" || s == "c") return CartanType::C;
    if (s == "D" || s == "d") return CartanType::D;
    if (s == "E6" || s == "e6" || s == "E" || s == "e") return CartanType::E6;
    throw std::invalid_argument("unknown Cartan type: " + s);
}

RootDatum RootDatum::make(CartanType type, int rank) {
    RootDatum d;
    d.type = type;
    switch (type) {
        case CartanType::A:
            if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
            break;
        case CartanType::C:
            if (rank < 2) throw std::invalid_argument("type C needs rank >= 2");
            break;
        case CartanType::D:
            if (rank < 3) throw std::invalid_argument("type D needs rank >= 3");
            break;
        case CartanType::E6:
            if (rank != 6) throw std::invalid_argument("type E6 has rank 6");
            break;
    }
    d.rank = rank;
    if (type == CartanType::E6) {
        d.cartan = kE6Cartan;
    } else {
        d.cartan.assign(static_cast<size_t>(rank), std::vector<int64_t>(static_cast<size_t>(rank), 0));
        for (int i = 0; i < rank; ++i) d.cartan[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
        int chain = (type == CartanType::A) ? rank - 1 : rank - 2;
        for (int i = 0; i < chain; ++i) {
            d.cartan[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = -1;
            d.cartan[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = -1;
        }
        if (type == CartanType::C && rank >= 2) {
            d.cartan[static_cast<size_t>(rank - 2)][static_cast<size_t>(rank - 1)] = -1;
            d.cartan[static_cast<size_t>(rank - 1)][static_cast<size_t>(rank - 2)] = -2;
        }
        if (type == CartanType::D) {
            // fork: node n attaches to node n-2
            d.cartan[static_cast<size_t>(rank - 3)][static_cast<size_t>(rank - 1)] = -1;
            d.cartan[static_cast<size_t>(rank - 1)][static_cast<size_t>(rank - 3)] = -1;
        }
    }
    return d;
}

int RootDatum::coord_dim() const {
    switch (type) {
        case CartanType::A: return rank;      // gl(rank): permutations of entries
        case CartanType::C: return rank;
        case CartanType::D: return rank;
        case CartanType::E6: return 6;
    }
    return 0;
}

int RootDatum::num_generators() const {
    return type == CartanType::A ? rank - 1 : rank;
}

Weight RootDatum::rho() const {
    Weight r(static_cast<size_t>(coord_dim()));
    switch (type) {
        case CartanType::A:
        case CartanType::D:
            for (int i = 0; i < coord_dim(); ++i) r[static_cast<size_t>(i)] = coord_dim() - 1 - i;
            break;
        case CartanType::C:
            for (int i = 0; i < coord_dim(); ++i) r[static_cast<size_t>(i)] = coord_dim() - i;
            break;
        case CartanType::E6:
            r.assign(6, 1);
            break;
    }
    return r;
}

void RootDatum::apply_generator(int gen, Weight& v) const {
    if (gen < 1 || gen > num_generators())
        throw std::out_of_range("generator index out of range");
    if (static_cast<int>(v.size()) != coord_dim())
        throw std::invalid_argument("weight length does not match coordinate dimension");
    const int n = coord_dim();
    switch (type) {
        case CartanType::A:
            std::swap(v[static_cast<size_t>(gen - 1)], v[static_cast<size_t>(gen)]);
            break;
        case CartanType::C:
            if (gen < rank) {
                std::swap(v[static_cast<size_t>(gen - 1)], v[static_cast<size_t>(gen)]);
            } else {
                v[static_cast<size_t>(n - 1)] = -v[static_cast<size_t>(n - 1)];
            }
            break;
        case CartanType::D:
            if (gen < rank) {
                std::swap(v[static_cast<size_t>(gen - 1)], v[static_cast<size_t>(gen)]);
            } else {
                int64_t a = v[static_cast<size_t>(n - 2)], b = v[static_cast<size_t>(n - 1)];
                v[static_cast<size_t>(n - 2)] = -b;
                v[static_cast<size_t>(n - 1)] = -a;
            }
            break;
        case CartanType::E6: {
            int64_t coeff = v[static_cast<size_t>(gen - 1)];
            for (int j = 0; j < 6; ++j)
                v[static_cast<size_t>(j)] -= coeff * kE6Cartan[static_cast<size_t>(gen - 1)][static_cast<size_t>(j)];
            break;
        }
    }
}

int64_t RootDatum::pairing(const Weight& v, int gen) const {
    if (gen < 1 || gen > num_generators())
        throw std::out_of_range("generator index out of range");
    const int n = coord_dim();
    switch (type) {
        case CartanType::A:
            return v[static_cast<size_t>(gen - 1)] - v[static_cast<size_t>(gen)];
        case CartanType::C:
            if (gen < rank) return v[static_cast<size_t>(gen - 1)] - v[static_cast<size_t>(gen)];
            return v[static_cast<size_t>(n - 1)];
        case CartanType::D:
            if (gen < rank) return v[static_cast<size_t>(gen - 1)] - v[static_cast<size_t>(gen)];
            return v[static_cast<size_t>(n - 2)] + v[static_cast<size_t>(n - 1)];
        case CartanType::E6:
            return v[static_cast<size_t>(gen - 1)];
    }
    return 0;
}

bool RootDatum::dominant(const Weight& v) const {
    for (int g = 1; g <= num_generators(); ++g)
        if (pairing(v, g) < 0) return false;
    return true;
}

bool RootDatum::levi_dominant(const Weight& v, int levi_node) const {
    for (int g = 1; g <= num_generators(); ++g) {
        if (g == levi_node) continue;
        if (pairing(v, g) < 0) return false;
    }
    return true;
}

WeylWord WeylWord::concat(const WeylWord& a, const WeylWord& b) {
    WeylWord w = a;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
}

std::string WeylWord::to_string(const RootDatum& datum) const {
    if (letters.empty()) return "id";
    std::ostringstream os;
    bool sign_node = datum.type == CartanType::C || datum.type == CartanType::D;
    for (int g : letters) {
        if (sign_node && g == datum.rank)
            os << "t";
        else
            os << "s" << g;
    }
    return os.str();
}

Weight apply_word(const RootDatum& datum, const WeylWord& w, Weight v) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        datum.apply_generator(*it, v);
    return v;
}

Weight dotted_action(const RootDatum& datum, const WeylWord& w, const Weight& v) {
    Weight rho = datum.rho();
    if (v.size() != rho.size())
        throw std::invalid_argument("weight length does not match coordinate dimension");
    Weight x(v.size());
    for (size_t i = 0; i < v.size(); ++i) x[i] = v[i] + rho[i];
    x = apply_word(datum, w, std::move(x));
    for (size_t i = 0; i < v.size(); ++i) x[i] -= rho[i];
    return x;
}

namespace {

/// Positive roots in the datum's coordinates (epsilon for classical,
/// fundamental-weight coefficients for E6).
std::vector<Weight> positive_roots(const RootDatum& d) {
    std::vector<Weight> roots;
    const int n = d.coord_dim();
    auto eps = [&](int i) {
        Weight v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(i)] = 1;
        return v;
    };
    switch (d.type) {
        case CartanType::A:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    Weight v = eps(i);
                    v[static_cast<size_t>(j)] -= 1;
                    roots.push_back(v);
                }
            break;
        case CartanType::C:
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    Weight v = eps(i);
                    v[static_cast<size_t>(j)] -= 1;
                    roots.push_back(v);
                    v[static_cast<size_t>(j)] += 2;
                    roots.push_back(v);
                }
                Weight v = eps(i);
                v[static_cast<size_t>(i)] = 2;
                roots.push_back(v);
            }
            break;
        case CartanType::D:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    Weight v = eps(i);
                    v[static_cast<size_t>(j)] -= 1;
                    roots.push_back(v);
                    v[static_cast<size_t>(j)] += 2;
                    roots.push_back(v);
                }
            break;
        case CartanType::E6: {
            // close the simple roots under the Weyl group
            std::set<std::string> seen;
            std::vector<Weight> frontier;
            for (int i = 0; i < 6; ++i) {
                Weight a(kE6Cartan[static_cast<size_t>(i)].begin(), kE6Cartan[static_cast<size_t>(i)].end());
                if (seen.insert(key_of(a)).second) frontier.push_back(a);
            }
            std::vector<Weight> all = frontier;
            while (!frontier.empty()) {
                std::vector<Weight> next;
                for (const auto& r : frontier) {
                    for (int g = 1; g <= 6; ++g) {
                        Weight x = r;
                        d.apply_generator(g, x);
                        if (seen.insert(key_of(x)).second) {
                            next.push_back(x);
                            all.push_back(x);
                        }
                    }
                }
                frontier = std::move(next);
            }
            // positive roots: non-negative coordinates in the simple-root basis.
            // Solve c * Cartan = b over the rationals; Cartan is unimodular-ish,
            // so track sign via exact Gaussian elimination on each root.
            for (const auto& b : all) {
                // c = b * C^{-1}: solve C^T c^T = b^T
                std::vector<std::vector<Rat>> m(6, std::vector<Rat>(7));
                for (int i = 0; i < 6; ++i) {
                    for (int j = 0; j < 6; ++j)
                        m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                            Rat(kE6Cartan[static_cast<size_t>(j)][static_cast<size_t>(i)]);
                    m[static_cast<size_t>(i)][6] = Rat(b[static_cast<size_t>(i)]);
                }
                for (int col = 0; col < 6; ++col) {
                    int piv = -1;
                    for (int r = col; r < 6; ++r)
                        if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { piv = r; break; }
                    std::swap(m[static_cast<size_t>(col)], m[static_cast<size_t>(piv)]);
                    for (int r = 0; r < 6; ++r) {
                        if (r == col || m[static_cast<size_t>(r)][static_cast<size_t>(col)] == 0) continue;
                        Rat f = m[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                                m[static_cast<size_t>(col)][static_cast<size_t>(col)];
                        for (int c2 = col; c2 <= 6; ++c2)
                            m[static_cast<size_t>(r)][static_cast<size_t>(c2)] -=
                                f * m[static_cast<size_t>(col)][static_cast<size_t>(c2)];
                    }
                }
                bool nonneg = true;
                for (int i = 0; i < 6; ++i) {
                    Rat c = m[static_cast<size_t>(i)][6] / m[static_cast<size_t>(i)][static_cast<size_t>(i)];
                    if (c < 0) nonneg = false;
                }
                if (nonneg) roots.push_back(b);
            }
            break;
        }
    }
    return roots;
}

/// Sign of a classical root vector: sign of its first nonzero coordinate.
int first_nonzero_sign(const Weight& v) {
    for (int64_t x : v) {
        if (x > 0) return 1;
        if (x < 0) return -1;
    }
    return 0;
}

}  // namespace

int weyl_length(const RootDatum& datum, const WeylWord& w) {
    static std::mutex cache_mutex;
    static std::map<std::pair<int, int>, std::vector<Weight>> root_cache;
    static std::map<std::pair<int, int>, std::set<std::string>> pos_key_cache;
    auto key = std::make_pair(static_cast<int>(datum.type), datum.rank);
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (!root_cache.count(key)) {
        root_cache[key] = positive_roots(datum);
        std::set<std::string> ks;
        for (const auto& r : root_cache[key]) ks.insert(key_of(r));
        pos_key_cache[key] = std::move(ks);
    }
    const auto& roots = root_cache[key];
    int len = 0;
    for (const auto& r : roots) {
        Weight img = apply_word(datum, w, r);
        bool negative;
        if (datum.type == CartanType::E6)
            negative = !pos_key_cache[key].count(key_of(img));
        else
            negative = first_nonzero_sign(img) < 0;
        if (negative) ++len;
    }
    return len;
}

std::vector<std::vector<WeylWord>> minimal_coset_reps(const RootDatum& datum,
                                                      int levi_node,
                                                      int max_length) {
    constexpr int kBudget = 40;
    if (max_length < 0) throw std::invalid_argument("max_length must be >= 0");
    if (max_length > kBudget)
        throw std::runtime_error("max_length " + std::to_string(max_length) +
                                 " exceeds the exploration budget of " + std::to_string(kBudget));
    if (levi_node < 1 || levi_node > datum.num_generators())
        throw std::out_of_range("levi_node out of range");

    Weight rho = datum.rho();
    Weight probe(rho.size());
    for (size_t i = 0; i < rho.size(); ++i) probe[i] = 2 * rho[i];  // regular vector

    std::vector<std::vector<WeylWord>> out(static_cast<size_t>(max_length + 1));
    std::set<std::string> seen;

    struct Node {
        WeylWord word;
        Weight image;  // word applied to probe
    };
    std::vector<Node> frontier;
    frontier.push_back({WeylWord{}, probe});
    seen.insert(key_of(probe));

    // w is a minimal representative iff w^{-1} dotted rho is Levi-dominant;
    // w^{-1} dotted rho = w^{-1}(2 rho) - rho, and w^{-1} applies the word's
    // letters first-to-last.
    auto is_min_rep = [&](const WeylWord& w) {
        Weight x = probe;
        for (int g : w.letters) datum.apply_generator(g, x);
        for (size_t i = 0; i < rho.size(); ++i) x[i] -= rho[i];
        return datum.levi_dominant(x, levi_node);
    };

    if (is_min_rep(WeylWord{})) out[0].push_back(WeylWord{});

    for (int depth = 1; depth <= max_length; ++depth) {
        std::vector<Node> next;
        for (const auto& node : frontier) {
            for (int g = 1; g <= datum.num_generators(); ++g) {
                Weight img = node.image;
                datum.apply_generator(g, img);
                if (!seen.insert(key_of(img)).second) continue;
                WeylWord w;
                w.letters.reserve(node.word.letters.size() + 1);
                w.letters.push_back(g);
                w.letters.insert(w.letters.end(), node.word.letters.begin(), node.word.letters.end());
                Node child{std::move(w), std::move(img)};
                if (is_min_rep(child.word)) out[static_cast<size_t>(depth)].push_back(child.word);
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return out;
}

namespace {

/// gamma_i = sum_{j >= i} nu_j turns an E6 coefficient vector into gl(6)
/// epsilon-coordinates (up to determinant twist).
Weight e6_gamma(const Weight& nu) {
    Weight g(nu.size());
    int64_t acc = 0;
    for (size_t i = nu.size(); i-- > 0;) {
        acc += nu[i];
        g[i] = acc;
    }
    return g;
}

SyzygyTable::Entry make_entry(const RootDatum& datum, int degree, const WeylWord& w,
                              const Weight& alpha) {
    SyzygyTable::Entry e;
    e.degree = degree;
    e.w = w;
    e.action = dotted_action(datum, w.inverse(), alpha);
    Weight eps = (datum.type == CartanType::E6) ? e6_gamma(e.action) : e.action;
    e.dual_weight = dual_weight(eps);
    e.det_twist = e.dual_weight.empty() ? 0 : std::max<int64_t>(0, -e.dual_weight.back());
    e.shape = Partition(twist(e.dual_weight, e.det_twist));
    return e;
}

}  // namespace

SyzygyTable kostant_weights(const RootDatum& datum, int levi_node, const Weight& alpha,
                            int max_degree) {
    if (!datum.dominant(alpha))
        throw std::invalid_argument("alpha must be dominant for the full root datum");
    SyzygyTable table;
    auto reps = minimal_coset_reps(datum, levi_node, max_degree);
    for (size_t len = 0; len < reps.size(); ++len)
        for (const auto& w : reps[len])
            table.entries.push_back(make_entry(datum, static_cast<int>(len), w, alpha));
    return table;
}

FamilyKind parse_family_kind(const std::string& s) {
    if (s == "sym2-row2") return FamilyKind::sym2_row2;
    if (s == "sym2-1a") return FamilyKind::sym2_1a;
    if (s == "sym2-1b") return FamilyKind::sym2_1b;
    if (s == "wedge2-col") return FamilyKind::wedge2_col;
    if (s == "wedge2-2a") return FamilyKind::wedge2_2a;
    if (s == "wedge2-2b") return FamilyKind::wedge2_2b;
    if (s == "wedge2-2c") return FamilyKind::wedge2_2c;
    if (s == "e6-beta") return FamilyKind::e6_beta;
    throw std::invalid_argument("unknown family kind: " + s);
}

std::string family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::sym2_row2: return "sym2-row2";
        case FamilyKind::sym2_1a: return "sym2-1a";
        case FamilyKind::sym2_1b: return "sym2-1b";
        case FamilyKind::wedge2_col: return "wedge2-col";
        case FamilyKind::wedge2_2a: return "wedge2-2a";
        case FamilyKind::wedge2_2b: return "wedge2-2b";
        case FamilyKind::wedge2_2c: return "wedge2-2c";
        case FamilyKind::e6_beta: return "e6-beta";
    }
    return "?";
}

namespace {

Partition twisted_shape(const RootDatum& datum, const WeylWord& w, const Weight& alpha,
                        int64_t twist_by) {
    Weight u = dotted_action(datum, w.inverse(), alpha);
    Weight d = dual_weight(u);
    return Partition(twist(d, twist_by));
}

}  // namespace

FamilyRecord family_generator(FamilyKind kind, const Weight& alpha, int n) {
    FamilyRecord rec;
    rec.kind = kind;
    rec.n = n;

    if (kind == FamilyKind::e6_beta) {
        if (alpha.size() != 6)
            throw std::invalid_argument("e6-beta expects six coefficients a_1..a_6");
        for (int64_t a : alpha)
            if (a < 0) throw std::invalid_argument("e6-beta coefficients must be non-negative");
        RootDatum e6 = RootDatum::make(CartanType::E6, 6);
        std::vector<WeylWord> words = {
            WeylWord({6}), WeylWord({3, 6}), WeylWord({4, 3, 6}), WeylWord({2, 3, 6})};
        rec.n = 6;
        for (const auto& w : words) {
            Weight nu = dotted_action(e6, w.inverse(), alpha);
            Weight g = e6_gamma(nu);
            Weight d = dual_weight(g);
            int64_t t = d.empty() ? 0 : -d.back();
            rec.betas.push_back(Partition(twist(d, t)));
        }
        Weight g0 = e6_gamma(alpha);
        Weight d0 = dual_weight(g0);
        rec.alpha_prime = Partition(twist(d0, d0.empty() ? 0 : -d0.back()));
        rec.lambda = rec.betas.size() > 0 ? rec.betas[0] : Partition{};
        rec.mu = rec.betas.size() > 1 ? rec.betas[1] : Partition{};
        return rec;
    }

    const bool symplectic = kind == FamilyKind::sym2_row2 || kind == FamilyKind::sym2_1a ||
                            kind == FamilyKind::sym2_1b;
    RootDatum datum = RootDatum::make(symplectic ? CartanType::C : CartanType::D, n);
    Weight a(static_cast<size_t>(n), 0);
    if (static_cast<int>(alpha.size()) > n)
        throw std::invalid_argument("alpha has more entries than n");
    std::copy(alpha.begin(), alpha.end(), a.begin());
    if (!datum.dominant(a))
        throw std::invalid_argument("alpha must be a dominant weight for the family's type");
    const int64_t a1 = a.empty() ? 0 : a[0];
    auto an = [&](int i) { return a[static_cast<size_t>(n - i)]; };  // a_{n-i+1}? no: an(1)=a_n

    const WeylWord tau({n});
    const WeylWord s1tau({n - 1, n});         // s_{n-1} tau  (C); s_{n-2} tau is below for D
    const WeylWord tau_s_tau({n, n - 1, n});  // tau s_{n-1} tau
    const WeylWord s2_s1_tau({n - 2, n - 1, n});

    switch (kind) {
        case FamilyKind::sym2_row2: {
            if (n < 3) throw std::invalid_argument("sym2-row2 needs n >= 3");
            if (an(1) != 0)
                throw std::invalid_argument("sym2-row2 expects alpha with at most n-1 parts");
            rec.alpha_prime = twisted_shape(datum, tau, a, a1);
            rec.lambda = twisted_shape(datum, s1tau, a, a1);
            rec.mu = twisted_shape(datum, tau_s_tau, a, a1);
            rec.nu = twisted_shape(datum, s2_s1_tau, a, a1);
            // mu_1 + mu_3 + 3 <= 2 mu_2 is equivalent to alpha_{n-2} >= alpha_{n-1}
            bool constraint = rec.mu.part(1) + rec.mu.part(3) + 3 <= 2 * rec.mu.part(2);
            bool alpha_cond = a[static_cast<size_t>(n - 3)] >= a[static_cast<size_t>(n - 2)];
            if (constraint != alpha_cond)
                throw std::logic_error("sym2-row2 constraint equivalence failed");
            break;
        }
        case FamilyKind::sym2_1a: {
            if (an(1) != an(2))
                throw std::invalid_argument("sym2-1a requires alpha_{n-1} = alpha_n");
            rec.alpha_prime = twisted_shape(datum, WeylWord{}, a, a1);
            rec.lambda = twisted_shape(datum, tau, a, a1);
            rec.mu = twisted_shape(datum, s1tau, a, a1);
            break;
        }
        case FamilyKind::sym2_1b: {
            if (n < 3) throw std::invalid_argument("sym2-1b needs n >= 3");
            if (an(2) != an(3))
                throw std::invalid_argument("sym2-1b requires alpha_{n-2} = alpha_{n-1}");
            rec.alpha_prime = twisted_shape(datum, tau, a, a1);
            rec.lambda = twisted_shape(datum, s1tau, a, a1);
            rec.mu = twisted_shape(datum, s2_s1_tau, a, a1);
            break;
        }
        case FamilyKind::wedge2_col: {
            if (n < 4) throw std::invalid_argument("wedge2-col needs n >= 4");
            if (an(1) != 0 || an(2) != 0)
                throw std::invalid_argument("wedge2-col expects alpha with at most n-2 parts");
            const WeylWord l2({n - 2, n});
            const WeylWord l3a({n - 1, n - 2, n});
            const WeylWord l3b({n - 3, n - 2, n});
            rec.alpha_prime = twisted_shape(datum, tau, a, a1);
            rec.lambda = twisted_shape(datum, l2, a, a1);
            rec.mu = twisted_shape(datum, l3a, a, a1);
            rec.nu = twisted_shape(datum, l3b, a, a1);
            bool constraint = rec.mu.part(1) + rec.mu.part(4) + 2 <= 2 * rec.mu.part(2);
            bool alpha_cond = a[static_cast<size_t>(n - 4)] >= a[static_cast<size_t>(n - 3)];
            if (constraint != alpha_cond)
                throw std::logic_error("wedge2-col constraint equivalence failed");
            break;
        }
        case FamilyKind::wedge2_2a: {
            if (n < 4) throw std::invalid_argument("wedge2-2a needs n >= 4");
            if (an(1) != an(2))
                throw std::invalid_argument("wedge2-2a requires alpha_{n-1} = alpha_n");
            const WeylWord l2({n - 2, n});
            const WeylWord l3a({n - 1, n - 2, n});
            rec.alpha_prime = twisted_shape(datum, tau, a, a1);
            rec.lambda = twisted_shape(datum, l2, a, a1);
            rec.mu = twisted_shape(datum, l3a, a, a1);
            break;
        }
        case FamilyKind::wedge2_2b: {
            if (n < 4) throw std::invalid_argument("wedge2-2b needs n >= 4");
            if (an(2) != an(3))
                throw std::invalid_argument("wedge2-2b requires alpha_{n-2} = alpha_{n-1}");
            const WeylWord l2({n - 2, n});
            rec.alpha_prime = twisted_shape(datum, WeylWord{}, a, a1);
            rec.lambda = twisted_shape(datum, tau, a, a1);
            rec.mu = twisted_shape(datum, l2, a, a1);
            break;
        }
        case FamilyKind::wedge2_2c: {
            if (n < 5) throw std::invalid_argument("wedge2-2c needs n >= 5");
            if (an(3) != an(4))
                throw std::invalid_argument("wedge2-2c requires alpha_{n-3} = alpha_{n-2}");
            const WeylWord l2({n - 2, n});
            const WeylWord l3b({n - 3, n - 2, n});
            rec.alpha_prime = twisted_shape(datum, tau, a, a1);
            rec.lambda = twisted_shape(datum, l2, a, a1);
            rec.mu = twisted_shape(datum, l3b, a, a1);
            break;
        }
        case FamilyKind::e6_beta:
            break;  // handled above
    }
    return rec;
}

}  // namespace pierirank
