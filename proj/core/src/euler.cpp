#include "pierirank/euler.hpp"

#include <json.hpp>

#include <stdexcept>

#include "pierirank/weyl.hpp"

namespace pierirank {

using nlohmann::json;

WeightComplex WeightComplex::from_json_text(const std::string& text) {
    json j = json::parse(text);
    WeightComplex g;
    g.n_source = j.at("n_source").get<int>();
    for (const auto& t : j.at("terms")) {
        Term term;
        term.degree = t.at("degree").get<int>();
        term.twist = t.value("twist", 0);
        for (const auto& w : t.at("weights")) {
            std::vector<int64_t> parts = w.get<std::vector<int64_t>>();
            if (term.twist != 0) {
                // a determinant twist shifts all n_source entries
                parts.resize(static_cast<size_t>(g.n_source), 0);
                for (auto& p : parts) p += term.twist;
            }
            term.weights.push_back(Partition(std::move(parts)));
        }
        term.twist = 0;  // folded into the parts
        g.terms.push_back(std::move(term));
    }
    return g;
}

std::string WeightComplex::to_json_text() const {
    json j;
    j["n_source"] = n_source;
    j["terms"] = json::array();
    for (const auto& t : terms) {
        json jt;
        jt["degree"] = t.degree;
        jt["weights"] = json::array();
        for (const auto& w : t.weights) jt["weights"].push_back(w.parts());
        j["terms"].push_back(jt);
    }
    return j.dump();
}

DimPolynomial dim_poly(const Partition& nu, int n) {
    if (n <= 0) throw std::invalid_argument("n must be positive");
    if (nu.length() >= n)
        throw std::invalid_argument("dim_poly needs l(nu) <= n-1");
    const int64_t base = nu.empty() ? 0 : nu.part(1);
    std::vector<Rat> xs, ys;
    for (int i = 1; i <= n; ++i) {
        int64_t k = base + i;
        xs.emplace_back(Int(k));
        ys.emplace_back(schur_dim(lift(nu, k), n));
    }
    DimPolynomial out;
    out.poly = RatPoly::interpolate(xs, ys);
    out.threshold = base;
    Rat expected = Rat(schur_dim(nu, n - 1));
    for (int i = 1; i < n; ++i) expected /= i;
    if (out.poly.degree() != n - 1 || out.poly.leading() != expected)
        throw std::logic_error("dim_poly: leading coefficient check failed for " + nu.to_string());
    return out;
}

RatPoly euler_poly(const WeightComplex& g, int n) {
    RatPoly acc;
    for (const auto& t : g.terms) {
        for (const auto& w : t.weights) {
            if (w.length() >= n)
                throw std::invalid_argument("complex summand " + w.to_string() +
                                            " does not fit in n-1 rows");
            DimPolynomial d = dim_poly(w, n);
            if (t.degree % 2 == 0)
                acc += d.poly;
            else
                acc -= d.poly;
        }
    }
    return acc;
}

std::vector<Int> exceptional_k(const RatPoly& p, int64_t threshold) {
    if (p.is_zero())
        throw std::invalid_argument("zero Euler polynomial: the lift is inconclusive");
    std::vector<Int> out;
    for (const Int& r : p.integer_roots())
        if (r > threshold) out.push_back(r);
    return out;
}

WeightComplex koszul_complex_weights(int n, KoszulKind kind, int max_degree) {
    RootDatum datum = RootDatum::make(
        kind == KoszulKind::sym2 ? CartanType::C : CartanType::D, n);
    Weight zero(static_cast<size_t>(n), 0);
    SyzygyTable table = kostant_weights(datum, n, zero, max_degree);
    WeightComplex g;
    g.n_source = n;
    g.terms.resize(static_cast<size_t>(max_degree) + 1);
    for (int p = 0; p <= max_degree; ++p) g.terms[static_cast<size_t>(p)].degree = p;
    for (const auto& e : table.entries)
        g.terms[static_cast<size_t>(e.degree)].weights.push_back(e.shape);
    // drop trailing empty terms (the Koszul complex stops at dim U)
    while (!g.terms.empty() && g.terms.back().weights.empty()) g.terms.pop_back();
    return g;
}

}  // namespace pierirank
