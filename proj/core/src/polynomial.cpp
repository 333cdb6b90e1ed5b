#include "pierirank/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pierirank {

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::constant(const Rat& c) { return RatPoly(std::vector<Rat>{c}); }

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat RatPoly::leading() const {
    if (coeffs_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rat RatPoly::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<size_t>(d)];
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int RatPoly::eval_int(const Int& x) const {
    Rat v = eval(Rat(x));
    v.canonicalize();
    if (v.get_den() != 1) throw std::runtime_error("polynomial value is not an integer");
    return v.get_num();
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rat& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

RatPoly RatPoly::interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw std::invalid_argument("interpolate: bad node count");
    const size_t m = xs.size();
    std::vector<Rat> acc(m, Rat(0));
    std::vector<Rat> basis;
    for (size_t j = 0; j < m; ++j) {
        basis.assign(1, Rat(1));
        Rat denom(1);
        for (size_t i = 0; i < m; ++i) {
            if (i == j) continue;
            // basis *= (x - xs[i])
            basis.push_back(Rat(0));
            for (size_t d = basis.size() - 1; d > 0; --d)
                basis[d] = basis[d - 1] - xs[i] * basis[d];
            basis[0] = -xs[i] * basis[0];
            denom *= xs[j] - xs[i];
            if (denom == 0) throw std::invalid_argument("interpolate: repeated node");
        }
        Rat scale = ys[j] / denom;
        for (size_t d = 0; d < basis.size(); ++d) acc[d] += scale * basis[d];
    }
    return RatPoly(std::move(acc));
}

std::vector<Int> RatPoly::integer_roots() const {
    if (is_zero()) throw std::invalid_argument("zero polynomial: every integer is a root");
    // scale to a primitive integer polynomial
    Int den(1);
    for (const auto& c : coeffs_) den = lcm(den, Int(c.get_den()));
    std::vector<Int> ic(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        Rat scaled = coeffs_[i] * Rat(den);
        scaled.canonicalize();
        ic[i] = scaled.get_num();
    }
    // factor out x^m
    size_t m = 0;
    while (m < ic.size() && ic[m] == 0) ++m;
    std::set<Int> roots;
    if (m > 0) roots.insert(Int(0));
    std::vector<Int> red(ic.begin() + static_cast<long>(m), ic.end());
    if (red.size() <= 1) return {roots.begin(), roots.end()};

    auto eval_at = [&](const Int& x) {
        Int acc = 0;
        for (auto it = red.rbegin(); it != red.rend(); ++it) acc = acc * x + *it;
        return acc;
    };

    // Cauchy bound: |root| <= 1 + max|a_i| / |a_d|
    Int maxabs = 0;
    for (const auto& c : red) {
        Int a = abs(c);
        if (a > maxabs) maxabs = a;
    }
    Int bound = 1 + ceil_div(maxabs, abs(red.back()));

    if (bound <= 2'000'000) {
        for (Int x = -bound; x <= bound; ++x)
            if (x != 0 && eval_at(x) == 0) roots.insert(x);
        return {roots.begin(), roots.end()};
    }

    // divisor search on the constant term (nonzero by construction)
    Int c0 = abs(red.front());
    std::vector<Int> divisors{1};
    Int rem = c0;
    for (Int p = 2; p * p <= rem && p < 2'000'000; ++p) {
        if (rem % p != 0) continue;
        size_t base = divisors.size();
        Int pk = 1;
        while (rem % p == 0) {
            rem = divexact(rem, p);
            pk *= p;
            for (size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * pk);
        }
    }
    if (rem > 1) {
        if (rem > Int("1000000000000000000"))
            throw std::runtime_error("integer root search: constant term too hard to factor");
        size_t base = divisors.size();
        for (size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * rem);
    }
    for (const Int& dv : divisors) {
        if (dv > bound) continue;
        if (eval_at(dv) == 0) roots.insert(dv);
        if (eval_at(-dv) == 0) roots.insert(-dv);
    }
    return {roots.begin(), roots.end()};
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        Rat c = coeff(d);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = abs(c);
        bool unit = a == 1 && d > 0;
        if (!unit) os << a.get_str();
        if (d > 0) {
            if (!unit) os << "*";
            os << var;
            if (d > 1) os << "^" << d;
        }
        first = false;
    }
    return os.str();
}

}  // namespace pierirank
