#pragma once

#include <string>
#include <vector>

#include "pierirank/integers.hpp"

namespace pierirank {

/// Dense univariate polynomial over the rationals, coefficients ascending.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    static RatPoly constant(const Rat& c);

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat leading() const;
    Rat coeff(int d) const;
    Rat eval(const Rat& x) const;
    Int eval_int(const Int& x) const;  // requires an integer value

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const Rat& c);
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const Rat& c) { return a *= c; }
    bool operator==(const RatPoly&) const = default;

    /// Exact Lagrange interpolation through (xs[i], ys[i]); xs distinct.
    static RatPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

    /// All integer roots (exact).  Throws on the zero polynomial.
    std::vector<Int> integer_roots() const;

    std::string to_string(const std::string& var = "k") const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

}  // namespace pierirank
