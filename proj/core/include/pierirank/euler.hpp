#pragma once

#include <string>
#include <vector>

#include "pierirank/partition.hpp"
#include "pierirank/polynomial.hpp"

namespace pierirank {

/// A complex of Schur-module terms given as data: per homological degree, a
/// list of partition summands (with an optional uniform determinant twist).
struct WeightComplex {
    struct Term {
        int degree = 0;
        std::vector<Partition> weights;
        int64_t twist = 0;
    };
    int n_source = 0;  // dimension of the space the summands live over
    std::vector<Term> terms;

    static WeightComplex from_json_text(const std::string& text);
    std::string to_json_text() const;
};

struct DimPolynomial {
    RatPoly poly;
    int64_t threshold = 0;  /// valid for k > threshold
};

/// Polynomial in k giving dim of the lifted module (k, nu_1, nu_2, ...) over
/// an n-dimensional space; exact interpolation at n consecutive values with
/// the leading coefficient checked against dim(nu over n-1)/(n-1)!.
DimPolynomial dim_poly(const Partition& nu, int n);

/// Alternating-sign sum of dim_poly over all summands of the complex.
RatPoly euler_poly(const WeightComplex& g, int n);

/// Integer roots of p that exceed the threshold, i.e. the finitely many
/// lifts the non-vanishing argument cannot certify.
std::vector<Int> exceptional_k(const RatPoly& p, int64_t threshold);

enum class KoszulKind { sym2, wedge2 };

/// Schur-summand decomposition of the exterior powers of Sym^2 or Wedge^2 of
/// an n-dimensional space, degree p term per exterior power p, produced by
/// the Kostant weight tables with trivial highest weight.
WeightComplex koszul_complex_weights(int n, KoszulKind kind, int max_degree);

}  // namespace pierirank
