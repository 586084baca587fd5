#pragma once

#include "matrix.hpp"
#include "nodes.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace hsx {

// Points (x_i, p(x_i)) for n = 2, or more generally rows of the curve matrix
// (1, x_i, ..., x_i^{n-2}, p(x_i)) for vertices on the polynomial space curve
// (t, t^2, ..., t^{n-2}, p(t)).
struct CurveSimplexSpec {
    Poly poly;
    Nodes nodes;

    CurveSimplexSpec(Poly p, Nodes xs) : poly(std::move(p)), nodes(std::move(xs)) {
        if (nodes.size() < 2) throw ArityError("curve simplex needs at least 2 nodes");
    }
};

struct VolumeResult {
    Rational det;                     // signed det of the curve matrix
    Rational parallelepiped_volume;   // |det|
    Rational simplex_volume;          // |det| / n!
    Rational difference_product;      // factored piece: prod_{i<j}(x_j - x_i)
    Rational h_sum;                   // factored piece: sum_{k=n-1}^{N} a_k h_{k-n+1}
};

// Signed triangle area 1/2 ((x3-x2)p(x1) - (x3-x1)p(x2) + (x2-x1)p(x3));
// equals half the determinant of the 3x3 curve matrix. Exactly 3 nodes.
Rational signed_area_direct(const Poly& p, const Nodes& xs);

// Unsigned area from the factored form
// 1/2 |x1-x2||x1-x3||x2-x3| |sum_{k=2}^{N} a_k h_{k-2}(xs)|, no determinant.
// Polynomials of degree <= 1 (and the zero polynomial) give area 0.
Rational area_factored(const Poly& p, const Nodes& xs);

// The n x n matrix with row i = (1, x_i, ..., x_i^{n-2}, p(x_i)). n >= 2.
ExactMatrix curve_matrix(const Poly& p, const Nodes& xs);

// det from the factored form d(xs) * sum_{k=n-1}^{N} a_k h_{k-n+1}(xs);
// degree N <= n-2 (or the zero polynomial) forces det = 0 with an empty sum.
VolumeResult volume_factored(const CurveSimplexSpec& spec);

// Same result shape, det taken from the Bareiss oracle on the curve matrix;
// the factored pieces are still filled in from independent computations.
VolumeResult volume_direct(const CurveSimplexSpec& spec);

}  // namespace hsx
