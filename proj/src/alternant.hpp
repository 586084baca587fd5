#pragma once

#include <cstdint>

#include "matrix.hpp"
#include "nodes.hpp"
#include "rational.hpp"
#include "symmetric.hpp"

namespace hsx {

// Exact determinant by fraction-free Bareiss elimination over the integers,
// after clearing each row's denominators (scale- and sign-corrected). This is
// the verification oracle for every determinant identity in the project.
Rational det_bareiss(const ExactMatrix& m);

// Plain rational Gaussian elimination; slower, kept as an independent
// cross-check of the Bareiss path.
Rational det_gauss(const ExactMatrix& m);

inline Rational det_oracle(const ExactMatrix& m) { return det_bareiss(m); }

// Row i = (1, x_i, x_i^2, ..., x_i^{n-1}).
ExactMatrix vandermonde_matrix(const Nodes& xs);

// prod_{i<j} (x_j - x_i); 1 for a single node, 0 when nodes repeat.
Rational difference_product(const Nodes& xs);

// Difference product of the subtuple omitting position `omit` (0-based),
// preserving the order of the remaining nodes.
Rational difference_product_omit(const Nodes& xs, std::size_t omit);

// Row i = (1, x_i, ..., x_i^{n-2}, x_i^{n+m-1}); coincides with the
// Vandermonde matrix at m = 0. Requires n >= 2.
ExactMatrix alternant_matrix(std::uint64_t m, const Nodes& xs);

// Cofactor expansion of det(alternant_matrix) along its last column:
// sum_k (-1)^{n-k} x_k^{n+m-1} * difference_product_omit(xs, k-1), k = 1..n.
Rational alternant_cofactor_sum(std::uint64_t m, const Nodes& xs);

enum class HLeg { recurrence, closed_form };

// True iff det(alternant_matrix(m, xs)) equals difference_product(xs) * h_m(xs),
// with both sides computed by independent code paths. The recurrence leg
// tolerates repeated nodes (both sides are then 0).
bool alternant_identity_holds(std::uint64_t m, const Nodes& xs, HLeg leg = HLeg::recurrence);

}  // namespace hsx
