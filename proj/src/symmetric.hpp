#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nodes.hpp"
#include "rational.hpp"

namespace hsx {

// Evaluators for the complete homogeneous symmetric polynomial
// h_d(x_1..x_n) = sum over all monomials of total degree d, with h_0 = 1.
// Three independent strategies exist so each can serve as an oracle for
// the others.

enum class HStrategy { naive, recurrence, closed_form };

const char* strategy_name(HStrategy s);
// Accepts "naive", "recurrence", "closed_form" and the short form "closed".
HStrategy strategy_from_name(const std::string& name);

// Number of degree-d monomials in n variables: C(d+n-1, n-1).
mpz_class monomial_count(std::uint64_t d, std::size_t n);

inline constexpr std::uint64_t kDefaultNaiveCap = std::uint64_t{1} << 20;

// Direct transcription of the definition: enumerate every exponent vector
// (d_1..d_n) with sum d in colexicographic order and add the monomials.
// Refuses inputs whose monomial count exceeds `cap`.
Rational h_naive(std::uint64_t d, const Nodes& xs, std::uint64_t cap = kDefaultNaiveCap);

// Bottom-up dynamic programming over suffixes, using the grouping recurrence
// h_s(x_j..x_n) = sum_{k>=j} x_k h_{s-1}(x_k..x_n). Works with repeated nodes.
Rational h_recurrence(std::uint64_t d, const Nodes& xs);

// All of h_0..h_dmax from one DP pass; h_all_up_to(d, xs)[d] == h_recurrence(d, xs).
std::vector<Rational> h_all_up_to(std::uint64_t dmax, const Nodes& xs);

// Divided-difference closed form: h_m = sum_i x_i^{n+m-1} / prod_{j!=i}(x_i - x_j).
// Needs n >= 2 and pairwise-distinct nodes.
Rational h_closed_form(std::uint64_t m, const Nodes& xs);

// Three-variable step h_m = (x_1+x_2) h_{m-1} - x_1 x_2 h_{m-2} + x_3^m,
// with the lower-degree terms evaluated via h_recurrence. Requires n = 3, m >= 2.
Rational h_three_var_step(std::uint64_t m, const Nodes& xs);

// sum_i x_i^k / prod_{j!=i}(x_i - x_j) for pairwise-distinct nodes, n >= 2.
// Vanishes for 0 <= k <= n-2 and reproduces h_m at k = n-1+m.
Rational divided_difference_power(std::uint64_t k, const Nodes& xs);

Rational h_eval(HStrategy strategy, std::uint64_t d, const Nodes& xs,
                std::uint64_t cap = kDefaultNaiveCap);

}  // namespace hsx
