#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace hsx {

// Univariate polynomial with rational coefficients, index = power.
// The zero polynomial has an empty coefficient list and no degree.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // Coefficient of t^k; 0 past the degree.
    const Rational& coeff(std::size_t k) const;

    std::optional<std::size_t> degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    // Horner evaluation.
    Rational eval(const Rational& x) const;

private:
    std::vector<Rational> coeffs_;  // trailing zeros stripped
};

}  // namespace hsx
