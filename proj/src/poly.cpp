#include "poly.hpp"

namespace hsx {

namespace {
const Rational kZero;
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Poly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

std::optional<std::size_t> Poly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Rational Poly::eval(const Rational& x) const {
    if (coeffs_.empty()) return Rational(0);
    Rational acc = coeffs_.back();
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
        acc = acc * x + coeffs_[k];
    }
    return acc;
}

}  // namespace hsx
