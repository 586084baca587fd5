#include "rational.hpp"

#include <cctype>

#include "errors.hpp"

namespace hsx {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw ZeroDenominatorError("rational denominator is zero");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) {
    if (sgn(den) == 0) throw ZeroDenominatorError("rational denominator is zero");
    q_ = mpq_class(std::move(num), std::move(den));
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool neg = false;
    if (!body.empty() && body.front() == '-') {
        neg = true;
        body.remove_prefix(1);
    }
    std::string_view num_part = body;
    std::string_view den_part;
    bool has_den = false;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num_part = body.substr(0, slash);
        den_part = body.substr(slash + 1);
        has_den = true;
    }
    if (!all_digits(num_part) || (has_den && !all_digits(den_part))) {
        throw ParseError("malformed rational literal: \"" + std::string(text) + "\"");
    }
    mpz_class num(std::string(num_part), 10);
    mpz_class den = 1;
    if (has_den) {
        den = mpz_class(std::string(den_part), 10);
        if (sgn(den) == 0) {
            throw ZeroDenominatorError("zero denominator in rational literal: \"" +
                                       std::string(text) + "\"");
        }
    }
    if (neg) num = -num;
    return Rational(std::move(num), std::move(den));
}

Rational Rational::abs() const {
    Rational r = *this;
    r.q_ = ::abs(r.q_);
    return r;
}

Rational Rational::pow(std::uint64_t e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), e);
    Rational r;
    r.q_ = mpq_class(std::move(num), std::move(den));  // stays reduced: gcd(n,d)=1 implies gcd(n^e,d^e)=1
    return r;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.q_ = -r.q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division of rationals by zero");
    q_ /= o.q_;
    return *this;
}

}  // namespace hsx
