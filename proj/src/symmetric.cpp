#include "symmetric.hpp"

#include "errors.hpp"

namespace hsx {

const char* strategy_name(HStrategy s) {
    switch (s) {
        case HStrategy::naive: return "naive";
        case HStrategy::recurrence: return "recurrence";
        case HStrategy::closed_form: return "closed_form";
    }
    return "?";
}

HStrategy strategy_from_name(const std::string& name) {
    if (name == "naive") return HStrategy::naive;
    if (name == "recurrence") return HStrategy::recurrence;
    if (name == "closed_form" || name == "closed") return HStrategy::closed_form;
    throw ParseError("unknown h strategy \"" + name +
                     "\" (expected naive, recurrence, or closed_form)");
}

mpz_class monomial_count(std::uint64_t d, std::size_t n) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), d + n - 1, n - 1);
    return c;
}

Rational h_naive(std::uint64_t d, const Nodes& xs, std::uint64_t cap) {
    const std::size_t n = xs.size();
    mpz_class count = monomial_count(d, n);
    if (cmp(count, cap) > 0) {
        throw EnumerationTooLargeError(
            "naive enumeration needs " + count.get_str() + " monomials (d=" + std::to_string(d) +
            ", n=" + std::to_string(n) + "), above the cap of " + std::to_string(cap));
    }
    if (d == 0) return Rational(1);
    if (n == 1) return xs[0].pow(d);

    // Powers x_i^e for e = 0..d; each monomial then costs n-1 multiplications.
    std::vector<std::vector<Rational>> pw(n);
    for (std::size_t i = 0; i < n; ++i) {
        pw[i].reserve(d + 1);
        pw[i].push_back(Rational(1));
        for (std::uint64_t e = 1; e <= d; ++e) pw[i].push_back(pw[i].back() * xs[i]);
    }

    std::vector<std::uint64_t> exp(n, 0);
    exp[0] = d;
    Rational total(0);
    for (;;) {
        Rational term = pw[0][exp[0]];
        for (std::size_t i = 1; i < n; ++i) {
            if (exp[i] != 0) term *= pw[i][exp[i]];
        }
        total += term;
        if (exp[n - 1] == d) break;
        // next exponent vector in colex order
        std::size_t i = 0;
        while (exp[i] == 0) ++i;
        std::uint64_t t = exp[i];
        exp[i] = 0;
        exp[0] = t - 1;
        exp[i + 1] += 1;
    }
    return total;
}

std::vector<Rational> h_all_up_to(std::uint64_t dmax, const Nodes& xs) {
    const std::size_t n = xs.size();
    // suffix[j] holds h_s(x_j..x_{n-1}) for the current degree s.
    std::vector<Rational> suffix(n, Rational(1));
    std::vector<Rational> out;
    out.reserve(dmax + 1);
    out.push_back(Rational(1));
    for (std::uint64_t s = 1; s <= dmax; ++s) {
        std::vector<Rational> next(n);
        for (std::size_t j = n; j-- > 0;) {
            Rational acc(0);
            for (std::size_t k = j; k < n; ++k) acc += xs[k] * suffix[k];
            next[j] = std::move(acc);
        }
        suffix = std::move(next);
        out.push_back(suffix[0]);
    }
    return out;
}

Rational h_recurrence(std::uint64_t d, const Nodes& xs) {
    return h_all_up_to(d, xs).back();
}

namespace {

// Common kernel of the closed form and the vanishing sums.
Rational power_over_difference_sum(std::uint64_t exponent, const Nodes& xs) {
    const std::size_t n = xs.size();
    if (n < 2) throw ArityError("divided-difference sums need at least 2 nodes");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (xs[i] == xs[j]) {
                throw DuplicateNodeError("nodes must be pairwise distinct: x[" +
                                         std::to_string(i + 1) + "] = x[" + std::to_string(j + 1) +
                                         "] = " + xs[i].str());
            }
        }
    }
    Rational total(0);
    for (std::size_t i = 0; i < n; ++i) {
        Rational denom(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) denom *= xs[i] - xs[j];
        }
        total += xs[i].pow(exponent) / denom;
    }
    return total;
}

}  // namespace

Rational h_closed_form(std::uint64_t m, const Nodes& xs) {
    return power_over_difference_sum(xs.size() - 1 + m, xs);
}

Rational divided_difference_power(std::uint64_t k, const Nodes& xs) {
    return power_over_difference_sum(k, xs);
}

Rational h_three_var_step(std::uint64_t m, const Nodes& xs) {
    if (xs.size() != 3) {
        throw ArityError("three-variable h step needs exactly 3 nodes, got " +
                         std::to_string(xs.size()));
    }
    if (m < 2) throw DomainError("three-variable h step needs degree m >= 2");
    std::vector<Rational> h = h_all_up_to(m - 1, xs);
    return (xs[0] + xs[1]) * h[m - 1] - xs[0] * xs[1] * h[m - 2] + xs[2].pow(m);
}

Rational h_eval(HStrategy strategy, std::uint64_t d, const Nodes& xs, std::uint64_t cap) {
    switch (strategy) {
        case HStrategy::naive: return h_naive(d, xs, cap);
        case HStrategy::recurrence: return h_recurrence(d, xs);
        case HStrategy::closed_form: return h_closed_form(d, xs);
    }
    throw DomainError("unreachable strategy");
}

}  // namespace hsx
