#include "alternant.hpp"

#include <string>
#include <vector>

namespace hsx {

Rational det_bareiss(const ExactMatrix& m) {
    const std::size_t n = m.size();

    // Clear denominators row by row: row i scaled by the lcm of its entry
    // denominators gives an integer matrix; det(m) = det(int matrix) / scale.
    std::vector<mpz_class> a(n * n);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_class g;
            mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
            l = g;
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& e = m.at(i, j);
            a[i * n + j] = e.num() * (l / e.den());
        }
        scale *= l;
    }

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a[k * n + k]) == 0) {
            std::size_t pivot_row = k;
            for (std::size_t r = k + 1; r < n; ++r) {
                if (sgn(a[r * n + k]) != 0) {
                    pivot_row = r;
                    break;
                }
            }
            if (pivot_row == k) return Rational(0);  // whole column zero: singular
            for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[pivot_row * n + j]);
            sign = -sign;
        }
        const mpz_class& pivot = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = pivot * a[i * n + j] - a[i * n + k] * a[k * n + j];
                mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = pivot;
    }

    mpz_class det_int = a[n * n - 1];
    if (sign < 0) det_int = -det_int;
    return Rational(std::move(det_int), std::move(scale));
}

Rational det_gauss(const ExactMatrix& m) {
    const std::size_t n = m.size();
    std::vector<Rational> a(m.entries());
    Rational det(1);
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < n && a[pivot_row * n + k].is_zero()) ++pivot_row;
        if (pivot_row == n) return Rational(0);
        if (pivot_row != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[pivot_row * n + j]);
            sign = -sign;
        }
        const Rational pivot = a[k * n + k];
        det *= pivot;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i * n + k].is_zero()) continue;
            Rational f = a[i * n + k] / pivot;
            for (std::size_t j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
        }
    }
    return sign < 0 ? -det : det;
}

ExactMatrix vandermonde_matrix(const Nodes& xs) {
    const std::size_t n = xs.size();
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational p(1);
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = p;
            if (j + 1 < n) p *= xs[i];
        }
    }
    return m;
}

Rational difference_product(const Nodes& xs) {
    Rational prod(1);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            prod *= xs[j] - xs[i];
            if (prod.is_zero()) return prod;
        }
    }
    return prod;
}

Rational difference_product_omit(const Nodes& xs, std::size_t omit) {
    const std::size_t n = xs.size();
    if (omit >= n) {
        throw IndexOutOfRangeError("omit index " + std::to_string(omit) +
                                   " out of range for " + std::to_string(n) + " nodes");
    }
    Rational prod(1);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == omit) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == omit) continue;
            prod *= xs[j] - xs[i];
        }
    }
    return prod;
}

ExactMatrix alternant_matrix(std::uint64_t m, const Nodes& xs) {
    const std::size_t n = xs.size();
    if (n < 2) throw ArityError("alternant matrix needs at least 2 nodes");
    ExactMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational p(1);
        for (std::size_t j = 0; j + 1 < n; ++j) {
            a.at(i, j) = p;
            p *= xs[i];
        }
        a.at(i, n - 1) = xs[i].pow(n - 1 + m);
    }
    return a;
}

Rational alternant_cofactor_sum(std::uint64_t m, const Nodes& xs) {
    const std::size_t n = xs.size();
    if (n < 2) throw ArityError("alternant cofactor sum needs at least 2 nodes");
    Rational total(0);
    for (std::size_t k = 0; k < n; ++k) {
        Rational term = xs[k].pow(n - 1 + m) * difference_product_omit(xs, k);
        if ((n - 1 - k) % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

bool alternant_identity_holds(std::uint64_t m, const Nodes& xs, HLeg leg) {
    Rational lhs = det_bareiss(alternant_matrix(m, xs));
    Rational h = leg == HLeg::recurrence ? h_recurrence(m, xs) : h_closed_form(m, xs);
    return lhs == difference_product(xs) * h;
}

}  // namespace hsx
