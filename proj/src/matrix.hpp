#pragma once

#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace hsx {

// Dense square matrix of rationals, row-major.
class ExactMatrix {
public:
    explicit ExactMatrix(std::size_t n) : n_(n), entries_(n * n) {
        if (n == 0) throw ArityError("matrix dimension must be at least 1");
    }

    static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        ExactMatrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) {
                throw ArityError("matrix rows must all have length n");
            }
            for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t size() const { return n_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    const std::vector<Rational>& entries() const { return entries_; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < n_; ++j) std::swap(at(a, j), at(b, j));
    }

    void scale_row(std::size_t i, const Rational& c) {
        for (std::size_t j = 0; j < n_; ++j) at(i, j) *= c;
    }

private:
    std::size_t n_;
    std::vector<Rational> entries_;
};

}  // namespace hsx
