#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace hsx {

// Ordered tuple (x_1, ..., x_n) of sample values, n >= 1. Values may repeat;
// operations that need pairwise-distinct nodes check distinct() themselves.
class Nodes {
public:
    explicit Nodes(std::vector<Rational> values) : values_(std::move(values)) {
        if (values_.empty()) throw ArityError("node tuple must contain at least one value");
    }

    std::size_t size() const { return values_.size(); }
    const Rational& operator[](std::size_t i) const { return values_[i]; }
    const std::vector<Rational>& values() const { return values_; }

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    bool distinct() const {
        for (std::size_t i = 0; i < values_.size(); ++i)
            for (std::size_t j = i + 1; j < values_.size(); ++j)
                if (values_[i] == values_[j]) return false;
        return true;
    }

    // "[x_1, x_2, ...]" with exact literals; used in diagnostics and
    // counterexample serialization.
    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i) out += ", ";
            out += values_[i].str();
        }
        out += "]";
        return out;
    }

private:
    std::vector<Rational> values_;
};

}  // namespace hsx
