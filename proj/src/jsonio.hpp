#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "matrix.hpp"
#include "nodes.hpp"
#include "poly.hpp"

namespace hsx {

// Text forms shared by the CLI and file formats. Rational literals follow
// `[-]digits[/digits]`. A coefficient/node list is either a comma-separated
// run of literals ("2,-3,1") or a JSON array of literal strings.

Poly parse_poly_text(std::string_view text);
Nodes parse_nodes_text(std::string_view text);

// {"n": int, "entries": [rational literals, row-major]}
ExactMatrix parse_matrix_json(std::string_view text);

// {"poly": [rational literals], "nodes": [rational literals]}
std::pair<Poly, Nodes> parse_curve_spec_json(std::string_view text);

std::string matrix_to_json(const ExactMatrix& m);

}  // namespace hsx
