#include "jsonio.hpp"

#include <json.hpp>

#include <vector>

#include "errors.hpp"

namespace hsx {

namespace {

using nlohmann::json;

json parse_json(std::string_view text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(std::string("malformed JSON for ") + what);
    return j;
}

Rational rational_from_json(const json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw ParseError("rational entries must be literal strings like \"-3/4\"");
}

std::vector<Rational> rational_list(const json& arr, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string(what) + " must be a JSON array");
    std::vector<Rational> out;
    out.reserve(arr.size());
    for (const auto& v : arr) out.push_back(rational_from_json(v));
    return out;
}

std::string_view trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return s.substr(0, 0);
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<Rational> parse_literal_list(std::string_view text, const char* what) {
    std::string_view rest = text;
    // leading whitespace decides nothing; only a '[' switches to JSON
    std::size_t first = rest.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && rest[first] == '[') {
        return rational_list(parse_json(rest, what), what);
    }
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = rest.find(',', pos);
        std::string_view item = rest.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        out.push_back(Rational::parse(trim(item)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

Poly parse_poly_text(std::string_view text) {
    return Poly(parse_literal_list(text, "polynomial coefficients"));
}

Nodes parse_nodes_text(std::string_view text) {
    return Nodes(parse_literal_list(text, "nodes"));
}

ExactMatrix parse_matrix_json(std::string_view text) {
    json j = parse_json(text, "matrix");
    if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
        throw ParseError("matrix JSON must be {\"n\": int, \"entries\": [...]}");
    }
    if (!j["n"].is_number_integer() || j["n"].get<long>() < 1) {
        throw ParseError("matrix dimension n must be a positive integer");
    }
    std::size_t n = j["n"].get<std::size_t>();
    std::vector<Rational> entries = rational_list(j["entries"], "matrix entries");
    if (entries.size() != n * n) {
        throw ParseError("matrix entries must hold n*n = " + std::to_string(n * n) +
                         " values, got " + std::to_string(entries.size()));
    }
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) m.at(i, k) = entries[i * n + k];
    return m;
}

std::pair<Poly, Nodes> parse_curve_spec_json(std::string_view text) {
    json j = parse_json(text, "curve spec");
    if (!j.is_object() || !j.contains("poly") || !j.contains("nodes")) {
        throw ParseError("curve spec JSON must be {\"poly\": [...], \"nodes\": [...]}");
    }
    return {Poly(rational_list(j["poly"], "poly")), Nodes(rational_list(j["nodes"], "nodes"))};
}

std::string matrix_to_json(const ExactMatrix& m) {
    json entries = json::array();
    for (const Rational& e : m.entries()) entries.push_back(e.str());
    json j;
    j["entries"] = std::move(entries);
    j["n"] = m.size();
    return j.dump();
}

}  // namespace hsx
