#pragma once

// Text formats: H-representation files and generating-function JSON.
//
// H-rep:
//   dim 3
//   # comment
//   1 1 0 <= 1
//   1/2 0 -1 >= -3
//   0 0 1 = 1/3

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "iacpoly/ehrhart.hpp"
#include "iacpoly/errors.hpp"
#include "iacpoly/polytope.hpp"
#include "iacpoly/rational.hpp"

namespace iacpoly::io {

namespace detail {

inline std::vector<std::string> tokens(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream is{std::string(line)};
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

inline std::string_view strip_comment(std::string_view line) {
    const auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

inline std::optional<Relation> parse_relation(const std::string& s) {
    if (s == "<=") return Relation::LessEq;
    if (s == ">=") return Relation::GreaterEq;
    if (s == "=" || s == "==") return Relation::Equal;
    return std::nullopt;
}

}  // namespace detail

inline HPolytope parse_hrep(std::istream& in, const std::string& source = "<input>") {
    std::string raw;
    std::size_t lineno = 0;
    std::optional<HPolytope> p;
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError(source + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, raw)) {
        ++lineno;
        const auto tok = detail::tokens(detail::strip_comment(raw));
        if (tok.empty()) continue;
        if (!p) {
            if (tok.size() != 2 || tok[0] != "dim") throw fail("expected 'dim <d>' header");
            std::size_t d = 0;
            try {
                std::size_t used = 0;
                const long v = std::stol(tok[1], &used);
                if (used != tok[1].size() || v <= 0) throw std::invalid_argument("dim");
                d = static_cast<std::size_t>(v);
            } catch (const std::exception&) {
                throw fail("dimension must be a positive integer, got '" + tok[1] + "'");
            }
            p.emplace(d);
            continue;
        }
        const std::size_t d = p->dim();
        if (tok.size() != d + 2)
            throw fail("expected " + std::to_string(d) + " coefficients, a relation and a right-hand side");
        const auto rel = detail::parse_relation(tok[d]);
        if (!rel) throw fail("unknown relation '" + tok[d] + "'");
        QVector a(d);
        try {
            for (std::size_t j = 0; j < d; ++j) a[j] = Rational::parse(tok[j]);
            p->add({a, *rel, Rational::parse(tok[d + 1])});
        } catch (const ParseError& e) {
            throw fail(e.what());
        }
    }
    if (!p) throw ParseError(source + ": missing 'dim <d>' header");
    return *p;
}

inline HPolytope parse_hrep(std::string_view text) {
    std::istringstream is{std::string(text)};
    return parse_hrep(is);
}

inline HPolytope read_hrep_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open polytope file '" + path + "'");
    return parse_hrep(in, path);
}

inline std::string to_hrep(const HPolytope& p) {
    std::ostringstream os;
    os << "dim " << p.dim() << '\n';
    for (const auto& h : p.constraints()) {
        for (const auto& c : h.coefficients) os << c << ' ';
        os << to_string(h.relation) << ' ' << h.rhs << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Generating functions: {"num": ["1", ...], "den": ["1", "-2", ...]}

namespace detail {

inline Polynomial parse_coefficients(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) throw ParseError(std::string("generating function needs an array '") + key + "'");
    Polynomial out;
    for (const auto& v : j[key]) {
        if (v.is_string())
            out.push_back(Rational::parse(v.get<std::string>()));
        else if (v.is_number_integer())
            out.push_back(Rational(v.get<long long>()));
        else
            throw ParseError(std::string("coefficients in '") + key + "' must be rational strings or integers");
    }
    return out;
}

}  // namespace detail

inline RationalGF parse_gf_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed generating function JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("generating function JSON must be an object");
    return RationalGF(detail::parse_coefficients(j, "num"), detail::parse_coefficients(j, "den"));
}

inline RationalGF read_gf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open generating function file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_gf_json(ss.str());
}

inline std::string to_gf_json(const RationalGF& f) {
    auto list = [](const Polynomial& p) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& c : p) a.push_back(c.to_string());
        return a;
    };
    return nlohmann::json{{"num", list(f.numerator())}, {"den", list(f.denominator())}}.dump();
}

}  // namespace iacpoly::io
