#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "invrig/bounded_poly.hpp"
#include "invrig/finite/endo.hpp"
#include "invrig/finite/module.hpp"
#include "invrig/finite/table.hpp"
#include "invrig/free_poly.hpp"

namespace invrig {

// ---- Finite-structure file format (UTF-8 JSON; tables row-major with
// element names as entries). Printing is canonical, so parse -> print ->
// parse round-trips bit-exactly.

namespace io_detail {

using json = nlohmann::ordered_json;

inline int name_index(const std::vector<std::string>& names, const std::string& name) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown element name: " + name);
}

inline std::vector<std::vector<int>> parse_table(const json& j,
                                                 const std::vector<std::string>& rows,
                                                 const std::vector<std::string>& cols) {
    std::vector<std::vector<int>> out;
    if (!j.is_array() || j.size() != rows.size()) throw std::invalid_argument("bad table shape");
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != cols.size())
            throw std::invalid_argument("bad table shape");
        std::vector<int> r;
        for (const auto& cell : row) r.push_back(name_index(cols, cell.get<std::string>()));
        out.push_back(std::move(r));
    }
    return out;
}

inline json dump_table(const std::vector<std::vector<int>>& table,
                       const std::vector<std::string>& names) {
    json out = json::array();
    for (const auto& row : table) {
        json r = json::array();
        for (int v : row) r.push_back(names[v]);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace io_detail

inline RawTables parse_tables(const std::string& text) {
    auto j = io_detail::json::parse(text);
    RawTables t;
    t.names = j.at("elements").get<std::vector<std::string>>();
    t.add = io_detail::parse_table(j.at("add"), t.names, t.names);
    t.mul = io_detail::parse_table(j.at("mul"), t.names, t.names);
    t.zero = io_detail::name_index(t.names, j.at("zero").get<std::string>());
    t.one = io_detail::name_index(t.names, j.at("one").get<std::string>());
    return t;
}

inline std::string print_tables(const RawTables& t) {
    io_detail::json j;
    j["elements"] = t.names;
    j["add"] = io_detail::dump_table(t.add, t.names);
    j["mul"] = io_detail::dump_table(t.mul, t.names);
    j["zero"] = t.names[t.zero];
    j["one"] = t.names[t.one];
    return j.dump(2) + "\n";
}

// Module files carry the base semiring fields plus module_elements,
// madd, mzero and action (an |R| x |M| table of module-element names).
inline std::pair<RawTables, RawModuleTables> parse_module_tables(const std::string& text) {
    auto j = io_detail::json::parse(text);
    RawTables base;
    base.names = j.at("elements").get<std::vector<std::string>>();
    base.add = io_detail::parse_table(j.at("add"), base.names, base.names);
    base.mul = io_detail::parse_table(j.at("mul"), base.names, base.names);
    base.zero = io_detail::name_index(base.names, j.at("zero").get<std::string>());
    base.one = io_detail::name_index(base.names, j.at("one").get<std::string>());
    RawModuleTables m;
    m.names = j.at("module_elements").get<std::vector<std::string>>();
    m.madd = io_detail::parse_table(j.at("madd"), m.names, m.names);
    m.mzero = io_detail::name_index(m.names, j.at("mzero").get<std::string>());
    m.action = io_detail::parse_table(j.at("action"), base.names, m.names);
    return {std::move(base), std::move(m)};
}

inline std::string print_module_tables(const RawTables& base, const RawModuleTables& m) {
    io_detail::json j;
    j["elements"] = base.names;
    j["add"] = io_detail::dump_table(base.add, base.names);
    j["mul"] = io_detail::dump_table(base.mul, base.names);
    j["zero"] = base.names[base.zero];
    j["one"] = base.names[base.one];
    j["module_elements"] = m.names;
    j["madd"] = io_detail::dump_table(m.madd, m.names);
    j["mzero"] = m.names[m.mzero];
    j["action"] = io_detail::dump_table(m.action, m.names);
    return j.dump(2) + "\n";
}

// Monoid files (for endomorphism semirings): elements, add, zero only.
inline RawMonoidTables parse_monoid_tables(const std::string& text) {
    auto j = io_detail::json::parse(text);
    RawMonoidTables t;
    t.names = j.at("elements").get<std::vector<std::string>>();
    t.add = io_detail::parse_table(j.at("add"), t.names, t.names);
    t.zero = io_detail::name_index(t.names, j.at("zero").get<std::string>());
    return t;
}

// ---- Polynomial text forms. Bounded polynomials use rational
// coefficients ("3/2x^2 - x + 1"); Z0 polynomials use integer
// coefficients with "0^" denoting the old-zero coefficient
// ("3x^2 + 0^x + 1"). Univariate, variable name "x".

namespace io_detail {

struct Term {
    bool old_zero = false;  // the 0^ coefficient marker
    Rational coeff = Rational(1);
    unsigned exponent = 0;
};

inline std::vector<Term> parse_terms(const std::string& expr, bool allow_old_zero) {
    std::vector<Term> terms;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
    };
    skip_ws();
    if (i == expr.size()) throw std::invalid_argument("empty polynomial");
    bool first = true;
    while (i < expr.size()) {
        int sign = 1;
        skip_ws();
        if (expr[i] == '+' || expr[i] == '-') {
            sign = expr[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("expected + or - in polynomial");
        }
        first = false;

        Term t;
        bool saw_coeff = false;
        if (allow_old_zero && i + 1 < expr.size() && expr[i] == '0' && expr[i + 1] == '^') {
            t.old_zero = true;
            i += 2;
            saw_coeff = true;
        } else if (std::isdigit(static_cast<unsigned char>(expr[i]))) {
            std::size_t start = i;
            while (i < expr.size() &&
                   (std::isdigit(static_cast<unsigned char>(expr[i])) || expr[i] == '/'))
                ++i;
            t.coeff = Rational::parse(expr.substr(start, i - start));
            saw_coeff = true;
        }
        skip_ws();
        if (i < expr.size() && expr[i] == 'x') {
            ++i;
            t.exponent = 1;
            if (i < expr.size() && expr[i] == '^') {
                ++i;
                std::size_t start = i;
                while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) ++i;
                if (start == i) throw std::invalid_argument("missing exponent after ^");
                t.exponent = static_cast<unsigned>(std::stoul(expr.substr(start, i - start)));
            }
        } else if (!saw_coeff) {
            throw std::invalid_argument("expected coefficient or x at position " +
                                        std::to_string(i));
        }
        if (sign < 0) t.coeff = -t.coeff;
        terms.push_back(t);
        skip_ws();
    }
    return terms;
}

}  // namespace io_detail

// Parses the polynomial component of a bounded polynomial.
inline std::vector<Rational> parse_poly_coeffs(const std::string& expr) {
    std::vector<Rational> coeffs;
    for (const auto& t : io_detail::parse_terms(expr, false)) {
        if (coeffs.size() <= t.exponent) coeffs.resize(t.exponent + 1, Rational(0));
        coeffs[t.exponent] += t.coeff;
    }
    return coeffs;
}

inline BoundedPoly parse_bounded_poly(const std::string& expr, const std::string& bound) {
    Bound b = bound == "-inf" ? Bound::neg_inf() : Bound::of(std::stoi(bound));
    return BoundedPoly(parse_poly_coeffs(expr), b);
}

// Parses a univariate Z0 polynomial; "0^" marks an old-zero coefficient.
inline MultiPoly parse_z0_poly(const std::string& expr) {
    MultiPolySemiring sr{1};
    MultiPoly p = sr.zero();
    for (const auto& t : io_detail::parse_terms(expr, true)) {
        std::int64_t c;
        if (t.old_zero) {
            c = 0;
        } else {
            if (t.coeff.den() != 1)
                throw std::invalid_argument("Z0 polynomials take integer coefficients");
            c = t.coeff.num();
        }
        p = sr.add(p, MultiPoly(1, {{Exponents{t.exponent}, c}}));
    }
    return p;
}

}  // namespace invrig
