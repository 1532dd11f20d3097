#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "invrig/adjoin.hpp"
#include "invrig/bounded_poly.hpp"
#include "invrig/core.hpp"
#include "invrig/integers.hpp"

namespace invrig {

// The initial inverse semiring: the integers with a fresh zero adjoined.
// The old ring zero prints as "0^" and the adjoined zero as "0".
using Z0 = AdjoinedZero<IntegerRing>;
using Z0Element = Z0::value_type;  // nullopt = adjoined zero

inline Z0 z0() { return Z0{IntegerRing{}}; }

// The unique homomorphism Z0 -> R: positive n to a sum of ones, negative
// n to a sum of negated ones, the old zero 0^ to 0_1 and the adjoined
// zero to 0.
template <InverseSemiring R>
typename R::value_type initial_hom(const R& r, const Z0Element& n) {
    if (!n) return r.zero();
    if (*n == 0) return idem(r, r.one());
    typename R::value_type unit = *n > 0 ? r.one() : r.neg(r.one());
    std::int64_t count = *n > 0 ? *n : -*n;
    typename R::value_type acc = unit;
    for (std::int64_t i = 1; i < count; ++i) acc = r.add(acc, unit);
    return acc;
}

using Exponents = std::vector<unsigned>;

// A sparse multivariate polynomial with coefficients in Z0. An absent
// exponent is the adjoined-zero coefficient; a stored 0 is the old ring
// zero 0^, deliberately kept because it carries degree information (it
// records that a coefficient was computed, not that it was never there).
class MultiPoly {
public:
    explicit MultiPoly(std::size_t nvars = 1) : nvars_(nvars) {}
    MultiPoly(std::size_t nvars, std::map<Exponents, std::int64_t> terms)
        : nvars_(nvars), terms_(std::move(terms)) {
        for (const auto& [e, c] : terms_)
            if (e.size() != nvars_) throw std::invalid_argument("exponent arity mismatch");
    }

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, std::int64_t>& terms() const { return terms_; }

    Z0Element coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        if (it == terms_.end()) return std::nullopt;
        return it->second;
    }

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    std::size_t nvars_;
    std::map<Exponents, std::int64_t> terms_;
};

// Z0[x_1..x_n]: the free commutative inverse semiring on n generators.
struct MultiPolySemiring {
    using value_type = MultiPoly;

    std::size_t nvars = 1;

    value_type add(const value_type& x, const value_type& y) const {
        check(x), check(y);
        auto terms = x.terms();
        for (const auto& [e, c] : y.terms()) {
            auto [it, inserted] = terms.emplace(e, c);
            if (!inserted) it->second += c;
        }
        return MultiPoly(nvars, std::move(terms));
    }
    value_type mul(const value_type& x, const value_type& y) const {
        check(x), check(y);
        std::map<Exponents, std::int64_t> terms;
        for (const auto& [e, c] : x.terms())
            for (const auto& [f, d] : y.terms()) {
                Exponents g(nvars);
                for (std::size_t i = 0; i < nvars; ++i) g[i] = e[i] + f[i];
                auto [it, inserted] = terms.emplace(g, c * d);
                if (!inserted) it->second += c * d;
            }
        return MultiPoly(nvars, std::move(terms));
    }
    value_type neg(const value_type& x) const {
        check(x);
        auto terms = x.terms();
        for (auto& [e, c] : terms) c = -c;
        return MultiPoly(nvars, std::move(terms));
    }
    value_type zero() const { return MultiPoly(nvars); }
    value_type one() const { return MultiPoly(nvars, {{Exponents(nvars, 0), 1}}); }
    bool eq(const value_type& x, const value_type& y) const { return x == y; }

    value_type variable(std::size_t i) const {
        Exponents e(nvars, 0);
        e.at(i) = 1;
        return MultiPoly(nvars, {{e, 1}});
    }
    value_type constant(std::int64_t c) const { return MultiPoly(nvars, {{Exponents(nvars, 0), c}}); }

    // Terms print in descending exponent order; a 0^ coefficient prints
    // as "0^", e.g. "0^x^2 + x".
    std::string show(const value_type& p) const {
        if (p.terms().empty()) return "0";
        std::string out;
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            const auto& [e, c] = *it;
            std::int64_t a = c;
            if (out.empty()) {
                if (a < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            bool constant_term = true;
            for (unsigned k : e)
                if (k > 0) constant_term = false;
            if (c == 0)
                out += "0^";
            else if (a != 1 || constant_term)
                out += std::to_string(a);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                out += nvars == 1 ? "x" : "x" + std::to_string(i + 1);
                if (e[i] > 1) out += "^" + std::to_string(e[i]);
            }
        }
        return out;
    }

private:
    void check(const value_type& p) const {
        if (p.nvars() != nvars) throw std::invalid_argument("variable-count mismatch");
    }
};

static_assert(InverseSemiring<MultiPolySemiring>);

// Evaluation at an assignment: the unique homomorphism extending
// initial_hom and sending x_i to the i-th assigned element.
template <InverseSemiring R>
typename R::value_type eval(const MultiPoly& p, const R& r,
                            const std::vector<typename R::value_type>& assignment) {
    if (assignment.size() != p.nvars()) throw std::invalid_argument("assignment arity mismatch");
    typename R::value_type acc = r.zero();
    for (const auto& [e, c] : p.terms()) {
        typename R::value_type term = initial_hom(r, Z0Element(c));
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) term = r.mul(term, assignment[i]);
        acc = r.add(acc, term);
    }
    return acc;
}

// An integer polynomial: the target of the ring reflection. Zero
// coefficients are not stored.
class IntPoly {
public:
    explicit IntPoly(std::size_t nvars = 1) : nvars_(nvars) {}
    IntPoly(std::size_t nvars, std::map<Exponents, std::int64_t> terms)
        : nvars_(nvars), terms_(std::move(terms)) {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, std::int64_t>& terms() const { return terms_; }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    friend IntPoly operator+(const IntPoly& x, const IntPoly& y) {
        auto terms = x.terms_;
        for (const auto& [e, c] : y.terms_) {
            auto [it, inserted] = terms.emplace(e, c);
            if (!inserted) it->second += c;
        }
        return IntPoly(x.nvars_, std::move(terms));
    }
    friend IntPoly operator*(const IntPoly& x, const IntPoly& y) {
        std::map<Exponents, std::int64_t> terms;
        for (const auto& [e, c] : x.terms_)
            for (const auto& [f, d] : y.terms_) {
                Exponents g(x.nvars_);
                for (std::size_t i = 0; i < x.nvars_; ++i) g[i] = e[i] + f[i];
                auto [it, inserted] = terms.emplace(g, c * d);
                if (!inserted) it->second += c * d;
            }
        return IntPoly(x.nvars_, std::move(terms));
    }
    IntPoly operator-() const {
        auto terms = terms_;
        for (auto& [e, c] : terms) c = -c;
        return IntPoly(nvars_, std::move(terms));
    }

private:
    std::size_t nvars_;
    std::map<Exponents, std::int64_t> terms_;
};

// Ring reflection: identify the adjoined zero with the old zero in every
// coefficient. A homomorphism onto Z[x_1..x_n].
inline IntPoly ring_reflection(const MultiPoly& p) {
    return IntPoly(p.nvars(), p.terms());
}

// A finite set of exponent vectors: the free idempotent semiring
// P_fin(N^n). Addition is union; multiplication adds exponent vectors
// elementwise across the two sets.
class ExponentSet {
public:
    explicit ExponentSet(std::size_t nvars = 1) : nvars_(nvars) {}
    ExponentSet(std::size_t nvars, std::set<Exponents> elems)
        : nvars_(nvars), elems_(std::move(elems)) {}

    std::size_t nvars() const { return nvars_; }
    const std::set<Exponents>& elems() const { return elems_; }

    friend bool operator==(const ExponentSet&, const ExponentSet&) = default;

    friend ExponentSet operator+(const ExponentSet& x, const ExponentSet& y) {
        auto out = x.elems_;
        out.insert(y.elems_.begin(), y.elems_.end());
        return ExponentSet(x.nvars_, std::move(out));
    }
    friend ExponentSet operator*(const ExponentSet& x, const ExponentSet& y) {
        std::set<Exponents> out;
        for (const auto& e : x.elems_)
            for (const auto& f : y.elems_) {
                Exponents g(x.nvars_);
                for (std::size_t i = 0; i < x.nvars_; ++i) g[i] = e[i] + f[i];
                out.insert(std::move(g));
            }
        return ExponentSet(x.nvars_, std::move(out));
    }

private:
    std::size_t nvars_;
    std::set<Exponents> elems_;
};

// Idempotent reflection: the support of p, equivalently the support of
// idem(p). "Truly nonzero" coefficient means any stored coefficient,
// including 0^; only the adjoined zero is absent.
inline ExponentSet idem_reflection(const MultiPoly& p) {
    std::set<Exponents> out;
    for (const auto& [e, c] : p.terms()) out.insert(e);
    return ExponentSet(p.nvars(), std::move(out));
}

// The quotient of Z0[x] onto bounded polynomials: the integer polynomial
// together with the largest exponent carrying any coefficient.
inline BoundedPoly to_bounded(const MultiPoly& p) {
    if (p.nvars() != 1) throw std::invalid_argument("to_bounded: univariate polynomials only");
    std::vector<Rational> coeffs;
    Bound bound = Bound::neg_inf();
    for (const auto& [e, c] : p.terms()) {
        bound = max(bound, Bound::of(static_cast<int>(e[0])));
        if (c != 0) {
            if (coeffs.size() <= e[0]) coeffs.resize(e[0] + 1, Rational(0));
            coeffs[e[0]] = Rational(c);
        }
    }
    return BoundedPoly(std::move(coeffs), bound);
}

}  // namespace invrig
