#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "invrig/core.hpp"
#include "invrig/rational.hpp"

namespace invrig {

// Degree bound: a natural number or -infinity (the degree of the zero
// polynomial).
struct Bound {
    bool finite = false;
    int value = 0;  // meaningful only when finite

    static Bound neg_inf() { return {false, 0}; }
    static Bound of(int n) { return {true, n}; }

    friend bool operator==(const Bound&, const Bound&) = default;
    std::string str() const { return finite ? std::to_string(value) : "-inf"; }
};

inline Bound max(const Bound& a, const Bound& b) {
    if (!a.finite) return b;
    if (!b.finite) return a;
    return Bound::of(std::max(a.value, b.value));
}

inline Bound operator+(const Bound& a, const Bound& b) {
    if (!a.finite || !b.finite) return Bound::neg_inf();
    return Bound::of(a.value + b.value);
}

// A polynomial together with an upper bound on its degree: the model of a
// coefficient array whose trailing entries may silently be zero. The
// polynomial component is kept canonical (trailing zero coefficients
// trimmed) for exact equality; the bound is never lowered by arithmetic.
class BoundedPoly {
public:
    BoundedPoly() = default;  // the zero (0, -inf)

    // coeffs[i] is the coefficient of x^i.
    BoundedPoly(std::vector<Rational> coeffs, Bound bound)
        : coeffs_(std::move(coeffs)), bound_(bound) {
        trim();
        if (!leq_degree(bound_)) throw std::invalid_argument("bound violated");
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Bound& bound() const { return bound_; }

    Bound degree() const {
        if (coeffs_.empty()) return Bound::neg_inf();
        return Bound::of(static_cast<int>(coeffs_.size()) - 1);
    }

    friend bool operator==(const BoundedPoly&, const BoundedPoly&) = default;

private:
    bool leq_degree(const Bound& b) const {
        Bound d = degree();
        if (!d.finite) return true;
        return b.finite && d.value <= b.value;
    }
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == Rational(0)) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
    Bound bound_ = Bound::neg_inf();
};

namespace poly_detail {

inline std::vector<Rational> add(const std::vector<Rational>& p, const std::vector<Rational>& q) {
    std::vector<Rational> r(std::max(p.size(), q.size()), Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) r[i] += p[i];
    for (std::size_t i = 0; i < q.size(); ++i) r[i] += q[i];
    return r;
}

inline std::vector<Rational> mul(const std::vector<Rational>& p, const std::vector<Rational>& q) {
    if (p.empty() || q.empty()) return {};
    std::vector<Rational> r(p.size() + q.size() - 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

// Renders a dense coefficient list as "3/2x^2 - x + 1"; the zero
// polynomial prints as "0".
inline std::string show(const std::vector<Rational>& coeffs) {
    if (coeffs.empty()) return "0";
    std::string out;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        const Rational& c = coeffs[static_cast<std::size_t>(i)];
        if (c == Rational(0)) continue;
        Rational a = c;
        if (out.empty()) {
            if (a < Rational(0)) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < Rational(0) ? " - " : " + ";
            if (a < Rational(0)) a = -a;
        }
        if (i == 0 || a != Rational(1)) out += a.str();
        if (i > 0) {
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace poly_detail

// The inverse semiring of bounded polynomials over the rationals:
//   (p,n) + (q,m) = (p+q, max(n,m)),  (p,n)(q,m) = (pq, n+m),
//   -(p,n) = (-p,n),  0 = (0,-inf),  1 = (1,0).
// Neither a ring nor an idempotent semiring; E-unitary.
struct BoundedPolySemiring {
    using value_type = BoundedPoly;

    value_type add(const value_type& x, const value_type& y) const {
        return BoundedPoly(poly_detail::add(x.coeffs(), y.coeffs()), max(x.bound(), y.bound()));
    }
    value_type mul(const value_type& x, const value_type& y) const {
        return BoundedPoly(poly_detail::mul(x.coeffs(), y.coeffs()), x.bound() + y.bound());
    }
    value_type neg(const value_type& x) const {
        std::vector<Rational> c = x.coeffs();
        for (auto& a : c) a = -a;
        return BoundedPoly(std::move(c), x.bound());
    }
    value_type zero() const { return BoundedPoly(); }
    value_type one() const { return BoundedPoly({Rational(1)}, Bound::of(0)); }
    bool eq(const value_type& x, const value_type& y) const { return x == y; }
    std::string show(const value_type& x) const {
        return "(" + poly_detail::show(x.coeffs()) + ", bound " + x.bound().str() + ")";
    }
};

static_assert(InverseSemiring<BoundedPolySemiring>);

}  // namespace invrig
