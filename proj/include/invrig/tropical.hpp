#pragma once

#include <optional>
#include <string>

#include "invrig/core.hpp"
#include "invrig/rational.hpp"

namespace invrig {

// The tropical semiring (Q u {inf}, min, inf, +, 0) over exact rationals.
// Addition is min and multiplication is the usual +; the carrier is exact,
// so the equational law suite applies. An idempotent semiring: every
// element is its own additive inverse.
struct TropicalSemiring {
    using value_type = std::optional<Rational>;  // nullopt = infinity

    value_type add(const value_type& x, const value_type& y) const {
        if (!x) return y;
        if (!y) return x;
        return *x < *y ? x : y;
    }
    value_type mul(const value_type& x, const value_type& y) const {
        if (!x || !y) return std::nullopt;
        return *x + *y;
    }
    value_type neg(const value_type& x) const { return x; }
    value_type zero() const { return std::nullopt; }
    value_type one() const { return Rational(0); }
    bool eq(const value_type& x, const value_type& y) const {
        if (!x || !y) return !x && !y;
        return *x == *y;
    }
    std::string show(const value_type& x) const {
        if (!x) return "inf";
        return x->str();
    }
};

static_assert(InverseSemiring<TropicalSemiring>);

}  // namespace invrig
