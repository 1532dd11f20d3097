#pragma once

#include <optional>
#include <string>

#include "invrig/core.hpp"

namespace invrig {

// R with a fresh zero adjoined. The new 0 (represented as an empty
// optional) is the additive identity and is multiplicatively absorbing;
// everything else delegates to R. The old zero of R survives as an
// ordinary element, written "0^" in output.
template <InverseSemiring R>
struct AdjoinedZero {
    using inner_type = typename R::value_type;
    using value_type = std::optional<inner_type>;

    R base;

    value_type add(const value_type& x, const value_type& y) const {
        if (!x) return y;
        if (!y) return x;
        return base.add(*x, *y);
    }
    value_type mul(const value_type& x, const value_type& y) const {
        if (!x || !y) return std::nullopt;
        return base.mul(*x, *y);
    }
    value_type neg(const value_type& x) const {
        if (!x) return std::nullopt;
        return base.neg(*x);
    }
    value_type zero() const { return std::nullopt; }
    value_type one() const { return base.one(); }
    bool eq(const value_type& x, const value_type& y) const {
        if (!x || !y) return !x && !y;
        return base.eq(*x, *y);
    }
    std::string show(const value_type& x) const {
        if (!x) return "0";
        if (base.eq(*x, base.zero())) return "0^";
        return base.show(*x);
    }

    value_type lift(const inner_type& x) const { return x; }
    // The zero of the underlying structure, distinct from the adjoined zero.
    value_type old_zero() const { return base.zero(); }
};

template <InverseSemiring R>
AdjoinedZero<R> adjoin_zero(R base) {
    return AdjoinedZero<R>{std::move(base)};
}

// R_infinity for a ring R: one extra element that swallows both addition
// and multiplication. Zeroless: the ring zero stays the additive identity
// but is not absorbing (0 * inf = inf), so this carrier only passes the
// zeroless law suite.
template <InverseSemiring R>
struct AdjoinedInfinity {
    using inner_type = typename R::value_type;
    using value_type = std::optional<inner_type>;  // nullopt = infinity

    R base;

    value_type add(const value_type& x, const value_type& y) const {
        if (!x || !y) return std::nullopt;
        return base.add(*x, *y);
    }
    value_type mul(const value_type& x, const value_type& y) const {
        if (!x || !y) return std::nullopt;
        return base.mul(*x, *y);
    }
    value_type neg(const value_type& x) const {
        if (!x) return std::nullopt;  // inf + inf + inf = inf, so -inf = inf
        return base.neg(*x);
    }
    value_type zero() const { return base.zero(); }
    value_type one() const { return base.one(); }
    bool eq(const value_type& x, const value_type& y) const {
        if (!x || !y) return !x && !y;
        return base.eq(*x, *y);
    }
    std::string show(const value_type& x) const {
        if (!x) return "inf";
        return base.show(*x);
    }

    value_type infinity() const { return std::nullopt; }
    value_type lift(const inner_type& x) const { return x; }
};

template <InverseSemiring R>
AdjoinedInfinity<R> adjoin_infinity(R base) {
    return AdjoinedInfinity<R>{std::move(base)};
}

}  // namespace invrig
