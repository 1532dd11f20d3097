#pragma once

#include <string>
#include <utility>

#include "invrig/core.hpp"

namespace invrig {

// Componentwise product of two inverse semirings.
template <InverseSemiring A, InverseSemiring B>
struct ProductSemiring {
    using value_type = std::pair<typename A::value_type, typename B::value_type>;

    A first;
    B second;

    value_type add(const value_type& x, const value_type& y) const {
        return {first.add(x.first, y.first), second.add(x.second, y.second)};
    }
    value_type mul(const value_type& x, const value_type& y) const {
        return {first.mul(x.first, y.first), second.mul(x.second, y.second)};
    }
    value_type neg(const value_type& x) const {
        return {first.neg(x.first), second.neg(x.second)};
    }
    value_type zero() const { return {first.zero(), second.zero()}; }
    value_type one() const { return {first.one(), second.one()}; }
    bool eq(const value_type& x, const value_type& y) const {
        return first.eq(x.first, y.first) && second.eq(x.second, y.second);
    }
    std::string show(const value_type& x) const {
        return "(" + first.show(x.first) + ", " + second.show(x.second) + ")";
    }
};

template <InverseSemiring A, InverseSemiring B>
ProductSemiring<A, B> product(A a, B b) {
    return {std::move(a), std::move(b)};
}

}  // namespace invrig
