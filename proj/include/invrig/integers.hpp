#pragma once

#include <cstdint>
#include <string>

#include "invrig/core.hpp"
#include "invrig/rational.hpp"

namespace invrig {

// The ring of integers as a semiring object.
struct IntegerRing {
    using value_type = std::int64_t;

    value_type add(value_type x, value_type y) const { return x + y; }
    value_type mul(value_type x, value_type y) const { return x * y; }
    value_type neg(value_type x) const { return -x; }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    bool eq(value_type x, value_type y) const { return x == y; }
    std::string show(value_type x) const { return std::to_string(x); }
};

// The field of rationals.
struct RationalField {
    using value_type = Rational;

    value_type add(const value_type& x, const value_type& y) const { return x + y; }
    value_type mul(const value_type& x, const value_type& y) const { return x * y; }
    value_type neg(const value_type& x) const { return -x; }
    value_type zero() const { return Rational(0); }
    value_type one() const { return Rational(1); }
    bool eq(const value_type& x, const value_type& y) const { return x == y; }
    std::string show(const value_type& x) const { return x.str(); }
};

static_assert(InverseSemiring<IntegerRing>);
static_assert(InverseSemiring<RationalField>);

}  // namespace invrig
