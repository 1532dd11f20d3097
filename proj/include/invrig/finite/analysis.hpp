#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "invrig/finite/congruence.hpp"
#include "invrig/finite/subsets.hpp"
#include "invrig/finite/table.hpp"

namespace invrig {

// E(R) as a subset of the carrier.
inline Subset idempotent_subset(const FiniteInverseSemiring& r) {
    Subset e = 0;
    for (int x = 0; x < r.size(); ++x)
        if (r.add(x, x) == x) e = subset_with(e, x);
    return e;
}

// E(R) as a standalone idempotent semiring: addition and multiplication
// restrict (0_x * 0_y = 0_xy), with 0_1 as the multiplicative unit.
inline FiniteInverseSemiring idempotent_semiring_of(const FiniteInverseSemiring& r) {
    std::vector<int> elems = subset_elements(idempotent_subset(r));
    const int k = static_cast<int>(elems.size());
    auto pos = [&](int x) {
        for (int i = 0; i < k; ++i)
            if (elems[i] == x) return i;
        throw std::logic_error("E(R) not closed");
    };
    RawTables t;
    for (int e : elems) t.names.push_back(r.names()[e]);
    t.add.assign(k, std::vector<int>(k));
    t.mul.assign(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            t.add[i][j] = pos(r.add(elems[i], elems[j]));
            t.mul[i][j] = pos(r.mul(elems[i], elems[j]));
        }
    t.zero = pos(r.zero());
    t.one = pos(idem(r, r.one()));
    return validate(t);
}

// G(z) = {s : 0_s = z} for an additive idempotent z: an abelian group
// with identity z, and a G(0_1)-bimodule. Verified, not assumed.
inline Subset group_at_unchecked(const FiniteInverseSemiring& r, int z) {
    Subset g = 0;
    for (int x = 0; x < r.size(); ++x)
        if (idem(r, x) == z) g = subset_with(g, x);
    return g;
}

inline Subset group_at(const FiniteInverseSemiring& r, int z) {
    if (r.add(z, z) != z) throw std::invalid_argument("group_at: " + r.names()[z] + " is not an additive idempotent");
    Subset g = 0;
    for (int x = 0; x < r.size(); ++x)
        if (idem(r, x) == z) g = subset_with(g, x);

    for (int x : subset_elements(g)) {
        if (!subset_contains(g, r.neg(x)) || !subset_contains(g, r.add(x, z)) ||
            r.add(x, z) != x)
            throw std::logic_error("G(z) is not a group with identity z");
        for (int y : subset_elements(g))
            if (!subset_contains(g, r.add(x, y)))
                throw std::logic_error("G(z) not closed under addition");
    }
    // Scalar actions by G(0_1) land back in G(z).
    int z1 = idem(r, r.one());
    for (int s : subset_elements(group_at_unchecked(r, z1)))
        for (int x : subset_elements(g))
            if (idem(r, r.mul(s, x)) != z || idem(r, r.mul(x, s)) != z)
                throw std::logic_error("G(z) is not a G(0_1)-bimodule");
    return g;
}

}  // namespace invrig
