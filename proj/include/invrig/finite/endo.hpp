#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "invrig/finite/hom.hpp"
#include "invrig/finite/table.hpp"

namespace invrig {

// A finite commutative inverse monoid given by its addition table.
struct RawMonoidTables {
    std::vector<std::string> names;
    std::vector<std::vector<int>> add;
    int zero = 0;
};

// Exhaustively checks the commutative-inverse-monoid laws. Throws
// ValidationError with a witness on violation. (In a commutative monoid
// inverses are automatically unique, but uniqueness is verified anyway.)
inline void validate_inverse_monoid(const RawMonoidTables& t) {
    const int m = static_cast<int>(t.names.size());
    if (m == 0 || static_cast<int>(t.add.size()) != m || t.zero < 0 || t.zero >= m)
        throw std::invalid_argument("malformed monoid tables");
    for (const auto& row : t.add)
        if (static_cast<int>(row.size()) != m) throw std::invalid_argument("malformed monoid tables");

    LawReport r;
    auto fail = [&](const std::string& law, const std::string& witness) {
        r.entries.push_back({law, false, witness});
        throw ValidationError("monoid law " + law + " fails at " + witness, r);
    };
    for (int x = 0; x < m; ++x) {
        if (t.add[x][t.zero] != x) fail("identity", "(" + t.names[x] + ")");
        int inverses = 0;
        for (int y = 0; y < m; ++y) {
            if (t.add[x][y] != t.add[y][x]) fail("commutativity", "(" + t.names[x] + ", " + t.names[y] + ")");
            if (t.add[t.add[x][y]][x] == x && t.add[t.add[y][x]][y] == y) ++inverses;
            for (int z = 0; z < m; ++z)
                if (t.add[t.add[x][y]][z] != t.add[x][t.add[y][z]])
                    fail("associativity", "(" + t.names[x] + ", " + t.names[y] + ", " + t.names[z] + ")");
        }
        if (inverses != 1) fail("unique-inverse", "(" + t.names[x] + ")");
    }
}

// End(X) for a commutative inverse monoid X: all maps preserving + and 0,
// added pointwise and multiplied by composition, (g*h)(x) = g(h(x)).
// Elements are ordered lexicographically by their value tables. Refuses
// when |X|^|X| exceeds the budget.
inline FiniteInverseSemiring endomorphism_semiring(const RawMonoidTables& x,
                                                   std::uint64_t budget = kDefaultSearchBudget) {
    validate_inverse_monoid(x);
    const int m = static_cast<int>(x.names.size());
    if (std::pow(static_cast<double>(m), static_cast<double>(m)) > static_cast<double>(budget))
        throw BudgetExceeded();

    std::vector<std::vector<int>> endos;
    std::vector<int> g(m, 0);
    while (true) {
        bool ok = g[x.zero] == x.zero;
        for (int a = 0; ok && a < m; ++a)
            for (int b = 0; ok && b < m; ++b)
                if (g[x.add[a][b]] != x.add[g[a]][g[b]]) ok = false;
        if (ok) endos.push_back(g);
        int i = m - 1;
        for (; i >= 0; --i) {  // advance the last position first: lexicographic order
            if (++g[i] < m) break;
            g[i] = 0;
        }
        if (i < 0) break;
    }

    const int k = static_cast<int>(endos.size());
    auto pos = [&](const std::vector<int>& f) {
        for (int i = 0; i < k; ++i)
            if (endos[i] == f) return i;
        throw std::logic_error("End(X) not closed");
    };

    RawTables t;
    for (const auto& f : endos) {
        std::string nm = "[";
        for (int i = 0; i < m; ++i) nm += (i ? " " : "") + x.names[f[i]];
        t.names.push_back(nm + "]");
    }
    t.add.assign(k, std::vector<int>(k));
    t.mul.assign(k, std::vector<int>(k));
    std::vector<int> tmp(m);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            for (int a = 0; a < m; ++a) tmp[a] = x.add[endos[i][a]][endos[j][a]];
            t.add[i][j] = pos(tmp);
            for (int a = 0; a < m; ++a) tmp[a] = endos[i][endos[j][a]];
            t.mul[i][j] = pos(tmp);
        }
    std::vector<int> zero_map(m, x.zero), id_map(m);
    for (int a = 0; a < m; ++a) id_map[a] = a;
    t.zero = pos(zero_map);
    t.one = pos(id_map);
    return validate(t);
}

namespace builtins {

// The additive monoid of (Z/2) with a zero adjoined: {0, 0^, 1}.
inline RawMonoidTables Z2_adjoined_monoid() {
    RawMonoidTables t;
    t.names = {"0", "0^", "1"};
    t.add = {{0, 1, 2}, {1, 1, 2}, {2, 2, 1}};
    t.zero = 0;
    return t;
}

// End((Z/2)_0): a three-element inverse semiring that is neither a ring
// nor an idempotent semiring.
inline FiniteInverseSemiring End_Z2_0() { return endomorphism_semiring(Z2_adjoined_monoid()); }

}  // namespace builtins

}  // namespace invrig
