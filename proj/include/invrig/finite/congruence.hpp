#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "invrig/finite/subsets.hpp"

namespace invrig {

// A partition of a module carrier compatible with its operations.
// Classes are numbered by least member: class_of[x] < class_of[y] whenever
// the least member of x's class precedes the least member of y's.
struct Congruence {
    std::vector<int> class_of;
    int num_classes = 0;

    bool related(int x, int y) const { return class_of[x] == class_of[y]; }
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (x > y) std::swap(x, y);  // keep the least index as representative
        parent[y] = x;
        return true;
    }
};

inline Congruence canonical(std::vector<int> rep) {
    const int m = static_cast<int>(rep.size());
    Congruence c;
    c.class_of.assign(m, -1);
    std::vector<int> rep_to_class(m, -1);
    for (int x = 0; x < m; ++x) {
        int r = rep[x];
        if (rep_to_class[r] < 0) rep_to_class[r] = c.num_classes++;
        c.class_of[x] = rep_to_class[r];
    }
    return c;
}

}  // namespace detail

// Generic congruence closure: the least congruence of the module
// containing the given pairs, computed by union-find saturation.
inline Congruence module_congruence_closure(const FiniteModule& mod,
                                            const std::vector<std::pair<int, int>>& pairs) {
    const int m = mod.size();
    detail::UnionFind uf(m);
    for (auto [x, y] : pairs) uf.unite(x, y);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y) {
                if (uf.find(x) != uf.find(y)) continue;
                for (int z = 0; z < m; ++z)
                    changed |= uf.unite(mod.madd(x, z), mod.madd(y, z));
                for (int a = 0; a < mod.base().size(); ++a) {
                    changed |= uf.unite(mod.act(a, x), mod.act(a, y));
                    if (mod.has_right_action()) changed |= uf.unite(mod.ract(x, a), mod.ract(y, a));
                }
            }
    }
    std::vector<int> rep(m);
    for (int x = 0; x < m; ++x) rep[x] = uf.find(x);
    return detail::canonical(rep);
}

// The congruence generated by s ~ 0 for s in a submodule S. Computed by
// the closed form x ~ y iff x + s = y + s' for some s, s' in S, then
// cross-checked against the generic union-find closure of those pairs;
// the two routes must agree.
inline Congruence congruence_from_submodule(const FiniteModule& mod, Subset s) {
    if (!is_submodule(mod, s)) throw std::invalid_argument("not a submodule");
    const int m = mod.size();
    std::vector<int> rep(m);
    std::iota(rep.begin(), rep.end(), 0);
    auto related = [&](int x, int y) {
        for (int a : subset_elements(s))
            for (int b : subset_elements(s))
                if (mod.madd(x, a) == mod.madd(y, b)) return true;
        return false;
    };
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < x; ++y)
            if (rep[x] == x && related(x, y)) {
                rep[x] = rep[y];
                break;
            }
    // The closed form is a congruence by construction of the quotient;
    // verify transitivity landed in consistent representatives anyway.
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (related(x, y) != (rep[x] == rep[y]))
                throw std::logic_error("closed-form relation is not transitive at (" +
                                       mod.names()[x] + ", " + mod.names()[y] + ")");
    Congruence direct = detail::canonical(std::move(rep));

    std::vector<std::pair<int, int>> pairs;
    for (int e : subset_elements(s)) pairs.emplace_back(e, mod.mzero());
    Congruence oracle = module_congruence_closure(mod, pairs);
    if (direct.class_of != oracle.class_of)
        throw std::logic_error("submodule congruence disagrees with union-find closure");
    return direct;
}

// Quotient module M/~. Classes are ordered by least member.
inline FiniteModule quotient_module(const FiniteModule& mod, const Congruence& c) {
    const int m = mod.size();
    const int q = c.num_classes;
    std::vector<int> repr(q, -1);
    for (int x = m - 1; x >= 0; --x) repr[c.class_of[x]] = x;

    RawModuleTables t;
    for (int k = 0; k < q; ++k) {
        std::string nm = "[";
        bool first = true;
        for (int x = 0; x < m; ++x)
            if (c.class_of[x] == k) {
                if (!first) nm += " ";
                nm += mod.names()[x];
                first = false;
            }
        t.names.push_back(nm + "]");
    }
    t.madd.assign(q, std::vector<int>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) t.madd[i][j] = c.class_of[mod.madd(repr[i], repr[j])];
    t.mzero = c.class_of[mod.mzero()];
    const int n = mod.base().size();
    t.action.assign(n, std::vector<int>(q));
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < q; ++i) t.action[a][i] = c.class_of[mod.act(a, repr[i])];
    if (mod.has_right_action()) {
        t.raction.assign(q, std::vector<int>(n));
        for (int i = 0; i < q; ++i)
            for (int a = 0; a < n; ++a) t.raction[i][a] = c.class_of[mod.ract(repr[i], a)];
    }
    // Well-definedness: the tables must not depend on the representative.
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            if (t.madd[c.class_of[x]][c.class_of[y]] != c.class_of[mod.madd(x, y)])
                throw std::logic_error("congruence not compatible with addition");
            }
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < m; ++x)
            if (t.action[a][c.class_of[x]] != c.class_of[mod.act(a, x)])
                throw std::logic_error("congruence not compatible with the action");
    return validate_module(mod.base(), t);
}

inline FiniteModule quotient_module(const FiniteModule& mod, Subset s) {
    return quotient_module(mod, congruence_from_submodule(mod, s));
}

// Kernel of the quotient map: the class of 0 as a subset of M. It always
// equals the downward closure of S, and equals S itself iff S is
// subtractive.
inline Subset kernel_of(const FiniteModule& mod, const Congruence& c) {
    Subset k = 0;
    for (int x = 0; x < mod.size(); ++x)
        if (c.related(x, mod.mzero())) k = subset_with(k, x);
    return k;
}

// --- Semiring-level congruences (a semiring is a module over itself with
// multiplication as both actions, so the module machinery carries over;
// the resulting partition is automatically compatible with mul).

inline Congruence semiring_congruence_closure(const FiniteInverseSemiring& r,
                                              const std::vector<std::pair<int, int>>& pairs) {
    return module_congruence_closure(self_module(r), pairs);
}

inline Congruence congruence_from_ideal(const FiniteInverseSemiring& r, Subset ideal) {
    return congruence_from_submodule(self_module(r), ideal);
}

// Quotient semiring R/~ for a congruence compatible with both operations.
inline FiniteInverseSemiring quotient_semiring(const FiniteInverseSemiring& r,
                                               const Congruence& c) {
    const int m = r.size();
    const int q = c.num_classes;
    std::vector<int> repr(q, -1);
    for (int x = m - 1; x >= 0; --x) repr[c.class_of[x]] = x;

    RawTables t;
    for (int k = 0; k < q; ++k) {
        std::string nm = "[";
        bool first = true;
        for (int x = 0; x < m; ++x)
            if (c.class_of[x] == k) {
                if (!first) nm += " ";
                nm += r.names()[x];
                first = false;
            }
        t.names.push_back(nm + "]");
    }
    t.add.assign(q, std::vector<int>(q));
    t.mul.assign(q, std::vector<int>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            t.add[i][j] = c.class_of[r.add(repr[i], repr[j])];
            t.mul[i][j] = c.class_of[r.mul(repr[i], repr[j])];
        }
    t.zero = c.class_of[r.zero()];
    t.one = c.class_of[r.one()];
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            if (t.add[c.class_of[x]][c.class_of[y]] != c.class_of[r.add(x, y)])
                throw std::logic_error("congruence not compatible with addition");
            if (t.mul[c.class_of[x]][c.class_of[y]] != c.class_of[r.mul(x, y)])
                throw std::logic_error("congruence not compatible with multiplication");
        }
    return validate(t);
}

inline FiniteInverseSemiring quotient_semiring(const FiniteInverseSemiring& r, Subset ideal) {
    return quotient_semiring(r, congruence_from_ideal(r, ideal));
}

}  // namespace invrig
