#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "invrig/finite/table.hpp"

namespace invrig {

// Raw module tables over a validated base semiring.
struct RawModuleTables {
    std::vector<std::string> names;
    std::vector<std::vector<int>> madd;  // m x m
    int mzero = 0;
    std::vector<std::vector<int>> action;   // n x m, the (left) action
    std::vector<std::vector<int>> raction;  // optional m x n right action
};

// A finite module over a finite inverse semiring. The additive monoid is
// automatically inverse, with -x given by acting with -1; this is derived
// and then verified during validation. When a right action is present the
// structure is a bimodule (used for two-sided ideal machinery).
class FiniteModule {
public:
    const FiniteInverseSemiring& base() const { return base_; }
    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }

    int madd(int x, int y) const { return madd_[x][y]; }
    int mzero() const { return mzero_; }
    int mneg(int x) const { return mneg_[x]; }
    int act(int a, int x) const { return action_[a][x]; }
    bool has_right_action() const { return !raction_.empty(); }
    int ract(int x, int a) const { return raction_[x][a]; }

    int midem(int x) const { return madd_[x][mneg_[x]]; }
    // Canonical order of the additive monoid: x <= y iff x + 0_y = y.
    bool mleq(int x, int y) const { return madd_[x][midem(y)] == y; }

    int index_of(const std::string& name) const {
        for (int i = 0; i < size(); ++i)
            if (names_[i] == name) return i;
        throw std::invalid_argument("no such module element: " + name);
    }

    friend FiniteModule validate_module(FiniteInverseSemiring base, const RawModuleTables& t);

private:
    FiniteModule() = default;

    FiniteInverseSemiring base_;
    std::vector<std::string> names_;
    std::vector<std::vector<int>> madd_, action_, raction_;
    std::vector<int> mneg_;
    int mzero_ = 0;
};

// Exhaustively checks the module axioms, derives negation as (-1).x and
// verifies the inverse-monoid laws. Throws ValidationError on violation.
inline FiniteModule validate_module(FiniteInverseSemiring base, const RawModuleTables& t) {
    const int n = base.size();
    const int m = static_cast<int>(t.names.size());
    if (m == 0 || static_cast<int>(t.madd.size()) != m ||
        static_cast<int>(t.action.size()) != n || t.mzero < 0 || t.mzero >= m)
        throw std::invalid_argument("malformed module tables");
    for (const auto& row : t.madd)
        if (static_cast<int>(row.size()) != m) throw std::invalid_argument("malformed madd");
    for (const auto& row : t.action)
        if (static_cast<int>(row.size()) != m) throw std::invalid_argument("malformed action");
    if (!t.raction.empty()) {
        if (static_cast<int>(t.raction.size()) != m) throw std::invalid_argument("malformed raction");
        for (const auto& row : t.raction)
            if (static_cast<int>(row.size()) != n) throw std::invalid_argument("malformed raction");
    }

    LawReport r;
    auto fail = [&](const std::string& law, const std::string& witness) {
        r.entries.push_back({law, false, witness});
        throw ValidationError("module axiom " + law + " fails at " + witness, r);
    };
    auto wit = [&](std::initializer_list<std::string> parts) {
        std::string s = "(";
        for (const auto& p : parts) s += (s.size() > 1 ? ", " : "") + p;
        return s + ")";
    };

    for (int x = 0; x < m; ++x) {
        if (t.madd[x][t.mzero] != x) fail("add-identity", wit({t.names[x]}));
        for (int y = 0; y < m; ++y) {
            if (t.madd[x][y] != t.madd[y][x]) fail("add-comm", wit({t.names[x], t.names[y]}));
            for (int z = 0; z < m; ++z)
                if (t.madd[t.madd[x][y]][z] != t.madd[x][t.madd[y][z]])
                    fail("add-assoc", wit({t.names[x], t.names[y], t.names[z]}));
        }
    }
    for (int a = 0; a < n; ++a) {
        if (t.action[a][t.mzero] != t.mzero) fail("act-zero", wit({base.names()[a]}));
        for (int x = 0; x < m; ++x) {
            if (t.action[base.zero()][x] != t.mzero) fail("zero-acts-as-zero", wit({t.names[x]}));
            if (t.action[base.one()][x] != x) fail("one-acts-as-identity", wit({t.names[x]}));
            for (int y = 0; y < m; ++y)
                if (t.action[a][t.madd[x][y]] != t.madd[t.action[a][x]][t.action[a][y]])
                    fail("act-distributes", wit({base.names()[a], t.names[x], t.names[y]}));
            for (int b = 0; b < n; ++b) {
                if (t.action[base.add(a, b)][x] != t.madd[t.action[a][x]][t.action[b][x]])
                    fail("act-linear", wit({base.names()[a], base.names()[b], t.names[x]}));
                if (t.action[base.mul(a, b)][x] != t.action[a][t.action[b][x]])
                    fail("act-associative", wit({base.names()[a], base.names()[b], t.names[x]}));
            }
        }
    }
    if (!t.raction.empty()) {
        for (int x = 0; x < m; ++x) {
            if (t.raction[t.mzero][base.one()] != t.mzero) fail("ract-zero", "()");
            if (t.raction[x][base.one()] != x) fail("one-racts-as-identity", wit({t.names[x]}));
            for (int a = 0; a < n; ++a) {
                if (t.raction[x][base.zero()] != t.mzero) fail("zero-racts-as-zero", wit({t.names[x]}));
                for (int y = 0; y < m; ++y)
                    if (t.raction[t.madd[x][y]][a] != t.madd[t.raction[x][a]][t.raction[y][a]])
                        fail("ract-distributes", wit({t.names[x], t.names[y], base.names()[a]}));
                for (int b = 0; b < n; ++b) {
                    if (t.raction[x][base.add(a, b)] != t.madd[t.raction[x][a]][t.raction[x][b]])
                        fail("ract-linear", wit({t.names[x], base.names()[a], base.names()[b]}));
                    if (t.raction[x][base.mul(a, b)] != t.raction[t.raction[x][a]][b])
                        fail("ract-associative", wit({t.names[x], base.names()[a], base.names()[b]}));
                    if (t.raction[t.action[a][x]][b] != t.action[a][t.raction[x][b]])
                        fail("actions-commute", wit({base.names()[a], t.names[x], base.names()[b]}));
                }
            }
        }
    }

    FiniteModule mod;
    mod.base_ = std::move(base);
    mod.names_ = t.names;
    mod.madd_ = t.madd;
    mod.mzero_ = t.mzero;
    mod.action_ = t.action;
    mod.raction_ = t.raction;

    // Negation comes from acting with -1 (the base is inverse, so the
    // module monoid is forced to be inverse too); verify the laws.
    mod.mneg_.assign(m, 0);
    int neg_one = mod.base_.neg(mod.base_.one());
    for (int x = 0; x < m; ++x) {
        int nx = t.action[neg_one][x];
        if (t.madd[t.madd[x][nx]][x] != x || t.madd[t.madd[nx][x]][nx] != nx)
            fail("inverse-monoid", wit({t.names[x]}));
        mod.mneg_[x] = nx;
    }
    return mod;
}

// An inverse semiring as a module over itself; the right multiplication
// action is included so submodules are two-sided ideals by default.
enum class Sidedness { left, right, two_sided };

inline FiniteModule self_module(const FiniteInverseSemiring& r,
                                Sidedness side = Sidedness::two_sided) {
    const int n = r.size();
    RawModuleTables t;
    t.names = r.names();
    t.madd = r.add_table();
    t.mzero = r.zero();
    std::vector<std::vector<int>> left(n, std::vector<int>(n)), right(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < n; ++x) {
            left[a][x] = r.mul(a, x);
            right[x][a] = r.mul(x, a);
        }
    switch (side) {
        case Sidedness::left:
            t.action = left;
            break;
        case Sidedness::right:
            // Realized as a left module over the opposite multiplication.
            t.action.assign(n, std::vector<int>(n));
            for (int a = 0; a < n; ++a)
                for (int x = 0; x < n; ++x) t.action[a][x] = r.mul(x, a);
            break;
        case Sidedness::two_sided:
            t.action = left;
            t.raction = right;
            break;
    }
    return validate_module(r, t);
}

// Direct sum M^2 of the self-module, a convenient small test module.
inline FiniteModule square_module(const FiniteInverseSemiring& r) {
    const int n = r.size();
    const int m = n * n;
    auto ix = [&](int x, int y) { return x * n + y; };
    RawModuleTables t;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t.names.push_back("(" + r.names()[x] + "," + r.names()[y] + ")");
    t.madd.assign(m, std::vector<int>(m));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    t.madd[ix(x, y)][ix(u, v)] = ix(r.add(x, u), r.add(y, v));
    t.mzero = ix(r.zero(), r.zero());
    t.action.assign(n, std::vector<int>(m));
    for (int a = 0; a < n; ++a)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) t.action[a][ix(x, y)] = ix(r.mul(a, x), r.mul(a, y));
    return validate_module(r, t);
}

}  // namespace invrig
