#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "invrig/bimodule.hpp"
#include "invrig/core.hpp"

namespace invrig {

// Raw input tables, prior to validation. Elements are indices 0..n-1;
// `names` carries their display names in index order.
struct RawTables {
    std::vector<std::string> names;
    std::vector<std::vector<int>> add;
    std::vector<std::vector<int>> mul;
    int zero = 0;
    int one = 0;
};

// Thrown when tables fail the exhaustive axiom check; carries the report
// with a witness per violated law.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string what, LawReport report)
        : std::runtime_error(std::move(what)), report(std::move(report)) {}
    LawReport report;
};

// An order-n inverse semiring given by its Cayley tables. Models the
// InverseSemiring concept with element indices as values; the negation
// table is derived during validation.
class FiniteInverseSemiring {
public:
    using value_type = int;

    FiniteInverseSemiring() = default;  // empty; fill via validate()

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::vector<int>>& add_table() const { return add_; }
    const std::vector<std::vector<int>>& mul_table() const { return mul_; }
    const std::vector<int>& neg_table() const { return neg_; }

    int add(int x, int y) const { return add_[x][y]; }
    int mul(int x, int y) const { return mul_[x][y]; }
    int neg(int x) const { return neg_[x]; }
    int zero() const { return zero_; }
    int one() const { return one_; }
    bool eq(int x, int y) const { return x == y; }
    std::string show(int x) const { return names_[x]; }

    std::vector<int> carrier() const {
        std::vector<int> c(names_.size());
        for (int i = 0; i < size(); ++i) c[i] = i;
        return c;
    }

    int index_of(const std::string& name) const {
        for (int i = 0; i < size(); ++i)
            if (names_[i] == name) return i;
        throw std::invalid_argument("no such element: " + name);
    }

    RawTables raw() const { return {names_, add_, mul_, zero_, one_}; }

    friend FiniteInverseSemiring validate(const RawTables& t);

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> add_, mul_;
    std::vector<int> neg_;
    int zero_ = 0, one_ = 0;
};

// Exhaustively checks the inverse-semiring axioms on the tables, derives
// the negation table, and returns the validated structure. Throws
// ValidationError (with witnesses) on any violation.
inline FiniteInverseSemiring validate(const RawTables& t) {
    const int n = static_cast<int>(t.names.size());
    auto shape_ok = [&](const std::vector<std::vector<int>>& tab) {
        if (static_cast<int>(tab.size()) != n) return false;
        for (const auto& row : tab) {
            if (static_cast<int>(row.size()) != n) return false;
            for (int v : row)
                if (v < 0 || v >= n) return false;
        }
        return true;
    };
    if (n == 0 || !shape_ok(t.add) || !shape_ok(t.mul) || t.zero < 0 || t.zero >= n ||
        t.one < 0 || t.one >= n)
        throw std::invalid_argument("malformed tables");

    FiniteInverseSemiring s;
    s.names_ = t.names;
    s.add_ = t.add;
    s.mul_ = t.mul;
    s.zero_ = t.zero;
    s.one_ = t.one;

    // Derive negation: each element must have exactly one additive inverse.
    s.neg_.assign(n, -1);
    LawReport derivation;
    for (int x = 0; x < n; ++x) {
        int found = -1, count = 0;
        for (int y = 0; y < n; ++y)
            if (t.add[t.add[x][y]][x] == x && t.add[t.add[y][x]][y] == y) {
                found = y;
                ++count;
            }
        if (count != 1) {
            derivation.entries.push_back(
                {"unique-additive-inverse", false, "(" + t.names[x] + ")"});
            throw ValidationError("not an inverse monoid: " + t.names[x] + " has " +
                                      std::to_string(count) + " additive inverses",
                                  derivation);
        }
        s.neg_[x] = found;
    }

    LawReport r = law_report(s, s.carrier());
    if (!r.ok()) {
        const LawEntry* f = r.first_failure();
        throw ValidationError("axiom " + f->law + " fails at " + f->witness, r);
    }
    return s;
}

// Builds the Cayley tables of any (finite sample of an) inverse semiring
// by evaluating its operations on the listed elements. The list must be
// closed under add, mul and neg and contain zero and one.
template <InverseSemiring S>
FiniteInverseSemiring tabulate(const S& s, const std::vector<typename S::value_type>& elems,
                               std::vector<std::string> names = {}) {
    const int n = static_cast<int>(elems.size());
    if (names.empty())
        for (const auto& e : elems) names.push_back(s.show(e));
    auto index_of = [&](const typename S::value_type& v) {
        for (int i = 0; i < n; ++i)
            if (s.eq(elems[i], v)) return i;
        throw std::invalid_argument("tabulate: carrier not closed at " + s.show(v));
    };
    RawTables t;
    t.names = std::move(names);
    t.add.assign(n, std::vector<int>(n));
    t.mul.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            t.add[i][j] = index_of(s.add(elems[i], elems[j]));
            t.mul[i][j] = index_of(s.mul(elems[i], elems[j]));
        }
    t.zero = index_of(s.zero());
    t.one = index_of(s.one());
    return validate(t);
}

// Adjoins a fresh absorbing zero to a table structure. The new zero gets
// index 0 and name "0"; the old zero is renamed "0^".
inline FiniteInverseSemiring adjoin_zero_table(const FiniteInverseSemiring& r) {
    const int n = r.size();
    RawTables t;
    t.names.push_back("0");
    for (int i = 0; i < n; ++i)
        t.names.push_back(i == r.zero() ? "0^" : r.names()[i]);
    t.add.assign(n + 1, std::vector<int>(n + 1));
    t.mul.assign(n + 1, std::vector<int>(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i == 0 || j == 0) {
                t.add[i][j] = i + j;  // new zero is the additive identity
                t.mul[i][j] = 0;      // and multiplicatively absorbing
            } else {
                t.add[i][j] = r.add(i - 1, j - 1) + 1;
                t.mul[i][j] = r.mul(i - 1, j - 1) + 1;
            }
        }
    t.zero = 0;
    t.one = r.one() + 1;
    return validate(t);
}

// Componentwise product of two table structures.
inline FiniteInverseSemiring product_table(const FiniteInverseSemiring& a,
                                           const FiniteInverseSemiring& b) {
    const int na = a.size(), nb = b.size(), n = na * nb;
    auto ix = [&](int x, int y) { return x * nb + y; };
    RawTables t;
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y)
            t.names.push_back("(" + a.names()[x] + "," + b.names()[y] + ")");
    t.add.assign(n, std::vector<int>(n));
    t.mul.assign(n, std::vector<int>(n));
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y)
            for (int u = 0; u < na; ++u)
                for (int v = 0; v < nb; ++v) {
                    t.add[ix(x, y)][ix(u, v)] = ix(a.add(x, u), b.add(y, v));
                    t.mul[ix(x, y)][ix(u, v)] = ix(a.mul(x, u), b.mul(y, v));
                }
    t.zero = ix(a.zero(), b.zero());
    t.one = ix(a.one(), b.one());
    return validate(t);
}

namespace builtins {

// The six-element idempotent semiring B1 of Ward's classical example:
// addition is the join of the order 1 > j > {a, b}, b > m, {a, m} > 0.
// Its ideal lattice is not modular.
inline FiniteInverseSemiring B1() {
    // Index order: 0, m, a, b, j, 1.
    RawTables t;
    t.names = {"0", "m", "a", "b", "j", "1"};
    t.add = {
        {0, 1, 2, 3, 4, 5},
        {1, 1, 4, 3, 4, 5},
        {2, 4, 2, 4, 4, 5},
        {3, 3, 4, 3, 4, 5},
        {4, 4, 4, 4, 4, 5},
        {5, 5, 5, 5, 5, 5},
    };
    t.mul = {
        {0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 1},
        {0, 0, 2, 0, 2, 2},
        {0, 0, 0, 0, 0, 3},
        {0, 0, 2, 0, 2, 4},
        {0, 1, 2, 3, 4, 5},
    };
    t.zero = 0;
    t.one = 5;
    return validate(t);
}

// The field with two elements, as tables.
inline FiniteInverseSemiring Z2() {
    RawTables t;
    t.names = {"0", "1"};
    t.add = {{0, 1}, {1, 0}};
    t.mul = {{0, 0}, {0, 1}};
    t.zero = 0;
    t.one = 1;
    return validate(t);
}

// The four-element bimodule construction I(f) with S = Z/2, A = Z/2 and
// f = 0. Not E-unitary: 1A + 0S = 0S is idempotent while 1A is not.
inline FiniteInverseSemiring If0() {
    struct Data {
        using scalar_type = int;
        using module_type = int;
        int s_add(int x, int y) const { return x ^ y; }
        int s_mul(int x, int y) const { return x & y; }
        int s_neg(int x) const { return x; }
        int s_zero() const { return 0; }
        int s_one() const { return 1; }
        bool s_eq(int x, int y) const { return x == y; }
        std::string s_show(int x) const { return std::to_string(x) + "S"; }
        int m_add(int x, int y) const { return x ^ y; }
        int m_neg(int x) const { return x; }
        int m_zero() const { return 0; }
        bool m_eq(int x, int y) const { return x == y; }
        std::string m_show(int x) const { return std::to_string(x) + "A"; }
        int act_left(int s, int a) const { return s & a; }
        int act_right(int a, int s) const { return a & s; }
        int f(int) const { return 0; }
    };
    auto sr = bimodule_construct(Data{}, {0, 1}, {0, 1});
    using V = decltype(sr)::value_type;
    std::vector<V> elems = {sr.from_module(0), sr.from_module(1), sr.from_scalar(0),
                            sr.from_scalar(1)};
    return tabulate(sr, elems, {"0A", "1A", "0S", "1S"});
}

}  // namespace builtins

}  // namespace invrig
