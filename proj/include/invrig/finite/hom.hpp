#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "invrig/finite/table.hpp"

namespace invrig {

inline constexpr std::uint64_t kDefaultSearchBudget = 100000000;  // 10^8

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded() : std::runtime_error("search budget") {}
};

// Does the index map f describe a semiring homomorphism R -> S?
// Preservation of +, *, 0 and 1 is checked exhaustively.
inline bool hom_check(const std::vector<int>& f, const FiniteInverseSemiring& r,
                      const FiniteInverseSemiring& s) {
    if (static_cast<int>(f.size()) != r.size()) return false;
    for (int v : f)
        if (v < 0 || v >= s.size()) return false;
    if (f[r.zero()] != s.zero() || f[r.one()] != s.one()) return false;
    for (int x = 0; x < r.size(); ++x)
        for (int y = 0; y < r.size(); ++y) {
            if (f[r.add(x, y)] != s.add(f[x], f[y])) return false;
            if (f[r.mul(x, y)] != s.mul(f[x], f[y])) return false;
        }
    return true;
}

// All semiring homomorphisms R -> S, by exhaustive search over index maps
// with 0 and 1 pinned. Refuses when |S|^|R| exceeds the budget.
inline std::vector<std::vector<int>> hom_enumerate(const FiniteInverseSemiring& r,
                                                   const FiniteInverseSemiring& s,
                                                   std::uint64_t budget = kDefaultSearchBudget) {
    const int n = r.size(), m = s.size();
    double space = std::pow(static_cast<double>(m), static_cast<double>(n));
    if (space > static_cast<double>(budget)) throw BudgetExceeded();

    std::vector<int> free_slots;
    for (int x = 0; x < n; ++x)
        if (x != r.zero() && x != r.one()) free_slots.push_back(x);

    std::vector<int> f(n, 0);
    f[r.zero()] = s.zero();
    f[r.one()] = s.one();

    std::vector<std::vector<int>> found;
    std::vector<int> odo(free_slots.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < free_slots.size(); ++i) f[free_slots[i]] = odo[i];
        if (hom_check(f, r, s)) found.push_back(f);
        std::size_t i = 0;
        for (; i < odo.size(); ++i) {
            if (++odo[i] < m) break;
            odo[i] = 0;
        }
        if (i == odo.size()) break;
    }
    return found;
}

inline bool is_injective_map(const std::vector<int>& f, int codomain_size) {
    std::vector<bool> seen(codomain_size, false);
    for (int v : f) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

// First isomorphism R -> S found by enumeration, if any.
inline std::vector<int> find_isomorphism(const FiniteInverseSemiring& r,
                                         const FiniteInverseSemiring& s,
                                         std::uint64_t budget = kDefaultSearchBudget) {
    if (r.size() != s.size()) return {};
    for (const auto& f : hom_enumerate(r, s, budget))
        if (is_injective_map(f, s.size())) return f;
    return {};
}

}  // namespace invrig
