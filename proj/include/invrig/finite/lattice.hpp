#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "invrig/finite/analysis.hpp"
#include "invrig/finite/congruence.hpp"
#include "invrig/finite/subsets.hpp"

namespace invrig {

// Join and meet in the lattice of all submodules.
inline Subset submodule_sum(const FiniteModule& mod, Subset s1, Subset s2) {
    return submodule_generate(mod, s1 | s2);
}

inline Subset submodule_intersect(Subset s1, Subset s2) { return s1 & s2; }

// The restricted modular law (S1 + X) n S2 = S1 + (X n S2), which holds
// whenever S1 <= S2 and S2 is subtractive. Inputs must be submodules with
// S1 contained in S2.
inline bool restricted_modular_check(const FiniteModule& mod, Subset s1, Subset x, Subset s2) {
    if (!is_submodule(mod, s1) || !is_submodule(mod, x) || !is_submodule(mod, s2))
        throw std::invalid_argument("modular check: inputs must be submodules");
    if (!subset_leq(s1, s2)) throw std::invalid_argument("modular check requires S1 <= S2");
    Subset lhs = submodule_intersect(submodule_sum(mod, s1, x), s2);
    Subset rhs = submodule_sum(mod, s1, submodule_intersect(x, s2));
    return lhs == rhs;
}

struct ModularityViolation {
    Subset s1, s2, x;
    Subset lhs, rhs;
};

// All triples (S1 <= S2, X) violating the unrestricted modular law. With
// subtractive_only set, the triples range over subtractive submodules and
// the join is the subtractive closure (the join of that lattice).
inline std::vector<ModularityViolation> find_modularity_counterexamples(
    const FiniteModule& mod, bool subtractive_only = false) {
    std::vector<Subset> subs =
        subtractive_only ? all_subtractive_submodules(mod) : all_submodules(mod);
    auto join = [&](Subset a, Subset b) {
        return subtractive_only ? subtractive_closure(mod, a | b) : submodule_sum(mod, a, b);
    };
    std::vector<ModularityViolation> out;
    for (Subset s1 : subs)
        for (Subset s2 : subs) {
            if (!subset_leq(s1, s2)) continue;
            for (Subset x : subs) {
                Subset lhs = join(s1, x) & s2;
                Subset rhs = join(s1, x & s2);
                if (lhs != rhs) out.push_back({s1, s2, x, lhs, rhs});
            }
        }
    return out;
}

// The equivalent conditions on a subtractive submodule S:
// upward-closed <=> E(M) <= S <=> M/S is an abelian group; for a
// two-sided ideal of a semiring additionally <=> 0_1 in I <=> R/I is a
// ring.
struct UpwardReport {
    bool upward_closed;
    bool contains_idempotents;
    bool quotient_is_group;
    std::optional<bool> contains_zero_one;  // ideal case only
    std::optional<bool> quotient_is_ring;   // ideal case only

    bool all_equal() const {
        bool v = upward_closed;
        if (contains_idempotents != v || quotient_is_group != v) return false;
        if (contains_zero_one && *contains_zero_one != v) return false;
        if (quotient_is_ring && *quotient_is_ring != v) return false;
        return true;
    }
};

inline UpwardReport upward_equivalences(const FiniteModule& mod, Subset s) {
    if (!is_submodule(mod, s) || !is_subtractive(mod, s))
        throw std::invalid_argument("upward_equivalences: S must be a subtractive submodule");
    UpwardReport rep{};
    rep.upward_closed = is_upward_closed(mod, s);
    rep.contains_idempotents = subset_leq(idempotent_subset(mod), s);
    FiniteModule q = quotient_module(mod, s);
    bool group = true;
    for (int x = 0; x < q.size() && group; ++x)
        if (q.madd(x, q.mneg(x)) != q.mzero()) group = false;
    rep.quotient_is_group = group;
    return rep;
}

// Ideal version: S is a two-sided subtractive ideal of R.
inline UpwardReport upward_equivalences(const FiniteInverseSemiring& r, Subset ideal) {
    FiniteModule self = self_module(r);
    UpwardReport rep = upward_equivalences(self, ideal);
    rep.contains_zero_one = subset_contains(ideal, idem(r, r.one()));
    FiniteInverseSemiring q = quotient_semiring(r, ideal);
    rep.quotient_is_ring = classify(q).tag == StructureTag::ring;
    return rep;
}

}  // namespace invrig
