#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "invrig/finite/module.hpp"

namespace invrig {

// A subset of a module carrier as a bitmask. Carriers handled by the
// engine are tiny (well under 32 elements).
using Subset = std::uint32_t;

inline bool subset_contains(Subset s, int x) { return (s >> x) & 1u; }
inline Subset subset_with(Subset s, int x) { return s | (1u << x); }
inline Subset full_subset(int m) { return (m == 32) ? ~0u : ((1u << m) - 1u); }
inline bool subset_leq(Subset a, Subset b) { return (a & ~b) == 0; }

inline std::vector<int> subset_elements(Subset s) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (subset_contains(s, i)) out.push_back(i);
    return out;
}

inline std::string subset_str(const FiniteModule& mod, Subset s) {
    std::string out = "{";
    bool first = true;
    for (int x : subset_elements(s)) {
        if (!first) out += ", ";
        out += mod.names()[x];
        first = false;
    }
    return out + "}";
}

// E(M): the additive idempotents of the module.
inline Subset idempotent_subset(const FiniteModule& mod) {
    Subset e = 0;
    for (int x = 0; x < mod.size(); ++x)
        if (mod.madd(x, x) == x) e = subset_with(e, x);
    return e;
}

inline Subset down_closure(const FiniteModule& mod, Subset s) {
    Subset out = 0;
    for (int x = 0; x < mod.size(); ++x)
        for (int y : subset_elements(s))
            if (mod.mleq(x, y)) {
                out = subset_with(out, x);
                break;
            }
    return out;
}

inline Subset up_closure(const FiniteModule& mod, Subset s) {
    Subset out = 0;
    for (int x = 0; x < mod.size(); ++x)
        for (int y : subset_elements(s))
            if (mod.mleq(y, x)) {
                out = subset_with(out, x);
                break;
            }
    return out;
}

inline bool is_downward_closed(const FiniteModule& mod, Subset s) {
    return down_closure(mod, s) == s;
}

inline bool is_upward_closed(const FiniteModule& mod, Subset s) {
    return up_closure(mod, s) == s;
}

inline bool is_submodule(const FiniteModule& mod, Subset s) {
    if (!subset_contains(s, mod.mzero())) return false;
    for (int x : subset_elements(s)) {
        for (int y : subset_elements(s))
            if (!subset_contains(s, mod.madd(x, y))) return false;
        for (int a = 0; a < mod.base().size(); ++a) {
            if (!subset_contains(s, mod.act(a, x))) return false;
            if (mod.has_right_action() && !subset_contains(s, mod.ract(x, a))) return false;
        }
    }
    return true;
}

// Least submodule containing the generators: the fixpoint of closing
// under addition and the action(s).
inline Subset submodule_generate(const FiniteModule& mod, Subset gens) {
    Subset s = subset_with(gens, mod.mzero());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x : subset_elements(s)) {
            for (int y : subset_elements(s)) {
                int z = mod.madd(x, y);
                if (!subset_contains(s, z)) {
                    s = subset_with(s, z);
                    changed = true;
                }
            }
            for (int a = 0; a < mod.base().size(); ++a) {
                int z = mod.act(a, x);
                if (!subset_contains(s, z)) {
                    s = subset_with(s, z);
                    changed = true;
                }
                if (mod.has_right_action()) {
                    int w = mod.ract(x, a);
                    if (!subset_contains(s, w)) {
                        s = subset_with(s, w);
                        changed = true;
                    }
                }
            }
        }
    }
    return s;
}

// S is subtractive if x in S and x+y in S force y in S. Over an inverse
// semiring this coincides with being a downward-closed submodule.
inline bool is_subtractive(const FiniteModule& mod, Subset s) {
    for (int x : subset_elements(s))
        for (int y = 0; y < mod.size(); ++y)
            if (subset_contains(s, mod.madd(x, y)) && !subset_contains(s, y)) return false;
    return true;
}

// Least subtractive submodule containing S, computed two ways: as the
// downward closure of the generated submodule, and as the definitional
// fixpoint. The two must agree; a mismatch is an engine bug.
inline Subset subtractive_closure(const FiniteModule& mod, Subset gens) {
    Subset via_down = down_closure(mod, submodule_generate(mod, gens));

    Subset fix = submodule_generate(mod, gens);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x : subset_elements(fix))
            for (int y = 0; y < mod.size(); ++y)
                if (subset_contains(fix, mod.madd(x, y)) && !subset_contains(fix, y)) {
                    fix = submodule_generate(mod, subset_with(fix, y));
                    changed = true;
                }
    }
    if (via_down != fix)
        throw std::logic_error("subtractive closure routes disagree: " +
                               subset_str(mod, via_down) + " vs " + subset_str(mod, fix));
    return via_down;
}

// All submodules of the carrier, in increasing mask order.
inline std::vector<Subset> all_submodules(const FiniteModule& mod) {
    if (mod.size() > 20) throw std::invalid_argument("carrier too large for subset enumeration");
    std::vector<Subset> out;
    for (Subset s = 0; s <= full_subset(mod.size()); ++s)
        if (is_submodule(mod, s)) out.push_back(s);
    return out;
}

inline std::vector<Subset> all_subtractive_submodules(const FiniteModule& mod) {
    std::vector<Subset> out;
    for (Subset s : all_submodules(mod))
        if (is_subtractive(mod, s)) out.push_back(s);
    return out;
}

}  // namespace invrig
