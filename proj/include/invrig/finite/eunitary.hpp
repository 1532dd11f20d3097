#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "invrig/finite/analysis.hpp"
#include "invrig/finite/congruence.hpp"
#include "invrig/finite/hom.hpp"
#include "invrig/finite/table.hpp"

namespace invrig {

// E-unitary: adding an idempotent never turns a non-idempotent into an
// idempotent. Returns a witness element when the property fails.
inline std::optional<int> e_unitary_witness(const FiniteInverseSemiring& r) {
    Subset e = idempotent_subset(r);
    for (int x = 0; x < r.size(); ++x) {
        if (subset_contains(e, x)) continue;
        for (int z : subset_elements(e))
            if (subset_contains(e, r.add(x, z))) return x;
    }
    return std::nullopt;
}

inline bool is_e_unitary(const FiniteInverseSemiring& r) {
    return !e_unitary_witness(r).has_value();
}

// The canonical map phi : R -> R/E(R) x E(R), x |-> ([x], 0_x). Always a
// homomorphism; injective exactly when R is E-unitary.
struct EUnitaryEmbedding {
    FiniteInverseSemiring ring_part;        // the ring reflection R/E(R)
    FiniteInverseSemiring idempotent_part;  // E(R)
    FiniteInverseSemiring target;           // their product
    std::vector<int> phi;                   // R-index -> target-index
    bool injective = false;
    std::optional<int> witness;  // non-idempotent x with x+z idempotent, when not E-unitary
};

inline EUnitaryEmbedding embed_eunitary(const FiniteInverseSemiring& r) {
    EUnitaryEmbedding e;
    Subset er = idempotent_subset(r);
    e.ring_part = quotient_semiring(r, er);
    e.idempotent_part = idempotent_semiring_of(r);
    e.target = product_table(e.ring_part, e.idempotent_part);
    e.witness = e_unitary_witness(r);

    Congruence c = congruence_from_ideal(r, er);
    std::vector<int> eidx = subset_elements(er);
    auto epos = [&](int x) {
        for (std::size_t i = 0; i < eidx.size(); ++i)
            if (eidx[i] == x) return static_cast<int>(i);
        throw std::logic_error("idempotent not found");
    };
    const int nb = e.idempotent_part.size();
    e.phi.resize(r.size());
    for (int x = 0; x < r.size(); ++x) e.phi[x] = c.class_of[x] * nb + epos(idem(r, x));

    if (!hom_check(e.phi, r, e.target))
        throw std::logic_error("embed_eunitary: phi is not a homomorphism");
    e.injective = is_injective_map(e.phi, e.target.size());
    return e;
}

}  // namespace invrig
