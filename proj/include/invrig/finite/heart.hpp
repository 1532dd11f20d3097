#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "invrig/bimodule.hpp"
#include "invrig/finite/analysis.hpp"
#include "invrig/finite/hom.hpp"
#include "invrig/finite/table.hpp"

namespace invrig {

namespace detail {

// G(0) as a bimodule over the ring of scalars G(0_1), with f = z(x) = x + 0_1.
// Elements are carrier indices of the ambient structure R.
struct HeartData {
    using scalar_type = int;
    using module_type = int;

    const FiniteInverseSemiring* r;
    int zero_one;

    int s_add(int x, int y) const { return r->add(x, y); }
    int s_mul(int x, int y) const { return r->mul(x, y); }
    int s_neg(int x) const { return r->neg(x); }
    int s_zero() const { return zero_one; }
    int s_one() const { return r->one(); }
    bool s_eq(int x, int y) const { return x == y; }
    std::string s_show(int x) const { return r->names()[x]; }
    int m_add(int x, int y) const { return r->add(x, y); }
    int m_neg(int x) const { return r->neg(x); }
    int m_zero() const { return r->zero(); }
    bool m_eq(int x, int y) const { return x == y; }
    std::string m_show(int x) const { return r->names()[x]; }
    int act_left(int s, int a) const { return r->mul(s, a); }
    int act_right(int a, int s) const { return r->mul(a, s); }
    int f(int a) const { return r->add(a, zero_one); }
};

}  // namespace detail

// The heart of R: the bimodule construction applied to
// z : G(0) -> G(0_1), x |-> x + 0_1, together with the induced
// homomorphism into R. The homomorphism is injective iff R is not a ring.
struct Heart {
    FiniteInverseSemiring heart;  // carrier: G(0) elements then G(0_1) elements
    std::vector<int> hom;         // heart-index -> R-index
    bool hom_injective = false;
    Subset group_zero = 0;      // G(0) in R
    Subset group_zero_one = 0;  // G(0_1) in R
};

inline Heart heart_of(const FiniteInverseSemiring& r) {
    int z1 = idem(r, r.one());
    Heart h;
    h.group_zero = group_at(r, r.zero());
    h.group_zero_one = group_at(r, z1);

    std::vector<int> g0 = subset_elements(h.group_zero);
    std::vector<int> g1 = subset_elements(h.group_zero_one);

    // The bimodule hypotheses are theorems here; a failure aborts.
    detail::HeartData data{&r, z1};
    auto sr = bimodule_construct(data, g1, g0);
    using V = decltype(sr)::value_type;

    std::vector<V> elems;
    std::vector<std::string> names;
    for (int a : g0) {
        elems.push_back(sr.from_module(a));
        names.push_back("A:" + r.names()[a]);
        h.hom.push_back(a);
    }
    for (int s : g1) {
        elems.push_back(sr.from_scalar(s));
        names.push_back("S:" + r.names()[s]);
        h.hom.push_back(s);
    }
    h.heart = tabulate(sr, elems, names);

    if (!hom_check(h.hom, h.heart, r))
        throw std::logic_error("heart: induced map is not a homomorphism");
    h.hom_injective = is_injective_map(h.hom, r.size());
    bool is_ring = classify(r).tag == StructureTag::ring;
    if (h.hom_injective == is_ring)
        throw std::logic_error("heart: injectivity disagrees with ring classification");
    return h;
}

}  // namespace invrig
