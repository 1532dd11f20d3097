#pragma once

#include <concepts>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "invrig/core.hpp"

namespace invrig {

// Input data for the bimodule construction: a ring S, an S-S-bimodule A,
// and a bimodule homomorphism f : A -> S with f(x)*y = x*f(y).
template <typename D>
concept BimoduleData = requires(const D d, typename D::scalar_type s, typename D::module_type a) {
    { d.s_add(s, s) } -> std::same_as<typename D::scalar_type>;
    { d.s_mul(s, s) } -> std::same_as<typename D::scalar_type>;
    { d.s_neg(s) } -> std::same_as<typename D::scalar_type>;
    { d.s_zero() } -> std::same_as<typename D::scalar_type>;
    { d.s_one() } -> std::same_as<typename D::scalar_type>;
    { d.s_eq(s, s) } -> std::convertible_to<bool>;
    { d.s_show(s) } -> std::convertible_to<std::string>;
    { d.m_add(a, a) } -> std::same_as<typename D::module_type>;
    { d.m_neg(a) } -> std::same_as<typename D::module_type>;
    { d.m_zero() } -> std::same_as<typename D::module_type>;
    { d.m_eq(a, a) } -> std::convertible_to<bool>;
    { d.m_show(a) } -> std::convertible_to<std::string>;
    { d.act_left(s, a) } -> std::same_as<typename D::module_type>;
    { d.act_right(a, s) } -> std::same_as<typename D::module_type>;
    { d.f(a) } -> std::same_as<typename D::scalar_type>;
};

// Checks the bimodule hypotheses on the given samples (exhaustive when the
// samples are the full carriers). A failing entry names the violated
// condition with a witness.
template <BimoduleData D>
LawReport validate_bimodule(const D& d, const std::vector<typename D::scalar_type>& ss,
                            const std::vector<typename D::module_type>& as) {
    LawReport r;
    auto check = [&](const std::string& name, bool ok, const std::string& witness) {
        for (auto& e : r.entries)
            if (e.law == name) {
                if (e.pass && !ok) e = {name, false, witness};
                return;
            }
        r.entries.push_back({name, ok, ok ? "" : witness});
    };
    auto w1 = [&](auto&& show, const auto& x) { return "(" + show(x) + ")"; };
    auto w2 = [&](const std::string& a, const std::string& b) { return "(" + a + ", " + b + ")"; };

    check("f-preserves-zero", d.s_eq(d.f(d.m_zero()), d.s_zero()), "()");
    for (const auto& x : as) {
        check("group-inverse",
              d.m_eq(d.m_add(x, d.m_neg(x)), d.m_zero()), w1([&](auto v) { return d.m_show(v); }, x));
        for (const auto& y : as) {
            check("f-additive", d.s_eq(d.f(d.m_add(x, y)), d.s_add(d.f(x), d.f(y))),
                  w2(d.m_show(x), d.m_show(y)));
            check("f-balanced", d.m_eq(d.act_left(d.f(x), y), d.act_right(x, d.f(y))),
                  w2(d.m_show(x), d.m_show(y)));
            check("add-comm", d.m_eq(d.m_add(x, y), d.m_add(y, x)), w2(d.m_show(x), d.m_show(y)));
            for (const auto& z : as)
                check("add-assoc",
                      d.m_eq(d.m_add(d.m_add(x, y), z), d.m_add(x, d.m_add(y, z))),
                      w2(d.m_show(x), d.m_show(y)));
        }
    }
    for (const auto& s : ss) {
        for (const auto& x : as) {
            check("f-left-equivariant", d.s_eq(d.f(d.act_left(s, x)), d.s_mul(s, d.f(x))),
                  w2(d.s_show(s), d.m_show(x)));
            check("f-right-equivariant", d.s_eq(d.f(d.act_right(x, s)), d.s_mul(d.f(x), s)),
                  w2(d.s_show(s), d.m_show(x)));
            check("unit-action", d.m_eq(d.act_left(d.s_one(), x), x) &&
                                     d.m_eq(d.act_right(x, d.s_one()), x),
                  w2(d.s_show(s), d.m_show(x)));
            check("zero-action", d.m_eq(d.act_left(d.s_zero(), x), d.m_zero()) &&
                                     d.m_eq(d.act_right(x, d.s_zero()), d.m_zero()),
                  w2(d.s_show(s), d.m_show(x)));
            for (const auto& y : as)
                check("action-additive",
                      d.m_eq(d.act_left(s, d.m_add(x, y)),
                             d.m_add(d.act_left(s, x), d.act_left(s, y))) &&
                          d.m_eq(d.act_right(d.m_add(x, y), s),
                                 d.m_add(d.act_right(x, s), d.act_right(y, s))),
                      w2(d.s_show(s), d.m_show(x)));
            for (const auto& t : ss) {
                check("action-linear",
                      d.m_eq(d.act_left(d.s_add(s, t), x),
                             d.m_add(d.act_left(s, x), d.act_left(t, x))),
                      w2(d.s_show(s), d.s_show(t)));
                check("action-associative",
                      d.m_eq(d.act_left(d.s_mul(s, t), x), d.act_left(s, d.act_left(t, x))) &&
                          d.m_eq(d.act_right(x, d.s_mul(s, t)), d.act_right(d.act_right(x, s), t)),
                      w2(d.s_show(s), d.s_show(t)));
                check("actions-commute",
                      d.m_eq(d.act_right(d.act_left(s, x), t), d.act_left(s, d.act_right(x, t))),
                      w2(d.s_show(s), d.s_show(t)));
            }
        }
    }
    return r;
}

// The inverse semiring I(f) on the disjoint union S u A:
//   sums/products within S as in S; sums within A as in A;
//   a*a' = f(a).a';  s + a = f(a) + s;  a*s and s*a by the actions;
//   0 = 0_A, 1 = 1_S.
// Its only additive idempotents are 0_A and 0_S.
template <BimoduleData D>
struct BimoduleSemiring {
    using scalar = typename D::scalar_type;
    using module = typename D::module_type;
    using value_type = std::variant<scalar, module>;

    D data;

    value_type add(const value_type& x, const value_type& y) const {
        if (is_s(x) && is_s(y)) return from_scalar(data.s_add(s(x), s(y)));
        if (!is_s(x) && !is_s(y)) return from_module(data.m_add(m(x), m(y)));
        const scalar& sv = is_s(x) ? s(x) : s(y);
        const module& av = is_s(x) ? m(y) : m(x);
        return from_scalar(data.s_add(data.f(av), sv));
    }
    value_type mul(const value_type& x, const value_type& y) const {
        if (is_s(x) && is_s(y)) return from_scalar(data.s_mul(s(x), s(y)));
        if (!is_s(x) && !is_s(y)) return from_module(data.act_left(data.f(m(x)), m(y)));
        if (is_s(x)) return from_module(data.act_left(s(x), m(y)));
        return from_module(data.act_right(m(x), s(y)));
    }
    value_type neg(const value_type& x) const {
        if (is_s(x)) return from_scalar(data.s_neg(s(x)));
        return from_module(data.m_neg(m(x)));
    }
    value_type zero() const { return value_type(std::in_place_index<1>, data.m_zero()); }
    value_type one() const { return value_type(std::in_place_index<0>, data.s_one()); }
    bool eq(const value_type& x, const value_type& y) const {
        if (x.index() != y.index()) return false;
        if (is_s(x)) return data.s_eq(s(x), s(y));
        return data.m_eq(m(x), m(y));
    }
    std::string show(const value_type& x) const {
        if (is_s(x)) return "S:" + data.s_show(s(x));
        return "A:" + data.m_show(m(x));
    }

    value_type from_scalar(const scalar& v) const { return value_type(std::in_place_index<0>, v); }
    value_type from_module(const module& v) const { return value_type(std::in_place_index<1>, v); }

private:
    static bool is_s(const value_type& v) { return v.index() == 0; }
    static const scalar& s(const value_type& v) { return std::get<0>(v); }
    static const module& m(const value_type& v) { return std::get<1>(v); }
};

// Validates the hypotheses on the given samples, then returns I(f).
// Throws with a witness if the hypotheses fail on the sample.
template <BimoduleData D>
BimoduleSemiring<D> bimodule_construct(D data, const std::vector<typename D::scalar_type>& ss,
                                       const std::vector<typename D::module_type>& as) {
    LawReport r = validate_bimodule(data, ss, as);
    if (!r.ok()) {
        const LawEntry* f = r.first_failure();
        throw std::invalid_argument("bimodule hypothesis violated: " + f->law + " at " + f->witness);
    }
    return BimoduleSemiring<D>{std::move(data)};
}

}  // namespace invrig
