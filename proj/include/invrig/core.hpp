#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace invrig {

// A semiring object: a (possibly stateful) description of a carrier whose
// elements are plain values of `value_type`. Addition forms a commutative
// inverse monoid, multiplication a monoid, and multiplication distributes
// over addition with an absorbing zero. Equality is an exact primitive;
// approximate carriers do not model this concept for law-testing purposes.
template <typename S>
concept InverseSemiring = requires(const S s, typename S::value_type x, typename S::value_type y) {
    { s.add(x, y) } -> std::same_as<typename S::value_type>;
    { s.mul(x, y) } -> std::same_as<typename S::value_type>;
    { s.neg(x) } -> std::same_as<typename S::value_type>;
    { s.zero() } -> std::same_as<typename S::value_type>;
    { s.one() } -> std::same_as<typename S::value_type>;
    { s.eq(x, y) } -> std::convertible_to<bool>;
    { s.show(x) } -> std::convertible_to<std::string>;
};

// The idempotent associated to x: 0_x = x + (-x).
template <InverseSemiring S>
typename S::value_type idem(const S& s, const typename S::value_type& x) {
    return s.add(x, s.neg(x));
}

// Canonical preorder: x <= y iff x + 0_y = y.
template <InverseSemiring S>
bool leq(const S& s, const typename S::value_type& x, const typename S::value_type& y) {
    return s.eq(s.add(x, idem(s, y)), y);
}

template <InverseSemiring S>
bool is_additive_idempotent(const S& s, const typename S::value_type& x) {
    return s.eq(s.add(x, x), x);
}

enum class StructureTag { ring, idempotent_semiring, neither };

inline std::string to_string(StructureTag t) {
    switch (t) {
        case StructureTag::ring: return "ring";
        case StructureTag::idempotent_semiring: return "idempotent-semiring";
        default: return "neither";
    }
}

template <typename V>
struct Classification {
    StructureTag tag;
    V zero_one;  // 0_1, the idempotent associated to the multiplicative unit
};

// A structure is a ring iff 0_1 = 0 and an idempotent semiring iff 0_1 = 1.
template <InverseSemiring S>
Classification<typename S::value_type> classify(const S& s) {
    auto z1 = idem(s, s.one());
    bool ring = s.eq(z1, s.zero());
    bool idem_sr = s.eq(z1, s.one());
    StructureTag tag = StructureTag::neither;
    if (ring)
        tag = StructureTag::ring;
    else if (idem_sr)
        tag = StructureTag::idempotent_semiring;
    return {tag, z1};
}

struct LawEntry {
    std::string law;
    bool pass;
    std::string witness;  // empty when pass
};

struct LawReport {
    std::vector<LawEntry> entries;
    std::optional<std::uint64_t> seed;  // set when the sample came from a seeded generator

    bool ok() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    const LawEntry* first_failure() const {
        for (const auto& e : entries)
            if (!e.pass) return &e;
        return nullptr;
    }
};

enum class LawSuite {
    full,     // all inverse-semiring axioms plus derived propositions
    zeroless  // skips the additive-identity and zero-absorption laws
};

namespace detail {

template <InverseSemiring S>
class LawRunner {
public:
    using V = typename S::value_type;

    LawRunner(const S& s, const std::vector<V>& sample) : s_(s), sample_(sample) {}

    LawReport run(LawSuite suite) {
        if (sample_.empty()) throw std::invalid_argument("empty sample");
        const S& s = s_;

        unary("inverse-law", [&](const V& x) {
            V n = s.neg(x);
            return s.eq(s.add(s.add(x, n), x), x) && s.eq(s.add(s.add(n, x), n), n);
        });
        unary("neg-involution", [&](const V& x) { return s.eq(s.neg(s.neg(x)), x); });
        binary("add-comm", [&](const V& x, const V& y) { return s.eq(s.add(x, y), s.add(y, x)); });
        ternary("add-assoc", [&](const V& x, const V& y, const V& z) {
            return s.eq(s.add(s.add(x, y), z), s.add(x, s.add(y, z)));
        });
        ternary("mul-assoc", [&](const V& x, const V& y, const V& z) {
            return s.eq(s.mul(s.mul(x, y), z), s.mul(x, s.mul(y, z)));
        });
        unary("mul-identity", [&](const V& x) {
            return s.eq(s.mul(s.one(), x), x) && s.eq(s.mul(x, s.one()), x);
        });
        ternary("left-distributivity", [&](const V& x, const V& y, const V& z) {
            return s.eq(s.mul(x, s.add(y, z)), s.add(s.mul(x, y), s.mul(x, z)));
        });
        ternary("right-distributivity", [&](const V& x, const V& y, const V& z) {
            return s.eq(s.mul(s.add(y, z), x), s.add(s.mul(y, x), s.mul(z, x)));
        });
        if (suite == LawSuite::full) {
            unary("add-identity", [&](const V& x) { return s.eq(s.add(x, s.zero()), x); });
            unary("zero-absorption", [&](const V& x) {
                return s.eq(s.mul(s.zero(), x), s.zero()) && s.eq(s.mul(x, s.zero()), s.zero());
            });
        }

        // Derived propositions: theorems of the axioms, rechecked as
        // tripwires that localize broken instances.
        binary("sum-of-idempotents", [&](const V& x, const V& y) {
            return s.eq(idem(s, s.add(x, y)), s.add(idem(s, x), idem(s, y)));
        });
        binary("idem-absorbs-product", [&](const V& x, const V& y) {
            return s.eq(s.mul(idem(s, x), y), idem(s, s.mul(x, y))) &&
                   s.eq(s.mul(y, idem(s, x)), idem(s, s.mul(y, x)));
        });
        binary("idem-of-product", [&](const V& x, const V& y) {
            return s.eq(s.mul(idem(s, x), idem(s, y)), idem(s, s.mul(x, y)));
        });
        unary("neg-one-scales", [&](const V& x) {
            V m = s.neg(s.one());
            return s.eq(s.mul(m, x), s.neg(x)) && s.eq(s.mul(x, m), s.neg(x));
        });
        quaternary("mul-monotone", [&](const V& x, const V& y, const V& u, const V& v) {
            if (!leq(s_, x, y) || !leq(s_, u, v)) return true;
            return leq(s_, s.mul(x, u), s.mul(y, v));
        });

        return std::move(report_);
    }

private:
    template <typename F>
    void unary(const std::string& name, F&& law) {
        for (const auto& x : sample_)
            if (!law(x)) return fail(name, {&x});
        pass(name);
    }
    template <typename F>
    void binary(const std::string& name, F&& law) {
        for (const auto& x : sample_)
            for (const auto& y : sample_)
                if (!law(x, y)) return fail(name, {&x, &y});
        pass(name);
    }
    template <typename F>
    void ternary(const std::string& name, F&& law) {
        for (const auto& x : sample_)
            for (const auto& y : sample_)
                for (const auto& z : sample_)
                    if (!law(x, y, z)) return fail(name, {&x, &y, &z});
        pass(name);
    }
    template <typename F>
    void quaternary(const std::string& name, F&& law) {
        for (const auto& x : sample_)
            for (const auto& y : sample_)
                for (const auto& u : sample_)
                    for (const auto& v : sample_)
                        if (!law(x, y, u, v)) return fail(name, {&x, &y, &u, &v});
        pass(name);
    }

    void pass(const std::string& name) { report_.entries.push_back({name, true, ""}); }
    void fail(const std::string& name, std::initializer_list<const V*> witness) {
        std::ostringstream os;
        os << "(";
        bool first = true;
        for (const V* w : witness) {
            if (!first) os << ", ";
            os << s_.show(*w);
            first = false;
        }
        os << ")";
        report_.entries.push_back({name, false, os.str()});
    }

    const S& s_;
    const std::vector<V>& sample_;
    LawReport report_;
};

}  // namespace detail

// Checks the inverse-semiring axioms and the derived propositions on the
// given sample. For a finite carrier passed in full, a clean report is an
// exhaustive proof; otherwise it is evidence on the sample only. Every
// failing entry carries a concrete witness tuple.
template <InverseSemiring S>
LawReport law_report(const S& s, const std::vector<typename S::value_type>& sample,
                     LawSuite suite = LawSuite::full) {
    return detail::LawRunner<S>(s, sample).run(suite);
}

// Sampled variant for infinite carriers: the caller supplies a deterministic
// generator (index -> element); the seed used to build it is recorded in the
// report for reproducibility.
template <InverseSemiring S>
LawReport law_report_sampled(const S& s,
                             const std::function<typename S::value_type(std::size_t)>& gen,
                             std::size_t count, std::uint64_t seed,
                             LawSuite suite = LawSuite::full) {
    std::vector<typename S::value_type> sample;
    sample.reserve(count);
    for (std::size_t i = 0; i < count; ++i) sample.push_back(gen(i));
    LawReport r = law_report(s, sample, suite);
    r.seed = seed;
    return r;
}

}  // namespace invrig
