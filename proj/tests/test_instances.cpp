#include <catch2/catch_amalgamated.hpp>

#include "invrig/invrig.hpp"

using namespace invrig;

namespace {

FiniteInverseSemiring boolean_semiring() {
    RawTables t;
    t.names = {"0", "1"};
    t.add = {{0, 1}, {1, 1}};
    t.mul = {{0, 0}, {0, 1}};
    t.zero = 0;
    t.one = 1;
    return validate(t);
}

std::vector<Z0Element> z0_window(int w) {
    std::vector<Z0Element> out = {std::nullopt};
    for (int n = -w; n <= w; ++n) out.push_back(Z0Element(n));
    return out;
}

}  // namespace

TEST_CASE("adjoined zero") {
    auto z = z0();
    CHECK(z.eq(z.add(z.old_zero(), z.zero()), z.old_zero()));
    CHECK(z.eq(z.mul(Z0Element(3), z.zero()), z.zero()));
    CHECK(z.eq(z.add(Z0Element(3), Z0Element(-3)), z.old_zero()));
    CHECK(law_report(z, z0_window(4)).ok());
    // idem(0^) and idem(0) differ, so R0 is never a ring.
    CHECK_FALSE(z.eq(idem(z, z.old_zero()), idem(z, z.zero())));
    CHECK(classify(z).tag == StructureTag::neither);
}

TEST_CASE("adjoined infinity is zeroless") {
    auto r = adjoin_infinity(IntegerRing{});
    CHECK(r.eq(r.add(r.lift(5), r.infinity()), r.infinity()));
    CHECK(r.eq(r.mul(r.zero(), r.infinity()), r.infinity()));
    CHECK(r.eq(r.add(r.lift(2), r.lift(3)), r.lift(5)));
    CHECK(r.eq(r.neg(r.infinity()), r.infinity()));
    CHECK(r.eq(r.add(r.add(r.infinity(), r.infinity()), r.infinity()), r.infinity()));

    std::vector<decltype(r)::value_type> sample = {r.infinity()};
    for (int n = -3; n <= 3; ++n) sample.push_back(r.lift(n));
    CHECK(law_report(r, sample, LawSuite::zeroless).ok());
    LawReport full = law_report(r, sample, LawSuite::full);
    CHECK_FALSE(full.ok());
    for (const auto& e : full.entries)
        if (!e.pass) CHECK(e.law == "zero-absorption");
}

TEST_CASE("bounded polynomial arithmetic") {
    BoundedPolySemiring s;
    BoundedPoly x2px({Rational(0), Rational(1), Rational(1)}, Bound::of(2));
    BoundedPoly mx2({Rational(0), Rational(0), Rational(-1)}, Bound::of(2));
    BoundedPoly x({Rational(0), Rational(1)}, Bound::of(1));

    CHECK(s.add(x2px, mx2) == BoundedPoly({Rational(0), Rational(1)}, Bound::of(2)));
    CHECK(s.mul(x, x) == BoundedPoly({Rational(0), Rational(0), Rational(1)}, Bound::of(2)));
    CHECK(s.add(s.zero(), x) == x);
    CHECK(idem(s, x2px) == BoundedPoly({}, Bound::of(2)));
    CHECK(s.show(s.add(x2px, mx2)) == "(x, bound 2)");

    CHECK_THROWS_WITH(BoundedPoly({Rational(1), Rational(1)}, Bound::of(0)), "bound violated");

    std::vector<BoundedPoly> sample = {s.zero(), s.one(), x, x2px, mx2,
                                       BoundedPoly({Rational(1, 2)}, Bound::of(3))};
    CHECK(law_report(s, sample).ok());
}

TEST_CASE("bounded polynomial projections give the E-unitary embedding") {
    BoundedPolySemiring s;
    std::vector<BoundedPoly> sample = {
        s.zero(), s.one(), BoundedPoly({Rational(0), Rational(1)}, Bound::of(1)),
        BoundedPoly({Rational(3)}, Bound::of(2)), BoundedPoly({Rational(1), Rational(-2)}, Bound::of(4))};
    for (const auto& p : sample)
        for (const auto& q : sample) {
            auto sum = s.add(p, q);
            CHECK(sum.bound() == max(p.bound(), q.bound()));
            auto prod = s.mul(p, q);
            CHECK(prod.bound() == p.bound() + q.bound());
            CHECK(prod.coeffs() == poly_detail::mul(p.coeffs(), q.coeffs()));
        }
    // Jointly injective: equal coefficients and equal bound mean equality.
    // Scalars: G(0_1) consists of the constants with bound 0.
    CHECK(idem(s, BoundedPoly({Rational(7, 2)}, Bound::of(0))) == idem(s, s.one()));
    CHECK_FALSE(idem(s, BoundedPoly({Rational(7, 2)}, Bound::of(1))) == idem(s, s.one()));
}

TEST_CASE("tropical semiring") {
    TropicalSemiring t;
    std::vector<TropicalSemiring::value_type> sample = {std::nullopt, Rational(0), Rational(1),
                                                        Rational(-2), Rational(1, 2)};
    CHECK(law_report(t, sample).ok());
    CHECK(t.eq(t.add(Rational(3), Rational(1)), Rational(1)));
    CHECK(t.eq(t.mul(Rational(3), Rational(1)), Rational(4)));
}

namespace {

// S = Z, A = 2Z, f the inclusion.
struct EvenData {
    using scalar_type = std::int64_t;
    using module_type = std::int64_t;
    std::int64_t s_add(std::int64_t x, std::int64_t y) const { return x + y; }
    std::int64_t s_mul(std::int64_t x, std::int64_t y) const { return x * y; }
    std::int64_t s_neg(std::int64_t x) const { return -x; }
    std::int64_t s_zero() const { return 0; }
    std::int64_t s_one() const { return 1; }
    bool s_eq(std::int64_t x, std::int64_t y) const { return x == y; }
    std::string s_show(std::int64_t x) const { return "S:" + std::to_string(x); }
    std::int64_t m_add(std::int64_t x, std::int64_t y) const { return x + y; }
    std::int64_t m_neg(std::int64_t x) const { return -x; }
    std::int64_t m_zero() const { return 0; }
    bool m_eq(std::int64_t x, std::int64_t y) const { return x == y; }
    std::string m_show(std::int64_t x) const { return "A:" + std::to_string(x); }
    std::int64_t act_left(std::int64_t s, std::int64_t a) const { return s * a; }
    std::int64_t act_right(std::int64_t a, std::int64_t s) const { return a * s; }
    std::int64_t f(std::int64_t a) const { return a; }
};

}  // namespace

TEST_CASE("bimodule construction over the even integers") {
    // Hypotheses validated on the window [-8, 8].
    std::vector<std::int64_t> scalars, evens;
    for (std::int64_t n = -8; n <= 8; ++n) {
        scalars.push_back(n);
        if (n % 2 == 0) evens.push_back(n);
    }
    auto sr = bimodule_construct(EvenData{}, scalars, evens);
    CHECK(sr.eq(sr.add(sr.from_module(2), sr.from_scalar(3)), sr.from_scalar(5)));
    CHECK(sr.eq(sr.mul(sr.from_module(2), sr.from_module(4)), sr.from_module(8)));
    std::vector<decltype(sr)::value_type> sample = {
        sr.from_scalar(0), sr.from_scalar(1), sr.from_scalar(-1),
        sr.from_module(0), sr.from_module(2), sr.from_module(-2)};
    CHECK(law_report(sr, sample).ok());
}

TEST_CASE("bimodule hypotheses are enforced") {
    struct BadData : EvenData {
        std::int64_t f(std::int64_t a) const { return a + 2; }  // not additive
    };
    CHECK_THROWS_AS(bimodule_construct(BadData{}, {0, 1, 2}, {0, 2, 4}), std::invalid_argument);
    try {
        bimodule_construct(BadData{}, {0, 1, 2}, {0, 2, 4});
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("bimodule hypothesis violated") == 0);
    }
}

TEST_CASE("trivial module recovers the adjoined zero") {
    struct TrivData {
        using scalar_type = int;
        using module_type = int;
        int s_add(int x, int y) const { return x ^ y; }
        int s_mul(int x, int y) const { return x & y; }
        int s_neg(int x) const { return x; }
        int s_zero() const { return 0; }
        int s_one() const { return 1; }
        bool s_eq(int x, int y) const { return x == y; }
        std::string s_show(int x) const { return std::to_string(x); }
        int m_add(int, int) const { return 0; }
        int m_neg(int) const { return 0; }
        int m_zero() const { return 0; }
        bool m_eq(int x, int y) const { return x == y; }
        std::string m_show(int) const { return "*"; }
        int act_left(int, int) const { return 0; }
        int act_right(int, int) const { return 0; }
        int f(int) const { return 0; }
    };
    auto sr = bimodule_construct(TrivData{}, {0, 1}, {0});
    auto tabled = tabulate(sr, {sr.from_module(0), sr.from_scalar(0), sr.from_scalar(1)},
                           {"0", "0^", "1"});
    auto z2_0 = adjoin_zero_table(builtins::Z2());
    CHECK_FALSE(find_isomorphism(tabled, z2_0).empty());
}

TEST_CASE("the builtin If0 has exactly two idempotents and is not E-unitary") {
    auto r = builtins::If0();
    CHECK(r.size() == 4);
    Subset e = idempotent_subset(r);
    CHECK(subset_elements(e).size() == 2);
    CHECK(subset_contains(e, r.index_of("0A")));
    CHECK(subset_contains(e, r.index_of("0S")));
    CHECK_FALSE(is_e_unitary(r));
    auto w = e_unitary_witness(r);
    REQUIRE(w.has_value());
    CHECK(r.names()[*w] == "1A");
}

TEST_CASE("hearts") {
    auto b1 = builtins::B1();
    Heart hb = heart_of(b1);
    CHECK(subset_elements(hb.group_zero) == std::vector<int>{b1.zero()});
    CHECK(subset_elements(hb.group_zero_one) == std::vector<int>{b1.one()});
    CHECK(hb.heart.size() == 2);
    CHECK(hb.hom_injective);
    CHECK_FALSE(find_isomorphism(hb.heart, boolean_semiring()).empty());

    auto z2 = builtins::Z2();
    Heart hz = heart_of(z2);
    CHECK(hz.heart.size() == 4);
    CHECK_FALSE(hz.hom_injective);

    auto if0 = builtins::If0();
    Heart hi = heart_of(if0);
    CHECK(hi.heart.size() == 4);
    CHECK(hi.hom_injective);
    CHECK_FALSE(find_isomorphism(hi.heart, if0).empty());
}

TEST_CASE("products") {
    auto p = product_table(builtins::Z2(), builtins::B1());
    CHECK(classify(p).tag == StructureTag::neither);
    CHECK(law_report(p, p.carrier()).ok());

    auto a = builtins::Z2();
    auto b = builtins::B1();
    for (int x = 0; x < a.size(); ++x)
        for (int u = 0; u < b.size(); ++u) {
            int px = x * b.size() + u;
            CHECK(idem(p, px) == idem(a, x) * b.size() + idem(b, u));
            for (int y = 0; y < a.size(); ++y)
                for (int v = 0; v < b.size(); ++v)
                    CHECK(leq(p, px, y * b.size() + v) == (leq(a, x, y) && leq(b, u, v)));
        }
}

TEST_CASE("endomorphism semirings") {
    RawMonoidTables semilattice;
    semilattice.names = {"0", "e"};
    semilattice.add = {{0, 1}, {1, 1}};
    semilattice.zero = 0;
    auto end_sl = endomorphism_semiring(semilattice);
    CHECK(end_sl.size() == 2);
    CHECK_FALSE(find_isomorphism(end_sl, boolean_semiring()).empty());

    RawMonoidTables z2group;
    z2group.names = {"0", "1"};
    z2group.add = {{0, 1}, {1, 0}};
    z2group.zero = 0;
    auto end_z2 = endomorphism_semiring(z2group);
    CHECK(end_z2.size() == 2);
    CHECK_FALSE(find_isomorphism(end_z2, builtins::Z2()).empty());

    auto e = builtins::End_Z2_0();
    CHECK(e.size() == 3);
    CHECK(classify(e).tag == StructureTag::neither);
    CHECK(law_report(e, e.carrier()).ok());
}
