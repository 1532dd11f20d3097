#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "invrig/invrig.hpp"

using namespace invrig;

TEST_CASE("associated idempotent") {
    auto z = z0();
    CHECK(z.eq(idem(z, Z0Element(5)), z.old_zero()));
    CHECK(z.eq(idem(z, z.zero()), z.zero()));

    TropicalSemiring t;
    for (int n = -3; n <= 3; ++n)
        CHECK(t.eq(idem(t, Rational(n)), Rational(n)));

    BoundedPolySemiring bp;
    BoundedPoly p({Rational(0), Rational(1), Rational(1)}, Bound::of(2));
    CHECK(bp.eq(idem(bp, p), BoundedPoly({}, Bound::of(2))));
}

TEST_CASE("canonical order") {
    auto r = builtins::B1();
    CHECK(leq(r, r.index_of("m"), r.index_of("b")));
    CHECK_FALSE(leq(r, r.index_of("a"), r.index_of("b")));
    for (int x = 0; x < r.size(); ++x) {
        // 0 <= x iff x is idempotent; x <= 0 iff x = 0.
        CHECK(leq(r, r.zero(), x) == is_additive_idempotent(r, x));
        CHECK(leq(r, x, r.zero()) == (x == r.zero()));
    }
}

TEST_CASE("classification") {
    auto z = z0();
    auto cz = classify(z);
    CHECK(cz.tag == StructureTag::neither);
    CHECK(z.eq(cz.zero_one, z.old_zero()));

    TropicalSemiring t;
    auto ct = classify(t);
    CHECK(ct.tag == StructureTag::idempotent_semiring);
    CHECK(t.eq(ct.zero_one, t.one()));

    CHECK(classify(builtins::Z2()).tag == StructureTag::ring);
    CHECK(classify(builtins::B1()).tag == StructureTag::idempotent_semiring);
    CHECK(classify(builtins::End_Z2_0()).tag == StructureTag::neither);
}

TEST_CASE("classification forces the global identities") {
    auto z2 = builtins::Z2();
    for (int x = 0; x < z2.size(); ++x) CHECK(z2.add(x, z2.neg(x)) == z2.zero());
    auto b1 = builtins::B1();
    for (int x = 0; x < b1.size(); ++x) CHECK(b1.add(x, x) == x);
}

TEST_CASE("law report on finite carriers is exhaustive") {
    auto r = builtins::B1();
    LawReport rep = law_report(r, r.carrier());
    CHECK(rep.ok());
    CHECK(rep.entries.size() >= 10);

    // Corrupt one multiplication entry: distributivity must fail with a witness.
    RawTables bad = r.raw();
    bad.mul[r.index_of("j")][r.index_of("a")] = r.index_of("b");
    REQUIRE_THROWS_AS(validate(bad), ValidationError);
    try {
        validate(bad);
    } catch (const ValidationError& e) {
        bool distributivity_failed = false;
        for (const auto& entry : e.report.entries)
            if (!entry.pass && entry.law.find("distributivity") != std::string::npos) {
                distributivity_failed = true;
                CHECK_FALSE(entry.witness.empty());
            }
        CHECK(distributivity_failed);
    }
}

TEST_CASE("law report on a Z0 window") {
    auto z = z0();
    std::vector<Z0Element> sample = {std::nullopt, Z0Element(0)};
    for (int n = -2; n <= 2; ++n) sample.push_back(Z0Element(n));
    CHECK(law_report(z, sample).ok());
}

TEST_CASE("empty sample is rejected") {
    auto z = z0();
    CHECK_THROWS_WITH(law_report(z, {}), "empty sample");
}

TEST_CASE("sampled law report records its seed") {
    auto z = z0();
    std::uint64_t seed = 42;
    std::mt19937_64 rng(seed);
    std::vector<Z0Element> pool = {std::nullopt};
    for (int n = -6; n <= 6; ++n) pool.push_back(Z0Element(n));
    auto gen = [&](std::size_t) -> Z0Element { return pool[rng() % pool.size()]; };
    LawReport rep = law_report_sampled(z, gen, 12, seed);
    CHECK(rep.ok());
    REQUIRE(rep.seed.has_value());
    CHECK(*rep.seed == seed);
}

TEST_CASE("derived propositions hold on every builtin") {
    for (auto r : {builtins::B1(), builtins::Z2(), builtins::If0(), builtins::End_Z2_0()}) {
        for (int x = 0; x < r.size(); ++x)
            for (int y = 0; y < r.size(); ++y) {
                CHECK(r.mul(idem(r, x), y) == idem(r, r.mul(x, y)));
                CHECK(r.mul(y, idem(r, x)) == idem(r, r.mul(y, x)));
                CHECK(r.mul(idem(r, x), idem(r, y)) == idem(r, r.mul(x, y)));
                CHECK(idem(r, r.add(x, y)) == r.add(idem(r, x), idem(r, y)));
            }
        int m = r.neg(r.one());
        for (int x = 0; x < r.size(); ++x) {
            CHECK(r.mul(m, x) == r.neg(x));
            CHECK(r.mul(x, m) == r.neg(x));
        }
    }
}

TEST_CASE("multiplication is monotone") {
    auto r = builtins::B1();
    for (int x = 0; x < r.size(); ++x)
        for (int y = 0; y < r.size(); ++y)
            for (int u = 0; u < r.size(); ++u)
                for (int v = 0; v < r.size(); ++v)
                    if (leq(r, x, y) && leq(r, u, v)) CHECK(leq(r, r.mul(x, u), r.mul(y, v)));
}
