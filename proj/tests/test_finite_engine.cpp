#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "invrig/invrig.hpp"

using namespace invrig;

namespace {

Subset named(const FiniteModule& mod, std::initializer_list<const char*> names) {
    Subset s = 0;
    for (const char* n : names) s = subset_with(s, mod.index_of(n));
    return s;
}

std::vector<FiniteInverseSemiring> all_builtins() {
    return {builtins::B1(), builtins::Z2(), builtins::If0(), builtins::End_Z2_0()};
}

std::vector<FiniteModule> test_modules() {
    std::vector<FiniteModule> mods;
    for (const auto& r : all_builtins()) mods.push_back(self_module(r));
    mods.push_back(self_module(adjoin_zero_table(builtins::Z2())));
    mods.push_back(square_module(builtins::Z2()));
    return mods;
}

}  // namespace

TEST_CASE("table validation") {
    auto b1 = builtins::B1();
    CHECK(law_report(b1, b1.carrier()).ok());
    auto z2 = builtins::Z2();
    CHECK(classify(z2).tag == StructureTag::ring);

    RawTables bad = b1.raw();
    bad.add[b1.index_of("a")][b1.index_of("b")] = b1.index_of("m");
    CHECK_THROWS_AS(validate(bad), ValidationError);

    RawTables malformed = b1.raw();
    malformed.add.pop_back();
    CHECK_THROWS_AS(validate(malformed), std::invalid_argument);
}

TEST_CASE("the builtin B1 matches its defining tables") {
    auto r = builtins::B1();
    auto i = [&](const char* n) { return r.index_of(n); };
    CHECK(r.mul(i("j"), i("j")) == i("a"));
    CHECK(r.mul(i("j"), i("a")) == i("a"));
    CHECK(r.mul(i("b"), i("b")) == i("0"));
    CHECK(r.mul(i("m"), i("m")) == i("0"));
    CHECK(r.mul(i("b"), i("1")) == i("b"));
    CHECK(r.add(i("a"), i("m")) == i("j"));
    CHECK(r.add(i("m"), i("b")) == i("b"));
    CHECK(r.add(i("a"), i("b")) == i("j"));
}

TEST_CASE("idempotents and the induced idempotent semiring") {
    auto b1 = builtins::B1();
    CHECK(idempotent_subset(b1) == full_subset(b1.size()));

    auto z2 = builtins::Z2();
    CHECK(subset_elements(idempotent_subset(z2)) == std::vector<int>{z2.zero()});

    auto if0 = builtins::If0();
    FiniteModule self = self_module(if0);
    CHECK(idempotent_subset(if0) == named(self, {"0A", "0S"}));

    FiniteInverseSemiring e = idempotent_semiring_of(if0);
    CHECK(e.size() == 2);
    CHECK(classify(e).tag == StructureTag::idempotent_semiring);
    CHECK(e.names()[e.one()] == "0S");  // the unit of E(R) is 0_1

    // E(R) is an ideal but not a sub-semiring unless 0_1 = 1.
    Subset er = idempotent_subset(if0);
    CHECK(is_submodule(self, er));
    CHECK_FALSE(subset_contains(er, if0.one()));
}

TEST_CASE("groups at idempotents") {
    auto b1 = builtins::B1();
    for (int z : subset_elements(idempotent_subset(b1)))
        CHECK(subset_elements(group_at(b1, z)) == std::vector<int>{z});

    auto z2 = builtins::Z2();
    CHECK(group_at(z2, z2.zero()) == full_subset(2));

    auto if0 = builtins::If0();
    FiniteModule self = self_module(if0);
    Subset gs = group_at(if0, if0.index_of("0S"));
    CHECK(gs == named(self, {"0S", "1S"}));
    for (int x : subset_elements(gs))
        for (int y : subset_elements(gs)) CHECK(subset_contains(gs, if0.mul(x, y)));

    CHECK_THROWS_AS(group_at(if0, if0.index_of("1A")), std::invalid_argument);

    // G(0) is an ideal; acting with neg(one) inverts each module element.
    for (const auto& r : all_builtins()) {
        FiniteModule m = self_module(r);
        CHECK(is_submodule(m, group_at(r, r.zero())));
        for (int x = 0; x < m.size(); ++x)
            CHECK(m.act(r.neg(r.one()), x) == m.mneg(x));
    }
}

TEST_CASE("order closures") {
    auto b1 = builtins::B1();
    FiniteModule self = self_module(b1);
    CHECK(down_closure(self, named(self, {"b"})) == named(self, {"0", "m", "b"}));
    CHECK(down_closure(self, 0u) == 0u);
    CHECK(subset_leq(idempotent_subset(self), up_closure(self, subset_with(0u, self.mzero()))));
}

TEST_CASE("ideal generation in B1") {
    auto b1 = builtins::B1();
    FiniteModule self = self_module(b1);
    CHECK(submodule_generate(self, named(self, {"a"})) == named(self, {"0", "a"}));
    CHECK(submodule_generate(self, named(self, {"j"})) == named(self, {"0", "a", "j"}));
    CHECK(submodule_generate(self, named(self, {"m"})) == named(self, {"0", "m"}));
    CHECK(submodule_generate(self, named(self, {"b"})) == named(self, {"0", "b"}));
    // (b) is not subtractive; its subtractive closure is the downset of b.
    CHECK_FALSE(is_subtractive(self, named(self, {"0", "b"})));
    CHECK(subtractive_closure(self, named(self, {"b"})) == named(self, {"0", "m", "b"}));
}

TEST_CASE("subtractive equals downward closed on every submodule") {
    for (const auto& mod : test_modules())
        for (Subset s : all_submodules(mod))
            CHECK(is_subtractive(mod, s) == is_downward_closed(mod, s));
}

TEST_CASE("congruences and kernels") {
    for (const auto& mod : test_modules())
        for (Subset s : all_submodules(mod)) {
            Congruence c = congruence_from_submodule(mod, s);
            Subset k = kernel_of(mod, c);
            CHECK(k == down_closure(mod, s));
            CHECK((k == s) == is_subtractive(mod, s));
            quotient_module(mod, c);  // well-definedness is asserted inside
        }
}

TEST_CASE("a subset is a kernel exactly when it is a subtractive submodule") {
    for (const auto& r : {builtins::Z2(), builtins::If0(), builtins::End_Z2_0()}) {
        FiniteModule mod = self_module(r);
        std::set<Subset> kernels;
        for (Subset s : all_submodules(mod))
            kernels.insert(kernel_of(mod, congruence_from_submodule(mod, s)));
        std::set<Subset> subtractive;
        for (Subset s : all_subtractive_submodules(mod)) subtractive.insert(s);
        CHECK(kernels == subtractive);
    }
}

TEST_CASE("quotients of B1") {
    auto b1 = builtins::B1();
    FiniteModule self = self_module(b1);
    Subset down_b = named(self, {"0", "m", "b"});
    FiniteInverseSemiring q = quotient_semiring(b1, down_b);
    CHECK(q.size() == 3);
    Congruence c = congruence_from_ideal(b1, down_b);
    CHECK(kernel_of(self, c) == down_b);
}

TEST_CASE("quotient by the idempotents is the ring reflection") {
    auto if0 = builtins::If0();
    FiniteInverseSemiring q = quotient_semiring(if0, idempotent_subset(if0));
    CHECK(q.size() == 2);
    CHECK(classify(q).tag == StructureTag::ring);
    CHECK_FALSE(find_isomorphism(q, builtins::Z2()).empty());
    // With f = 0 the class of zero is {0A, 1A, 0S}.
    FiniteModule self = self_module(if0);
    Congruence c = congruence_from_ideal(if0, idempotent_subset(if0));
    CHECK(kernel_of(self, c) == named(self, {"0A", "1A", "0S"}));

    for (const auto& r : all_builtins()) {
        FiniteInverseSemiring ring = quotient_semiring(r, idempotent_subset(r));
        CHECK(classify(ring).tag == StructureTag::ring);
    }
}

TEST_CASE("restricted modular law holds; the unrestricted law fails where the paper says") {
    auto b1 = builtins::B1();
    FiniteModule self = self_module(b1);

    for (const auto& mod : test_modules()) {
        auto subs = all_submodules(mod);
        for (Subset s2 : subs) {
            if (!is_subtractive(mod, s2)) continue;
            for (Subset s1 : subs) {
                if (!subset_leq(s1, s2)) continue;
                for (Subset x : subs) CHECK(restricted_modular_check(mod, s1, x, s2));
            }
        }
    }

    Subset ia = named(self, {"0", "a"});
    Subset ij = named(self, {"0", "a", "j"});
    Subset im = named(self, {"0", "m"});
    Subset lhs = submodule_sum(self, ia, im) & ij;
    Subset rhs = submodule_sum(self, ia, im & ij);
    CHECK(lhs != rhs);
    auto violations = find_modularity_counterexamples(self);
    bool found = false;
    for (const auto& v : violations)
        if (v.s1 == ia && v.s2 == ij && v.x == im) found = true;
    CHECK(found);
}

TEST_CASE("the subtractive ideals of B1 are the principal downsets") {
    auto b1 = builtins::B1();
    FiniteModule self = self_module(b1);
    std::set<Subset> expected;
    for (int x = 0; x < self.size(); ++x)
        expected.insert(down_closure(self, subset_with(0u, x)));
    std::set<Subset> actual;
    for (Subset s : all_subtractive_submodules(self)) actual.insert(s);
    CHECK(actual == expected);

    // Modularity fails in this lattice at (down m, down b, down a).
    Subset dm = named(self, {"0", "m"});
    Subset db = named(self, {"0", "m", "b"});
    Subset da = named(self, {"0", "a"});
    auto violations = find_modularity_counterexamples(self, true);
    bool found = false;
    for (const auto& v : violations)
        if (v.s1 == dm && v.s2 == db && v.x == da) found = true;
    CHECK(found);
}

TEST_CASE("upward-closed characterization") {
    for (const auto& r : all_builtins()) {
        FiniteModule self = self_module(r);
        for (Subset s : all_subtractive_submodules(self)) {
            UpwardReport rep = upward_equivalences(r, s);
            CHECK(rep.all_equal());
        }
        // S = E(R): all conditions hold.
        UpwardReport er = upward_equivalences(r, down_closure(self, idempotent_subset(r)));
        CHECK(er.all_equal());
        CHECK(er.upward_closed);
        // S = {0} in a non-ring: all conditions fail.
        if (classify(r).tag != StructureTag::ring) {
            UpwardReport z = upward_equivalences(r, subset_with(0u, r.zero()));
            CHECK(z.all_equal());
            CHECK_FALSE(z.upward_closed);
        }
    }

    auto b1 = builtins::B1();
    FiniteModule self = self_module(b1);
    UpwardReport dj = upward_equivalences(b1, down_closure(self, named(self, {"j"})));
    CHECK(dj.all_equal());
    CHECK_FALSE(*dj.contains_zero_one);
    UpwardReport whole = upward_equivalences(b1, full_subset(b1.size()));
    CHECK(whole.all_equal());
    CHECK(whole.upward_closed);
}

TEST_CASE("E-unitary verdicts and the embedding") {
    for (const auto& r : all_builtins()) {
        EUnitaryEmbedding e = embed_eunitary(r);
        CHECK(e.injective == is_e_unitary(r));
        CHECK(hom_check(e.phi, r, e.target));
    }
    CHECK(is_e_unitary(builtins::B1()));
    CHECK(is_e_unitary(builtins::Z2()));
    CHECK(is_e_unitary(builtins::End_Z2_0()));
    CHECK_FALSE(is_e_unitary(builtins::If0()));

    auto if0 = builtins::If0();
    EUnitaryEmbedding e = embed_eunitary(if0);
    CHECK_FALSE(e.injective);
    CHECK(e.phi[if0.index_of("1A")] == e.phi[if0.index_of("0A")]);
}

TEST_CASE("homomorphism search") {
    auto z2 = builtins::Z2();
    auto homs = hom_enumerate(z2, z2);
    REQUIRE(homs.size() == 1);
    CHECK(homs[0] == std::vector<int>{0, 1});

    RawTables bt;
    bt.names = {"0", "1"};
    bt.add = {{0, 1}, {1, 1}};
    bt.mul = {{0, 0}, {0, 1}};
    bt.zero = 0;
    bt.one = 1;
    auto boolean = validate(bt);
    auto b1 = builtins::B1();
    for (const auto& f : hom_enumerate(b1, boolean)) {
        CHECK(f[b1.zero()] == boolean.zero());
        CHECK(f[b1.one()] == boolean.one());
        for (int x = 0; x < b1.size(); ++x)
            for (int y = 0; y < b1.size(); ++y)
                if (leq(b1, x, y)) CHECK(leq(boolean, f[x], f[y]));
    }

    CHECK_THROWS_AS(hom_enumerate(b1, b1, 10), BudgetExceeded);
    CHECK_THROWS_WITH(hom_enumerate(b1, b1, 10), "search budget");
}

TEST_CASE("structures with two idempotents are isomorphic to their hearts") {
    std::vector<FiniteInverseSemiring> two_idem;
    for (const auto& r : all_builtins())
        if (subset_elements(idempotent_subset(r)).size() == 2) two_idem.push_back(r);
    two_idem.push_back(adjoin_zero_table(builtins::Z2()));
    CHECK(two_idem.size() >= 3);
    for (const auto& r : two_idem) {
        Heart h = heart_of(r);
        CHECK_FALSE(find_isomorphism(r, h.heart).empty());
    }
}

TEST_CASE("endomorphism semiring budget") {
    RawMonoidTables big;
    const int m = 8;
    big.names.resize(m);
    big.add.assign(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i) {
        big.names[i] = "e" + std::to_string(i);
        for (int j = 0; j < m; ++j) big.add[i][j] = (i + j) % m;
    }
    big.zero = 0;
    CHECK_THROWS_AS(endomorphism_semiring(big, 100), BudgetExceeded);

    RawMonoidTables notmonoid = builtins::Z2_adjoined_monoid();
    notmonoid.add[1][2] = 0;  // breaks commutativity
    CHECK_THROWS_AS(endomorphism_semiring(notmonoid), ValidationError);
}

TEST_CASE("sidedness of ideal generation") {
    // B1 is commutative, so the three readings agree.
    auto b1 = builtins::B1();
    auto left = self_module(b1, Sidedness::left);
    auto right = self_module(b1, Sidedness::right);
    auto two = self_module(b1, Sidedness::two_sided);
    for (int x = 0; x < b1.size(); ++x) {
        Subset g = subset_with(0u, x);
        Subset a = submodule_generate(left, g);
        CHECK(a == submodule_generate(right, g));
        CHECK(a == submodule_generate(two, g));
    }
}
