#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <vector>

#include "qpring/constructions.hpp"
#include "qpring/ring.hpp"
#include "support/oracle.hpp"

using namespace qpring;

namespace {

FiniteGeneralRing even_mod8() { return principal_ideal(zmod(8), 2).ring; }

std::vector<std::vector<Idx>> z4_add() {
    return {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
}
std::vector<std::vector<Idx>> z4_mul() {
    return {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 0, 2}, {0, 3, 2, 1}};
}

} // namespace

TEST_CASE("building a cyclic ring detects zero and unity") {
    FiniteGeneralRing r = zmod(4);
    CHECK(r.order() == 4);
    CHECK(r.zero() == 0);
    REQUIRE(r.unity().has_value());
    CHECK(*r.unity() == 1);
    CHECK(r.is_unital());
    CHECK(r.name() == "Zmod4");

    FiniteGeneralRing one = zmod(1);
    CHECK(one.order() == 1);
    CHECK(one.is_unital());
    CHECK(*one.unity() == 0);
}

TEST_CASE("build_ring validates raw tables without trusting hints") {
    FiniteGeneralRing r = build_ring(z4_add(), z4_mul());
    CHECK(r.zero() == 0);
    CHECK(r.unity() == std::optional<Idx>{1});

    SECTION("a validated ring's own tables rebuild unchanged") {
        FiniteGeneralRing z6 = zmod(6);
        FiniteGeneralRing again = build_ring(z6.order(), z6.add_table(), z6.mul_table());
        CHECK(again.add_table() == z6.add_table());
        CHECK(again.mul_table() == z6.mul_table());
        CHECK(again.unity() == z6.unity());
    }
}

TEST_CASE("the even elements of the integers mod 8 form a non-unital ring") {
    FiniteGeneralRing r = even_mod8();
    CHECK(r.order() == 4);
    CHECK_FALSE(r.is_unital());
    CHECK(r.zero() == 0);
    // local index i is parent element 2i
    CHECK(r.add(1, 3) == 0);  // 2 + 6 = 8 = 0
    CHECK(r.mul(1, 1) == 2);  // 2 * 2 = 4
    CHECK(r.power(3, 2) == 2); // 6^2 = 36 = 4
    CHECK(r.power(3, 3) == 0); // 6^3 = 0 mod 8
    CHECK(nilpotency_index(r, 3) == std::optional<int>{3});
}

TEST_CASE("circle composition is an associative monoid with identity zero") {
    for (auto make : {+[] { return zmod(4); }, +[] { return zmod(6); }, +[] { return even_mod8(); }}) {
        FiniteGeneralRing r = make();
        for (Idx a = 0; a < r.order(); ++a) {
            CHECK(r.circle(a, r.zero()) == a);
            CHECK(r.circle(r.zero(), a) == a);
            for (Idx b = 0; b < r.order(); ++b)
                for (Idx c = 0; c < r.order(); ++c)
                    CHECK(r.circle(r.circle(a, b), c) == r.circle(a, r.circle(b, c)));
        }
    }
}

TEST_CASE("quasi-inverse golden values") {
    FiniteGeneralRing z4 = zmod(4), z6 = zmod(6);
    CHECK(z4.circle(2, 2) == 0);
    CHECK(z4.circle(1, 1) == 1);
    CHECK(quasi_inverse(z4, 0) == std::optional<Idx>{0});
    CHECK(quasi_inverse(z4, 2) == std::optional<Idx>{2});
    CHECK_FALSE(quasi_inverse(z4, 1).has_value());
    CHECK_FALSE(quasi_inverse(z4, 3).has_value());
    CHECK(quasi_inverse(z6, 2) == std::optional<Idx>{2});

    FiniteGeneralRing e8 = even_mod8();
    for (Idx a = 0; a < e8.order(); ++a) CHECK(quasi_inverse(e8, a).has_value());
}

TEST_CASE("one-sided circle inverses already agree") {
    for (auto make : {+[] { return zmod(4); }, +[] { return zmod(6); }, +[] { return even_mod8(); },
                      +[] { return zmod(12); }}) {
        FiniteGeneralRing r = make();
        for (Idx a = 0; a < r.order(); ++a) {
            std::vector<Idx> left, right;
            for (Idx t = 0; t < r.order(); ++t) {
                if (r.circle(a, t) == r.zero()) right.push_back(t);
                if (r.circle(t, a) == r.zero()) left.push_back(t);
            }
            CHECK(right.size() <= 1);
            CHECK(left.size() == right.size());
            for (Idx b : right)
                for (Idx c : left) CHECK(b == c);
        }
    }
}

TEST_CASE("in a unital ring quasiregularity is unit complementation") {
    for (unsigned n : {2u, 3u, 4u, 5u, 6u, 7u, 8u, 9u, 12u}) {
        FiniteGeneralRing r = zmod(n);
        Idx one = *r.unity();
        for (Idx a = 0; a < r.order(); ++a) {
            auto qi = quasi_inverse(r, a);
            auto ui = unit_inverse(r, r.sub(one, a));
            CHECK(qi.has_value() == ui.has_value());
            if (qi && ui) CHECK(*qi == r.sub(one, *ui));
        }
    }
}

TEST_CASE("unit inverses exist exactly for units") {
    FiniteGeneralRing z4 = zmod(4);
    CHECK(unit_inverse(z4, 3) == std::optional<Idx>{3});
    CHECK(unit_inverse(z4, 1) == std::optional<Idx>{1});
    CHECK_FALSE(unit_inverse(z4, 2).has_value());
    CHECK_THROWS_AS(unit_inverse(even_mod8(), 1), RequiresUnity);
}

TEST_CASE("integer multiples and additive orders") {
    FiniteGeneralRing z4 = zmod(4);
    CHECK(z4.int_multiple(3, 2) == 2);
    CHECK(z4.int_multiple(-1, 1) == 3);
    CHECK(z4.int_multiple(0, 3) == 0);
    CHECK(z4.int_multiple(7, 3) == 1);
    CHECK(z4.additive_order(2) == 2);
    CHECK(z4.additive_order(1) == 4);
    CHECK(z4.additive_exponent() == 4);
    CHECK(even_mod8().additive_exponent() == 4);
    CHECK(zmod(6).additive_exponent() == 6);
}

TEST_CASE("powers start at the first power") {
    FiniteGeneralRing z4 = zmod(4);
    CHECK(z4.power(3, 1) == 3);
    CHECK(z4.power(3, 2) == 1);
    CHECK(z4.power(2, 2) == 0);
    CHECK(nilpotency_index(z4, 2) == std::optional<int>{2});
    CHECK(nilpotency_index(z4, 0) == std::optional<int>{1});
    CHECK_FALSE(nilpotency_index(z4, 1).has_value());
    CHECK_THROWS_AS(z4.power(2, 0), std::invalid_argument);
}

TEST_CASE("element references carry their ring and refuse to mix") {
    FiniteGeneralRing z4 = zmod(4), z6 = zmod(6);
    ElementRef a{&z4, 3}, b{&z4, 2};
    CHECK((a + b).index == 1);
    CHECK((a * b).index == 2);
    CHECK((a - b).index == 1);
    CHECK((-a).index == 1);
    CHECK(circle(a, b).index == 3);
    CHECK(power(a, 2).index == 1);
    CHECK(int_multiple(-1, a).index == 1);
    REQUIRE(quasi_inverse(ElementRef{&z4, 2}).has_value());
    CHECK(quasi_inverse(ElementRef{&z4, 2})->index == 2);

    ElementRef c{&z6, 1};
    CHECK_THROWS_AS(a + c, RingMismatch);
    CHECK_THROWS_AS(a * c, RingMismatch);
    CHECK_FALSE(a == c);
}

TEST_CASE("an addition table without negatives is rejected") {
    // Bitwise OR: associative and commutative with identity 0, but 1 has no
    // negative.
    std::vector<std::vector<Idx>> add{{0, 1}, {1, 1}};
    std::vector<std::vector<Idx>> mul{{0, 0}, {0, 0}};
    try {
        build_ring(add, mul);
        FAIL("expected an axiom violation");
    } catch (const AxiomViolation& e) {
        CHECK(e.kind() == AxiomKind::MissingNegative);
        CHECK(e.witness()[0] == 1);
    }
}

TEST_CASE("a non-distributive multiplication table is rejected") {
    std::vector<std::vector<Idx>> add{{0, 1}, {1, 0}};
    std::vector<std::vector<Idx>> mul{{1, 1}, {1, 1}};
    try {
        build_ring(add, mul);
        FAIL("expected an axiom violation");
    } catch (const AxiomViolation& e) {
        CHECK(e.kind() == AxiomKind::DistributivityFailure);
    }
}

TEST_CASE("a tampered addition table fails associativity first") {
    std::vector<std::vector<Idx>> add{{0, 1, 2}, {1, 2, 1}, {2, 0, 1}};
    std::vector<std::vector<Idx>> mul(3, std::vector<Idx>(3, 0));
    try {
        build_ring(add, mul);
        FAIL("expected an axiom violation");
    } catch (const AxiomViolation& e) {
        CHECK(e.kind() == AxiomKind::AddNotAssociative);
    }
}

TEST_CASE("a tampered multiplication table fails associativity") {
    auto add = z4_add();
    auto mul = z4_mul();
    mul[2][3] = 1;
    try {
        build_ring(add, mul);
        FAIL("expected an axiom violation");
    } catch (const AxiomViolation& e) {
        CHECK(e.kind() == AxiomKind::MulNotAssociative);
    }
}

TEST_CASE("a wrong zero hint is an axiom violation, not a silent fix") {
    try {
        build_ring(4, zmod(4).add_table(), zmod(4).mul_table(), Idx{1});
        FAIL("expected an axiom violation");
    } catch (const AxiomViolation& e) {
        CHECK(e.kind() == AxiomKind::NoAdditiveIdentity);
        CHECK(e.witness()[0] == 1);
    }
}

TEST_CASE("malformed tables are rejected before validation") {
    CHECK_THROWS_AS(build_ring({{0, 1}, {1, 0}, {0, 0}}, {{0, 0}, {0, 0}, {0, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_ring({{0, 9}, {1, 0}}, {{0, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(build_ring(0, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(build_ring(2, {0, 1, 1, 0}, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("library tables agree with the independent reference") {
    oracle::Table t = oracle::zmod(12);
    FiniteGeneralRing r = zmod(12);
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j) {
            CHECK(r.add(Idx(i), Idx(j)) == Idx(t.add[i][j]));
            CHECK(r.mul(Idx(i), Idx(j)) == Idx(t.mul[i][j]));
            CHECK(r.circle(Idx(i), Idx(j)) == Idx(oracle::circle(t, i, j)));
        }

    oracle::Table e = oracle::even_mod8();
    FiniteGeneralRing s = even_mod8();
    for (int i = 0; i < e.n; ++i)
        for (int j = 0; j < e.n; ++j) {
            CHECK(s.add(Idx(i), Idx(j)) == Idx(e.add[i][j]));
            CHECK(s.mul(Idx(i), Idx(j)) == Idx(e.mul[i][j]));
        }
    for (Idx a = 0; a < s.order(); ++a) {
        auto lib = quasi_inverse(s, a);
        auto ref = oracle::quasi_inverse(e, a);
        CHECK(lib.has_value() == ref.has_value());
        if (lib && ref) CHECK(*lib == Idx(*ref));
    }
}

TEST_CASE("renaming only changes the label") {
    FiniteGeneralRing r = zmod(4);
    auto add = r.add_table();
    r.rename("other");
    CHECK(r.name() == "other");
    CHECK(r.add_table() == add);
}
