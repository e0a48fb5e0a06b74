#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fsind/group.hpp"

using namespace fsind;

TEST_CASE("construction and parsing") {
    FiniteAbelianGroup g({2, 4});
    CHECK(g.order() == 8);
    CHECK(g.exponent() == 4);
    CHECK(g.rank() == 2);
    CHECK(g.spec() == "2,4");
    CHECK(FiniteAbelianGroup::parse("2,4") == g);
    CHECK_THROWS_AS(FiniteAbelianGroup::parse("2,x"), input_error);
    CHECK_THROWS_AS(FiniteAbelianGroup::parse(""), input_error);
    CHECK_THROWS_AS(FiniteAbelianGroup({2, 0}), input_error);
}

TEST_CASE("arithmetic") {
    FiniteAbelianGroup g({2, 4});
    GroupElement a{{1, 3}}, b{{1, 2}};
    CHECK(g.compose(a, b) == GroupElement{{0, 1}});
    CHECK(g.inverse(a) == GroupElement{{1, 1}});
    CHECK(g.compose(a, g.inverse(a)) == g.identity());
    CHECK(g.power(a, 0) == g.identity());
    CHECK(g.power(a, 3) == GroupElement{{1, 1}});
    CHECK(g.power(a, -1) == g.inverse(a));
    CHECK(g.element_order(a) == 4);
    CHECK(g.element_order(GroupElement{{1, 0}}) == 2);
    CHECK(g.element_order(g.identity()) == 1);
    CHECK_THROWS_AS(g.compose(a, GroupElement{{1, 5}}), input_error);
    CHECK_THROWS_AS(g.compose(a, GroupElement{{1}}), input_error);
}

TEST_CASE("enumeration order and indexing") {
    FiniteAbelianGroup g({2, 3});
    auto els = g.elements();
    REQUIRE(els.size() == 6);
    CHECK(els[0] == g.identity());
    CHECK(els[1] == GroupElement{{0, 1}});
    CHECK(els[3] == GroupElement{{1, 0}});
    for (long i = 0; i < g.order(); ++i) CHECK(g.index_of(els[i]) == i);
    CHECK_THROWS_AS(g.element_at(6), input_error);
}

TEST_CASE("character pairing is bimultiplicative and faithful") {
    FiniteAbelianGroup g({2, 4});
    auto els = g.elements();
    for (const auto& chi : els)
        for (const auto& x : els)
            for (const auto& y : els) {
                CHECK(g.character_pairing(chi, g.compose(x, y)) ==
                      g.character_pairing(chi, x) * g.character_pairing(chi, y));
                CHECK(g.character_pairing(g.compose(chi, x), y) ==
                      g.character_pairing(chi, y) * g.character_pairing(x, y));
            }
    // Only the trivial character pairs to 1 with everything.
    for (const auto& chi : els) {
        bool all_one = true;
        for (const auto& x : els)
            if (g.character_pairing(chi, x) != Cyclotomic::integer(1)) all_one = false;
        CHECK(all_one == (chi == g.identity()));
    }
    CHECK(g.character_pairing(GroupElement{{1, 0}}, GroupElement{{1, 0}}) == Cyclotomic::integer(-1));
    CHECK(g.character_pairing(GroupElement{{0, 1}}, GroupElement{{0, 1}}) == Cyclotomic::root_of_unity(1, 4));
}

TEST_CASE("labels") {
    CHECK(GroupElement{{1, 0, 2}}.label() == "(1,0,2)");
}
