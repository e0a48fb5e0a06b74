#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "fsind/cocycle.hpp"

using namespace fsind;

static TwoCochain random_two_cochain(const FiniteAbelianGroup& g, long modulus, std::mt19937& rng) {
    TwoCochain h(g, modulus);
    for (long i = 1; i < g.order(); ++i)
        for (long j = 1; j < g.order(); ++j) h.set_exp(i, j, static_cast<long>(rng() % modulus));
    return h;
}

TEST_CASE("trivial and generating cocycles") {
    FiniteAbelianGroup z2({2});
    ThreeCochain triv = ThreeCochain::trivial(z2);
    CHECK(triv.is_normalized());
    CHECK(triv.is_cocycle());

    ThreeCochain w = ThreeCochain::generating_cyclic(2, 1);
    CHECK(w.is_cocycle());
    GroupElement x{{1}};
    CHECK(w.value(x, x, x) == Cyclotomic::integer(-1));
    CHECK(w.value(x, x, z2.identity()) == Cyclotomic::integer(1));

    // phi^1 on Z_4 at (x, x^3, x^2): carry((3+2)/4) = 1, exponent 1.
    ThreeCochain w4 = ThreeCochain::generating_cyclic(4, 1);
    CHECK(w4.is_cocycle());
    CHECK(w4.value(GroupElement{{1}}, GroupElement{{3}}, GroupElement{{2}}) == Cyclotomic::root_of_unity(1, 4));

    for (long a = 0; a < 5; ++a) CHECK(ThreeCochain::generating_cyclic(5, a).is_cocycle());
    CHECK(ThreeCochain::generating_cyclic(3, 1) == ThreeCochain::generating_cyclic(3, 2).power(2));
    CHECK_THROWS_AS(ThreeCochain::generating_cyclic(3, 3), input_error);
}

TEST_CASE("cocycle condition detects a non-cocycle") {
    FiniteAbelianGroup z2({2});
    ThreeCochain w(z2, 4);
    w.set_exp(1, 1, 1, 1); // omega(x,x,x) = i alone fails the pentagon
    CHECK(w.is_normalized());
    CHECK_FALSE(w.is_cocycle());
}

TEST_CASE("coboundaries of 2-cochains are cocycles") {
    std::mt19937 rng(42);
    for (auto mods : {std::vector<long>{4}, std::vector<long>{2, 2}, std::vector<long>{2, 4}}) {
        FiniteAbelianGroup g(mods);
        TwoCochain h = random_two_cochain(g, 8, rng);
        ThreeCochain dh = h.coboundary3();
        CHECK(dh.is_normalized());
        CHECK(dh.is_cocycle());
    }
}

TEST_CASE("product, inverse, power, modulus lift") {
    FiniteAbelianGroup z4({4});
    ThreeCochain w = ThreeCochain::generating_cyclic(4, 1);
    CHECK(w.product(w.inverse()) == ThreeCochain::trivial(z4));
    CHECK(w.power(4) == ThreeCochain::trivial(z4));
    CHECK(w.power(2) == w.product(w));
    CHECK(w.with_modulus(8) == w);
    CHECK_THROWS_AS(w.with_modulus(6), input_error);
    ThreeCochain m3 = ThreeCochain::generating_cyclic(4, 1).with_modulus(8);
    CHECK(w.product(m3).modulus() == 8);
}

TEST_CASE("two-cochain skew and symmetrize") {
    std::mt19937 rng(7);
    FiniteAbelianGroup g({2, 4});
    TwoCochain h = random_two_cochain(g, 8, rng);
    TwoCochain c = h.skew();
    for (long i = 0; i < g.order(); ++i)
        for (long j = 0; j < g.order(); ++j)
            CHECK((c.exp_at(i, j) + c.exp_at(j, i)) % 8 == 0);
    TwoCochain b = h.symmetrize();
    for (long i = 0; i < g.order(); ++i)
        for (long j = 0; j < g.order(); ++j) CHECK(b.exp_at(i, j) == b.exp_at(j, i));
}

TEST_CASE("bicharacter recognition") {
    FiniteAbelianGroup g({2, 2});
    TwoCochain b(g, 2);
    // b((a1,a2),(b1,b2)) = (-1)^(a1 b2)
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 4; ++j) {
            auto x = g.element_at(i), y = g.element_at(j);
            b.set_exp(i, j, x.coords[0] * y.coords[1]);
        }
    CHECK(b.is_bicharacter());
    TwoCochain nb = b;
    nb.set_exp(3, 3, 1 - nb.exp_at(3, 3));
    CHECK_FALSE(nb.is_bicharacter());
}

TEST_CASE("Eilenberg-MacLane pair on the sign cocycle over Z_2") {
    ThreeCochain w = ThreeCochain::generating_cyclic(2, 1).with_modulus(4);
    FiniteAbelianGroup z2({2});
    // c(x,x) = +-i satisfies both equalities; c(x,x) = +-1 does not.
    for (long e : {1L, 3L}) {
        TwoCochain c(z2, 4);
        c.set_exp(1, 1, e);
        EMCocycle em(w, c);
        CHECK(em.check());
        QuadraticFunction t = em.trace();
        CHECK(t.is_quadratic());
        CHECK(t.at(GroupElement{{1}}) == Cyclotomic::root_of_unity(e, 4));
    }
    for (long e : {0L, 2L}) {
        TwoCochain c(z2, 4);
        c.set_exp(1, 1, e);
        EMCocycle em(w, c);
        CHECK_FALSE(em.check());
        CHECK_THROWS_AS(em.trace(), input_error);
    }
}

TEST_CASE("quadratic function recognition") {
    FiniteAbelianGroup z4({4});
    QuadraticFunction t{z4, {}};
    for (long a = 0; a < 4; ++a) t.values.push_back(Cyclotomic::root_of_unity(a * a, 8));
    CHECK(t.is_quadratic());
    QuadraticFunction bad{z4, {}};
    for (long a = 0; a < 4; ++a) bad.values.push_back(Cyclotomic::root_of_unity(a, 4)); // a character, not quadratic
    CHECK_FALSE(bad.is_quadratic());
}

TEST_CASE("cocycle file parsing") {
    std::istringstream in(
        "# sign cocycle on Z_2\n"
        "group 2\n"
        "modulus 2\n"
        "1|1|1 1\n");
    ThreeCochain w = read_three_cochain(in, "inline");
    CHECK(w == ThreeCochain::generating_cyclic(2, 1));

    std::istringstream missing("modulus 2\n1|1|1 1\n");
    CHECK_THROWS_AS(read_three_cochain(missing, "m"), input_error);

    std::istringstream badcols("group 2\nmodulus 2\n1|1 1\n");
    CHECK_THROWS_WITH_AS(read_three_cochain(badcols, "b"), doctest::Contains("b:3:"), input_error);

    std::istringstream trailing("group 2\nmodulus 2\n1|1|1 1 junk\n");
    CHECK_THROWS_AS(read_three_cochain(trailing, "t"), input_error);

    std::istringstream denorm("group 2\nmodulus 2\n0|1|1 1\n");
    CHECK_THROWS_WITH_AS(read_three_cochain(denorm, "d"), doctest::Contains("normalized"), input_error);

    std::istringstream two("group 2,2\nmodulus 4\n1,0|0,1 3\n");
    TwoCochain h = read_two_cochain(two, "inline2");
    CHECK(h.exp_at(GroupElement{{1, 0}}, GroupElement{{0, 1}}) == 3);
    CHECK(h.exp_at(GroupElement{{0, 1}}, GroupElement{{1, 0}}) == 0);
}

TEST_CASE("cocycle file round trip") {
    ThreeCochain w = ThreeCochain::generating_cyclic(4, 3);
    std::ostringstream out;
    write_three_cochain(out, w);
    std::istringstream in(out.str());
    CHECK(read_three_cochain(in, "roundtrip") == w);
}

TEST_CASE("inflation") {
    // Pull the sign cocycle on Z_2 back along Z_4 -> Z_2.
    ThreeCochain w = ThreeCochain::generating_cyclic(2, 1);
    FiniteAbelianGroup z4({4});
    std::vector<GroupElement> pi;
    for (long i = 0; i < 4; ++i) pi.push_back(GroupElement{{i % 2}});
    ThreeCochain infl = ThreeCochain::inflate(w, z4, pi);
    CHECK(infl.is_cocycle());
    CHECK(infl.value(GroupElement{{1}}, GroupElement{{3}}, GroupElement{{1}}) == Cyclotomic::integer(-1));
    CHECK(infl.value(GroupElement{{2}}, GroupElement{{1}}, GroupElement{{1}}) == Cyclotomic::integer(1));

    std::vector<GroupElement> not_surj(4, GroupElement{{0}});
    CHECK_THROWS_AS(ThreeCochain::inflate(w, z4, not_surj), input_error);
    std::vector<GroupElement> not_hom;
    for (long i = 0; i < 4; ++i) not_hom.push_back(GroupElement{{i >= 2 ? 1L : 0L}});
    CHECK_THROWS_AS(ThreeCochain::inflate(w, z4, not_hom), input_error);
}
