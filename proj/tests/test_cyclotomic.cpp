#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fsind/cyclotomic.hpp"

using namespace fsind;

TEST_CASE("roots of unity basics") {
    CHECK(Cyclotomic::root_of_unity(2, 4) == Cyclotomic::integer(-1));
    CHECK(Cyclotomic::root_of_unity(0, 7) == Cyclotomic::integer(1));
    CHECK(Cyclotomic::root_of_unity(5, 5) == Cyclotomic::integer(1));
    CHECK(Cyclotomic::root_of_unity(-1, 4) == Cyclotomic::root_of_unity(3, 4));
    CHECK_THROWS_AS(Cyclotomic::root_of_unity(1, 0), input_error);
}

TEST_CASE("multiplicative order") {
    CHECK(Cyclotomic::root_of_unity(2, 8).multiplicative_order() == 4);
    CHECK(Cyclotomic::integer(1).multiplicative_order() == 1);
    CHECK(Cyclotomic::integer(-1).multiplicative_order() == 2);
    CHECK(Cyclotomic::root_of_unity(3, 9).multiplicative_order() == 3);
    CHECK_THROWS_AS(Cyclotomic::integer(2).multiplicative_order(), input_error);
    CHECK_THROWS_AS(Cyclotomic().multiplicative_order(), input_error);
    Cyclotomic sqrt2 = Cyclotomic::root_of_unity(1, 8) + Cyclotomic::root_of_unity(7, 8);
    CHECK_THROWS_AS(sqrt2.multiplicative_order(), input_error);
}

TEST_CASE("vanishing sums collapse to canonical zero") {
    Cyclotomic z = Cyclotomic::root_of_unity(1, 4) + Cyclotomic::root_of_unity(3, 4);
    CHECK(z.is_zero());
    CHECK(z.conductor() == 1);
    Cyclotomic s;
    for (long i = 0; i < 5; ++i) s += Cyclotomic::root_of_unity(i, 5);
    CHECK(s.is_zero());
    CHECK(s == Cyclotomic());
}

TEST_CASE("conductor minimization") {
    // zeta_6 lives over Q(zeta_3): zeta_6 = -zeta_3^2.
    Cyclotomic z6 = Cyclotomic::root_of_unity(1, 6);
    CHECK(z6.conductor() == 3);
    CHECK(z6 == -(Cyclotomic::root_of_unity(2, 3)));
    // zeta_12^3 = i has conductor 4.
    CHECK(Cyclotomic::root_of_unity(3, 12).conductor() == 4);
    // sqrt(2) = zeta_8 + zeta_8^-1 genuinely needs conductor 8.
    Cyclotomic sqrt2 = Cyclotomic::root_of_unity(1, 8) + Cyclotomic::root_of_unity(7, 8);
    CHECK(sqrt2.conductor() == 8);
    CHECK((sqrt2 * sqrt2) == Cyclotomic::integer(2));
    // Rationals always land at conductor 1.
    Cyclotomic half = Cyclotomic::rational(Rational(1, 2));
    CHECK(half.conductor() == 1);
    CHECK((half + half) == Cyclotomic::integer(1));
}

TEST_CASE("rational and integer extraction") {
    Cyclotomic v = Cyclotomic::root_of_unity(1, 3) + Cyclotomic::root_of_unity(2, 3);
    CHECK(v.is_rational());
    CHECK(v.as_integer() == -1);
    CHECK_THROWS_AS(Cyclotomic::root_of_unity(1, 5).as_rational(), not_an_integer);
    CHECK_THROWS_AS(Cyclotomic::rational(Rational(1, 2)).as_integer(), not_an_integer);
}

TEST_CASE("conjugation") {
    for (long k = 0; k < 12; ++k) {
        Cyclotomic z = Cyclotomic::root_of_unity(k, 12);
        CHECK(z.conj() == Cyclotomic::root_of_unity(-k, 12));
        CHECK(z.conj().conj() == z);
        CHECK((z * z.conj()) == Cyclotomic::integer(1));
    }
    Cyclotomic sqrt2 = Cyclotomic::root_of_unity(1, 8) + Cyclotomic::root_of_unity(7, 8);
    CHECK(sqrt2.conj() == sqrt2); // real
}

static Cyclotomic random_value(std::mt19937& rng) {
    static const long ns[] = {1, 2, 3, 4, 5, 6, 8, 12};
    long n = ns[rng() % 8];
    std::vector<Rational> c(n);
    for (auto& q : c) q = Rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
    return Cyclotomic::from_coeffs(n, std::move(c));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(20260823);
    for (int t = 0; t < 40; ++t) {
        Cyclotomic a = random_value(rng), b = random_value(rng), c = random_value(rng);
        CHECK((a + b) == (b + a));
        CHECK((a * b) == (b * a));
        CHECK(((a + b) + c) == (a + (b + c)));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a - a).is_zero());
        CHECK((a * b).conj() == (a.conj() * b.conj()));
    }
}

TEST_CASE("lift and re-reduce is the identity") {
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        Cyclotomic a = random_value(rng);
        long L = a.conductor() * (1 + static_cast<long>(rng() % 4));
        auto lifted = a.lifted_coeffs(L);
        CHECK(Cyclotomic::from_coeffs(L, lifted) == a);
    }
}

TEST_CASE("pow matches repeated multiplication") {
    Cyclotomic z = Cyclotomic::root_of_unity(1, 5) + Cyclotomic::integer(2);
    Cyclotomic acc = Cyclotomic::integer(1);
    for (long e = 0; e <= 6; ++e) {
        CHECK(z.pow(e) == acc);
        acc *= z;
    }
}

TEST_CASE("approximation is close for known values") {
    auto i = Cyclotomic::root_of_unity(1, 4).approx();
    CHECK(std::abs(i - std::complex<double>(0, 1)) < 1e-12);
    auto s = (Cyclotomic::root_of_unity(1, 8) + Cyclotomic::root_of_unity(7, 8)).approx();
    CHECK(std::abs(s - std::complex<double>(std::sqrt(2.0), 0)) < 1e-12);
}

TEST_CASE("json and compact round trip") {
    Cyclotomic v = Cyclotomic::root_of_unity(1, 8) + Cyclotomic::rational(Rational(1, 2));
    std::string j = v.to_json();
    CHECK(j.find("\"conductor\":8") != std::string::npos);
    CHECK(Cyclotomic::parse_compact(v.compact()) == v);
    CHECK(Cyclotomic::parse_compact(Cyclotomic().compact()).is_zero());
}

TEST_CASE("euler phi and cyclotomic polynomials") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(7) == 6);
    const auto& phi8 = cyclotomic_polynomial(8); // x^4 + 1
    REQUIRE(phi8.size() == 5);
    CHECK(phi8[0] == 1);
    CHECK(phi8[4] == 1);
    CHECK(phi8[1] == 0);
    const auto& phi6 = cyclotomic_polynomial(6); // x^2 - x + 1
    REQUIRE(phi6.size() == 3);
    CHECK(phi6[1] == -1);
}

TEST_CASE("root_exponent recognizes powers") {
    for (long k = 0; k < 12; ++k) CHECK(root_exponent(Cyclotomic::root_of_unity(k, 12), 12) == k);
    CHECK(root_exponent(Cyclotomic::integer(2), 12) == -1);
    CHECK(root_exponent(Cyclotomic::root_of_unity(1, 5), 12) == -1);
}
