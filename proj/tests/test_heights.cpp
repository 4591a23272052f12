#include <doctest.h>

#include <cmath>

#include "largeness/heights.hpp"
#include "test_helpers.hpp"

using namespace largeness;
using namespace testutil;

TEST_CASE("log_norm examples") {
    // 1 - zeta_5 in the 5th cyclotomic field: log(5)/4
    auto K5 = make_field(ints({1, 1, 1, 1, 1}), 192, true);
    FieldElement x = el({1, -1, 0, 0});
    CHECK(dbl(log_norm(x, K5)) == doctest::Approx(std::log(5.0) / 4).epsilon(1e-12));

    auto K16 = zeta16();
    FieldElement y = el({0, 0, 1, -1, 0, 0, 0, -1});
    CHECK(dbl(log_norm(y, K16)) == doctest::Approx(std::log(17.0) / 8).epsilon(1e-12));

    // units have log norm 0
    FieldElement u = el({1, 1, 1, 0, 0, 0, 0, 0});
    CHECK(dbl(log_norm(u, K16)) == doctest::Approx(0.0).epsilon(1e-60));
}

TEST_CASE("weil height") {
    auto K16 = zeta16();
    CHECK(dbl(weil_height_integer(el({0, 1, 0, 0, 0, 0, 0, 0}), K16)) ==
          doctest::Approx(0.0).epsilon(1e-40));

    auto K4 = zeta4();
    CHECK(dbl(weil_height_integer(el({1, 2}), K4)) ==
          doctest::Approx(0.5 * std::log(5.0)).epsilon(1e-12));

    // non-integer coordinates rejected under the power-basis convention
    auto K5f = sqrt_field(5);
    FieldElement golden({{Rat(1, 2), Rat(1, 2)}});
    CHECK_THROWS_AS(weil_height_integer(golden, K5f), std::domain_error);
}

TEST_CASE("weil height equals log norm exactly for large elements") {
    auto K4 = zeta4();
    FieldElement x = el({1, 2});
    BigFloat h = weil_height_integer(x, K4);
    BigFloat n = log_norm(x, K4);
    CHECK(abs(h - n) < BigFloat::two_pow(-80, 64));
}

TEST_CASE("h >= n on random integral elements") {
    std::mt19937_64 rng(5150);
    for (const NumberField& K : {zeta16(), zeta12(), sqrt_field(11)}) {
        BigFloat tol = BigFloat::two_pow(-K.prec_bits / 2 + 10, 64);
        for (int i = 0; i < 100; ++i) {
            FieldElement x = random_integral(rng, K.d, 30);
            CHECK(weil_height_integer(x, K) >= log_norm(x, K) - tol);
        }
    }
}

TEST_CASE("log norm is a morphism and unit-invariant") {
    std::mt19937_64 rng(161803);
    auto K = zeta16();
    auto U = units_zeta16(K);
    BigFloat tol = BigFloat::two_pow(-60, 64);
    for (int i = 0; i < 10; ++i) {
        FieldElement x = random_integral(rng, K.d, 5);
        BigFloat n1 = log_norm(x, K);
        for (long k = 2; k <= 5; ++k) {
            BigFloat nk = log_norm(element_pow(x, k, K), K);
            CHECK(abs(nk - n1 * k) < tol);
        }
        for (const auto& u : U.free_gens)
            CHECK(abs(log_norm(mul(x, u, K), K) - n1) < tol);
    }
}

TEST_CASE("is_root_of_unity") {
    auto K16 = zeta16();
    CHECK(is_root_of_unity(el({0, 1, 0, 0, 0, 0, 0, 0}), K16));          // zeta, order 16
    CHECK(is_root_of_unity(el({-1, 0, 0, 0, 0, 0, 0, 0}), K16));         // -1
    CHECK_FALSE(is_root_of_unity(el({-1, 0, 1, 0, 0, 0, -1, 0}), K16));  // u1, a free unit
    CHECK_FALSE(is_root_of_unity(el({2, 0, 0, 0, 0, 0, 0, 0}), K16));

    auto K2 = sqrt_field(2);
    CHECK_FALSE(is_root_of_unity(el({1, 1}), K2));  // 1 + sqrt2
    CHECK(is_root_of_unity(el({-1, 0}), K2));
}

TEST_CASE("largeness of single elements") {
    auto K4 = zeta4();
    auto strict = large_element_check(el({1, 2}), K4, true);
    CHECK(strict.verdict == Ternary::True);
    CHECK(dbl(strict.margin) == doctest::Approx(0.5 * std::log(5.0)).epsilon(1e-10));

    // 1 is large but not strictly large, decided exactly
    auto one_loose = large_element_check(FieldElement::one(2), K4, false);
    auto one_strict = large_element_check(FieldElement::one(2), K4, true);
    CHECK(one_loose.verdict == Ternary::True);
    CHECK(one_loose.exact_boundary);
    CHECK(one_strict.verdict == Ternary::False);

    auto K16 = zeta16();
    auto no = large_element_check(el({0, 0, 1, -1, 0, 0, 0, -1}), K16, false);
    CHECK(no.verdict == Ternary::False);
    CHECK(dbl(no.margin) == doctest::Approx(-0.94965 / 2).epsilon(1e-4));

    // root of unity: large, not strictly
    CHECK(large_element_check(el({0, 1, 0, 0, 0, 0, 0, 0}), K16, false).verdict == Ternary::True);
    CHECK(large_element_check(el({0, 1, 0, 0, 0, 0, 0, 0}), K16, true).verdict == Ternary::False);

    // non-torsion unit is never large
    CHECK(large_element_check(el({1, 1, 1, 0, 0, 0, 0, 0}), K16, false).verdict == Ternary::False);
}

TEST_CASE("root of unity implies zero height and largeness") {
    auto K12 = zeta12();
    FieldElement z = el({0, 1, 0, 0});
    CHECK(is_root_of_unity(z, K12));
    CHECK(dbl(weil_height_integer(z, K12)) == doctest::Approx(0.0).epsilon(1e-40));
    CHECK(large_element_check(z, K12, false).verdict == Ternary::True);
}

TEST_CASE("schinzel criterion: exact prime-level checks") {
    // fires exactly for p in {41, 67, 71} among the class-number-one primes
    std::vector<long> primes = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 61, 67, 71};
    std::vector<long> fire = {41, 67, 71};
    for (long p : primes) {
        bool fired = schinzel_fires_exact(Int(p), euler_phi(p - 1));
        bool expected = std::find(fire.begin(), fire.end(), p) != fire.end();
        CHECK_MESSAGE(fired == expected, "p = ", p);
        // p < 5^{phi(p-1)/12} holds for none of them
        CHECK_FALSE(power_five_bound_holds_exact(Int(p), euler_phi(p - 1)));
    }
}

TEST_CASE("schinzel criterion on elements") {
    // p = 17 generator in the 16th cyclotomic field: inconclusive
    auto K16 = zeta16();
    CHECK(schinzel_nonlarge(el({0, 0, 1, -1, 0, 0, 0, -1}), K16) ==
          SchinzelVerdict::Inconclusive);

    auto K4 = zeta4();
    CHECK(schinzel_nonlarge(el({1, 2}), K4) == SchinzelVerdict::Inconclusive);

    // units are excluded by the proposition itself
    CHECK_THROWS_AS(schinzel_nonlarge(el({0, 1}), K4), std::domain_error);

    // flag not set
    auto Kplain = make_field(ints({-3, 0, 0, 1}), 192, false);  // x^3 - 3, not CM
    CHECK_THROWS_AS(schinzel_nonlarge(el({0, 1, 0}), Kplain), std::invalid_argument);
}

TEST_CASE("schinzel constant value") {
    CHECK(dbl(schinzel_constant(192)) == doctest::Approx(0.24060591253).epsilon(1e-11));
}

TEST_CASE("minimal polynomial") {
    auto K16 = zeta16();
    // zeta^2 has order 8: minimal polynomial x^4 + 1
    PolyQ mu = minimal_polynomial(el({0, 0, 1, 0, 0, 0, 0, 0}), K16);
    REQUIRE(degree(mu) == 4);
    CHECK(mu[0] == 1);
    CHECK(mu[1] == 0);
    CHECK(mu[4] == 1);

    PolyQ mu2 = minimal_polynomial(el({2, 0, 0, 0, 0, 0, 0, 0}), K16);
    REQUIRE(degree(mu2) == 1);
    CHECK(mu2[0] == -2);
}
