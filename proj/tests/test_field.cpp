#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "largeness/heights.hpp"
#include "largeness/roots.hpp"
#include "test_helpers.hpp"

using namespace largeness;
using namespace testutil;

TEST_CASE("root finder: quadratics and cyclotomics") {
    auto r2 = find_roots(ints({-2, 0, 1}), 192);
    REQUIRE(r2.reals.size() == 2);
    CHECK(r2.complexes.empty());
    CHECK(dbl(r2.reals[0]) == doctest::Approx(-1.41421356).epsilon(1e-8));
    CHECK(dbl(r2.reals[1]) == doctest::Approx(1.41421356).epsilon(1e-8));

    auto r10 = find_roots(ints({1, -1, 1, -1, 1}), 192);
    CHECK(r10.reals.empty());
    CHECK(r10.complexes.size() == 2);

    auto r16 = find_roots(ints({1, 0, 0, 0, 0, 0, 0, 0, 1}), 192);
    CHECK(r16.reals.empty());
    REQUIRE(r16.complexes.size() == 4);
    // roots of x^8 + 1 are e^{i pi (2k+1)/8}; all on the unit circle
    for (const auto& z : r16.complexes) {
        CHECK(dbl(abs(z)) == doctest::Approx(1.0).epsilon(1e-30));
        CHECK(z.im.sign() > 0);
    }
    // canonical order: ascending real part
    for (size_t i = 0; i + 1 < r16.complexes.size(); ++i)
        CHECK(dbl(r16.complexes[i].re) < dbl(r16.complexes[i + 1].re));
}

TEST_CASE("root finder: residual certification and precision doubling") {
    for (long prec : {192L, 384L}) {
        auto r = find_roots(ints({1, 1, 0, -1, -1, -1, 0, 1, 1}), prec);  // 30th cyclotomic
        CHECK(r.reals.size() + 2 * r.complexes.size() == 8);
    }
    // Doubling the precision moves each root by less than the coarse error bound.
    auto lo = find_roots(ints({1, -1, 1, -1, 1}), 128);
    auto hi = find_roots(ints({1, -1, 1, -1, 1}), 256);
    for (size_t i = 0; i < lo.complexes.size(); ++i) {
        BigFloat diff = abs(hi.complexes[i] - lo.complexes[i]);
        CHECK(diff < BigFloat::two_pow(-100, 64));
    }
}

TEST_CASE("make_field: signatures") {
    auto K16 = zeta16();
    CHECK(K16.d == 8);
    CHECK(K16.r1 == 0);
    CHECK(K16.r2 == 4);
    CHECK(K16.s() == 4);
    CHECK(K16.rank() == 3);

    auto K2 = sqrt_field(2);
    CHECK(K2.r1 == 2);
    CHECK(K2.r2 == 0);
    CHECK(K2.cm_or_totally_real);  // auto-true for totally real

    auto K10 = zeta10();
    CHECK(K10.r1 == 0);
    CHECK(K10.r2 == 2);
    CHECK(K10.rank() == 1);
}

TEST_CASE("make_field: rejects bad input") {
    CHECK_THROWS(make_field(ints({1, 0, 2}), 192, false));          // non-monic
    CHECK_THROWS(make_field(ints({1}), 192, false));                // degree 0
    CHECK_THROWS(make_field(ints({0, 0, 1}), 192, false));          // x^2, repeated root
    CHECK_THROWS(make_field(ints({1, 2, 1}), 192, false));          // (x+1)^2
}

TEST_CASE("element arithmetic") {
    auto K = sqrt_field(2);
    FieldElement theta = el({0, 1});
    FieldElement one = FieldElement::one(2);
    // (theta + 1)(theta - 1) = theta^2 - 1 = 1 since theta^2 = 2
    CHECK(mul(add(theta, one), sub(theta, one), K) == one);

    auto K4 = zeta4();
    FieldElement x = el({1, 2});  // 2i + 1
    CHECK(mul(inverse(x, K4), x, K4) == FieldElement::one(2));

    auto K16 = zeta16();
    FieldElement y = el({0, 0, 1, -1, 0, 0, 0, -1});  // -z^7 - z^3 + z^2
    FieldElement u = el({1, 1, 1, 0, 0, 0, 0, 0});
    CHECK(mul(y, FieldElement::one(8), K16) == y);
    CHECK(divide(mul(y, u, K16), u, K16) == y);
}

TEST_CASE("exact_norm") {
    auto K16 = zeta16();
    FieldElement x = el({0, 0, 1, -1, 0, 0, 0, -1});
    CHECK(rat_abs(exact_norm(x, K16)) == 17);

    CHECK(exact_norm(FieldElement::one(8), K16) == 1);

    auto K4 = zeta4();
    CHECK(exact_norm(el({1, 2}), K4) == 5);

    // norm of theta in x^2 - 2 is -2
    auto K2 = sqrt_field(2);
    CHECK(exact_norm(el({0, 1}), K2) == -2);
}

TEST_CASE("exact_norm is multiplicative on random pairs") {
    std::mt19937_64 rng(20210817);
    for (const NumberField& K : {zeta16(), zeta10(), sqrt_field(7)}) {
        for (int i = 0; i < 100; ++i) {
            FieldElement a = random_integral(rng, K.d, 9);
            FieldElement b = random_integral(rng, K.d, 9);
            CHECK(exact_norm(mul(a, b, K), K) == exact_norm(a, K) * exact_norm(b, K));
        }
    }
}

TEST_CASE("log_embedding: reference values and norm identity") {
    auto K16 = zeta16();
    FieldElement x = el({0, 0, 1, -1, 0, 0, 0, -1});
    auto lx = log_embedding(x, K16);
    REQUIRE(lx.size() == 4);

    std::vector<double> got;
    for (const auto& v : lx) got.push_back(dbl(v));
    std::sort(got.begin(), got.end());
    std::vector<double> want = {1.40668, 0.65107, 1.72510, -0.94965};
    std::sort(want.begin(), want.end());
    for (size_t i = 0; i < 4; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-4));

    // entries sum to log|N(x)| = log 17
    BigFloat sum(0L, 224);
    for (const auto& v : lx) sum = sum + v;
    CHECK(dbl(sum) == doctest::Approx(std::log(17.0)).epsilon(1e-12));

    auto l1 = log_embedding(FieldElement::one(8), K16);
    for (const auto& v : l1) CHECK(dbl(v) == doctest::Approx(0.0).epsilon(1e-40));
}

TEST_CASE("log vector sums match exact norms on random elements") {
    std::mt19937_64 rng(424242);
    for (const NumberField& K : {zeta16(), zeta12(), sqrt_field(13)}) {
        BigFloat tol = BigFloat::two_pow(-K.prec_bits / 2 + 10, 64);
        for (int i = 0; i < 25; ++i) {
            FieldElement x = random_integral(rng, K.d, 50);
            auto lx = log_embedding(x, K);
            BigFloat sum(0L, K.prec_bits + 32);
            for (const auto& v : lx) sum = sum + v;
            BigFloat ln = log_rational(rat_abs(exact_norm(x, K)), K.prec_bits + 32);
            CHECK(abs(sum - ln) < tol);
        }
    }
}

TEST_CASE("divide then multiply returns the original element") {
    std::mt19937_64 rng(777);
    auto K = zeta10();
    for (int i = 0; i < 50; ++i) {
        FieldElement a = random_integral(rng, K.d, 20);
        FieldElement b = random_integral(rng, K.d, 20);
        CHECK(mul(divide(a, b, K), b, K) == a);
    }
}
