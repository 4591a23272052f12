#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "largeness/heights.hpp"
#include "largeness/units.hpp"
#include "test_helpers.hpp"

using namespace largeness;
using namespace testutil;

namespace {

const double kLog1p2 = std::log(1.0 + std::sqrt(2.0));  // 0.8813735870...

}  // namespace

TEST_CASE("build_unit_group: validation") {
    auto K = zeta16();
    CHECK_NOTHROW(units_zeta16(K));

    // non-unit generator
    std::vector<FieldElement> bad = {el({2, 0, 0, 0, 0, 0, 0, 0}),
                                     el({1, 1, 1, 0, 0, 0, 0, 0}),
                                     el({0, -1, 0, 1, 0, 0, -1, 0})};
    CHECK_THROWS(build_unit_group(el({0, 1, 0, 0, 0, 0, 0, 0}), 16, bad, K));

    // dependent generators: u, u, v
    FieldElement u = el({-1, 0, 1, 0, 0, 0, -1, 0});
    CHECK_THROWS(build_unit_group(el({0, 1, 0, 0, 0, 0, 0, 0}), 16,
                                  {u, u, el({1, 1, 1, 0, 0, 0, 0, 0})}, K));

    // wrong torsion order
    CHECK_THROWS(build_unit_group(el({0, 1, 0, 0, 0, 0, 0, 0}), 8,
                                  units_zeta16(K).free_gens, K));

    // rank-0 field
    auto K4 = zeta4();
    auto U4 = units_zeta4(K4);
    CHECK(U4.rank() == 0);
    CHECK(U4.L.rows == 0);
}

TEST_CASE("unit log matrix: reference rows up to column order") {
    auto K = zeta16();
    auto U = units_zeta16(K);
    std::vector<std::vector<double>> want = {
        {-1.76274, -1.76274, 1.76274, 1.76274},
        {-0.33031, 2.09306, -2.89946, 1.13671},
        {1.13671, -2.89946, -0.33031, 2.09306},
    };
    for (int i = 0; i < 3; ++i) {
        std::vector<double> row;
        for (int j = 0; j < 4; ++j) row.push_back(dbl(U.L.at(i, j)));
        std::sort(row.begin(), row.end());
        std::vector<double> w = want[i];
        std::sort(w.begin(), w.end());
        for (int j = 0; j < 4; ++j) CHECK(row[j] == doctest::Approx(w[j]).epsilon(1e-4));
    }
    // L V = 0
    for (int i = 0; i < 3; ++i) {
        BigFloat sum(0L, 224);
        for (int j = 0; j < 4; ++j) sum = sum + U.L.at(i, j);
        CHECK(abs(sum) < BigFloat::two_pow(-86, 64));
    }
}

TEST_CASE("regulator") {
    auto K2 = sqrt_field(2);
    auto U2 = units_sqrt2(K2);
    CHECK(dbl(regulator(U2).value) == doctest::Approx(kLog1p2).epsilon(1e-12));

    auto K4 = zeta4();
    auto r0 = regulator(units_zeta4(K4));
    CHECK(r0.rank_zero_convention);
    CHECK(dbl(r0.value) == 1.0);

    // column-choice invariance is verified internally; also spot-check value
    auto K16 = zeta16();
    auto U16 = units_zeta16(K16);
    auto r16 = regulator(U16);
    CHECK(dbl(r16.value) > 0.0);
}

TEST_CASE("successive minima: rank-1 closed form") {
    auto K2 = sqrt_field(2);
    auto U2 = units_sqrt2(K2);
    auto mins = successive_minima(U2);
    REQUIRE(mins.size() == 1);
    CHECK(dbl(mins[0]) == doctest::Approx(std::sqrt(2.0) * kLog1p2).epsilon(1e-10));
}

TEST_CASE("successive minima: scaling and brute-force cross-check") {
    auto K = zeta16();
    auto U = units_zeta16(K);
    auto mins = successive_minima(U);
    REQUIRE(mins.size() == 3);
    CHECK(mins[0] <= mins[1]);
    CHECK(mins[1] <= mins[2]);

    // Independent oracle: exhaust integer combinations in [-3,3]^3 of the rows
    // of L, tracking the three smallest norms of independent sets greedily.
    struct Cand {
        double norm;
        std::vector<Int> c;
    };
    std::vector<Cand> cands;
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                double n2 = 0;
                for (int j = 0; j < 4; ++j) {
                    double v = a * dbl(U.L.at(0, j)) + b * dbl(U.L.at(1, j)) +
                               c * dbl(U.L.at(2, j));
                    n2 += v * v;
                }
                cands.push_back({std::sqrt(n2), {Int(a), Int(b), Int(c)}});
            }
    std::sort(cands.begin(), cands.end(),
              [](const Cand& x, const Cand& y) { return x.norm < y.norm; });
    std::vector<std::vector<Int>> chosen;
    std::vector<double> oracle;
    for (const auto& cd : cands) {
        if (oracle.size() == 3) break;
        auto trial = chosen;
        trial.push_back(cd.c);
        if (rank_int(trial) == static_cast<int>(trial.size())) {
            chosen = trial;
            oracle.push_back(cd.norm);
        }
    }
    REQUIRE(oracle.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(dbl(mins[i]) == doctest::Approx(oracle[i]).epsilon(1e-9));

    // scaling every generator to its square doubles every minimum
    std::vector<FieldElement> squared;
    for (const auto& g : U.free_gens) squared.push_back(element_pow(g, 2, K));
    auto U2 = build_unit_group(U.torsion_gen, U.torsion_order, squared, K);
    auto mins2 = successive_minima(U2);
    for (int i = 0; i < 3; ++i)
        CHECK(dbl(mins2[i]) == doctest::Approx(2.0 * dbl(mins[i])).epsilon(1e-9));
}

TEST_CASE("covering radius bounds") {
    auto K2 = sqrt_field(2);
    auto U2 = units_sqrt2(K2);
    auto B = covering_radius_bounds(U2, K2);
    CHECK(dbl(B.lower_regulator) == doctest::Approx(0.5 * kLog1p2).epsilon(1e-9));
    CHECK(dbl(B.upper_minima) == doctest::Approx(kLog1p2).epsilon(1e-9));
    CHECK(B.lower_regulator <= B.upper_minima);
    CHECK(B.lower_minima <= B.upper_minima);
    CHECK(dbl(B.fundamental_volume) ==
          doctest::Approx(std::sqrt(2.0) * kLog1p2).epsilon(1e-9));

    auto K16 = zeta16();
    auto B16 = covering_radius_bounds(units_zeta16(K16), K16);
    CHECK(B16.lower_regulator <= B16.upper_minima + BigFloat::two_pow(-40, 64));
    CHECK(dbl(B16.lower_regulator) > 0.0);
}

TEST_CASE("sufficient largeness") {
    auto K2 = sqrt_field(2);
    auto U2 = units_sqrt2(K2);
    // 3 + sqrt2 has norm 7; n = log(7)/2 > 0.88137
    CHECK(sufficient_largeness(el({3, 1}), K2, U2) == SufficientVerdict::StrictlyLarge);

    // a unit violates the precondition
    CHECK_THROWS_AS(sufficient_largeness(el({1, 1}), K2, U2), std::domain_error);

    // norm-17 element in the 16th cyclotomic field: must stay inconclusive
    auto K16 = zeta16();
    CHECK(sufficient_largeness(el({0, 0, 1, -1, 0, 0, 0, -1}), K16, units_zeta16(K16)) ==
          SufficientVerdict::Inconclusive);
}

TEST_CASE("uniform extension degree") {
    auto K2 = sqrt_field(2);
    CHECK(uniform_extension_degree(K2, units_sqrt2(K2)) == 3);

    auto K4 = zeta4();
    CHECK(uniform_extension_degree(K4, units_zeta4(K4)) == 1);

    // sublattice (squared generators) never decreases j
    auto Kz = zeta16();
    auto U = units_zeta16(Kz);
    long j1 = uniform_extension_degree(Kz, U);
    std::vector<FieldElement> squared;
    for (const auto& g : U.free_gens) squared.push_back(element_pow(g, 2, Kz));
    auto U2 = build_unit_group(U.torsion_gen, U.torsion_order, squared, Kz);
    CHECK(uniform_extension_degree(Kz, U2) >= j1);
}

TEST_CASE("pell units") {
    CHECK(pell_fundamental_unit(2) == el({1, 1}));

    FieldElement golden = pell_fundamental_unit(5);
    CHECK(golden.coords()[0] == Rat(1, 2));
    CHECK(golden.coords()[1] == Rat(1, 2));

    CHECK(pell_fundamental_unit(19) == el({170, 39}));
    CHECK(pell_fundamental_unit(17) == el({4, 1}));
    CHECK(pell_fundamental_unit(13).coords()[0] == Rat(3, 2));

    CHECK_THROWS(pell_fundamental_unit(12));  // not squarefree

    // brute-force oracle for D = 19: scan y = 1..100 for x^2 - 19 y^2 = +-1
    long best_y = 0;
    Int best_x = 0;
    for (long y = 1; y <= 100 && best_y == 0; ++y) {
        Int target = Int(19) * y * y;
        Int x = sqrt(target);
        for (Int cand : {x, x + 1}) {
            Int v = cand * cand - target;
            if (v == 1 || v == -1) {
                best_y = y;
                best_x = cand;
                break;
            }
        }
    }
    CHECK(best_x == 170);
    CHECK(best_y == 39);

    // every pell unit is a non-torsion unit of the field
    for (long D : {2L, 3L, 5L, 6L, 7L, 10L, 11L, 13L}) {
        auto K = sqrt_field(D);
        FieldElement u = pell_fundamental_unit(D);
        CHECK(rat_abs(exact_norm(u, K)) == 1);
        CHECK_FALSE(is_root_of_unity(u, K));
    }
}

TEST_CASE("pell solutions stay integral") {
    auto s = pell_solution(2);
    CHECK(s.x == 1);
    CHECK(s.y == 1);
    CHECK(s.norm_sign == -1);
    auto s3 = pell_solution(3);
    CHECK(s3.x == 2);
    CHECK(s3.y == 1);
    CHECK(s3.norm_sign == 1);
    auto s5 = pell_solution(5);
    CHECK(s5.x == 2);
    CHECK(s5.y == 1);
}
