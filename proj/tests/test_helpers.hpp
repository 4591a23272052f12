#pragma once

#include <random>
#include <vector>

#include "largeness/field.hpp"
#include "largeness/units.hpp"

namespace testutil {

using namespace largeness;

inline std::vector<Int> ints(std::initializer_list<long> v) {
    std::vector<Int> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

inline FieldElement el(std::initializer_list<long> v) {
    std::vector<Rat> c;
    for (long x : v) c.emplace_back(x);
    return FieldElement(std::move(c));
}

inline NumberField zeta4(long prec = 192) { return make_field(ints({1, 0, 1}), prec, true); }
inline NumberField zeta6(long prec = 192) { return make_field(ints({1, -1, 1}), prec, true); }
inline NumberField zeta10(long prec = 192) {
    return make_field(ints({1, -1, 1, -1, 1}), prec, true);
}
inline NumberField zeta12(long prec = 192) {
    return make_field(ints({1, 0, -1, 0, 1}), prec, true);
}
inline NumberField zeta16(long prec = 192) {
    return make_field(ints({1, 0, 0, 0, 0, 0, 0, 0, 1}), prec, true);
}
inline NumberField zeta18(long prec = 192) {
    return make_field(ints({1, 0, 0, -1, 0, 0, 1}), prec, true);
}
inline NumberField sqrt_field(long D, long prec = 192) {
    return make_field(ints({-D, 0, 1}), prec, false);
}

inline UnitGroup units_zeta16(const NumberField& K) {
    FieldElement zeta = el({0, 1, 0, 0, 0, 0, 0, 0});
    std::vector<FieldElement> free = {
        el({-1, 0, 1, 0, 0, 0, -1, 0}),  // -z^6 + z^2 - 1
        el({1, 1, 1, 0, 0, 0, 0, 0}),    // z^2 + z + 1
        el({0, -1, 0, 1, 0, 0, -1, 0}),  // -z^6 + z^3 - z
    };
    return build_unit_group(zeta, 16, free, K);
}

inline UnitGroup units_zeta4(const NumberField& K) {
    return build_unit_group(el({0, 1}), 4, {}, K);
}

inline UnitGroup units_sqrt2(const NumberField& K) {
    return build_unit_group(el({-1, 0}), 2, {el({1, 1})}, K);
}

/// Random integral element with coordinates in [-bound, bound], nonzero.
inline FieldElement random_integral(std::mt19937_64& rng, int d, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    while (true) {
        std::vector<Rat> c;
        c.reserve(d);
        for (int i = 0; i < d; ++i) c.emplace_back(dist(rng));
        FieldElement x(std::move(c));
        if (!x.is_zero()) return x;
    }
}

inline double dbl(const BigFloat& x) { return x.to_double(); }

}  // namespace testutil
