#include "largeness/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "largeness/polyq.hpp"

namespace largeness {

namespace {

BigComplex eval_int_poly(const std::vector<Int>& c, const BigComplex& x, long prec) {
    BigComplex acc(prec);
    for (size_t i = c.size(); i-- > 0;) {
        acc = acc * x;
        acc.re = acc.re + BigFloat(c[i], prec);
    }
    return acc;
}

BigFloat eval_int_poly(const std::vector<Int>& c, const BigFloat& x, long prec) {
    BigFloat acc(0L, prec);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + BigFloat(c[i], prec);
    return acc;
}

BigFloat eval_int_poly_deriv(const std::vector<Int>& c, const BigFloat& x, long prec) {
    BigFloat acc(0L, prec);
    for (size_t i = c.size(); i-- > 1;) acc = acc * x + BigFloat(c[i], prec) * static_cast<long>(i);
    return acc;
}

BigComplex eval_int_poly_deriv(const std::vector<Int>& c, const BigComplex& x, long prec) {
    BigComplex acc(prec);
    for (size_t i = c.size(); i-- > 1;) {
        acc = acc * x;
        acc.re = acc.re + BigFloat(c[i], prec) * static_cast<long>(i);
    }
    return acc;
}

// Residual target used while iterating; the public contract is 8 bits looser.
bool residual_ok(const std::vector<Int>& c, const BigComplex& z, long prec, long slack_bits) {
    int d = static_cast<int>(c.size()) - 1;
    BigFloat res = abs(eval_int_poly(c, z, z.precision()));
    BigFloat scale = pow_si(max(BigFloat(1L, z.precision()), abs(z)), d);
    return res <= BigFloat::two_pow(-(prec + slack_bits), 64) * scale;
}

}  // namespace

EmbeddingRoots find_roots(const std::vector<Int>& monic_coeffs, long prec_bits) {
    const int d = static_cast<int>(monic_coeffs.size()) - 1;
    if (d < 1 || monic_coeffs.back() != 1)
        throw std::invalid_argument("find_roots: monic polynomial of degree >= 1 required");

    const long wp = prec_bits + 64 + 4L * d;
    EmbeddingRoots out;
    out.prec_bits = prec_bits;

    if (d == 1) {
        out.reals.push_back(BigFloat(Rat(-monic_coeffs[0]), wp).at_precision(wp));
        return out;
    }

    PolyQ fq = poly_from_ints(monic_coeffs);
    const int r1 = sturm_real_root_count(fq);
    const int r2 = (d - r1) / 2;
    if (r1 + 2 * r2 != d)
        throw std::runtime_error("find_roots: real-root count inconsistent with degree");

    std::vector<BigComplex> z;
    z.reserve(d);
    if (d == 2) {
        // Closed form; keeps the quadratic fixtures fast and exact-ish.
        BigFloat b(Rat(monic_coeffs[1]), wp), c0(Rat(monic_coeffs[0]), wp);
        BigFloat disc = b * b - c0 * 4L;
        BigFloat half = BigFloat(Rat(1, 2), wp);
        if (disc.sign() >= 0) {
            BigFloat rd = sqrt(disc);
            z.emplace_back((-b - rd) * half, BigFloat(0L, wp));
            z.emplace_back((-b + rd) * half, BigFloat(0L, wp));
        } else {
            BigFloat rd = sqrt(-disc);
            z.emplace_back(-b * half, -rd * half);
            z.emplace_back(-b * half, rd * half);
        }
    } else {
        // Durand-Kerner from a slightly asymmetric spiral of starting points.
        double radius = 1.0;
        for (int i = 0; i < d; ++i) {
            double m = std::abs(monic_coeffs[i].convert_to<double>());
            radius = std::max(radius, 1.0 + m);
        }
        for (int k = 0; k < d; ++k) {
            double rho = std::pow(radius, (k + 1.0) / (d + 1.0));
            double theta = 2.0 * M_PI * k / d + 0.3774217;
            z.emplace_back(rho * std::cos(theta), rho * std::sin(theta), wp);
        }
        const int max_iters = 600;
        BigFloat step_tol = BigFloat::two_pow(-(wp - 24), 64);
        bool converged = false;
        for (int iter = 0; iter < max_iters && !converged; ++iter) {
            BigFloat max_step(0L, wp);
            for (int k = 0; k < d; ++k) {
                BigComplex num = eval_int_poly(monic_coeffs, z[k], wp);
                BigComplex den(BigFloat(1L, wp), BigFloat(0L, wp));
                for (int j = 0; j < d; ++j) {
                    if (j == k) continue;
                    den = den * (z[k] - z[j]);
                }
                if (den.is_zero())
                    throw std::runtime_error("find_roots: coincident iterates");
                BigComplex delta = num / den;
                z[k] = z[k] - delta;
                BigFloat rel = abs(delta) / max(BigFloat(1L, wp), abs(z[k]));
                max_step = max(max_step, rel);
            }
            converged = max_step < step_tol;
        }
        if (!converged)
            throw std::runtime_error("find_roots: Durand-Kerner did not converge within iteration cap");
    }

    // Classify: the r1 smallest-|Im| iterates are the real roots.
    std::vector<int> order(d);
    for (int i = 0; i < d; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return cmp(abs(z[a].im), abs(z[b].im)) < 0;
    });
    BigFloat im_budget = BigFloat::two_pow(-prec_bits / 2, 64);

    for (int i = 0; i < r1; ++i) {
        const BigComplex& cand = z[order[i]];
        if (abs(cand.im) > im_budget * max(BigFloat(1L, wp), abs(cand.re)))
            throw std::runtime_error("find_roots: cannot certify a real root (imaginary residue too large)");
        // Newton polish on the real line.
        BigFloat x = cand.re.at_precision(wp);
        for (int it = 0; it < 64; ++it) {
            BigFloat fx = eval_int_poly(monic_coeffs, x, wp);
            if (fx.is_zero()) break;
            BigFloat dfx = eval_int_poly_deriv(monic_coeffs, x, wp);
            if (dfx.is_zero()) throw std::runtime_error("find_roots: zero derivative at real root");
            BigFloat nx = x - fx / dfx;
            if (cmp(abs(nx - x), BigFloat::two_pow(-(wp - 8), 64) * max(BigFloat(1L, wp), abs(x))) <= 0) {
                x = nx;
                break;
            }
            x = nx;
        }
        out.reals.push_back(x);
    }

    std::vector<BigComplex> upper;
    for (int i = r1; i < d; ++i) {
        BigComplex cand = z[order[i]];
        if (cand.im.sign() <= 0) continue;
        // Complex Newton polish.
        for (int it = 0; it < 64; ++it) {
            BigComplex fx = eval_int_poly(monic_coeffs, cand, wp);
            if (fx.is_zero()) break;
            BigComplex dfx = eval_int_poly_deriv(monic_coeffs, cand, wp);
            if (dfx.is_zero()) throw std::runtime_error("find_roots: zero derivative at complex root");
            BigComplex step = fx / dfx;
            cand = cand - step;
            if (cmp(abs(step), BigFloat::two_pow(-(wp - 8), 64) * max(BigFloat(1L, wp), abs(cand))) <= 0)
                break;
        }
        upper.push_back(cand);
    }
    if (static_cast<int>(upper.size()) != r2)
        throw std::runtime_error("find_roots: conjugate pairing failed");

    std::sort(out.reals.begin(), out.reals.end(), [](const BigFloat& a, const BigFloat& b) {
        return cmp(a, b) < 0;
    });
    std::sort(upper.begin(), upper.end(), [](const BigComplex& a, const BigComplex& b) {
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    });
    out.complexes = std::move(upper);

    for (const auto& x : out.reals)
        if (!residual_ok(monic_coeffs, BigComplex(x, BigFloat(0L, wp)), prec_bits, 8))
            throw std::runtime_error("find_roots: real root failed residual certification");
    for (const auto& c : out.complexes)
        if (!residual_ok(monic_coeffs, c, prec_bits, 8))
            throw std::runtime_error("find_roots: complex root failed residual certification");

    // Distinctness guard (squarefree input should make this unreachable).
    BigFloat sep = BigFloat::two_pow(-prec_bits / 2, 64);
    for (size_t i = 0; i + 1 < out.reals.size(); ++i)
        if (abs(out.reals[i + 1] - out.reals[i]) < sep)
            throw std::runtime_error("find_roots: real roots not separated");
    for (size_t i = 0; i + 1 < out.complexes.size(); ++i)
        if (abs(out.complexes[i + 1] - out.complexes[i]) < sep)
            throw std::runtime_error("find_roots: complex roots not separated");

    return out;
}

}  // namespace largeness
