// special.hpp -- special functions backing the archimedean factors.
//
//   log_gamma / digamma : principal-branch log Gamma and psi for complex z,
//       by upward recurrence until |z| >= 10 followed by the Stirling series
//         log Gamma(w) = (w - 1/2) log w - w + log(2 pi)/2
//                        + sum_k B_{2k} / (2k (2k-1) w^{2k-1}),
//       truncated at the smallest term (error <= that term).
//   hurwitz_zeta / riemann_zeta (+ s-derivatives) : Euler-Maclaurin on the
//       real axis, used by the direct-evaluation oracles.
//   omega_lambda : the unique real solution of e^{-lambda} = lambda.
#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "lfb/errors.hpp"

namespace lfb {

using cplx = std::complex<double>;

namespace detail {
// B_2 .. B_30
inline constexpr double kBernoulli2k[] = {
    1.0 / 6,           -1.0 / 30,          1.0 / 42,           -1.0 / 30,
    5.0 / 66,          -691.0 / 2730,      7.0 / 6,            -3617.0 / 510,
    43867.0 / 798,     -174611.0 / 330,    854513.0 / 138,     -236364091.0 / 2730,
    8553103.0 / 6,     -23749461029.0 / 870, 8615841276005.0 / 14322};

inline bool near_nonpositive_integer(cplx z) {
    if (std::abs(z.imag()) > 1e-14) return false;
    double r = z.real();
    return r <= 0.0 && std::abs(r - std::round(r)) < 1e-14;
}
}  // namespace detail

// Principal-branch log Gamma.  Accurate to ~1e-13 relative for Re z > 0.
inline cplx log_gamma(cplx z) {
    if (detail::near_nonpositive_integer(z))
        throw std::domain_error("log_gamma: pole of Gamma at z = " + std::to_string(z.real()));
    if (z.real() < 0.5) {
        // reflection; adequate for the off-axis test points we use
        const double pi = std::numbers::pi;
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    }
    cplx shift = 0.0;
    while (std::abs(z) < 10.0) {
        shift += std::log(z);
        z += 1.0;
    }
    cplx w = z;
    cplx lg = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * std::numbers::pi);
    cplx w2 = w * w;
    cplx wp = w;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k <= 15; ++k) {
        cplx term = detail::kBernoulli2k[k - 1] / (2.0 * k * (2.0 * k - 1.0) * wp);
        double mag = std::abs(term);
        if (mag >= prev) break;  // asymptotic series: stop at smallest term
        lg += term;
        prev = mag;
        if (mag < 1e-18 * std::abs(lg)) break;
        wp *= w2;
    }
    return lg - shift;
}

// psi = Gamma'/Gamma, same scheme.
inline cplx digamma(cplx z) {
    if (detail::near_nonpositive_integer(z))
        throw std::domain_error("digamma: pole of Gamma at z = " + std::to_string(z.real()));
    if (z.real() < 0.5) {
        const double pi = std::numbers::pi;
        return digamma(1.0 - z) - pi / std::tan(pi * z);
    }
    cplx shift = 0.0;
    while (std::abs(z) < 10.0) {
        shift += 1.0 / z;
        z += 1.0;
    }
    cplx w = z;
    cplx ps = std::log(w) - 0.5 / w;
    cplx w2 = w * w;
    cplx wp = w2;
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k <= 15; ++k) {
        cplx term = detail::kBernoulli2k[k - 1] / (2.0 * k * wp);
        double mag = std::abs(term);
        if (mag >= prev) break;
        ps -= term;
        prev = mag;
        if (mag < 1e-18) break;
        wp *= w2;
    }
    return ps - shift;
}

// Hurwitz zeta(s, a) and its s-derivative for real s > 1, 0 < a <= 1.
// Euler-Maclaurin with N leading terms and J Bernoulli corrections; with
// N = 24, J = 12 the remainder is far below 1e-13 for s in (1, 40].
struct ZetaEval {
    double value;
    double deriv;
};

inline ZetaEval hurwitz_zeta_em(double s, double a) {
    if (s <= 1.0) throw std::range_error("hurwitz_zeta_em: requires s > 1");
    if (!(a > 0.0 && a <= 1.0)) throw std::domain_error("hurwitz_zeta_em: a must be in (0,1]");
    const int N = 24, J = 12;
    double v = 0.0, dv = 0.0;
    for (int n = 0; n < N; ++n) {
        double base = n + a;
        double t = std::pow(base, -s);
        v += t;
        dv -= std::log(base) * t;
    }
    double B = N + a;
    double L = std::log(B);
    double tail = std::pow(B, 1.0 - s) / (s - 1.0);
    v += tail;
    dv += -L * tail - std::pow(B, 1.0 - s) / ((s - 1.0) * (s - 1.0));
    double half = 0.5 * std::pow(B, -s);
    v += half;
    dv -= L * half;
    // Bernoulli corrections: B_{2j}/(2j)! * (s)_{2j-1} * B^{-s-2j+1}
    double poch = s;           // rising factorial s (s+1) ... (s+2j-2)
    double dpoch_over = 1.0 / s;  // sum of 1/(s+i)
    double fact = 2.0;         // (2j)!
    for (int j = 1; j <= J; ++j) {
        double coef = detail::kBernoulli2k[j - 1] / fact;
        double pw = std::pow(B, -s - 2.0 * j + 1.0);
        double term = coef * poch * pw;
        v += term;
        dv += term * (dpoch_over - L);
        // advance to (s)_{2j+1} and (2j+2)!
        poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        dpoch_over += 1.0 / (s + 2.0 * j - 1.0) + 1.0 / (s + 2.0 * j);
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return {v, dv};
}

inline double riemann_zeta(double s) { return hurwitz_zeta_em(s, 1.0).value; }
inline double riemann_zeta_deriv(double s) { return hurwitz_zeta_em(s, 1.0).deriv; }

// Unique real solution of e^{-lambda} = lambda, to ~1e-15 (bisection then Newton).
inline double omega_lambda() {
    double lo = 0.5, hi = 0.6;
    for (int i = 0; i < 40; ++i) {
        double mid = 0.5 * (lo + hi);
        (std::exp(-mid) - mid > 0.0 ? lo : hi) = mid;
    }
    double l = 0.5 * (lo + hi);
    for (int i = 0; i < 4; ++i) l -= (std::exp(-l) - l) / (-std::exp(-l) - 1.0);
    return l;
}

}  // namespace lfb
