// analytic.hpp -- direct evaluation of L(sigma), L'/L, the completed function
// Xi, and the archimedean terms that enter the bounds:
//
//   G(s)  = sum_i (1/2) Re psi(s/2 + beta_i)
//   F(s)  = sum_rho (sigma - beta) / ((sigma - beta)^2 + (t - gamma)^2)
//   gamma_ratio(sigma, sigma0)
//         = |Q|^{(sigma0-sigma)/2} prod_i |Gamma(sigma0/2+beta_i)/Gamma(sigma/2+beta_i)|
//   Xi(s) = s^m (1-s)^m |Q|^{s/2} prod_i Gamma(s/2+beta_i) L(s)
//
// Every evaluator returns a value together with a truncation tail bound; a
// request whose tail formula does not converge raises std::range_error rather
// than returning a silently wrong number.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "lfb/primes.hpp"
#include "lfb/spec.hpp"
#include "lfb/special.hpp"
#include "lfb/zeros.hpp"

namespace lfb {

struct EvalResult {
    cplx value{0.0, 0.0};
    double tail_bound = 0.0;
    std::uint64_t cutoff = 0;
};

namespace analytic_detail {

// sum_{n<=N} d_d(n) n^{-a} for the generic series tail (d_d = d-fold divisor
// function, the termwise envelope of |a_n| / n^theta).
inline double divisor_power_partial(std::uint64_t N, double a, unsigned d) {
    auto spf = smallest_prime_factors(static_cast<std::uint32_t>(N));
    std::vector<double> dd(N + 1, 0.0);
    dd[1] = 1.0;
    for (std::uint64_t n = 2; n <= N; ++n) {
        std::uint64_t p = spf[n], m = n, k = 0;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        // binomial C(k+d-1, d-1)
        double binom = 1.0;
        for (std::uint64_t i = 1; i <= k; ++i)
            binom *= static_cast<double>(d - 1 + i) / static_cast<double>(i);
        dd[n] = binom * dd[m];
    }
    double s = 0.0;
    for (std::uint64_t n = 1; n <= N; ++n) s += dd[n] * std::pow(static_cast<double>(n), -a);
    return s;
}

}  // namespace analytic_detail

// Euler product over p <= cutoff.  Needs sigma - theta > 1; the tail is the
// integral comparison  sum_{p>P} d |log(1 - alpha p^{-s})| <= d/(1-u0) *
// (P^{1-a}/(a-1) + P^{-a}),  a = sigma - theta, u0 = P^{theta-sigma}.
inline EvalResult euler_eval(const LFunctionSpec& spec, double sigma, std::uint64_t cutoff) {
    double a = sigma - spec.coeff_growth;
    if (!(a > 1.0))
        throw std::range_error("euler_eval: sigma - theta must exceed 1 (sigma = " +
                               std::to_string(sigma) + ", theta = " +
                               std::to_string(spec.coeff_growth) + ")");
    if (spec.local_limit < cutoff)
        throw data_gap_error("euler_eval: locals cover only up to " + std::to_string(spec.local_limit));
    cplx prod = 1.0;
    for_each_prime(cutoff, [&](std::uint64_t p) {
        const auto& lf = spec.locals.at(p);
        double ps = std::pow(static_cast<double>(p), -sigma);
        for (const auto& alpha : lf.roots) prod /= (1.0 - alpha * ps);
    });
    double P = static_cast<double>(cutoff);
    double u0 = std::pow(P, -a);
    double log_tail = spec.degree / (1.0 - u0) * (std::pow(P, 1.0 - a) / (a - 1.0) + u0);
    double tail = std::abs(prod) * std::expm1(log_tail);
    return {prod, tail, cutoff};
}

// Dirichlet-series evaluation with a hint-dependent tail bound.
inline EvalResult series_eval(const LFunctionSpec& spec, double sigma, std::uint64_t cutoff) {
    if (spec.series_hint == SeriesHint::zeta_em) {
        // a_n = 1: Euler-Maclaurin directly; remainder below 1e-13 relative
        if (!(sigma > 1.0)) throw std::range_error("series_eval: zeta requires sigma > 1");
        double v = riemann_zeta(sigma);
        return {cplx{v, 0.0}, 1e-13 * std::abs(v), cutoff};
    }
    if (spec.series_hint == SeriesHint::mean_zero_periodic) {
        if (!(sigma > 0.0)) throw std::range_error("series_eval: needs sigma > 0");
        auto table = dirichlet_coefficients(spec, cutoff);
        cplx v = 0.0;
        for (std::uint64_t n = 1; n <= cutoff; ++n)
            v += table.a(n) * std::pow(static_cast<double>(n), -sigma);
        // Abel summation against the bounded partial sums: |tail| <= 2B N^{-sigma}
        double tail = 2.0 * spec.partial_sum_bound * std::pow(static_cast<double>(cutoff), -sigma);
        return {v, tail, cutoff};
    }
    double a = sigma - spec.coeff_growth;
    if (!(a > 1.0))
        throw std::range_error("series_eval: sigma - theta must exceed 1 for the generic tail");
    auto table = dirichlet_coefficients(spec, cutoff);
    cplx v = 0.0;
    for (std::uint64_t n = 1; n <= cutoff; ++n)
        v += table.a(n) * std::pow(static_cast<double>(n), -sigma);
    double tail = std::pow(riemann_zeta(a), static_cast<double>(spec.degree)) -
                  analytic_detail::divisor_power_partial(cutoff, a, spec.degree);
    return {v, std::max(tail, 0.0), cutoff};
}

// Best available route to L(sigma) given the spec's hint.
inline EvalResult l_value(const LFunctionSpec& spec, double sigma, std::uint64_t cutoff) {
    switch (spec.series_hint) {
        case SeriesHint::zeta_em:
        case SeriesHint::mean_zero_periodic:
            return series_eval(spec, sigma, cutoff);
        case SeriesHint::generic:
        default:
            return euler_eval(spec, sigma, cutoff);
    }
}

// L'/L(sigma) = -sum_{p^k <= cutoff} Lambda(p^k) p^{-k sigma}, with the
// prime-power tail bounded through sum_{n>N} d log(n) n^{theta-sigma}.
inline EvalResult log_deriv_eval(const LFunctionSpec& spec, double sigma, std::uint64_t cutoff) {
    double a = sigma - spec.coeff_growth;
    if (spec.series_hint == SeriesHint::zeta_em && sigma > 1.0) {
        double v = riemann_zeta_deriv(sigma) / riemann_zeta(sigma);
        return {cplx{v, 0.0}, 1e-12 * (1.0 + std::abs(v)), cutoff};
    }
    if (!(a > 1.0)) throw std::range_error("log_deriv_eval: sigma - theta must exceed 1");
    if (spec.local_limit < cutoff)
        throw data_gap_error("log_deriv_eval: locals cover only up to " + std::to_string(spec.local_limit));
    cplx s = 0.0;
    for_each_prime_power(cutoff, [&](std::uint64_t p, unsigned k, std::uint64_t pk) {
        s += lambda_coefficient(spec, p, k) * std::pow(static_cast<double>(pk), -sigma);
    });
    double N = static_cast<double>(cutoff), L = std::log(N), am1 = a - 1.0;
    double tail = spec.degree *
                  (std::pow(N, -am1) * (L / am1 + 1.0 / (am1 * am1)) + L * std::pow(N, -a));
    return {-s, tail, cutoff};
}

// (L'/L)'(s) = sum_{p^k <= cutoff} Lambda(p^k) log(p^k) (p^k)^{-s}.
inline EvalResult log_deriv_second(const LFunctionSpec& spec, cplx s, std::uint64_t cutoff) {
    double a = s.real() - spec.coeff_growth;
    if (!(a > 1.0)) throw std::range_error("log_deriv_second: Re s - theta must exceed 1");
    if (spec.local_limit < cutoff)
        throw data_gap_error("log_deriv_second: locals cover only up to " + std::to_string(spec.local_limit));
    cplx acc = 0.0;
    for_each_prime_power(cutoff, [&](std::uint64_t p, unsigned k, std::uint64_t pk) {
        double n = static_cast<double>(pk);
        acc += lambda_coefficient(spec, p, k) * std::log(n) * std::pow(cplx{n, 0.0}, -s);
    });
    double N = static_cast<double>(cutoff), L = std::log(N), am1 = a - 1.0;
    double tail = spec.degree * (std::pow(N, -am1) * (L * L / am1 + 2.0 * L / (am1 * am1) +
                                                      2.0 / (am1 * am1 * am1)) +
                                 L * L * std::pow(N, -a));
    return {acc, tail, cutoff};
}

// G(s) = sum_i (1/2) Re psi(s/2 + beta_i).  The identity it enters relates
// real quantities, so the real projection is taken here.
inline double G_term(const LFunctionSpec& spec, double s) {
    double g = 0.0;
    for (const auto& b : spec.shifts) g += 0.5 * digamma(cplx{s / 2.0, 0.0} + b.value).real();
    return g;
}

// F(s) over the supplied zeros; stored ordinates are gamma >= 0 and each
// gamma > 0 contributes its mirror -gamma as well.
inline double F_term(const LFunctionSpec& spec, cplx s, const ZeroSet& zeros) {
    (void)spec;
    double sigma = s.real(), t = s.imag();
    double f = 0.0;
    for (const auto& z : zeros.entries) {
        double beta = zeros.critical_assumed ? 0.5 : z.beta;
        double dx = sigma - beta;
        f += dx / (dx * dx + (t - z.gamma) * (t - z.gamma));
        if (z.gamma > 0.0) f += dx / (dx * dx + (t + z.gamma) * (t + z.gamma));
    }
    return f;
}

// |Q|^{(sigma0-sigma)/2} prod_i |Gamma(sigma0/2+beta_i)/Gamma(sigma/2+beta_i)|
inline double gamma_ratio(const LFunctionSpec& spec, double sigma, double sigma0) {
    if (!(1.0 <= sigma && sigma <= sigma0))
        throw std::domain_error("gamma_ratio: need 1 <= sigma <= sigma0");
    if (sigma == sigma0) return 1.0;
    double lg = 0.0;
    for (const auto& b : spec.shifts)
        lg += (log_gamma(cplx{sigma0 / 2.0, 0.0} + b.value) -
               log_gamma(cplx{sigma / 2.0, 0.0} + b.value))
                  .real();
    double qpart = spec.q_mag > 0.0
                       ? std::pow(spec.q_mag, (sigma0 - sigma) / 2.0)
                       : 0.0;
    return qpart * std::exp(lg);
}

// Xi(sigma) = sigma^m (1-sigma)^m |Q|^{sigma/2} prod Gamma(sigma/2+beta_i) L(sigma)
inline EvalResult xi_value(const LFunctionSpec& spec, double sigma, std::uint64_t cutoff) {
    auto lv = l_value(spec, sigma, cutoff);
    cplx pre = std::pow(cplx{sigma, 0.0}, static_cast<double>(spec.pole_order)) *
               std::pow(cplx{1.0 - sigma, 0.0}, static_cast<double>(spec.pole_order));
    pre *= std::pow(spec.q_mag, sigma / 2.0);
    cplx lgsum = 0.0;
    for (const auto& b : spec.shifts) lgsum += log_gamma(cplx{sigma / 2.0, 0.0} + b.value);
    pre *= std::exp(lgsum);
    return {pre * lv.value, std::abs(pre) * lv.tail_bound, lv.cutoff};
}

// log |Xi(sigma)| computed in log scale (no overflow for large shifts).
inline double xi_log_abs(const LFunctionSpec& spec, double sigma, std::uint64_t cutoff) {
    auto lv = l_value(spec, sigma, cutoff);
    double m = static_cast<double>(spec.pole_order);
    double out = m * std::log(std::abs(sigma)) + m * std::log(std::abs(1.0 - sigma));
    out += (sigma / 2.0) * std::log(spec.q_mag);
    for (const auto& b : spec.shifts)
        out += log_gamma(cplx{sigma / 2.0, 0.0} + b.value).real();
    return out + std::log(std::abs(lv.value));
}

struct DerivResult {
    double value = 0.0;
    double error_estimate = 0.0;
    double sigma_center = 0.0;
};

namespace analytic_detail {
inline double f_completed(const LFunctionSpec& spec, double sigma, std::uint64_t cutoff) {
    auto lv = l_value(spec, sigma, cutoff);
    return std::pow(sigma - 1.0, static_cast<double>(spec.pole_order)) * lv.value.real();
}

inline double central_diff(const LFunctionSpec& spec, unsigned j, double c, double h,
                           std::uint64_t cutoff) {
    auto f = [&](double x) { return f_completed(spec, x, cutoff); };
    switch (j) {
        case 1: return (f(c + h) - f(c - h)) / (2.0 * h);
        case 2: return (f(c + h) - 2.0 * f(c) + f(c - h)) / (h * h);
        case 3: return (f(c + 2 * h) - 2.0 * f(c + h) + 2.0 * f(c - h) - f(c - 2 * h)) / (2.0 * h * h * h);
        case 4:
            return (f(c + 2 * h) - 4.0 * f(c + h) + 6.0 * f(c) - 4.0 * f(c - h) + f(c - 2 * h)) /
                   (h * h * h * h);
        default: throw std::domain_error("central_diff: order must be 1..4");
    }
}
}  // namespace analytic_detail

// Order-2 central differences for f^{(j)} with f(s) = (s-1)^m L(s), evaluated
// at sigma = 1 + 2hj (extrapolated to 1 when j = 0), Richardson-combined over
// h and h/2; the error estimate is the stencil-halving difference / 3.
inline DerivResult numeric_derivative(const LFunctionSpec& spec, unsigned j, double h,
                                      std::uint64_t cutoff = 100000) {
    if (j > 4) throw std::domain_error("numeric_derivative: order must be <= 4");
    if (!(h > 0.0)) throw std::domain_error("numeric_derivative: h must be positive");
    using analytic_detail::central_diff;
    using analytic_detail::f_completed;
    if (j == 0) {
        // right-sided linear Richardson toward sigma = 1
        auto E = [&](double step) {
            return 2.0 * f_completed(spec, 1.0 + step, cutoff) - f_completed(spec, 1.0 + 2 * step, cutoff);
        };
        double eh = E(h), eh2 = E(h / 2.0);
        return {(4.0 * eh2 - eh) / 3.0, std::abs(eh2 - eh) / 3.0, 1.0};
    }
    double c = 1.0 + 2.0 * h * j;
    double dh = central_diff(spec, j, c, h, cutoff);
    double dh2 = central_diff(spec, j, c, h / 2.0, cutoff);
    return {(4.0 * dh2 - dh) / 3.0, std::abs(dh2 - dh) / 3.0, c};
}

}  // namespace lfb
