// explicit_formula.hpp -- zero-sum explicit formulas and the lower-bound
// pipeline.
//
// Lemma-1 kernel x^w/w^2:
//   -L'/L(s) = sum_{n<=x} Lambda(n) log(x/n) / (n^s log x)
//            + (1/log x) (L'/L)'(s)
//            + (1/log x) sum_rho x^{rho-s}/(rho-s)^2
//            - m x^{1-s} / ((1-s)^2 log x)
//            + (1/log x) sum_{i,k}^flat x^{-s-2(beta_i+k)}/(s+2(beta_i+k))^2
//
// Lemma-5 kernel 2x^s/(s(s+2)), weight 1 - (n/x)^2:
//   -L'/L(sigma) = sum_{n<=x} Lambda(n) (1-(n/x)^2) n^{-sigma}
//                + sum_rho 2 x^{rho-sigma} / ((rho-sigma)(rho-sigma+2))
//                + (trivial-zero residues right of the -A line)
//                - 2m x^{1-sigma} / ((1-sigma)(3-sigma))
//                + (shifted-contour remainder)
//
// The flat sums run over all (i, k) Gamma poles minus the spec's exclusion
// list (poles cancelled rather than producing trivial zeros); reports carry
// the exclusions applied.  With finite zero lists the truncated zero sum gets
// the density-style tail envelope C_tail x^{1-sigma} log(C (T+2)) / (T log x).
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "lfb/analytic.hpp"
#include "lfb/bounds.hpp"
#include "lfb/spec.hpp"
#include "lfb/zeros.hpp"

namespace lfb {

// sum over (i, k >= 0), minus exclusions, of x^{-s-2(beta_i+k)}/(s+2(beta_i+k))^2,
// truncated when a term drops below 1e-18.  The per-spec exclusion list is
// used by default; `extra_exclusions` extends it.
struct TrivialZeroSum {
    cplx value{0.0, 0.0};
    std::uint64_t term_count = 0;
    std::vector<std::pair<unsigned, unsigned>> exclusions_applied;
};

inline TrivialZeroSum trivial_zero_sum(const LFunctionSpec& spec, cplx s, double x,
                                       const std::vector<std::pair<unsigned, unsigned>>&
                                           extra_exclusions = {}) {
    TrivialZeroSum out;
    auto excluded = spec.trivial_zero_exclusions;
    excluded.insert(excluded.end(), extra_exclusions.begin(), extra_exclusions.end());
    out.exclusions_applied = excluded;
    auto is_excluded = [&](unsigned i, unsigned k) {
        for (auto [ei, ek] : excluded)
            if (ei == i && ek == k) return true;
        return false;
    };
    for (unsigned i = 0; i < spec.shifts.size(); ++i) {
        const cplx beta = spec.shifts[i].value;
        for (unsigned k = 0;; ++k) {
            cplx w = s + 2.0 * (beta + static_cast<double>(k));
            if (std::abs(w) < 1e-12)
                throw std::domain_error("trivial_zero_sum: s collides with trivial zero (i=" +
                                        std::to_string(i) + ", k=" + std::to_string(k) + ")");
            cplx term = std::pow(cplx{x, 0.0}, -w) / (w * w);
            double mag = std::abs(term);
            if (mag < 1e-18 && k > 0) break;
            if (!is_excluded(i, k)) {
                out.value += term;
                ++out.term_count;
            }
            if (k > 400) break;  // Re beta > -1/2 makes terms vanish long before this
        }
    }
    return out;
}

// sum_rho x^{rho-s}/(rho-s)^2 over the stored zeros and their gamma -> -gamma
// mirrors; ascending gamma, deterministic.
inline cplx lemma1_zero_sum(const ZeroSet& zeros, cplx s, double x) {
    cplx acc = 0.0;
    for (const auto& z : zeros.entries) {
        double beta = zeros.critical_assumed ? 0.5 : z.beta;
        cplx rho{beta, z.gamma};
        cplx d = rho - s;
        acc += std::pow(cplx{x, 0.0}, d) / (d * d);
        if (z.gamma > 0.0) {
            cplx rho2{beta, -z.gamma};
            cplx d2 = rho2 - s;
            acc += std::pow(cplx{x, 0.0}, d2) / (d2 * d2);
        }
    }
    return acc;
}

struct Lemma1Result {
    cplx value{0.0, 0.0};       // the assembled right-hand side
    double zero_tail_estimate = 0.0;
    double deriv_tail = 0.0;    // truncation tail of (L'/L)'(s)
    cplx prime_sum{0.0, 0.0};
    cplx second_deriv_term{0.0, 0.0};
    cplx zero_sum_term{0.0, 0.0};
    cplx pole_term{0.0, 0.0};
    cplx trivial_term{0.0, 0.0};
    std::vector<std::pair<unsigned, unsigned>> exclusions_applied;
};

inline Lemma1Result lemma1_rhs(const LFunctionSpec& spec, cplx s, double x, const ZeroSet& zeros,
                               const Constants& constants = {},
                               std::uint64_t deriv_cutoff = 1000000) {
    if (!(x > 1.0)) throw std::domain_error("lemma1_rhs: x must exceed 1");
    if (!(s.real() > 1.0))
        throw std::domain_error("lemma1_rhs: Re s must exceed 1 (oracle-computable region)");
    for (const auto& z : zeros.entries)
        if (std::abs(s - cplx{zeros.critical_assumed ? 0.5 : z.beta, z.gamma}) < 1e-12)
            throw std::domain_error("lemma1_rhs: s equals a supplied zero");
    const double logx = std::log(x);
    Lemma1Result out;

    const std::uint64_t xi = static_cast<std::uint64_t>(std::floor(x));
    if (spec.local_limit < xi)
        throw data_gap_error("lemma1_rhs: locals cover up to " + std::to_string(spec.local_limit));
    cplx ps = 0.0;
    for_each_prime_power(xi, [&](std::uint64_t p, unsigned k, std::uint64_t pk) {
        double n = static_cast<double>(pk);
        ps += lambda_coefficient(spec, p, k) * std::log(x / n) * std::pow(cplx{n, 0.0}, -s) / logx;
    });
    out.prime_sum = ps;

    auto dd = log_deriv_second(spec, s, std::min<std::uint64_t>(deriv_cutoff, spec.local_limit));
    out.second_deriv_term = dd.value / logx;
    out.deriv_tail = dd.tail_bound / logx;

    out.zero_sum_term = lemma1_zero_sum(zeros, s, x) / logx;

    double m = static_cast<double>(spec.pole_order);
    cplx one_minus_s = 1.0 - s;
    out.pole_term = -m * std::pow(cplx{x, 0.0}, one_minus_s) / (one_minus_s * one_minus_s * logx);

    auto tz = trivial_zero_sum(spec, s, x);
    out.trivial_term = tz.value / logx;
    out.exclusions_applied = tz.exclusions_applied;

    out.value = out.prime_sum + out.second_deriv_term + out.zero_sum_term + out.pole_term +
                out.trivial_term;

    double T = zeros.height_limit;
    if (T > 0.0) {
        double C = conductor(spec);
        out.zero_tail_estimate = constants.C_tail * std::pow(x, 1.0 - s.real()) *
                                 std::log(C * (T + 2.0)) / (T * logx);
    } else {
        // no zeros supplied: crude envelope from the m-interval density count
        double C = conductor(spec);
        out.zero_tail_estimate = constants.C_tail * std::pow(x, 1.0 - s.real()) * std::log(C + 2.0) / logx;
    }
    return out;
}

// Lemma 5 weighted prime sum: Re sum_{n<=x} Lambda(n) (1-(n/x)^2) n^{-sigma}.
inline double lemma5_sum(const LFunctionSpec& spec, double sigma, double x) {
    if (!(sigma >= 1.0 && sigma < 2.0))
        throw std::domain_error("lemma5_sum: sigma must lie in [1, 2)");
    if (x <= 2.0) return 0.0;
    const std::uint64_t xi = static_cast<std::uint64_t>(std::floor(x));
    if (spec.local_limit < xi)
        throw data_gap_error("lemma5_sum: locals cover up to " + std::to_string(spec.local_limit));
    double acc = 0.0;
    for_each_prime_power(xi, [&](std::uint64_t p, unsigned k, std::uint64_t pk) {
        double n = static_cast<double>(pk);
        double w = 1.0 - (n / x) * (n / x);
        acc += (lambda_coefficient(spec, p, k) * w * std::pow(n, -sigma)).real();
    });
    return acc;
}

// The proof's residual envelope for the Lemma 5 remainder, in log-x form so
// the unclamped astronomically-large x can still be reported:
//   C_resid (x^{-c0/(2 log C)} log^2 C + 1) + d^2 x^{-A} log C,  A = 3/2.
inline double lemma5_residual_bound_logx(const LFunctionSpec& spec, double log_x, double c0,
                                         const Constants& constants = {}) {
    if (!(c0 > 0.0)) throw std::domain_error("lemma5_residual_bound: c0 must be positive");
    double logC = std::log(conductor(spec));
    double zero_env = std::exp(-c0 / (2.0 * logC) * log_x) * logC * logC + 1.0;
    double arch = static_cast<double>(spec.degree) * spec.degree * std::exp(-1.5 * log_x) * logC;
    return constants.C_resid * zero_env + arch;
}

inline double lemma5_residual_bound(const LFunctionSpec& spec, double sigma, double x, double c0,
                                    const Constants& constants = {}) {
    (void)sigma;
    return lemma5_residual_bound_logx(spec, std::log(x), c0, constants);
}

struct Lemma5Verification {
    double oracle = 0.0;        // -L'/L(sigma) by direct series
    double assembled = 0.0;     // prime sum + zero terms + trivial residues + pole term
    double residual = 0.0;      // |oracle - assembled|
    double zero_tail_estimate = 0.0;
    double oracle_tail = 0.0;
    double prime_sum = 0.0;
    double zero_term = 0.0;
    double trivial_term = 0.0;
    double pole_term = 0.0;
    double contour_A = 1.5;
};

// Compare -L'/L(sigma) against the Lemma 5 decomposition with the supplied
// zeros.  Residues right of the shifted contour at Re s = -A are included;
// A starts at 3/2 and is nudged right (at most 1/10) away from trivial zeros.
inline Lemma5Verification verify_lemma5(const LFunctionSpec& spec, double sigma, double x,
                                        const ZeroSet& zeros, const Constants& constants = {}) {
    if (!(sigma > 1.0 && sigma < 2.0))
        throw std::domain_error("verify_lemma5: sigma must lie in (1, 2) for the oracle");
    Lemma5Verification out;

    auto ld = log_deriv_eval(spec, sigma, spec.local_limit);
    out.oracle = -ld.value.real();
    out.oracle_tail = ld.tail_bound;

    out.prime_sum = lemma5_sum(spec, sigma, x);

    // choose A in [1.5, 1.6] maximizing distance from included trivial-zero poles
    auto excluded = spec.trivial_zero_exclusions;
    auto is_excluded = [&](unsigned i, unsigned k) {
        for (auto [ei, ek] : excluded)
            if (ei == i && ek == k) return true;
        return false;
    };
    std::vector<double> pole_res;  // Re of s_t = -2(beta_i+k) - sigma
    for (unsigned i = 0; i < spec.shifts.size(); ++i)
        for (unsigned k = 0; k <= 2; ++k)
            if (!is_excluded(i, k))
                pole_res.push_back(-2.0 * (spec.shifts[i].value.real() + k) - sigma);
    double bestA = 1.5, bestDist = -1.0;
    for (int j = 0; j <= 10; ++j) {
        double A = 1.5 + 0.01 * j;
        double dist = 1e9;
        for (double re : pole_res) dist = std::min(dist, std::abs(re + A));
        if (dist > bestDist) {
            bestDist = dist;
            bestA = A;
        }
    }
    out.contour_A = bestA;

    // zero terms: 2 x^{rho-sigma} / ((rho-sigma)(rho-sigma+2)), with mirrors
    cplx zsum = 0.0;
    for (const auto& z : zeros.entries) {
        double beta = zeros.critical_assumed ? 0.5 : z.beta;
        for (int sign : {+1, -1}) {
            if (z.gamma == 0.0 && sign < 0) break;
            cplx rho{beta, sign * z.gamma};
            cplx d = rho - sigma;
            zsum += 2.0 * std::pow(cplx{x, 0.0}, d) / (d * (d + 2.0));
        }
    }
    out.zero_term = zsum.real();

    // trivial-zero residues with Re s_t > -A
    cplx tsum = 0.0;
    for (unsigned i = 0; i < spec.shifts.size(); ++i) {
        const cplx beta = spec.shifts[i].value;
        for (unsigned k = 0; k <= 4; ++k) {
            if (is_excluded(i, k)) continue;
            cplx st = -2.0 * (beta + static_cast<double>(k)) - sigma;
            if (st.real() <= -bestA) continue;
            tsum += 2.0 * std::pow(cplx{x, 0.0}, st) / (st * (st + 2.0));
        }
    }
    out.trivial_term = tsum.real();

    double m = static_cast<double>(spec.pole_order);
    out.pole_term = -m * 2.0 * std::pow(x, 1.0 - sigma) / ((1.0 - sigma) * (3.0 - sigma));

    out.assembled = out.prime_sum + out.zero_term + out.trivial_term + out.pole_term;
    out.residual = std::abs(out.oracle - out.assembled);

    double T = zeros.height_limit;
    double C = conductor(spec);
    if (T > 0.0)
        out.zero_tail_estimate =
            constants.C_tail * std::pow(x, 0.5 - sigma) * std::log(C * (T + 2.0)) / T;
    else
        out.zero_tail_estimate = constants.C_tail * std::pow(x, 1.0 - sigma) * std::log(C + 2.0);
    // shifted-contour remainder envelope
    out.zero_tail_estimate +=
        static_cast<double>(spec.degree) * spec.degree * std::pow(x, -bestA) * std::log(C + 2.0);
    return out;
}

struct LowerBoundConfig {
    double c0 = 0.1;   // zero-free-region constant (user input, never inferred)
    double C0 = 5.0;   // sigma_1 = 1 + exp(-C0 log C / log log C)
    double C1 = 1.0;   // derivative-push scale
    double C2 = 1.0;   // derivative-push exponent rate
    double x_max = 1e6;
};

struct LowerBoundReport {
    double lower_bound = 0.0;   // <= 0 means: no positive lower bound at these constants
    bool positive = false;
    double sigma1 = 0.0;
    double x_used = 0.0;
    double log_x_unclamped = 0.0;  // Lemma 5's x = C^{4 log log C / c0}, in logs
    bool clamped = false;
    bool heuristic = false;     // always equals clamped
    double log_l_sigma1_bound = 0.0;
    double prime_sum = 0.0;
    double residual_envelope = 0.0;
    double derivative_push = 0.0;
};

// Corollary 4 pipeline: bound |log L(sigma1)| through the Lemma 5 prime sum
// of A x conj(A) and Cauchy-Schwarz, then push from sigma1 to 1 with the
// derivative envelope C1 exp(C2 sqrt(log C)) (sigma1 - 1).
inline LowerBoundReport lower_bound_L1(const LFunctionSpec& a, const LFunctionSpec& rs,
                                       const LowerBoundConfig& cfg, const Constants& constants = {}) {
    if (!(cfg.c0 > 0.0)) throw std::domain_error("lower_bound_L1: c0 must be positive");
    LowerBoundReport out;
    double C = conductor(a);
    double logC = std::log(C), loglogC = std::max(std::log(logC), 0.05);
    out.sigma1 = 1.0 + std::exp(-cfg.C0 * logC / loglogC);
    out.log_x_unclamped = 4.0 * loglogC / cfg.c0 * logC;
    double x = std::exp(std::min(out.log_x_unclamped, std::log(cfg.x_max)));
    out.clamped = out.log_x_unclamped > std::log(cfg.x_max);
    out.heuristic = out.clamped;
    x = std::max(x, 3.0);
    out.x_used = x;

    const std::uint64_t xi = static_cast<std::uint64_t>(std::floor(x));
    if (rs.local_limit < xi)
        throw data_gap_error("lower_bound_L1: Rankin-Selberg locals cover up to " +
                             std::to_string(rs.local_limit) + ", need " + std::to_string(xi));
    double S = 0.0;
    for_each_prime_power(xi, [&](std::uint64_t p, unsigned k, std::uint64_t pk) {
        double n = static_cast<double>(pk);
        double dd = std::max(0.0, (lambda_coefficient(rs, p, k) / std::log(static_cast<double>(p))).real());
        S += dd / (k * std::pow(n, out.sigma1));
    });
    out.prime_sum = S;

    out.residual_envelope = lemma5_residual_bound_logx(a, std::log(x), cfg.c0, constants);
    double inner = S + std::log(1.0 / (out.sigma1 - 1.0));
    out.log_l_sigma1_bound =
        std::sqrt(std::max(inner, 0.0)) * std::sqrt(std::max(std::log(std::log(x)), 0.0)) +
        out.residual_envelope;

    out.derivative_push = cfg.C1 * std::exp(cfg.C2 * std::sqrt(logC)) * (out.sigma1 - 1.0);
    out.lower_bound = std::exp(-out.log_l_sigma1_bound) - out.derivative_push;
    out.positive = out.lower_bound > 0.0;
    return out;
}

}  // namespace lfb
