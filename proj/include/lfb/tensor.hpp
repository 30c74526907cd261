// tensor.hpp -- Rankin-Selberg convolutions, conjugate duals, GL(2)
// symmetric powers, and the coefficient identities/inequalities they satisfy.
//
// At a prime unramified for both factors the Rankin-Selberg local roots are
// all pairwise products alpha_i(p) mu_j(p); ramified primes fall into the
// exceptional set and default to the trivial factor (override supported).
// For GL(2) data (alpha1, alpha2) the l-th symmetric power has roots
// alpha1^j alpha2^{l-j}, 0 <= j <= l.
//
// Coefficient checks use power-sum semantics c(p^k) = Lambda(p^k)/log p
// throughout: with a = c_A, b = c_{sym^l A}, dd = |b|^2 (= c_{D}, D the
// Rankin-Selberg square), the verified chains are
//   (i)  |a|^l  <= max(2^{l+1} |b|, 4^l)
//   (ii) |a|^{2l} <= 4^{l+1} (dd + 4^l)
// with all constants explicit.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lfb/spec.hpp"

namespace lfb {

inline LFunctionSpec conjugate_spec(const LFunctionSpec& a) {
    LFunctionSpec s = a;
    for (auto& b : s.shifts) b.value = std::conj(b.value);
    for (auto& [p, lf] : s.locals)
        for (auto& r : lf.roots) r = std::conj(r);
    if (s.root_number) s.root_number = std::conj(*s.root_number);
    if (!s.label.empty()) s.label = "conj(" + s.label + ")";
    return s;
}

// Rankin-Selberg convolution at the level of local roots.  The pole order is
// caller-supplied (1 for A x conj(A) with A cuspidal); log-conductor is
// log C_A + log C_M times `conductor_scale`, realized through q_mag with all
// shifts zero.  `ramified_overrides` may supply true local factors for
// exceptional primes.
inline LFunctionSpec rankin_selberg_spec(const LFunctionSpec& a, const LFunctionSpec& m,
                                         unsigned pole_order, double conductor_scale = 1.0,
                                         const std::vector<LocalFactor>& ramified_overrides = {}) {
    std::uint64_t limit = std::min(a.local_limit, m.local_limit);
    if (limit < 2)
        throw data_gap_error("rankin_selberg_spec: factors have no common prime range");
    LFunctionSpec s;
    s.degree = a.degree * m.degree;
    s.pole_order = pole_order;
    double log_cond = conductor_scale * (std::log(conductor(a)) + std::log(conductor(m)));
    s.shifts.assign(s.degree, GammaShift{cplx{0.0, 0.0}});
    double denom = std::pow(3.0, static_cast<double>(s.degree));
    s.q_mag = std::max(0.0, std::exp(log_cond) / denom - 1.0);
    s.coeff_growth = std::min(1.0, a.coeff_growth + m.coeff_growth);
    s.label = "rs(" + (a.label.empty() ? "?" : a.label) + " x " + (m.label.empty() ? "?" : m.label) + ")";

    std::map<std::uint64_t, LocalFactor> overrides;
    for (const auto& lf : ramified_overrides) overrides[lf.prime] = lf;

    for (const auto& [p, lfa] : a.locals) {
        if (p > limit) break;
        auto itm = m.locals.find(p);
        if (itm == m.locals.end())
            throw data_gap_error("rankin_selberg_spec: p = " + std::to_string(p) +
                                 " present in one factor only");
        const auto& lfm = itm->second;
        if (lfa.ramified || lfm.ramified) {
            auto ov = overrides.find(p);
            if (ov != overrides.end()) {
                s.locals[p] = ov->second;
                s.locals[p].ramified = true;
            } else {
                s.locals[p] = LocalFactor{p, {}, true};
            }
            continue;
        }
        LocalFactor lf{p, {}, false};
        lf.roots.reserve(lfa.roots.size() * lfm.roots.size());
        for (const auto& x : lfa.roots)
            for (const auto& y : lfm.roots) lf.roots.push_back(x * y);
        s.locals[p] = lf;
    }
    s.recompute_local_limit();
    return s;
}

// sym^l of GL(2) data: degree l+1, roots alpha1^j alpha2^{l-j}.
inline LFunctionSpec symmetric_power_spec(const LFunctionSpec& a, unsigned l) {
    if (a.degree != 2) throw std::domain_error("symmetric_power_spec: input must have degree 2");
    if (l < 1) throw std::domain_error("symmetric_power_spec: l must be >= 1");
    LFunctionSpec s;
    s.degree = l + 1;
    s.pole_order = 0;
    s.q_mag = a.q_mag;
    s.shifts.assign(s.degree, GammaShift{cplx{0.0, 0.0}});
    s.coeff_growth = std::min(1.0, a.coeff_growth * static_cast<double>(l));
    s.label = "sym^" + std::to_string(l) + "(" + (a.label.empty() ? "?" : a.label) + ")";
    for (const auto& [p, lf] : a.locals) {
        if (lf.ramified) {
            s.locals[p] = LocalFactor{p, {}, true};
            continue;
        }
        cplx a1 = lf.roots[0], a2 = lf.roots[1];
        LocalFactor out{p, {}, false};
        for (unsigned j = 0; j <= l; ++j)
            out.roots.push_back(std::pow(a1, static_cast<double>(j)) *
                                std::pow(a2, static_cast<double>(l - j)));
        s.locals[p] = out;
    }
    s.recompute_local_limit();
    return s;
}

struct RsIdentityReport {
    double lhs = 0.0;  // |Lambda_A(p^k)/log p|^2
    double rhs = 0.0;  // Lambda_{A x conj A}(p^k)/log p
    bool ok = false;
    bool equality_mode = true;  // false at ramified p (inequality only)
};

// |Lambda_A(p^k)/log p|^2 vs Lambda_{AxA~}(p^k)/log p.  With full pairwise
// local factors the two sides agree exactly at unramified p.
inline RsIdentityReport check_rs_identity(const LFunctionSpec& a, const LFunctionSpec& rs,
                                          std::uint64_t p, unsigned k) {
    RsIdentityReport r;
    const auto& lfa = local_factor(a, p);
    const auto& lfr = local_factor(rs, p);
    cplx ca = power_sum(lfa, k);
    r.lhs = std::norm(ca);
    r.rhs = power_sum(lfr, k).real();
    r.equality_mode = !lfa.ramified && !lfr.ramified;
    r.ok = r.lhs <= r.rhs + 1e-9 * std::abs(r.rhs) + 1e-12;
    return r;
}

struct CoeffChainReport {
    unsigned l = 0, k = 0;
    double M = 1.0;        // |alpha1| after normalization |alpha1| >= 1 >= |alpha2|
    double a_abs = 0.0;    // |c_A(p^k)|
    double b_abs = 0.0;    // |c_{sym^l}(p^k)|
    double dd = 0.0;       // |b|^2  (power sum of sym^l x conj sym^l)
    double chain1_lhs = 0.0, chain1_rhs = 0.0;  // |a|^l vs max(2^{l+1}|b|, 4^l)
    double chain2_lhs = 0.0, chain2_rhs = 0.0;  // |a|^{2l} vs 4^{l+1}(dd + 4^l)
    double m_lower = 0.0;  // M^{kl} (1 - 1/M^k), the proof's lower bound for |b|
    bool ok1 = false, ok2 = false;
};

// Verify the Hoelder chain at one unit-determinant root pair.
inline CoeffChainReport check_coeff_chain(cplx alpha1, cplx alpha2, unsigned l, unsigned k) {
    double m1 = std::abs(alpha1), m2 = std::abs(alpha2);
    if (std::abs(m1 * m2 - 1.0) > 1e-6)
        throw std::domain_error("check_coeff_chain: |alpha1 alpha2| must be 1");
    if (m1 < m2) std::swap(alpha1, alpha2);
    CoeffChainReport r;
    r.l = l;
    r.k = k;
    r.M = std::abs(alpha1);
    double kd = static_cast<double>(k);
    cplx a1k = std::pow(alpha1, kd), a2k = std::pow(alpha2, kd);
    r.a_abs = std::abs(a1k + a2k);
    cplx b = 0.0;
    for (unsigned j = 0; j <= l; ++j)
        b += std::pow(alpha1, kd * static_cast<double>(l - j)) * std::pow(alpha2, kd * static_cast<double>(j));
    r.b_abs = std::abs(b);
    r.dd = std::norm(b);
    double ld = static_cast<double>(l);
    r.chain1_lhs = std::pow(r.a_abs, ld);
    r.chain1_rhs = std::max(std::pow(2.0, ld + 1.0) * r.b_abs, std::pow(4.0, ld));
    r.chain2_lhs = std::pow(r.a_abs, 2.0 * ld);
    r.chain2_rhs = std::pow(4.0, ld + 1.0) * (r.dd + std::pow(4.0, ld));
    double Mk = std::pow(r.M, kd);
    r.m_lower = std::pow(r.M, kd * ld) * (1.0 - 1.0 / Mk);
    double slack1 = 1e-9 * (1.0 + r.chain1_rhs), slack2 = 1e-9 * (1.0 + r.chain2_rhs);
    r.ok1 = r.chain1_lhs <= r.chain1_rhs + slack1;
    r.ok2 = r.chain2_lhs <= r.chain2_rhs + slack2;
    return r;
}

inline CoeffChainReport check_coeff_chain(const LFunctionSpec& a, unsigned l, std::uint64_t p,
                                          unsigned k) {
    if (a.degree != 2) throw std::domain_error("check_coeff_chain: spec must have degree 2");
    const auto& lf = local_factor(a, p);
    if (lf.ramified) throw std::domain_error("check_coeff_chain: p is ramified");
    return check_coeff_chain(lf.roots[0], lf.roots[1], l, k);
}

struct MaassChainReport {
    double s_abs = 0.0;   // |c_{sym^2}(p^k)|
    double a_abs = 0.0;   // |c_A(p^k)|
    double b_abs = 0.0;   // |c_{sym^4}(p^k)|
    double d_val = 0.0;   // |b|^2
    // |s|^4 <= K1 |a|^8 + K2 and |a|^8 <= 4^5 (d + 4^4) combine into
    // |s|^4 <= K (d + K'):
    double K1 = 0.0, K2 = 0.0, K = 0.0, Kprime = 0.0;
    bool ok_s_vs_a = false, ok_a_vs_b = false, ok_combined = false;
};

// The chain |s|^4 << |a|^8 << |b|^2 = d with the explicit constants that the
// M-branch argument yields: |s| <= max((16/3)|a|^2, 12).
inline MaassChainReport maass_chain_check(cplx alpha1, cplx alpha2, unsigned k) {
    double m1 = std::abs(alpha1), m2 = std::abs(alpha2);
    if (std::abs(m1 * m2 - 1.0) > 1e-6)
        throw std::domain_error("maass_chain_check: |alpha1 alpha2| must be 1");
    if (m1 < m2) std::swap(alpha1, alpha2);
    MaassChainReport r;
    double kd = static_cast<double>(k);
    auto sym_power_sum = [&](unsigned l) {
        cplx s = 0.0;
        for (unsigned j = 0; j <= l; ++j)
            s += std::pow(alpha1, kd * static_cast<double>(l - j)) *
                 std::pow(alpha2, kd * static_cast<double>(j));
        return s;
    };
    r.a_abs = std::abs(std::pow(alpha1, kd) + std::pow(alpha2, kd));
    r.s_abs = std::abs(sym_power_sum(2));
    cplx b4 = sym_power_sum(4);
    r.b_abs = std::abs(b4);
    r.d_val = std::norm(b4);
    r.K1 = std::pow(16.0 / 3.0, 4.0);
    r.K2 = std::pow(12.0, 4.0);
    double s4 = std::pow(r.s_abs, 4.0), a8 = std::pow(r.a_abs, 8.0);
    r.ok_s_vs_a = s4 <= r.K1 * a8 + r.K2 + 1e-9 * (1.0 + r.K1 * a8 + r.K2);
    double rhs_ab = std::pow(4.0, 5.0) * (r.d_val + std::pow(4.0, 4.0));
    r.ok_a_vs_b = a8 <= rhs_ab + 1e-9 * (1.0 + rhs_ab);
    r.K = r.K1 * std::pow(4.0, 5.0);
    r.Kprime = std::pow(4.0, 4.0) + r.K2 / r.K;
    double rhs_comb = r.K * (r.d_val + r.Kprime);
    r.ok_combined = s4 <= rhs_comb + 1e-9 * (1.0 + rhs_comb);
    return r;
}

inline MaassChainReport maass_chain_check(const LFunctionSpec& a, std::uint64_t p, unsigned k) {
    if (a.degree != 2) throw std::domain_error("maass_chain_check: spec must have degree 2");
    const auto& lf = local_factor(a, p);
    if (lf.ramified) throw std::domain_error("maass_chain_check: p is ramified");
    return maass_chain_check(lf.roots[0], lf.roots[1], k);
}

}  // namespace lfb
