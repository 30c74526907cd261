// spec.hpp -- the L-function data model.
//
// An LFunctionSpec carries the functional-equation data (degree d, pole order
// m, |Q|, Gamma shifts beta_i) together with a table of local Euler factors
// alpha_j(p).  Everything downstream -- Lambda coefficients, Dirichlet
// coefficients, the conductor
//     C = (1 + |Q|) * prod_j (3 + |beta_j|),
// evaluators and bound assemblies -- is a pure function of this object.
//
// Lambda_A(p^k) = log p * sum_j alpha_j(p)^k, zero off prime powers.
// Dirichlet coefficients at prime powers are complete homogeneous symmetric
// polynomials of the roots, obtained from the power sums by the Newton
// recurrence k h_k = sum_{i<=k} p_i h_{k-i}, and extended multiplicatively.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lfb/errors.hpp"
#include "lfb/primes.hpp"
#include "lfb/special.hpp"

namespace lfb {

struct GammaShift {
    cplx value{0.0, 0.0};

    GammaShift() = default;
    explicit GammaShift(cplx v) : value(v) {
        if (!(v.real() > -0.5))
            throw validation_error("GammaShift: Re(beta) must exceed -1/2, got " +
                                   std::to_string(v.real()));
    }
};

struct LocalFactor {
    std::uint64_t prime = 0;
    std::vector<cplx> roots;  // alpha_j(p); shorter than the degree iff ramified
    bool ramified = false;
};

// How the Dirichlet-series evaluator may bound its truncation tail.
enum class SeriesHint {
    generic,            // |a_n| <= d_d(n) n^theta; needs sigma > 1 + theta
    mean_zero_periodic, // bounded partial sums (non-principal characters); sigma > 0
    zeta_em,            // a_n == 1: evaluate zeta directly by Euler-Maclaurin
};

struct LFunctionSpec {
    unsigned degree = 1;
    unsigned pole_order = 0;
    double q_mag = 0.0;  // |Q|; only log|Q| enters any bound
    std::vector<GammaShift> shifts;
    std::map<std::uint64_t, LocalFactor> locals;
    std::optional<cplx> root_number;  // metadata only
    double coeff_growth = 1.0;        // theta: |alpha_j(p)| <= p^theta

    // Largest x such that every prime <= x has a local factor.
    std::uint64_t local_limit = 0;

    SeriesHint series_hint = SeriesHint::generic;
    double partial_sum_bound = 0.0;  // for mean_zero_periodic: sup_t |sum_{n<=t} a_n|

    // (shift index i, k) pairs whose Gamma pole is *not* a trivial zero of L
    // (cancelled by a pole of L or a zero of another factor).  The flat sums
    // in the explicit formulas skip these.
    std::vector<std::pair<unsigned, unsigned>> trivial_zero_exclusions;

    std::string label;  // free-form, e.g. "zeta", "dirichlet q=5 index=1"

    void recompute_local_limit() {
        std::uint64_t lim = 0;
        std::uint64_t expect = 2;
        for (const auto& [p, lf] : locals) {
            // advance expect past composites
            while (expect < p && !is_prime_small(expect)) ++expect;
            if (p != expect) break;
            lim = p;
            ++expect;
        }
        if (lim == 0) {
            local_limit = 0;
            return;
        }
        // extend through the composite gap after the last covered prime
        std::uint64_t next = lim + 1;
        while (!is_prime_small(next)) ++next;
        local_limit = next - 1;
    }

private:
    static bool is_prime_small(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
};

// C = (1 + |Q|) prod_j (3 + |beta_j|)
inline double conductor(const LFunctionSpec& spec) {
    double c = 1.0 + spec.q_mag;
    for (const auto& b : spec.shifts) c *= 3.0 + std::abs(b.value);
    return c;
}

inline const LocalFactor& local_factor(const LFunctionSpec& spec, std::uint64_t p) {
    auto it = spec.locals.find(p);
    if (it == spec.locals.end())
        throw data_gap_error("no local factor stored for p = " + std::to_string(p) +
                             " (covered up to " + std::to_string(spec.local_limit) + ")");
    return it->second;
}

// Lambda_A(p^k) = log p * sum_j alpha_j(p)^k.  Ramified p sum over the stored
// shorter list; an empty list means the local factor is 1.
inline cplx lambda_coefficient(const LFunctionSpec& spec, std::uint64_t p, unsigned k) {
    const auto& lf = local_factor(spec, p);
    cplx s = 0.0;
    for (const auto& a : lf.roots) s += std::pow(a, static_cast<double>(k));
    return std::log(static_cast<double>(p)) * s;
}

// Power sum c(p^k) = Lambda_A(p^k)/log p.
inline cplx power_sum(const LocalFactor& lf, unsigned k) {
    cplx s = 0.0;
    for (const auto& a : lf.roots) s += std::pow(a, static_cast<double>(k));
    return s;
}

struct CoefficientTable {
    std::uint64_t limit = 0;
    std::vector<cplx> dirichlet;  // a_n, index n
    std::vector<cplx> lambda;     // Lambda_A(n), index n; zero off prime powers

    cplx a(std::uint64_t n) const { return dirichlet[n]; }
    cplx L(std::uint64_t n) const { return lambda[n]; }
};

// a_{p^k} from the power sums via Newton's recurrence, a_n multiplicatively.
inline CoefficientTable dirichlet_coefficients(const LFunctionSpec& spec, std::uint64_t limit) {
    if (limit < 1) throw std::range_error("dirichlet_coefficients: limit must be >= 1");
    if (spec.local_limit < limit && limit >= 2)
        throw data_gap_error("locals cover primes up to " + std::to_string(spec.local_limit) +
                             ", requested " + std::to_string(limit));
    CoefficientTable t;
    t.limit = limit;
    t.dirichlet.assign(limit + 1, cplx{0.0, 0.0});
    t.lambda.assign(limit + 1, cplx{0.0, 0.0});
    t.dirichlet[1] = 1.0;

    auto spf = smallest_prime_factors(static_cast<std::uint32_t>(limit));

    // fill prime powers
    for_each_prime(limit, [&](std::uint64_t p) {
        const auto& lf = local_factor(spec, p);
        unsigned kmax = 0;
        std::uint64_t pk = 1;
        while (pk <= limit / p) {
            pk *= p;
            ++kmax;
        }
        std::vector<cplx> ps(kmax + 1), h(kmax + 1);
        h[0] = 1.0;
        double lp = std::log(static_cast<double>(p));
        for (unsigned k = 1; k <= kmax; ++k) {
            ps[k] = power_sum(lf, k);
            cplx acc = 0.0;
            for (unsigned i = 1; i <= k; ++i) acc += ps[i] * h[k - i];
            h[k] = acc / static_cast<double>(k);
        }
        pk = 1;
        for (unsigned k = 1; k <= kmax; ++k) {
            pk *= p;
            t.dirichlet[pk] = h[k];
            t.lambda[pk] = lp * ps[k];
        }
    });

    // multiplicative extension via smallest prime factor
    for (std::uint64_t n = 2; n <= limit; ++n) {
        std::uint64_t p = spf[n];
        std::uint64_t pk = p, m = n / p;
        while (m % p == 0) {
            pk *= p;
            m /= p;
        }
        if (m > 1) t.dirichlet[n] = t.dirichlet[pk] * t.dirichlet[m];
    }
    return t;
}

// Structural diagnostics; empty result means the spec is valid.
inline std::vector<std::string> validate(const LFunctionSpec& spec, bool strict = false) {
    std::vector<std::string> out;
    if (spec.degree == 0) out.push_back("degree must be positive");
    if (spec.shifts.size() != spec.degree)
        out.push_back("shifts: expected " + std::to_string(spec.degree) + " entries, have " +
                      std::to_string(spec.shifts.size()));
    for (std::size_t i = 0; i < spec.shifts.size(); ++i)
        if (!(spec.shifts[i].value.real() > -0.5))
            out.push_back("shift " + std::to_string(i) + ": Re(beta) = " +
                          std::to_string(spec.shifts[i].value.real()) + " <= -1/2");
    if (!(spec.q_mag >= 0.0)) out.push_back("q_mag must be nonnegative");
    if (!(spec.coeff_growth >= 0.0 && spec.coeff_growth <= 1.0))
        out.push_back("coeff_growth must lie in [0, 1]");
    if (strict && spec.pole_order > spec.degree)
        out.push_back("pole_order " + std::to_string(spec.pole_order) + " exceeds degree (strict mode)");
    if (spec.root_number && std::abs(std::abs(*spec.root_number) - 1.0) > 1e-9)
        out.push_back("root_number must have modulus 1");
    for (const auto& [p, lf] : spec.locals) {
        if (lf.prime != p) out.push_back("local factor key/prime mismatch at p = " + std::to_string(p));
        if (!lf.ramified && lf.roots.size() != spec.degree)
            out.push_back("p = " + std::to_string(p) + ": unramified factor has " +
                          std::to_string(lf.roots.size()) + " roots, expected " +
                          std::to_string(spec.degree));
        if (lf.ramified && lf.roots.size() > spec.degree)
            out.push_back("p = " + std::to_string(p) + ": ramified factor has more roots than the degree");
        double pd = static_cast<double>(p);
        double cap = std::pow(pd, spec.coeff_growth);
        for (const auto& a : lf.roots) {
            double m = std::abs(a);
            if (m > pd * (1.0 + 1e-12))
                out.push_back("p = " + std::to_string(p) + ": |alpha| = " + std::to_string(m) +
                              " exceeds the trivial bound p");
            else if (m > cap * (1.0 + 1e-9))
                out.push_back("p = " + std::to_string(p) + ": |alpha| = " + std::to_string(m) +
                              " exceeds p^theta with theta = " + std::to_string(spec.coeff_growth));
        }
    }
    return out;
}

inline void require_valid(const LFunctionSpec& spec, bool strict = false) {
    auto diags = validate(spec, strict);
    if (!diags.empty()) throw validation_error("invalid spec: " + diags.front());
}

}  // namespace lfb
