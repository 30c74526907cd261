// families.hpp -- concrete spec constructors: Riemann zeta, Dirichlet
// L-functions, the normalized Ramanujan Delta form, and seeded synthetic
// specs for property sweeps.
//
// Normalizations:
//   zeta      : d=1, m=1, |Q| = 1/pi, beta = 0, alpha(p) = 1.
//   Dirichlet : d=1, m=0, |Q| = q/pi, beta = 0 or 1/2 by parity,
//               alpha(p) = chi(p); p | q stored ramified with empty roots.
//   Delta     : d=2, m=0, |Q| = 1/pi^2, beta = (11/4, 13/4); roots at p solve
//               z^2 - (tau(p)/p^{11/2}) z + 1 = 0, tau from the q-expansion
//               Delta = q prod_{n>=1} (1-q^n)^{24}.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lfb/dirichlet.hpp"
#include "lfb/primes.hpp"
#include "lfb/spec.hpp"

namespace lfb {

inline LFunctionSpec zeta_spec(std::uint64_t limit) {
    LFunctionSpec s;
    s.degree = 1;
    s.pole_order = 1;
    s.q_mag = 1.0 / std::numbers::pi;
    s.shifts = {GammaShift{cplx{0.0, 0.0}}};
    s.coeff_growth = 0.0;
    s.series_hint = SeriesHint::zeta_em;
    // s = 0 is a pole of the completed function, not a zero of zeta, so the
    // (i=0, k=0) Gamma pole is excluded from the flat trivial-zero sums.
    s.trivial_zero_exclusions = {{0u, 0u}};
    s.label = "zeta";
    for_each_prime(limit, [&](std::uint64_t p) {
        s.locals[p] = LocalFactor{p, {cplx{1.0, 0.0}}, false};
    });
    s.recompute_local_limit();
    return s;
}

inline LFunctionSpec dirichlet_spec(std::uint64_t q, std::uint64_t index, std::uint64_t limit,
                                    bool strict = true) {
    if (q < 3) throw std::domain_error("dirichlet_spec: q must be >= 3");
    DirichletGroup group(q);
    if (index >= group.size())
        throw std::domain_error("dirichlet_spec: index " + std::to_string(index) +
                                " out of range for q = " + std::to_string(q) + " (group size " +
                                std::to_string(group.size()) + ")");
    if (strict && group.is_principal(index))
        throw std::domain_error("dirichlet_spec: principal character rejected (not primitive)");
    LFunctionSpec s;
    s.degree = 1;
    s.pole_order = 0;
    s.q_mag = static_cast<double>(q) / std::numbers::pi;
    bool even = group.is_even(index);
    s.shifts = {GammaShift{cplx{even ? 0.0 : 0.5, 0.0}}};
    s.coeff_growth = 0.0;
    s.series_hint = SeriesHint::mean_zero_periodic;
    s.partial_sum_bound = static_cast<double>(q);
    s.label = "dirichlet q=" + std::to_string(q) + " index=" + std::to_string(index);
    for_each_prime(limit, [&](std::uint64_t p) {
        if (q % p == 0)
            s.locals[p] = LocalFactor{p, {}, true};
        else
            s.locals[p] = LocalFactor{p, {group.chi(index, p)}, false};
    });
    s.recompute_local_limit();
    return s;
}

// tau(n) for 1 <= n <= limit from Delta = q prod (1-q^n)^24: 24 in-place
// multiplications by the pentagonal-number series of prod (1-q^n).
inline std::vector<double> ramanujan_tau_table(std::uint64_t limit) {
    if (limit < 1) throw std::range_error("ramanujan_tau_table: limit must be >= 1");
    if (limit > 1000000) throw std::range_error("ramanujan_tau_table: limit too large (q-expansion capped at 1e6)");
    const std::size_t n_coeffs = static_cast<std::size_t>(limit);  // series degree limit-1
    std::vector<double> c(n_coeffs, 0.0);
    c[0] = 1.0;
    std::vector<std::pair<std::size_t, double>> pent;  // (exponent, sign)
    for (std::size_t k = 1;; ++k) {
        std::size_t g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
        double sg = (k % 2 == 1) ? -1.0 : 1.0;
        if (g1 >= n_coeffs && g2 >= n_coeffs) break;
        if (g1 < n_coeffs) pent.emplace_back(g1, sg);
        if (g2 < n_coeffs) pent.emplace_back(g2, sg);
    }
    for (int pass = 0; pass < 24; ++pass) {
        for (std::size_t n = n_coeffs; n-- > 1;) {
            double acc = c[n];
            for (const auto& [g, sg] : pent) {
                if (g > n) break;
                acc += sg * c[n - g];
            }
            c[n] = acc;
        }
    }
    std::vector<double> tau(limit + 1, 0.0);
    for (std::uint64_t n = 1; n <= limit; ++n) tau[n] = c[n - 1];
    return tau;
}

// tau table with a sidecar text cache (lines "n tau(n)").
inline std::vector<double> ramanujan_tau_table_cached(std::uint64_t limit, const std::string& cache_path) {
    {
        std::ifstream in(cache_path);
        if (in) {
            std::vector<double> tau(limit + 1, 0.0);
            std::uint64_t n;
            double v;
            std::uint64_t seen = 0;
            while (in >> n >> v)
                if (n <= limit) {
                    tau[n] = v;
                    seen = std::max(seen, n);
                }
            if (seen >= limit) return tau;
        }
    }
    auto tau = ramanujan_tau_table(limit);
    std::ofstream out(cache_path);
    if (out) {
        out.precision(17);
        for (std::uint64_t n = 1; n <= limit; ++n) out << n << " " << tau[n] << "\n";
    }
    return tau;
}

inline LFunctionSpec ramanujan_delta_spec(std::uint64_t limit, const std::string& tau_cache = "") {
    auto tau = tau_cache.empty() ? ramanujan_tau_table(limit) : ramanujan_tau_table_cached(limit, tau_cache);
    LFunctionSpec s;
    s.degree = 2;
    s.pole_order = 0;
    s.q_mag = 1.0 / (std::numbers::pi * std::numbers::pi);
    s.shifts = {GammaShift{cplx{2.75, 0.0}}, GammaShift{cplx{3.25, 0.0}}};
    s.coeff_growth = 0.0;
    s.label = "delta";
    for_each_prime(limit, [&](std::uint64_t p) {
        double ap = tau[p] / std::pow(static_cast<double>(p), 5.5);
        cplx a{ap, 0.0};
        cplx disc = std::sqrt(a * a - 4.0);
        cplx r1 = (a + disc) / 2.0, r2 = (a - disc) / 2.0;
        s.locals[p] = LocalFactor{p, {r1, r2}, false};
    });
    s.recompute_local_limit();
    return s;
}

namespace synth_detail {
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
}  // namespace synth_detail

// Deterministic pseudo-random spec: same (d, seed, theta, limit) always
// produces the identical object (and identical JSON).
inline LFunctionSpec synthetic_spec(unsigned d, std::uint64_t seed, double theta, std::uint64_t limit) {
    if (d < 1) throw std::domain_error("synthetic_spec: degree must be >= 1");
    if (!(theta >= 0.0 && theta <= 1.0))
        throw std::domain_error("synthetic_spec: theta must lie in [0, 1]");
    std::seed_seq sq{seed, static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(theta * (1u << 30)),
                     limit};
    std::mt19937_64 rng(sq);
    using synth_detail::uniform01;
    LFunctionSpec s;
    s.degree = d;
    s.pole_order = 0;
    s.q_mag = 0.5 + 19.5 * uniform01(rng);  // documented range [0.5, 20]
    for (unsigned i = 0; i < d; ++i) {
        double re = -0.4 + 2.4 * uniform01(rng);  // (-0.4, 2]
        double im = -3.0 + 6.0 * uniform01(rng);  // [-3, 3]
        s.shifts.push_back(GammaShift{cplx{re, im}});
    }
    s.coeff_growth = theta;
    std::ostringstream lbl;
    lbl << "synthetic d=" << d << " seed=" << seed << " theta=" << theta;
    s.label = lbl.str();
    for_each_prime(limit, [&](std::uint64_t p) {
        LocalFactor lf{p, {}, false};
        double cap = std::pow(static_cast<double>(p), theta);
        for (unsigned j = 0; j < d; ++j) {
            double r = cap * uniform01(rng);
            double phi = 2.0 * std::numbers::pi * uniform01(rng);
            lf.roots.push_back(cplx{r * std::cos(phi), r * std::sin(phi)});
        }
        s.locals[p] = lf;
    });
    s.recompute_local_limit();
    return s;
}

}  // namespace lfb
