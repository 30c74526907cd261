// dirichlet_oracle.hpp -- direct evaluation of L(sigma, chi) for sigma > 1
// through the periodic decomposition
//     L(sigma, chi) = q^{-sigma} sum_{a=1..q, (a,q)=1} chi(a) zeta(sigma, a/q),
// with the Hurwitz values tabulated once per (q, sigma) and shared by every
// character mod q.  This is the corpus-sweep oracle: independent of both the
// Euler-product evaluator and the bound assemblies it checks.
#pragma once

#include <cmath>
#include <numeric>
#include <vector>

#include "lfb/dirichlet.hpp"
#include "lfb/special.hpp"

namespace lfb {

struct HurwitzTable {
    std::uint64_t q = 0;
    double sigma = 0.0;
    std::vector<double> values;  // values[a] = zeta(sigma, a/q), a = 1..q
};

inline HurwitzTable make_hurwitz_table(std::uint64_t q, double sigma) {
    HurwitzTable t;
    t.q = q;
    t.sigma = sigma;
    t.values.assign(q + 1, 0.0);
    for (std::uint64_t a = 1; a <= q; ++a)
        t.values[a] = hurwitz_zeta_em(sigma, static_cast<double>(a) / static_cast<double>(q)).value;
    return t;
}

inline cplx dirichlet_l_from_table(const DirichletGroup& group, std::uint64_t index,
                                   const HurwitzTable& table) {
    const std::uint64_t q = group.modulus();
    cplx s = 0.0;
    for (std::uint64_t a = 1; a < q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        s += group.chi(index, a) * table.values[a];
    }
    return std::pow(static_cast<double>(q), -table.sigma) * s;
}

inline cplx dirichlet_l_oracle(std::uint64_t q, std::uint64_t index, double sigma) {
    DirichletGroup group(q);
    return dirichlet_l_from_table(group, index, make_hurwitz_table(q, sigma));
}

}  // namespace lfb
