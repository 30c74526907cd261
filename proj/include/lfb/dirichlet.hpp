// dirichlet.hpp -- Dirichlet characters mod q via the group structure of
// (Z/q)*: an odd prime power contributes a cyclic factor generated by a
// primitive root; 2^a (a >= 3) contributes <-1> x <5>; components are glued
// through the CRT.  A character is labelled by its exponent tuple on the
// fixed generators, packed into a single index in mixed radix (stable across
// runs, documented in the README).
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "lfb/errors.hpp"
#include "lfb/special.hpp"

namespace lfb {

namespace dirichlet_detail {

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

// smallest primitive root mod p^a (p odd prime)
inline std::uint64_t primitive_root(std::uint64_t p, unsigned a) {
    std::uint64_t phi_p = p - 1;
    auto fs = prime_factors(phi_p);
    std::uint64_t g = 2;
    for (;; ++g) {
        bool ok = true;
        for (auto f : fs)
            if (pow_mod(g, phi_p / f, p) == 1) {
                ok = false;
                break;
            }
        if (ok) break;
    }
    if (a == 1) return g;
    // g generates mod p; it generates mod p^a unless g^{p-1} = 1 mod p^2
    if (pow_mod(g, p - 1, p * p) == 1) g += p;
    return g;
}

}  // namespace dirichlet_detail

// One cyclic slot of the character group: chi(gen) = e(exponent / order).
struct CharacterComponent {
    std::uint64_t modulus = 1;  // p^a
    std::uint64_t order = 1;    // order of the generator
    std::vector<std::uint32_t> dlog;  // dlog[n % p^a] for n coprime, else undefined
};

class DirichletGroup {
public:
    explicit DirichletGroup(std::uint64_t q) : q_(q) {
        if (q < 1) throw std::domain_error("DirichletGroup: q must be positive");
        std::uint64_t n = q;
        for (std::uint64_t p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                unsigned a = 0;
                std::uint64_t pa = 1;
                while (n % p == 0) {
                    n /= p;
                    ++a;
                    pa *= p;
                }
                add_component(p, a, pa);
            }
        }
        if (n > 1) add_component(n, 1);
        num_chars_ = 1;
        for (const auto& c : comps_) num_chars_ *= c.order;
    }

    std::uint64_t modulus() const { return q_; }
    std::uint64_t size() const { return num_chars_; }  // = phi(q)

    // exponent tuple of character `index`, mixed radix over component orders
    std::vector<std::uint64_t> exponents(std::uint64_t index) const {
        if (index >= num_chars_) throw std::domain_error("character index out of range");
        std::vector<std::uint64_t> e(comps_.size());
        for (std::size_t i = comps_.size(); i-- > 0;) {
            e[i] = index % comps_[i].order;
            index /= comps_[i].order;
        }
        return e;
    }

    cplx chi(std::uint64_t index, std::uint64_t n) const {
        auto e = exponents(index);
        n %= q_;
        if (q_ > 1 && std::gcd(n, q_) != 1) return {0.0, 0.0};
        double angle = 0.0;  // in turns
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            const auto& c = comps_[i];
            std::uint64_t r = n % c.modulus;
            angle += static_cast<double>(e[i]) * static_cast<double>(c.dlog[r]) /
                     static_cast<double>(c.order);
        }
        angle -= std::floor(angle);
        double th = 2.0 * std::numbers::pi * angle;
        return {std::cos(th), std::sin(th)};
    }

    bool is_principal(std::uint64_t index) const { return index == 0; }

    bool is_even(std::uint64_t index) const {
        cplx v = chi(index, q_ - 1);  // chi(-1)
        return v.real() > 0.0;
    }

    // chi is primitive iff every prime-power component is primitive:
    //   odd p, a = 1 : e != 0
    //   odd p, a > 1 : e not divisible by p
    //   2^1          : never (the mod-2 slot only carries the trivial character)
    //   2^2          : chi(-1) = -1, i.e. e = 1
    //   2^a, a >= 3  : the <5>-exponent is odd
    bool is_primitive(std::uint64_t index) const {
        if (q_ == 1) return true;
        auto e = exponents(index);
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            const auto& c = comps_[i];
            if (c.modulus % 2 == 0) {
                if (c.modulus == 2) return false;
                if (c.modulus == 4) {
                    if (e[i] != 1) return false;
                } else if (comp_is_five_slot_[i]) {
                    if (e[i] % 2 == 0) return false;
                }
                // the <-1> slot of 2^a (a>=3) is unconstrained
            } else {
                std::uint64_t p = comp_prime_[i];
                if (c.modulus == p) {
                    if (e[i] == 0) return false;
                } else if (e[i] % p == 0) {
                    return false;
                }
            }
        }
        return true;
    }

    std::vector<std::uint64_t> primitive_indices() const {
        std::vector<std::uint64_t> out;
        for (std::uint64_t i = 0; i < num_chars_; ++i)
            if (is_primitive(i)) out.push_back(i);
        return out;
    }

private:
    void add_component(std::uint64_t p, unsigned a, std::uint64_t pa = 0) {
        if (pa == 0) pa = p;
        if (p == 2) {
            if (a == 1) return;  // trivial slot, order 1: omit
            if (a == 2) {
                CharacterComponent c;
                c.modulus = 4;
                c.order = 2;
                c.dlog.assign(4, 0);
                c.dlog[1] = 0;
                c.dlog[3] = 1;
                comps_.push_back(std::move(c));
                comp_prime_.push_back(2);
                comp_is_five_slot_.push_back(false);
                return;
            }
            // 2^a = <-1> x <5>
            CharacterComponent sign, five;
            sign.modulus = five.modulus = pa;
            sign.order = 2;
            five.order = pa / 4;
            sign.dlog.assign(pa, 0);
            five.dlog.assign(pa, 0);
            std::uint64_t v = 1;
            for (std::uint64_t j = 0; j < five.order; ++j) {
                five.dlog[v] = static_cast<std::uint32_t>(j);
                sign.dlog[v] = 0;
                std::uint64_t w = pa - v;  // w = -v
                five.dlog[w] = static_cast<std::uint32_t>(j);
                sign.dlog[w] = 1;
                v = v * 5 % pa;
            }
            comps_.push_back(std::move(sign));
            comp_prime_.push_back(2);
            comp_is_five_slot_.push_back(false);
            comps_.push_back(std::move(five));
            comp_prime_.push_back(2);
            comp_is_five_slot_.push_back(true);
            return;
        }
        CharacterComponent c;
        c.modulus = pa;
        c.order = pa / p * (p - 1);  // phi(p^a)
        c.dlog.assign(pa, 0);
        std::uint64_t g = dirichlet_detail::primitive_root(p, a);
        std::uint64_t v = 1;
        for (std::uint64_t j = 0; j < c.order; ++j) {
            c.dlog[v] = static_cast<std::uint32_t>(j);
            v = v * g % pa;
        }
        comps_.push_back(std::move(c));
        comp_prime_.push_back(p);
        comp_is_five_slot_.push_back(false);
    }

    std::uint64_t q_;
    std::uint64_t num_chars_;
    std::vector<CharacterComponent> comps_;
    std::vector<std::uint64_t> comp_prime_;
    std::vector<bool> comp_is_five_slot_;
};

}  // namespace lfb
