#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "lfb/families.hpp"
#include "lfb/tensor.hpp"

using namespace lfb;
using Catch::Approx;

namespace {
double urand(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

bool same_root_multiset(std::vector<cplx> a, std::vector<cplx> b) {
    if (a.size() != b.size()) return false;
    auto key = [](const cplx& x, const cplx& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    };
    std::sort(a.begin(), a.end(), key);
    std::sort(b.begin(), b.end(), key);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > 1e-12) return false;
    return true;
}
}  // namespace

TEST_CASE("conjugate spec is an involution fixing real data") {
    auto z = zeta_spec(50);
    auto zc = conjugate_spec(z);
    for (const auto& [p, lf] : z.locals)
        REQUIRE(same_root_multiset(lf.roots, zc.locals.at(p).roots));

    auto c5 = dirichlet_spec(5, 1, 50);
    auto c5c = conjugate_spec(c5);
    CHECK(std::abs(c5c.locals[2].roots[0] - cplx{0.0, -1.0}) < 1e-14);
    auto back = conjugate_spec(c5c);
    for (const auto& [p, lf] : c5.locals)
        REQUIRE(same_root_multiset(lf.roots, back.locals.at(p).roots));
}

TEST_CASE("rankin-selberg local roots are pairwise products") {
    auto z = zeta_spec(100);
    auto zz = rankin_selberg_spec(z, z, 1);
    CHECK(zz.degree == 1);
    for (const auto& [p, lf] : zz.locals) {
        REQUIRE(lf.roots.size() == 1);
        REQUIRE(std::abs(lf.roots[0] - cplx{1.0, 0.0}) < 1e-14);
    }

    LFunctionSpec a;
    a.degree = 2;
    a.pole_order = 0;
    a.q_mag = 1.0;
    a.shifts = {GammaShift{cplx{0.0, 0.0}}, GammaShift{cplx{0.0, 0.0}}};
    a.coeff_growth = 0.5;
    for_each_prime(20, [&](std::uint64_t p) {
        a.locals[p] = LocalFactor{p, {cplx{2.0, 0.0}, cplx{0.5, 0.0}}, false};
    });
    a.recompute_local_limit();
    auto rs = rankin_selberg_spec(a, conjugate_spec(a), 1);
    CHECK(rs.degree == 4);
    REQUIRE(same_root_multiset(rs.locals.at(2).roots,
                               {cplx{4.0, 0.0}, cplx{1.0, 0.0}, cplx{1.0, 0.0}, cplx{0.25, 0.0}}));

    SECTION("chi x conj(chi) looks like zeta away from the modulus") {
        auto c = dirichlet_spec(4, 1, 100);
        auto cc = rankin_selberg_spec(c, conjugate_spec(c), 1);
        for (const auto& [p, lf] : cc.locals) {
            if (p == 2) {
                REQUIRE(lf.ramified);
                continue;
            }
            REQUIRE(lf.roots.size() == 1);
            REQUIRE(std::abs(lf.roots[0] - cplx{1.0, 0.0}) < 1e-12);
        }
    }

    SECTION("ramified bookkeeping and degree") {
        auto c = dirichlet_spec(12, 1, 100);
        auto cc = rankin_selberg_spec(c, conjugate_spec(c), 1);
        std::size_t ram = 0;
        for (const auto& [p, lf] : cc.locals) ram += lf.ramified ? 1 : 0;
        CHECK(ram == 2);  // p = 2, 3
        CHECK(cc.degree == 1);
    }

    SECTION("ramified override supplies a true local factor") {
        auto c = dirichlet_spec(4, 1, 100);
        LocalFactor ov{2, {cplx{0.5, 0.0}}, true};
        auto cc = rankin_selberg_spec(c, conjugate_spec(c), 1, 1.0, {ov});
        REQUIRE(cc.locals.at(2).ramified);
        REQUIRE(cc.locals.at(2).roots.size() == 1);
        CHECK(std::abs(cc.locals.at(2).roots[0] - cplx{0.5, 0.0}) < 1e-14);
    }
}

TEST_CASE("symmetric powers of GL(2) data") {
    LFunctionSpec a;
    a.degree = 2;
    a.pole_order = 0;
    a.q_mag = 1.0;
    a.shifts = {GammaShift{cplx{0.0, 0.0}}, GammaShift{cplx{0.0, 0.0}}};
    a.coeff_growth = 1.0;
    for_each_prime(10, [&](std::uint64_t p) {
        a.locals[p] = LocalFactor{p, {cplx{2.0, 0.0}, cplx{0.5, 0.0}}, false};
    });
    a.recompute_local_limit();

    auto s1 = symmetric_power_spec(a, 1);
    CHECK(s1.degree == 2);
    for (const auto& [p, lf] : a.locals)
        REQUIRE(same_root_multiset(lf.roots, s1.locals.at(p).roots));

    auto s2 = symmetric_power_spec(a, 2);
    CHECK(s2.degree == 3);
    REQUIRE(same_root_multiset(s2.locals.at(2).roots,
                               {cplx{4.0, 0.0}, cplx{1.0, 0.0}, cplx{0.25, 0.0}}));

    SECTION("unit-circle pair at theta = 0 gives sym^2 power sum 3") {
        LFunctionSpec u = a;
        u.locals.clear();
        for_each_prime(10, [&](std::uint64_t p) {
            u.locals[p] = LocalFactor{p, {cplx{1.0, 0.0}, cplx{1.0, 0.0}}, false};
        });
        u.recompute_local_limit();
        auto us2 = symmetric_power_spec(u, 2);
        CHECK(power_sum(us2.locals.at(3), 1).real() == Approx(3.0));
    }

    SECTION("degree != 2 rejected") {
        auto z = zeta_spec(10);
        CHECK_THROWS_AS(symmetric_power_spec(z, 2), std::domain_error);
    }

    SECTION("sym^l power sums at k=1 equal complete homogeneous polynomials") {
        // cross-module consistency with the Newton recurrence in core
        std::mt19937_64 rng(2024);
        for (int trial = 0; trial < 50; ++trial) {
            double r = 0.25 + 2.0 * urand(rng);
            double phi1 = 6.28 * urand(rng), phi2 = 6.28 * urand(rng);
            cplx a1 = r * cplx{std::cos(phi1), std::sin(phi1)};
            cplx a2 = (1.0 / r) * cplx{std::cos(phi2), std::sin(phi2)};
            LFunctionSpec s;
            s.degree = 2;
            s.pole_order = 0;
            s.q_mag = 1.0;
            s.shifts = {GammaShift{cplx{0.0, 0.0}}, GammaShift{cplx{0.0, 0.0}}};
            for_each_prime(64, [&](std::uint64_t p) { s.locals[p] = LocalFactor{p, {a1, a2}, false}; });
            s.recompute_local_limit();
            auto table = dirichlet_coefficients(s, 64);
            for (unsigned l = 1; l <= 6; ++l) {
                auto sym = symmetric_power_spec(s, l);
                cplx ps = power_sum(sym.locals.at(2), 1);
                cplx h_l = table.a(std::uint64_t(1) << l);  // a_{2^l} = h_l(a1, a2)
                REQUIRE(std::abs(ps - h_l) <= 1e-9 * (1.0 + std::abs(h_l)));
            }
        }
    }
}

TEST_CASE("rankin-selberg coefficient identity") {
    LFunctionSpec a;
    a.degree = 2;
    a.pole_order = 0;
    a.q_mag = 1.0;
    a.shifts = {GammaShift{cplx{0.0, 0.0}}, GammaShift{cplx{0.0, 0.0}}};
    for_each_prime(10, [&](std::uint64_t p) {
        a.locals[p] = LocalFactor{p, {cplx{2.0, 0.0}, cplx{0.5, 0.0}}, false};
    });
    a.recompute_local_limit();
    auto rs = rankin_selberg_spec(a, conjugate_spec(a), 1);

    auto rep = check_rs_identity(a, rs, 2, 1);
    CHECK(rep.lhs == Approx(6.25).epsilon(1e-12));
    CHECK(rep.rhs == Approx(6.25).epsilon(1e-12));
    CHECK(rep.ok);
    CHECK(rep.equality_mode);

    auto z = zeta_spec(50);
    auto zz = rankin_selberg_spec(z, conjugate_spec(z), 1);
    for (std::uint64_t p : {2ull, 3ull, 47ull})
        for (unsigned k = 1; k <= 8; ++k) {
            auto r = check_rs_identity(z, zz, p, k);
            REQUIRE(r.lhs == Approx(1.0));
            REQUIRE(r.rhs == Approx(1.0));
            REQUIRE(r.ok);
        }

    SECTION("ramified p reports inequality mode") {
        auto c = dirichlet_spec(4, 1, 100);
        auto cc = rankin_selberg_spec(c, conjugate_spec(c), 1);
        auto r = check_rs_identity(c, cc, 2, 1);
        CHECK_FALSE(r.equality_mode);
        CHECK(r.ok);  // 0 <= 0
    }

    SECTION("randomized equality sweep") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 20000; ++trial) {
            double m1 = 0.1 + 3.0 * urand(rng), m2 = 0.1 + 3.0 * urand(rng);
            double f1 = 6.28 * urand(rng), f2 = 6.28 * urand(rng);
            cplx a1 = m1 * cplx{std::cos(f1), std::sin(f1)};
            cplx a2 = m2 * cplx{std::cos(f2), std::sin(f2)};
            unsigned k = 1 + trial % 6;
            cplx ca = std::pow(a1, double(k)) + std::pow(a2, double(k));
            double lhs = std::norm(ca);
            // rhs: power sum of the pairwise products with the conjugates
            cplx rhs = 0.0;
            for (cplx x : {a1, a2})
                for (cplx y : {std::conj(a1), std::conj(a2)})
                    rhs += std::pow(x * y, double(k));
            REQUIRE(std::abs(lhs - rhs.real()) <= 1e-9 * (1.0 + std::abs(lhs)));
            REQUIRE(std::abs(rhs.imag()) <= 1e-9 * (1.0 + std::abs(lhs)));
        }
    }
}

TEST_CASE("coefficient chain checks") {
    auto rep = check_coeff_chain(cplx{2.0, 0.0}, cplx{0.5, 0.0}, 2, 1);
    CHECK(rep.a_abs == Approx(2.5));
    CHECK(rep.b_abs == Approx(5.25));
    CHECK(rep.chain1_lhs == Approx(6.25));
    CHECK(rep.chain1_rhs == Approx(42.0));  // max(8 * 5.25, 16)
    CHECK(rep.ok1);
    CHECK(rep.ok2);
    CHECK(rep.m_lower == Approx(4.0 * 0.5));  // M^{kl} (1 - 1/M^k) = 4 * (1/2)

    SECTION("unit-circle roots: |c|^l <= 2^l <= 4^l") {
        for (unsigned l = 1; l <= 6; ++l) {
            auto r = check_coeff_chain(cplx{0.6, 0.8}, cplx{0.6, -0.8}, l, 3);
            REQUIRE(r.M == Approx(1.0));
            REQUIRE(r.chain1_lhs <= std::pow(2.0, double(l)) + 1e-9);
            REQUIRE(r.ok1);
            REQUIRE(r.ok2);
        }
    }

    SECTION("precondition |alpha1 alpha2| = 1 enforced") {
        CHECK_THROWS_AS(check_coeff_chain(cplx{2.0, 0.0}, cplx{2.0, 0.0}, 2, 1), std::domain_error);
    }

    SECTION("randomized unit-determinant sweep") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 20000; ++trial) {
            double r = std::exp(2.0 * urand(rng));  // modulus in [1, e^2]
            double f1 = 6.28 * urand(rng), f2 = 6.28 * urand(rng);
            cplx a1 = r * cplx{std::cos(f1), std::sin(f1)};
            cplx a2 = (1.0 / r) * cplx{std::cos(f2), std::sin(f2)};
            unsigned l = 1 + trial % 6, k = 1 + (trial / 6) % 6;
            auto rep2 = check_coeff_chain(a1, a2, l, k);
            REQUIRE(rep2.ok1);
            REQUIRE(rep2.ok2);
        }
    }
}

TEST_CASE("maass chain check") {
    SECTION("explicit arithmetic at (2, 1/2), k = 1") {
        auto r = maass_chain_check(cplx{2.0, 0.0}, cplx{0.5, 0.0}, 1);
        CHECK(r.a_abs == Approx(2.5));
        CHECK(r.s_abs == Approx(5.25));                 // 4 + 1 + 1/4
        CHECK(r.b_abs == Approx(16.0 + 4.0 + 1.0 + 0.25 + 0.0625));  // sym^4 power sum
        CHECK(r.d_val == Approx(r.b_abs * r.b_abs));
        CHECK(r.ok_s_vs_a);
        CHECK(r.ok_a_vs_b);
        CHECK(r.ok_combined);
    }
    SECTION("unit-circle roots satisfy the chain trivially") {
        auto r = maass_chain_check(cplx{0.0, 1.0}, cplx{0.0, -1.0}, 2);
        CHECK(r.s_abs <= 3.0 + 1e-12);
        CHECK(r.ok_s_vs_a);
        CHECK(r.ok_combined);
    }
    SECTION("randomized sweep") {
        std::mt19937_64 rng(13);
        for (int trial = 0; trial < 20000; ++trial) {
            double r = std::exp(1.5 * urand(rng));
            double f1 = 6.28 * urand(rng), f2 = 6.28 * urand(rng);
            cplx a1 = r * cplx{std::cos(f1), std::sin(f1)};
            cplx a2 = (1.0 / r) * cplx{std::cos(f2), std::sin(f2)};
            auto rep = maass_chain_check(a1, a2, 1 + trial % 6);
            REQUIRE(rep.ok_s_vs_a);
            REQUIRE(rep.ok_a_vs_b);
            REQUIRE(rep.ok_combined);
        }
    }
}

TEST_CASE("rs degree and exceptional-set bookkeeping") {
    auto c12 = dirichlet_spec(12, 1, 200);
    auto d = ramanujan_delta_spec(200);
    auto rs = rankin_selberg_spec(c12, d, 0);
    CHECK(rs.degree == c12.degree * d.degree);
    std::size_t ram_rs = 0, ram_a = 0, ram_m = 0;
    for (const auto& [p, lf] : rs.locals) ram_rs += lf.ramified;
    for (const auto& [p, lf] : c12.locals) ram_a += lf.ramified;
    for (const auto& [p, lf] : d.locals) ram_m += lf.ramified;
    CHECK(ram_rs <= ram_a + ram_m);
}
