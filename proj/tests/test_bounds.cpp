#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "lfb/bounds.hpp"
#include "lfb/dirichlet_oracle.hpp"
#include "lfb/families.hpp"

using namespace lfb;
using Catch::Approx;

namespace {
void check_component_identity(const BoundReport& r) {
    double s = 0.0;
    for (const auto& [k, v] : r.components) s += v;
    REQUIRE(r.bound_log == Approx(s).margin(1e-12 * (1.0 + std::abs(s))));
}
}  // namespace

TEST_CASE("bound params invariants") {
    CHECK_THROWS_AS(BoundParams(2.0, 1.0), std::domain_error);   // x must exceed 2
    CHECK_THROWS_AS(BoundParams(10.0, 0.2), std::domain_error);  // e^{-0.2} > 0.2
    auto p = BoundParams::at_omega(100.0);
    CHECK(p.sigma0 == Approx(1.0 + omega_lambda() / std::log(100.0)));
    CHECK(p.sigma0 > 1.0);
    CHECK(p.sigma0 <= 1.0 + p.lambda / std::log(2.0));
}

TEST_CASE("smoothed prime sum against brute force") {
    auto z = zeta_spec(100);
    // sigma0 = 1.5 realized by lambda = 0.5 log 10 (e^{-lambda} <= lambda holds)
    BoundParams params(10.0, 0.5 * std::log(10.0));
    REQUIRE(params.sigma0 == Approx(1.5));
    double brute = 0.0;
    for (std::uint64_t n : {2ull, 3ull, 4ull, 5ull, 7ull, 8ull, 9ull}) {
        double lp = std::log(double(n == 4 ? 2 : n == 8 ? 2 : n == 9 ? 3 : n));
        brute += lp * std::log(10.0 / n) / (std::pow(double(n), 1.5) * std::log(double(n)) * std::log(10.0));
    }
    CHECK(smoothed_prime_sum(z, params).real() == Approx(brute).epsilon(1e-13));
    CHECK(brute == Approx(0.410).margin(1e-3));

    SECTION("chi_-4 weighted version, 7-term oracle") {
        auto c = dirichlet_spec(4, 1, 100);
        double expect = 0.0;
        for (std::uint64_t n : {3ull, 5ull, 7ull, 9ull}) {  // chi vanishes on even n
            std::uint64_t p = (n == 9) ? 3 : n;
            double chi_pk = (p % 4 == 1) ? 1.0 : -1.0;  // chi(3)=-1, chi(5)=1, chi(7)=-1
            if (n == 9) chi_pk = 1.0;                   // chi(3)^2
            expect += chi_pk * std::log(double(p)) * std::log(10.0 / n) /
                      (std::pow(double(n), 1.5) * std::log(double(n)) * std::log(10.0));
        }
        CHECK(smoothed_prime_sum(c, params).real() == Approx(expect).epsilon(1e-12));
    }

    SECTION("x <= 2 rejected at parameter construction") {
        CHECK_THROWS_AS(BoundParams(1.5, 1.0), std::domain_error);
    }
}

TEST_CASE("lemma2/lemma3 reports: bookkeeping and the inequality on a small corpus") {
    auto z = zeta_spec(200);
    auto params = BoundParams::at_omega(100.0);
    auto r2 = lemma2_rhs(z, params);
    auto r3 = lemma3_rhs(z, params);
    check_component_identity(r2);
    check_component_identity(r3);
    CHECK(r2.mode == BoundMode::lemma2);
    CHECK(r2.components.count("prime_sum") == 1);
    CHECK(r2.components.count("q_term") == 1);
    CHECK(r2.components.count("gamma_term") == 1);
    CHECK(r3.components.count("conductor_term") == 1);

    SECTION("series-oracle inequality for primitive characters, q <= 50") {
        Constants c;  // C_abs = C_gamma = 10
        for (double x : {50.0, 500.0}) {
            auto params_x = BoundParams::at_omega(x, c);
            for (std::uint64_t q = 3; q <= 50; ++q) {
                DirichletGroup g(q);
                HurwitzTable table = make_hurwitz_table(q, params_x.sigma0);
                for (auto idx : g.primitive_indices()) {
                    auto spec = dirichlet_spec(q, idx, std::uint64_t(x));
                    double oracle = std::log(std::abs(dirichlet_l_from_table(g, idx, table)));
                    auto b2 = lemma2_rhs(spec, params_x);
                    auto b3 = lemma3_rhs(spec, params_x);
                    REQUIRE(oracle <= b2.bound_log);
                    REQUIRE(oracle <= b3.bound_log);
                }
            }
        }
    }

    SECTION("lemma3 conductor term strictly decreases in x") {
        auto c20 = dirichlet_spec(20, 1, 5000);
        double prev = 1e300;
        for (double x : {50.0, 500.0, 5000.0}) {
            auto r = lemma3_rhs(c20, BoundParams::at_omega(x));
            REQUIRE(r.components.at("conductor_term") < prev);
            prev = r.components.at("conductor_term");
        }
    }
}

TEST_CASE("theorem1 bound") {
    SECTION("closed form at C = 1e6, d = 2, C_closed = 2") {
        LFunctionSpec s;
        s.degree = 2;
        s.pole_order = 0;
        s.shifts = {GammaShift{cplx{0.0, 0.0}}, GammaShift{cplx{0.0, 0.0}}};
        s.q_mag = 1e6 / 9.0 - 1.0;  // conductor (1+|Q|) * 9 = 1e6
        REQUIRE(conductor(s) == Approx(1e6).epsilon(1e-12));
        Constants c;
        c.C_closed = 2.0;
        auto r = theorem1_bound(s, c);
        double expect = 2.0 * 2.0 * std::log(1e6) / std::log(std::log(1e6));
        CHECK(r.extras.at("closed_form_log") == Approx(expect).epsilon(1e-12));
        CHECK(r.extras.at("closed_form_log") == Approx(21.0459).margin(1e-3));
        CHECK_FALSE(r.clamped);
        check_component_identity(r);
    }
    SECTION("small conductors clamp x to 3 and flag it") {
        LFunctionSpec s;
        s.degree = 1;
        s.pole_order = 0;
        s.shifts = {GammaShift{cplx{0.0, 0.0}}};
        s.q_mag = 0.0;  // conductor 3, log < 3
        auto r = theorem1_bound(s);
        CHECK(r.clamped);
        CHECK(r.x == 3.0);
    }
    SECTION("assembled bound dominates the oracle on a small corpus") {
        for (std::uint64_t q = 3; q <= 30; ++q) {
            DirichletGroup g(q);
            for (auto idx : g.primitive_indices()) {
                auto spec = dirichlet_spec(q, idx, 10);
                auto r = theorem1_bound(spec);
                double oracle =
                    std::log(std::abs(dirichlet_l_oracle(q, idx, r.sigma0)));
                REQUIRE(oracle <= r.bound_log);
            }
        }
    }
    SECTION("closed form dominates the assembled bound at default constants") {
        for (std::uint64_t q : {3ull, 17ull, 100ull, 499ull}) {
            DirichletGroup g(q);
            auto prim = g.primitive_indices();
            if (prim.empty()) continue;
            auto spec = dirichlet_spec(q, prim.front(), 10);
            auto r = theorem1_bound(spec);
            REQUIRE(r.extras.at("closed_form_log") >= r.bound_log);
        }
        auto z = zeta_spec(10);
        auto rz = theorem1_bound(z);
        CHECK(rz.extras.at("closed_form_log") >= rz.bound_log);
    }
    SECTION("sigma transfer reduces to the bound itself for entire specs") {
        auto c = dirichlet_spec(4, 1, 100);
        auto r = theorem1_bound(c);
        CHECK(theorem1_sigma_transfer(c, r, r.sigma0) == Approx(r.bound_log).margin(1e-12));
        // for zeta (m = 1) the transfer dominates |(1-sigma) zeta(sigma)|
        auto z = zeta_spec(100);
        auto rz = theorem1_bound(z);
        for (double sig : {1.0, 1.1, 1.3, rz.sigma0}) {
            double oracle = sig > 1.0 ? std::log((sig - 1.0) * riemann_zeta(sig)) : 0.0;
            REQUIRE(theorem1_sigma_transfer(z, rz, sig) >= oracle);
        }
    }
}

TEST_CASE("theorem2 bound") {
    SECTION("zeta self-consistency: bound dominates log zeta(sigma0)") {
        auto z = zeta_spec(10000);
        auto rs = rankin_selberg_spec(z, conjugate_spec(z), 1);
        auto r = theorem2_bound(z, rs);
        check_component_identity(r);
        double oracle = std::log(riemann_zeta(r.sigma0));
        CHECK(oracle <= r.bound_log);
        CHECK_FALSE(r.fallback);
    }
    SECTION("x formula: conductor e^100 gives x = e^10 exactly") {
        LFunctionSpec s;
        s.degree = 1;
        s.pole_order = 0;
        s.shifts = {GammaShift{cplx{0.0, 0.0}}};
        s.q_mag = std::exp(100.0) / 3.0 - 1.0;
        for_each_prime(23000, [&](std::uint64_t p) {
            s.locals[p] = LocalFactor{p, {cplx{1.0, 0.0}}, false};
        });
        s.recompute_local_limit();
        s.coeff_growth = 0.0;
        auto rs = rankin_selberg_spec(s, conjugate_spec(s), 1);
        auto r = theorem2_bound(s, rs);
        CHECK(r.x == Approx(std::exp(10.0)).epsilon(1e-12));
        CHECK_FALSE(r.clamped);
    }
    SECTION("fallback replaces the first Cauchy-Schwarz factor") {
        auto z = zeta_spec(10000);
        auto rs = rankin_selberg_spec(z, conjugate_spec(z), 1);
        auto r = theorem2_bound(z, rs, Constants{}, {}, true);
        CHECK(r.fallback);
        check_component_identity(r);
        double oracle = std::log(riemann_zeta(r.sigma0));
        CHECK(oracle <= r.bound_log);
    }
}

TEST_CASE("sympower bound") {
    auto delta = ramanujan_delta_spec(1000);
    SECTION("l = 1 matches theorem2 componentwise at a shared cutoff") {
        auto rs = rankin_selberg_spec(delta, conjugate_spec(delta), 1);
        auto t2 = theorem2_bound(delta, rs, Constants{}, 150.0);
        auto sp = sympower_bound(delta, 1, Constants{}, 150.0);
        REQUIRE(t2.components.size() == sp.components.size());
        for (const auto& [k, v] : t2.components)
            REQUIRE(sp.components.at(k) == Approx(v).margin(1e-12 * (1.0 + std::abs(v))));
        CHECK(sp.bound_log == Approx(t2.bound_log).margin(1e-12 * (1.0 + std::abs(t2.bound_log))));
    }
    SECTION("closed-form exponent of log C is 1/(2l)") {
        for (unsigned l : {1u, 2u, 3u}) {
            auto r = sympower_bound(delta, l);
            REQUIRE(r.extras.at("logC_exponent") == Approx(1.0 / (2.0 * l)));
            REQUIRE(r.extras.at("loglogC_exponent") == Approx((l - 1.0) / l));
            check_component_identity(r);
        }
    }
    SECTION("bound dominates the euler-product oracle for Delta") {
        for (unsigned l : {1u, 2u}) {
            auto r = sympower_bound(delta, l);
            auto lv = euler_eval(delta, r.sigma0, 1000);
            double oracle = std::log(std::abs(lv.value));
            REQUIRE(oracle <= r.bound_log);
        }
    }
    SECTION("degree != 2 rejected") {
        auto z = zeta_spec(100);
        CHECK_THROWS_AS(sympower_bound(z, 2), std::domain_error);
    }
}

TEST_CASE("short sum bound") {
    auto z = zeta_spec(10000);
    auto r = short_sum_bound(z, 10.0);
    CHECK(r.exact == Approx(7381.0 / 2520.0).epsilon(1e-12));
    CHECK(r.exact == Approx(2.9289682539682538).epsilon(1e-12));
    CHECK(r.bound >= r.exact);

    auto c = dirichlet_spec(4, 1, 10000);
    auto rc = short_sum_bound(c, 10.0);
    CHECK(rc.exact == Approx(1.0 + 1.0 / 3 + 1.0 / 5 + 1.0 / 7 + 1.0 / 9).epsilon(1e-12));
    CHECK(rc.exact == Approx(1.7873015873).epsilon(1e-9));
    CHECK(rc.bound >= rc.exact);

    SECTION("x below 3 rejected") {
        CHECK_THROWS_AS(short_sum_bound(z, 2.0), std::range_error);
    }
    SECTION("bound >= exact on a mini corpus") {
        auto q5 = dirichlet_spec(5, 1, 10000);
        auto d = ramanujan_delta_spec(10000);
        for (double x : {100.0, 1000.0, 10000.0}) {
            for (const auto* spec : {&z, &c, &q5, &d}) {
                auto rr = short_sum_bound(*spec, x);
                REQUIRE(rr.bound >= rr.exact);
            }
        }
    }
}

TEST_CASE("grh bound") {
    auto z = zeta_spec(100);
    SECTION("delta -> 0 collapses the envelope to C d / log log C") {
        auto r = grh_bound(z, 0.0);
        double logC = std::log(conductor(z));
        CHECK(r.bound_log == Approx(10.0 / std::log(logC)).epsilon(1e-12));
        CHECK(r.conditional_grh);
        check_component_identity(r);
    }
    SECTION("delta = 1/2 reproduces the theorem-1 scale log C / log log C") {
        auto r = grh_bound(z, 0.5);
        double logC = std::log(conductor(z));
        CHECK(r.bound_log == Approx(10.0 * logC / std::log(logC)).epsilon(1e-12));
    }
    SECTION("log zeta(sigma0) lies inside the envelope at C = 10") {
        auto r = grh_bound(z, 0.0);
        double v = std::log(riemann_zeta(r.sigma0));
        CHECK(v <= r.bound_log);
        CHECK(v >= -r.bound_log);
    }
    SECTION("x = log^2 C clamps upward to 3 for tiny conductors") {
        auto r = grh_bound(z, 0.25);
        CHECK(r.x == 3.0);  // log^2(3.95) = 1.89 < 3
        CHECK(r.clamped);
    }
    SECTION("delta outside [0, 1/2] rejected") {
        CHECK_THROWS_AS(grh_bound(z, 0.75), std::domain_error);
    }
}

TEST_CASE("constants file round trip and digest") {
    auto path = std::filesystem::temp_directory_path() / "lfb_constants.txt";
    {
        std::ofstream out(path);
        out << "# tuned for the local corpus\n";
        out << "C_abs = 8.5\n";
        out << "C_gamma = 9\n";
        out << "x_max = 50000\n";
    }
    auto c = load_constants(path.string());
    CHECK(c.C_abs == 8.5);
    CHECK(c.C_gamma == 9.0);
    CHECK(c.x_max == 50000.0);
    CHECK(c.C_closed == 16.0);  // untouched default

    Constants d;
    CHECK(c.digest() != d.digest());
    CHECK(c.digest() == load_constants(path.string()).digest());
    std::filesystem::remove(path);

    {
        std::ofstream out(path);
        out << "C_nope = 1\n";
    }
    CHECK_THROWS_AS(load_constants(path.string()), parse_error);
    std::filesystem::remove(path);
}
