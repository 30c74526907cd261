// lfb -- command-line front end for the bound/verification pipelines.
//
//   lfb eval    --family zeta --sigma 2.0 [--what value|logderiv|xi]
//   lfb bound   theorem1|theorem2|sympower|shortsum|grh|lemma2|lemma3 [flags]
//   lfb verify  lemma1|lemma2|lemma5|rankin|chain|monotone [flags]
//   lfb lower   --family dirichlet --q 4 --index 1 --c0 0.1 --C0 5
//   lfb corpus  --qmax 50 --mode theorem1 [--jobs N]
//
// Exit codes: 0 success, 1 a verify run found violations, 2 input errors.
// Reports are deterministic for fixed inputs and constants, independent of
// --jobs: work is partitioned by item index and aggregated in item order.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lfb/lfb.hpp"

using nlohmann::ordered_json;
using namespace lfb;

namespace {

struct SpecSource {
    std::string family;  // zeta | dirichlet | delta | synthetic
    std::string spec_file;
    std::uint64_t q = 4;
    std::uint64_t index = 1;
    std::uint64_t seed = 1;
    unsigned degree = 2;
    double theta = 0.5;
    std::uint64_t limit = 100000;
    bool strict = false;
};

void add_spec_options(CLI::App* cmd, SpecSource& src) {
    cmd->add_option("--family", src.family, "built-in family: zeta|dirichlet|delta|synthetic");
    cmd->add_option("--spec-file", src.spec_file, "path to a spec JSON document");
    cmd->add_option("--q", src.q, "Dirichlet modulus");
    cmd->add_option("--index", src.index, "character index (exponent tuple, mixed radix)");
    cmd->add_option("--seed", src.seed, "synthetic family seed");
    cmd->add_option("--degree", src.degree, "synthetic family degree");
    cmd->add_option("--theta", src.theta, "synthetic coefficient growth exponent");
    cmd->add_option("--limit", src.limit, "prime coverage for constructed locals");
    cmd->add_flag("--strict", src.strict, "strict validation (schema and pole order)");
}

LFunctionSpec make_spec(const SpecSource& src) {
    if (!src.spec_file.empty() && !src.family.empty())
        throw std::domain_error("give either --family or --spec-file, not both");
    if (!src.spec_file.empty()) return load_spec(src.spec_file, src.strict);
    if (src.family == "zeta" || src.family.empty()) return zeta_spec(src.limit);
    if (src.family == "dirichlet") return dirichlet_spec(src.q, src.index, src.limit, true);
    if (src.family == "delta") return ramanujan_delta_spec(std::min<std::uint64_t>(src.limit, 200000));
    if (src.family == "synthetic") return synthetic_spec(src.degree, src.seed, src.theta, src.limit);
    throw std::domain_error("unknown family \"" + src.family + "\"");
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(17);
    ss << v;
    return ss.str();
}

ordered_json params_json(const BoundReport& r, const Constants& c) {
    ordered_json j;
    j["x"] = r.x;
    j["lambda"] = r.lambda;
    j["sigma0"] = r.sigma0;
    j["C_abs"] = c.C_abs;
    j["C_gamma"] = c.C_gamma;
    j["C_closed"] = c.C_closed;
    j["C_tail"] = c.C_tail;
    j["C_resid"] = c.C_resid;
    j["x_max"] = c.x_max;
    return j;
}

ordered_json report_json(const BoundReport& r, const Constants& c, const std::string& spec_label) {
    ordered_json j;
    j["spec"] = spec_label;
    j["mode"] = to_string(r.mode);
    j["bound_log"] = r.bound_log;
    ordered_json comp;
    for (const auto& [k, v] : r.components) comp[k] = v;
    j["components"] = comp;
    j["params"] = params_json(r, c);
    j["constants_digest"] = c.digest();
    ordered_json flags;
    flags["clamped"] = r.clamped;
    flags["heuristic"] = r.heuristic;
    flags["conditional_grh"] = r.conditional_grh;
    flags["fallback"] = r.fallback;
    j["flags"] = flags;
    if (!r.extras.empty()) {
        ordered_json ex;
        for (const auto& [k, v] : r.extras) ex[k] = v;
        j["extras"] = ex;
    }
    return j;
}

const std::vector<std::string>& csv_component_columns() {
    static const std::vector<std::string> cols = {
        "prime_sum",     "q_term",          "gamma_term",    "conductor_term",
        "ramified_term", "unramified_term", "constant_term", "envelope_term"};
    return cols;
}

std::string report_csv_header() {
    std::string h = "spec,mode,x,lambda,sigma0,clamped,heuristic,conditional_grh,fallback";
    for (const auto& c : csv_component_columns()) h += "," + c;
    h += ",bound_log,constants_digest";
    return h;
}

std::string report_csv_row(const BoundReport& r, const Constants& c, const std::string& label) {
    std::string row = label;
    row += ",";
    row += to_string(r.mode);
    row += "," + fmt(r.x) + "," + fmt(r.lambda) + "," + fmt(r.sigma0);
    row += r.clamped ? ",1" : ",0";
    row += r.heuristic ? ",1" : ",0";
    row += r.conditional_grh ? ",1" : ",0";
    row += r.fallback ? ",1" : ",0";
    for (const auto& name : csv_component_columns()) {
        auto it = r.components.find(name);
        row += ",";
        if (it != r.components.end()) row += fmt(it->second);
    }
    row += "," + fmt(r.bound_log) + "," + c.digest();
    return row;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw parse_error("cannot open output file: " + out_path);
    out << text << "\n";
}

// ordered parallel map: results land in input order regardless of job count
template <typename Fn>
void for_each_indexed(std::size_t count, unsigned jobs, Fn&& fn) {
    jobs = std::max(1u, jobs);
    if (jobs == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (count + jobs - 1) / jobs;
    for (unsigned t = 0; t < jobs; ++t) {
        std::size_t lo = t * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

struct CommonOpts {
    std::string constants_file;
    std::string format = "json";
    std::string out_path;
    double clamp_x = 0.0;  // overrides constants.x_max when positive
    unsigned jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--constants", o.constants_file, "key = value constants file");
    cmd->add_option("--format", o.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", o.out_path, "write the report here instead of stdout");
    cmd->add_option("--clamp-x", o.clamp_x, "prime-sum cutoff clamp (overrides x_max)");
    cmd->add_option("--jobs", o.jobs, "parallelism degree (output is jobs-invariant)");
}

Constants resolve_constants(const CommonOpts& o) {
    Constants c = o.constants_file.empty() ? Constants{} : load_constants(o.constants_file);
    if (o.clamp_x > 0.0) c.x_max = o.clamp_x;
    return c;
}

int run_eval(const SpecSource& src, const CommonOpts& opts, const std::string& what,
             double sigma_lo, double sigma_hi, double sigma_step) {
    auto spec = make_spec(src);
    Constants c = resolve_constants(opts);
    std::vector<double> grid;
    for (double s = sigma_lo; s <= sigma_hi + 1e-12; s += sigma_step) grid.push_back(s);
    std::vector<ordered_json> results(grid.size());
    for_each_indexed(grid.size(), opts.jobs, [&](std::size_t i) {
        double s = grid[i];
        ordered_json row;
        row["sigma"] = s;
        if (what == "logderiv") {
            auto r = log_deriv_eval(spec, s, spec.local_limit);
            row["value_re"] = r.value.real();
            row["value_im"] = r.value.imag();
            row["tail_bound"] = r.tail_bound;
        } else if (what == "xi") {
            row["log_abs_xi"] = xi_log_abs(spec, s, spec.local_limit);
        } else {
            auto r = l_value(spec, s, spec.local_limit);
            row["value_re"] = r.value.real();
            row["value_im"] = r.value.imag();
            row["tail_bound"] = r.tail_bound;
        }
        results[i] = std::move(row);
    });
    ordered_json rows = ordered_json::array();
    for (auto& r : results) rows.push_back(std::move(r));
    ordered_json j;
    j["command"] = "eval";
    j["spec"] = spec.label;
    j["what"] = what.empty() ? "value" : what;
    j["constants_digest"] = c.digest();
    j["rows"] = rows;
    if (opts.format == "csv") {
        std::string csv = "sigma,value_re,value_im,tail_bound,log_abs_xi";
        for (const auto& row : j["rows"]) {
            csv += "\n" + fmt(row["sigma"].get<double>());
            for (const char* k : {"value_re", "value_im", "tail_bound", "log_abs_xi"})
                csv += "," + (row.contains(k) ? fmt(row[k].get<double>()) : std::string{});
        }
        emit(csv, opts.out_path);
    } else {
        emit(j.dump(2), opts.out_path);
    }
    return 0;
}

int run_bound(const std::string& mode, const SpecSource& src, const CommonOpts& opts,
              double x_override, unsigned sym_l, double grh_delta) {
    auto spec = make_spec(src);
    Constants c = resolve_constants(opts);
    std::optional<double> xov;
    if (x_override > 0.0) xov = x_override;
    BoundReport r;
    if (mode == "theorem1") {
        r = theorem1_bound(spec, c);
    } else if (mode == "theorem2") {
        auto rs = rankin_selberg_spec(spec, conjugate_spec(spec), 1);
        r = theorem2_bound(spec, rs, c, xov);
    } else if (mode == "sympower") {
        r = sympower_bound(spec, sym_l, c, xov);
    } else if (mode == "grh") {
        r = grh_bound(spec, grh_delta, c);
    } else if (mode == "lemma2" || mode == "lemma3") {
        double x = x_override > 0.0 ? x_override : 100.0;
        auto params = BoundParams::at_omega(x, c);
        r = mode == "lemma2" ? lemma2_rhs(spec, params) : lemma3_rhs(spec, params);
    } else if (mode == "shortsum") {
        double x = x_override > 0.0 ? x_override : 1000.0;
        auto s = short_sum_bound(spec, x, c);
        ordered_json j;
        j["spec"] = spec.label;
        j["mode"] = "shortsum";
        j["x"] = x;
        j["exact"] = s.exact;
        j["bound"] = s.bound;
        j["refined_log"] = s.refined_log;
        j["cs_sum"] = s.cs_sum;
        j["constants_digest"] = c.digest();
        emit(opts.format == "csv"
                 ? "spec,mode,x,exact,bound,refined_log\n" + spec.label + ",shortsum," + fmt(x) +
                       "," + fmt(s.exact) + "," + fmt(s.bound) + "," + fmt(s.refined_log)
                 : j.dump(2),
             opts.out_path);
        return 0;
    } else {
        throw std::domain_error("unknown bound mode \"" + mode + "\"");
    }
    if (opts.format == "csv")
        emit(report_csv_header() + "\n" + report_csv_row(r, c, spec.label), opts.out_path);
    else
        emit(report_json(r, c, spec.label).dump(2), opts.out_path);
    return 0;
}

struct Violation {
    std::string item;
    double lhs, rhs;
};

int emit_verify(const std::string& mode, std::uint64_t checked, std::vector<Violation> violations,
                const Constants& c, const CommonOpts& opts, ordered_json details = {}) {
    ordered_json j;
    j["command"] = "verify";
    j["mode"] = mode;
    j["checked"] = checked;
    j["violations"] = ordered_json::array();
    for (const auto& v : violations) {
        ordered_json vj;
        vj["item"] = v.item;
        vj["lhs"] = v.lhs;
        vj["rhs"] = v.rhs;
        j["violations"].push_back(vj);
    }
    j["pass"] = violations.empty();
    j["constants_digest"] = c.digest();
    if (!details.is_null()) j["details"] = details;
    if (opts.format == "csv") {
        std::string csv = "mode,checked,violations,pass\n" + mode + "," + std::to_string(checked) +
                          "," + std::to_string(violations.size()) + "," +
                          (violations.empty() ? "1" : "0");
        emit(csv, opts.out_path);
    } else {
        emit(j.dump(2), opts.out_path);
    }
    return violations.empty() ? 0 : 1;
}

int run_verify_rankin(std::uint64_t seeds, const CommonOpts& opts) {
    Constants c = resolve_constants(opts);
    std::vector<unsigned char> bad(seeds, 0);
    std::vector<double> lhs_store(seeds, 0.0), rhs_store(seeds, 0.0);
    for_each_indexed(seeds, opts.jobs, [&](std::size_t i) {
        std::mt19937_64 rng(0x52414e4bull ^ (0x9e3779b97f4a7c15ull * (i + 1)));
        auto u01 = [&] { return double(rng() >> 11) * 0x1.0p-53; };
        double m1 = 0.05 + 4.0 * u01(), m2 = 0.05 + 4.0 * u01();
        double f1 = 2 * std::numbers::pi * u01(), f2 = 2 * std::numbers::pi * u01();
        cplx a1 = m1 * cplx{std::cos(f1), std::sin(f1)};
        cplx a2 = m2 * cplx{std::cos(f2), std::sin(f2)};
        unsigned k = 1 + i % 6;
        cplx ca = std::pow(a1, double(k)) + std::pow(a2, double(k));
        double lhs = std::norm(ca);
        cplx rhs = 0.0;
        for (cplx xx : {a1, a2})
            for (cplx yy : {std::conj(a1), std::conj(a2)}) rhs += std::pow(xx * yy, double(k));
        lhs_store[i] = lhs;
        rhs_store[i] = rhs.real();
        if (std::abs(lhs - rhs.real()) > 1e-9 * (1.0 + std::abs(lhs))) bad[i] = 1;
    });
    std::vector<Violation> v;
    for (std::size_t i = 0; i < seeds; ++i)
        if (bad[i]) v.push_back({"seed " + std::to_string(i), lhs_store[i], rhs_store[i]});
    return emit_verify("rankin", seeds, std::move(v), c, opts);
}

int run_verify_chain(std::uint64_t seeds, const CommonOpts& opts) {
    Constants c = resolve_constants(opts);
    std::vector<unsigned char> bad(seeds, 0);
    for_each_indexed(seeds, opts.jobs, [&](std::size_t i) {
        std::mt19937_64 rng(0x434841494eull ^ (0x9e3779b97f4a7c15ull * (i + 1)));
        auto u01 = [&] { return double(rng() >> 11) * 0x1.0p-53; };
        double r = std::exp(2.5 * u01());
        double f1 = 2 * std::numbers::pi * u01(), f2 = 2 * std::numbers::pi * u01();
        cplx a1 = r * cplx{std::cos(f1), std::sin(f1)};
        cplx a2 = (1.0 / r) * cplx{std::cos(f2), std::sin(f2)};
        unsigned l = 1 + i % 6, k = 1 + (i / 6) % 6;
        auto rep = check_coeff_chain(a1, a2, l, k);
        if (!rep.ok1 || !rep.ok2) bad[i] = 1;
    });
    std::vector<Violation> v;
    for (std::size_t i = 0; i < seeds; ++i)
        if (bad[i]) v.push_back({"seed " + std::to_string(i), 0.0, 0.0});
    return emit_verify("chain", seeds, std::move(v), c, opts);
}

int run_verify_lemma2(std::uint64_t qmax, std::vector<double> xs, const CommonOpts& opts) {
    Constants c = resolve_constants(opts);
    if (xs.empty()) xs = {50.0, 500.0, 5000.0};
    struct Item {
        std::uint64_t q, index;
    };
    std::vector<Item> items;
    for (std::uint64_t q = 3; q <= qmax; ++q) {
        DirichletGroup g(q);
        for (auto idx : g.primitive_indices()) items.push_back({q, idx});
    }
    std::uint64_t limit = static_cast<std::uint64_t>(*std::max_element(xs.begin(), xs.end()));
    std::vector<std::vector<Violation>> per_item(items.size());
    for_each_indexed(items.size(), opts.jobs, [&](std::size_t i) {
        auto [q, idx] = items[i];
        DirichletGroup g(q);
        auto spec = dirichlet_spec(q, idx, limit);
        for (double x : xs) {
            auto params = BoundParams::at_omega(x, c);
            double oracle = std::log(
                std::abs(dirichlet_l_from_table(g, idx, make_hurwitz_table(q, params.sigma0))));
            auto b2 = lemma2_rhs(spec, params);
            auto b3 = lemma3_rhs(spec, params);
            std::string tag =
                "q=" + std::to_string(q) + " index=" + std::to_string(idx) + " x=" + fmt(x);
            if (oracle > b2.bound_log) per_item[i].push_back({tag + " lemma2", oracle, b2.bound_log});
            if (oracle > b3.bound_log) per_item[i].push_back({tag + " lemma3", oracle, b3.bound_log});
        }
    });
    std::vector<Violation> v;
    for (auto& pv : per_item) v.insert(v.end(), pv.begin(), pv.end());
    return emit_verify("lemma2", items.size() * xs.size(), std::move(v), c, opts);
}

int run_verify_lemma1(const SpecSource& src, const CommonOpts& opts, const std::string& zeros_path,
                      double s, double x) {
    Constants c = resolve_constants(opts);
    auto spec = make_spec(src);
    if (zeros_path.empty()) throw std::domain_error("verify lemma1 needs --zeros <path>");
    auto zeros = load_zeros(zeros_path);
    auto r = lemma1_rhs(spec, cplx{s, 0.0}, x, zeros, c);
    auto ld = log_deriv_eval(spec, s, spec.local_limit);
    double oracle = -ld.value.real();
    double residual = std::abs(r.value.real() - oracle);
    double budget = r.zero_tail_estimate + r.deriv_tail + ld.tail_bound + 1e-3;
    ordered_json details;
    details["oracle"] = oracle;
    details["assembled"] = r.value.real();
    details["residual"] = residual;
    details["zero_tail_estimate"] = r.zero_tail_estimate;
    details["budget"] = budget;
    details["zeros_used"] = zeros.size();
    ordered_json excl = ordered_json::array();
    for (auto [ii, kk] : r.exclusions_applied) excl.push_back(ordered_json::array({ii, kk}));
    details["trivial_zero_exclusions"] = excl;
    std::vector<Violation> v;
    if (residual > budget) v.push_back({"lemma1 residual", residual, budget});
    return emit_verify("lemma1", 1, std::move(v), c, opts, details);
}

int run_verify_lemma5(const SpecSource& src, const CommonOpts& opts, const std::string& zeros_path,
                      double sigma, double x) {
    Constants c = resolve_constants(opts);
    auto spec = make_spec(src);
    if (zeros_path.empty()) throw std::domain_error("verify lemma5 needs --zeros <path>");
    auto zeros = load_zeros(zeros_path);
    auto r = verify_lemma5(spec, sigma, x, zeros, c);
    double budget = r.zero_tail_estimate + r.oracle_tail + 1e-2;
    ordered_json details;
    details["oracle"] = r.oracle;
    details["assembled"] = r.assembled;
    details["residual"] = r.residual;
    details["budget"] = budget;
    details["contour_A"] = r.contour_A;
    std::vector<Violation> v;
    if (r.residual > budget) v.push_back({"lemma5 residual", r.residual, budget});
    return emit_verify("lemma5", 1, std::move(v), c, opts, details);
}

int run_verify_monotone(std::uint64_t count, const CommonOpts& opts) {
    Constants c = resolve_constants(opts);
    std::vector<LFunctionSpec> specs;
    specs.push_back(zeta_spec(100000));
    std::uint64_t q = 3, added = 0;
    while (added < count) {
        DirichletGroup g(q);
        auto prim = g.primitive_indices();
        for (auto idx : prim) {
            specs.push_back(dirichlet_spec(q, idx, 100000));
            if (++added >= count) break;
        }
        ++q;
    }
    std::vector<std::vector<Violation>> per_spec(specs.size());
    for_each_indexed(specs.size(), opts.jobs, [&](std::size_t i) {
        const auto& spec = specs[i];
        double prev = -1e300;
        for (int step = 1; step <= 200; ++step) {
            double sigma = 1.0 + 0.01 * step;
            double cur = xi_log_abs(spec, sigma, spec.local_limit);
            if (cur < prev - 1e-9 * std::abs(prev))
                per_spec[i].push_back({spec.label + " sigma=" + fmt(sigma), cur, prev});
            prev = cur;
        }
    });
    std::vector<Violation> v;
    for (auto& pv : per_spec) v.insert(v.end(), pv.begin(), pv.end());
    return emit_verify("monotone", specs.size() * 200, std::move(v), c, opts);
}

int run_lower(const SpecSource& src, const CommonOpts& opts, double c0, double C0, double C1,
              double C2) {
    Constants c = resolve_constants(opts);
    auto spec = make_spec(src);
    auto rs = rankin_selberg_spec(spec, conjugate_spec(spec), 1);
    LowerBoundConfig cfg;
    cfg.c0 = c0;
    cfg.C0 = C0;
    cfg.C1 = C1;
    cfg.C2 = C2;
    cfg.x_max = c.x_max;
    auto r = lower_bound_L1(spec, rs, cfg, c);
    ordered_json j;
    j["command"] = "lower";
    j["spec"] = spec.label;
    j["lower_bound"] = r.lower_bound;
    j["positive"] = r.positive;
    j["sigma1"] = r.sigma1;
    j["x_used"] = r.x_used;
    j["log_x_unclamped"] = r.log_x_unclamped;
    j["clamped"] = r.clamped;
    j["heuristic"] = r.heuristic;
    j["log_l_sigma1_bound"] = r.log_l_sigma1_bound;
    j["prime_sum"] = r.prime_sum;
    j["residual_envelope"] = r.residual_envelope;
    j["derivative_push"] = r.derivative_push;
    j["c0"] = c0;
    j["C0"] = C0;
    j["constants_digest"] = c.digest();
    if (opts.format == "csv") {
        emit("spec,lower_bound,positive,sigma1,x_used,clamped\n" + spec.label + "," +
                 fmt(r.lower_bound) + "," + (r.positive ? "1" : "0") + "," + fmt(r.sigma1) + "," +
                 fmt(r.x_used) + "," + (r.clamped ? "1" : "0"),
             opts.out_path);
    } else {
        emit(j.dump(2), opts.out_path);
    }
    return 0;
}

int run_corpus(std::uint64_t qmax, const std::string& mode, const CommonOpts& opts) {
    Constants c = resolve_constants(opts);
    struct Item {
        std::uint64_t q, index;
    };
    std::vector<Item> items;
    for (std::uint64_t q = 3; q <= qmax; ++q) {
        DirichletGroup g(q);
        for (auto idx : g.primitive_indices()) items.push_back({q, idx});
    }
    std::vector<BoundReport> reports(items.size());
    std::vector<std::string> labels(items.size());
    for_each_indexed(items.size(), opts.jobs, [&](std::size_t i) {
        auto spec = dirichlet_spec(items[i].q, items[i].index, 1000);
        labels[i] = spec.label;
        if (mode == "theorem1") {
            reports[i] = theorem1_bound(spec, c);
        } else if (mode == "grh") {
            reports[i] = grh_bound(spec, 0.0, c);
        } else {
            auto params = BoundParams::at_omega(std::min(1000.0, c.x_max), c);
            reports[i] = mode == "lemma2" ? lemma2_rhs(spec, params) : lemma3_rhs(spec, params);
        }
    });
    if (opts.format == "csv") {
        std::string csv = report_csv_header();
        for (std::size_t i = 0; i < items.size(); ++i)
            csv += "\n" + report_csv_row(reports[i], c, labels[i]);
        emit(csv, opts.out_path);
    } else {
        ordered_json arr = ordered_json::array();
        for (std::size_t i = 0; i < items.size(); ++i)
            arr.push_back(report_json(reports[i], c, labels[i]));
        ordered_json j;
        j["command"] = "corpus";
        j["mode"] = mode;
        j["count"] = items.size();
        j["constants_digest"] = c.digest();
        j["reports"] = arr;
        emit(j.dump(2), opts.out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerically verifiable upper/lower bound pipelines for L-functions near s = 1"};
    app.require_subcommand(1);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate L(sigma), L'/L, or log|Xi| on a grid");
    SpecSource eval_src;
    CommonOpts eval_opts;
    std::string eval_what = "value";
    double eval_lo = 2.0, eval_hi = 2.0, eval_step = 0.5;
    add_spec_options(eval_cmd, eval_src);
    add_common(eval_cmd, eval_opts);
    eval_cmd->add_option("--what", eval_what, "value|logderiv|xi");
    eval_cmd->add_option("--sigma", eval_lo, "evaluation point (or sweep start)");
    eval_cmd->add_option("--sigma-hi", eval_hi, "sweep end");
    eval_cmd->add_option("--sigma-step", eval_step, "sweep step");

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "assemble an upper bound report");
    SpecSource bound_src;
    CommonOpts bound_opts;
    std::string bound_mode;
    double bound_x = 0.0, grh_delta = 0.25;
    unsigned sym_l = 1;
    bound_cmd->add_option("mode", bound_mode, "theorem1|theorem2|sympower|shortsum|grh|lemma2|lemma3")
        ->required();
    add_spec_options(bound_cmd, bound_src);
    add_common(bound_cmd, bound_opts);
    bound_cmd->add_option("--x", bound_x, "prime-sum cutoff override");
    bound_cmd->add_option("--l", sym_l, "symmetric-power order");
    bound_cmd->add_option("--delta", grh_delta, "GRH coefficient growth exponent");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run an inequality/identity verification");
    SpecSource verify_src;
    CommonOpts verify_opts;
    std::string verify_mode, zeros_path;
    std::uint64_t seeds = 100000, qmax = 100, mono_count = 20;
    double verify_s = 2.0, verify_sigma = 1.5, verify_x = 100.0;
    std::vector<double> verify_xs;
    verify_cmd->add_option("mode", verify_mode, "lemma1|lemma2|lemma5|rankin|chain|monotone")
        ->required();
    add_spec_options(verify_cmd, verify_src);
    add_common(verify_cmd, verify_opts);
    verify_cmd->add_option("--seeds", seeds, "number of random trials");
    verify_cmd->add_option("--qmax", qmax, "largest modulus in the character sweep");
    verify_cmd->add_option("--count", mono_count, "number of Dirichlet specs for monotone");
    verify_cmd->add_option("--zeros", zeros_path, "zeros file (gamma, or beta gamma, per line)");
    verify_cmd->add_option("--s", verify_s, "evaluation point for lemma1");
    verify_cmd->add_option("--sigma", verify_sigma, "evaluation point for lemma5");
    verify_cmd->add_option("--x", verify_x, "explicit-formula cutoff");
    verify_cmd->add_option("--x-list", verify_xs, "cutoff list for the lemma2 sweep");

    // lower
    auto* lower_cmd = app.add_subcommand("lower", "corollary-4 lower bound at s = 1");
    SpecSource lower_src;
    CommonOpts lower_opts;
    double c0 = 0.1, C0 = 5.0, C1 = 1.0, C2 = 1.0;
    add_spec_options(lower_cmd, lower_src);
    add_common(lower_cmd, lower_opts);
    lower_cmd->add_option("--c0", c0, "zero-free-region constant");
    lower_cmd->add_option("--C0", C0, "sigma_1 placement constant");
    lower_cmd->add_option("--C1", C1, "derivative push scale");
    lower_cmd->add_option("--C2", C2, "derivative push rate");

    // corpus
    auto* corpus_cmd = app.add_subcommand("corpus", "batch reports over the character corpus");
    CommonOpts corpus_opts;
    std::string corpus_mode = "theorem1";
    std::uint64_t corpus_qmax = 50;
    add_common(corpus_cmd, corpus_opts);
    corpus_cmd->add_option("--qmax", corpus_qmax, "largest modulus");
    corpus_cmd->add_option("--mode", corpus_mode, "theorem1|lemma2|lemma3|grh");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval_cmd->parsed())
            return run_eval(eval_src, eval_opts, eval_what, eval_lo, eval_hi, eval_step);
        if (bound_cmd->parsed())
            return run_bound(bound_mode, bound_src, bound_opts, bound_x, sym_l, grh_delta);
        if (verify_cmd->parsed()) {
            if (verify_mode == "rankin") return run_verify_rankin(seeds, verify_opts);
            if (verify_mode == "chain") return run_verify_chain(seeds, verify_opts);
            if (verify_mode == "lemma2") return run_verify_lemma2(qmax, verify_xs, verify_opts);
            if (verify_mode == "lemma1")
                return run_verify_lemma1(verify_src, verify_opts, zeros_path, verify_s, verify_x);
            if (verify_mode == "lemma5")
                return run_verify_lemma5(verify_src, verify_opts, zeros_path, verify_sigma, verify_x);
            if (verify_mode == "monotone") return run_verify_monotone(mono_count, verify_opts);
            throw std::domain_error("unknown verify mode \"" + verify_mode + "\"");
        }
        if (lower_cmd->parsed()) return run_lower(lower_src, lower_opts, c0, C0, C1, C2);
        if (corpus_cmd->parsed()) return run_corpus(corpus_qmax, corpus_mode, corpus_opts);
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const data_gap_error& e) {
        std::cerr << "data gap: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::range_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
