// Command-line front end: computes brackets, power sums, hyperderivative
// sums, and log-algebraicity special polynomials over A = F_q[theta], and
// runs the library's verification suites.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "carlitz/carlitz.hpp"
#include "carlitz/hyperderiv.hpp"
#include "carlitz/json_io.hpp"
#include "carlitz/logalg.hpp"
#include "carlitz/parse.hpp"
#include "carlitz/powersums.hpp"
#include "carlitz/render.hpp"
#include "carlitz/verify.hpp"

namespace {

using namespace carlitz;

struct GlobalOpts {
    std::uint64_t q = 0;  // 0: use p/e/modulus
    std::uint32_t p = 3;
    std::uint32_t e = 1;
    std::string modulus;  // comma-separated, ascending
    std::uint64_t cap = kDefaultEnumCap;
    bool cap_set = false;
    std::string format = "text";
    std::uint64_t seed = 0;
    long long trunc = 0;  // 0: default q^3 capped at 256
    unsigned threads = 1;
};

FieldPtr make_field(const GlobalOpts& g) {
    if (g.q != 0) return FieldCtx::make_q(g.q);
    if (g.e == 1) return FieldCtx::make_prime(g.p);
    std::vector<std::uint32_t> mod;
    std::stringstream ss(g.modulus);
    std::string item;
    while (std::getline(ss, item, ',')) mod.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    if (mod.empty()) throw usage_error("extension fields need --modulus c0,c1,...,1");
    return FieldCtx::make(g.p, g.e, mod);
}

std::uint64_t effective_cap(const GlobalOpts& g) {
    if (g.cap_set) return g.cap;
    if (const char* env = std::getenv("CARLITZ_LAB_CAP")) return std::stoull(env);
    return g.cap;
}

long long effective_trunc(const GlobalOpts& g, const FieldPtr& ctx) {
    if (g.trunc > 0) return g.trunc;
    const auto q = ctx->q();
    const std::uint64_t q3 = q * q * q;
    return static_cast<long long>(std::min<std::uint64_t>(q3, 256));
}

bool json_mode(const GlobalOpts& g) { return g.format == "json"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ------------------------------------------------------------- subcommands

int cmd_bracket(const GlobalOpts& g, const std::string& a_str, long long k_opt) {
    const FieldPtr ctx = make_field(g);
    const Poly a = parse_poly(ctx, a_str);
    std::vector<unsigned> ks;
    if (k_opt >= 0) {
        ks.push_back(static_cast<unsigned>(k_opt));
    } else {
        for (long long k = 0; k <= std::max<long long>(a.degree(), 0); ++k)
            ks.push_back(static_cast<unsigned>(k));
    }

    Json out = Json::array();
    bool all_agree = true;
    for (unsigned k : ks) {
        const Poly direct = bracket_direct(a, k);
        const Poly fraction = bracket_carlitz_formula(a, k);
        const Poly hyper = bracket_hyper_formula(a, k);
        bool agree = direct == fraction && direct == hyper;
        Json entry{{"k", k},
                   {"value", to_json(direct)},
                   {"formulas",
                    Json{{"direct", to_json(direct)},
                         {"carlitz", to_json(fraction)},
                         {"hyperderivative", to_json(hyper)}}}};
        // theta-power formula applies when a is a monomial theta^m
        if (!a.is_zero() && a.coeffs().size() == static_cast<std::size_t>(a.degree()) + 1) {
            bool monomial = a.lead().is_one();
            for (long long n = 0; monomial && n < a.degree(); ++n)
                monomial = a.coeff(static_cast<std::size_t>(n)).is_zero();
            if (monomial && k <= a.degree()) {
                const Poly tp = bracket_theta_power(ctx, static_cast<unsigned>(a.degree()), k);
                agree = agree && tp == direct;
                entry["formulas"]["theta_power"] = to_json(tp);
            }
        }
        entry["agreement"] = agree;
        all_agree &= agree;
        out.push_back(std::move(entry));
        if (!json_mode(g))
            std::cout << "<" << render(a) << ">_" << k << " = " << render(direct)
                      << "  (agreement: " << (agree ? "true" : "false") << ")\n";
    }
    if (json_mode(g)) emit(Json{{"a", to_json(a)}, {"brackets", out}});
    return all_agree ? 0 : 1;
}

int cmd_power_sum(const GlobalOpts& g, unsigned i, long long k, const std::string& exps) {
    const FieldPtr ctx = make_field(g);
    const SumOptions opt{effective_cap(g), g.threads};

    std::vector<unsigned> ells;
    if (!exps.empty()) {
        std::stringstream ss(exps);
        std::string item;
        while (std::getline(ss, item, ',')) ells.push_back(static_cast<unsigned>(std::stoul(item)));
        k = -1;
        for (unsigned l : ells) {
            std::uint64_t ql = 1;
            for (unsigned n = 0; n < l; ++n) ql *= ctx->q();
            k += static_cast<long long>(ql);
        }
    } else if (k >= 0 && sigma_q(ctx->q(), static_cast<std::uint64_t>(k) + 1) <= ctx->q() - 1) {
        // k + 1 = sum of at most q-1 q-powers: the Carlitz-Lee form applies
        ells = digit_positions(ctx->q(), static_cast<std::uint64_t>(k) + 1);
    }

    const RatFun brute = power_sum_brute(ctx, i, k, opt);
    Json out{{"i", i}, {"k", k}, {"brute", to_json(brute)}};
    bool agree = true;
    bool have_closed = false;
    RatFun closed = RatFun::zero(ctx);
    if (!ells.empty() && ells.size() <= ctx->q() - 1) {
        have_closed = true;
        closed = power_sum_closed(ctx, i, ells);
    } else if (k == -1) {
        have_closed = true;  // S_i(-1) = 1/L_i
        closed = RatFun(Poly::one(ctx), factorial_l(ctx, i));
    }
    if (have_closed) {
        agree = closed == brute;
        out["closed"] = to_json(closed);
        out["agreement"] = agree;
    }
    if (k >= 0) out["vanishes_by_theorem"] = power_sum_vanishes(ctx, i, static_cast<std::uint64_t>(k));

    if (json_mode(g)) {
        emit(out);
    } else {
        std::cout << "S_" << i << "(" << k << ") = " << render(brute) << "\n";
        if (have_closed)
            std::cout << "closed form = " << render(closed)
                      << "  (agreement: " << (agree ? "true" : "false") << ")\n";
    }
    return agree ? 0 : 1;
}

std::vector<HyperFactor> parse_pairs(const std::string& pairs) {
    std::vector<HyperFactor> out;
    std::stringstream ss(pairs);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw usage_error("--pairs expects j:mu entries separated by commas");
        out.push_back({static_cast<unsigned>(std::stoul(item.substr(0, colon))),
                       static_cast<unsigned>(std::stoul(item.substr(colon + 1)))});
    }
    if (out.empty()) throw usage_error("--pairs must name at least one j:mu factor");
    return out;
}

int cmd_hyper_sum(const GlobalOpts& g, unsigned i, const std::string& pairs) {
    const FieldPtr ctx = make_field(g);
    const SumOptions opt{effective_cap(g), g.threads};
    const auto factors = parse_pairs(pairs);

    const RatFun brute = hyper_sum_brute(ctx, i, factors, true, opt);
    Json jpairs = Json::array();
    for (const auto& f : factors) jpairs.push_back(Json{{"j", f.j}, {"mu", f.mu}});
    Json out{{"i", i}, {"pairs", jpairs}, {"brute", to_json(brute)}};

    bool agree = true;
    const bool closed_applies = i >= 1 && factors.size() >= 1 &&
                                factors.size() <= ctx->q() - 1 &&
                                std::all_of(factors.begin(), factors.end(),
                                            [&](const HyperFactor& f) { return f.j <= i; });
    if (closed_applies) {
        const RatFun closed = hyper_sum_closed(ctx, i, factors);
        agree = closed == brute;
        out["closed"] = to_json(closed);
        out["agreement"] = agree;
        if (!json_mode(g))
            std::cout << "H = " << render(brute) << "\nclosed form = " << render(closed)
                      << "  (agreement: " << (agree ? "true" : "false") << ")\n";
    } else if (!json_mode(g)) {
        std::cout << "H = " << render(brute) << "  (no closed form for these parameters)\n";
    }
    if (json_mode(g)) emit(out);
    return agree ? 0 : 1;
}

int cmd_special_poly(const GlobalOpts& g, std::uint64_t m) {
    const FieldPtr ctx = make_field(g);
    const SumOptions opt{effective_cap(g), g.threads};
    const auto rep = verify_log_algebraicity(ctx, m, effective_trunc(g, ctx), opt);
    if (json_mode(g)) {
        emit(to_json(rep));
    } else {
        std::cout << render(rep.poly) << "\n";
        std::cout << "match mod z^" << rep.order << ": " << (rep.match ? "true" : "false")
                  << ", integral: " << (rep.integral ? "true" : "false") << ", max_i "
                  << rep.max_i << ", " << rep.millis << " ms\n";
    }
    return rep.pass() ? 0 : 1;
}

int cmd_hyper(const GlobalOpts& g, const std::string& a_str, unsigned j) {
    const FieldPtr ctx = make_field(g);
    const Poly a = parse_poly(ctx, a_str);
    const Poly d = hyperderivative(a, j);
    if (json_mode(g))
        emit(Json{{"a", to_json(a)}, {"j", j}, {"value", to_json(d)}});
    else
        std::cout << render(d) << "\n";
    return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite) {
    VerifyConfig cfg{g.seed, g.threads, effective_cap(g)};
    const auto suites = run_suites(suite, cfg);
    bool all_pass = true;
    Json jsuites = Json::array();
    for (const auto& s : suites) {
        Json checks = Json::array();
        for (const auto& c : s.checks) {
            all_pass &= c.pass;
            checks.push_back(Json{{"name", c.name},
                                  {"pass", c.pass},
                                  {"detail", c.detail},
                                  {"millis", c.millis}});
            if (!json_mode(g)) {
                std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
                if (!c.pass) std::cout << "\n       " << c.detail;
                std::cout << " (" << c.millis << " ms)\n";
            }
        }
        jsuites.push_back(Json{{"suite", s.suite}, {"checks", checks}});
    }
    if (json_mode(g))
        emit(Json{{"seed", g.seed}, {"suites", jsuites}, {"all_pass", all_pass}});
    else
        std::cout << (all_pass ? "all checks passed" : "FAILURES present") << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Carlitz-module identity calculator over F_q[theta]"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--q", g.q, "field size (prime, or built-in 4/8/9)");
    app.add_option("--p", g.p, "characteristic (with --e/--modulus)");
    app.add_option("--e", g.e, "extension degree");
    app.add_option("--modulus", g.modulus, "irreducible modulus, ascending coefficients");
    app.add_option("--cap", g.cap, "enumeration cap")->each([&g](const std::string&) {
        g.cap_set = true;
    });
    app.add_option("--format", g.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "seed for randomized verification tiers");
    app.add_option("--trunc", g.trunc, "z-adic truncation order N");
    app.add_option("--threads", g.threads, "worker count for brute-force sums");

    std::string a_str, pairs, exps, suite = "all";
    long long k_bracket = -1, k_sum = 0;
    unsigned i_param = 0, j_param = 0;
    std::uint64_t m_param = 1;

    auto* bracket = app.add_subcommand("bracket", "Carlitz multiplication coefficients <a>_k");
    bracket->add_option("--a", a_str, "polynomial literal, t denotes theta")->required();
    bracket->add_option("--k", k_bracket, "tau-degree (all k when omitted)");

    auto* power = app.add_subcommand("power-sum", "power sums S_i(k) over monic degree-i a");
    power->add_option("--i", i_param, "degree of the monic range")->required();
    power->add_option("--k", k_sum, "exponent (negative allowed)");
    power->add_option("--exponents", exps, "closed-form exponents l1,l2,... for k = sum q^l - 1");

    auto* hyper_sum = app.add_subcommand("hyper-sum", "hyperderivative power sums over a");
    hyper_sum->add_option("--i", i_param, "degree of the monic range")->required();
    hyper_sum->add_option("--pairs", pairs, "factors j:mu,j:mu,...")->required();

    auto* special = app.add_subcommand("special-poly", "log-algebraicity special polynomial P_m");
    special->add_option("--m", m_param, "exponent of beta = x^m")->required();

    auto* hyper = app.add_subcommand("hyper", "hyperderivative of a polynomial");
    hyper->add_option("--a", a_str, "polynomial literal, t denotes theta")->required();
    hyper->add_option("--j", j_param, "order")->required();

    auto* verify = app.add_subcommand("verify", "run identity verification suites");
    verify->add_option("suite", suite, "algebra|hyper|symfun|vandermonde|carlitz|powersums|logalg|all");

    // global flags remain valid after the subcommand name
    for (auto* sub : {bracket, power, hyper_sum, special, hyper, verify}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (bracket->parsed()) return cmd_bracket(g, a_str, k_bracket);
        if (power->parsed()) return cmd_power_sum(g, i_param, k_sum, exps);
        if (hyper_sum->parsed()) return cmd_hyper_sum(g, i_param, pairs);
        if (special->parsed()) return cmd_special_poly(g, m_param);
        if (hyper->parsed()) return cmd_hyper(g, a_str, j_param);
        if (verify->parsed()) return cmd_verify(g, suite);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
