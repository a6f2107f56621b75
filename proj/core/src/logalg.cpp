#include "carlitz/logalg.hpp"

#include <chrono>
#include <map>

#include "carlitz/parallel.hpp"
#include "carlitz/symfun.hpp"

namespace carlitz {

namespace {

std::uint64_t q_pow(const FieldPtr& ctx, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) r *= ctx->q();
    return r;
}

// sum over the monic range of term(a)/a, coefficient-wise
KPoly monic_fraction_sum(const FieldPtr& ctx, unsigned i, const SumOptions& opt,
                         const std::function<KPoly(const Poly&)>& term) {
    const MonicRange range(ctx, i, opt.cap);
    using TermMap = std::map<Mono, FractionSum>;
    std::vector<TermMap> partial(parallel_slot_count(range.size(), opt.threads));
    parallel_chunks(range.size(), opt.threads, [&](std::uint64_t b, std::uint64_t e, unsigned slot) {
        for (std::uint64_t idx = b; idx < e; ++idx) {
            const Poly a = range.at(idx);
            const KPoly num = term(a);
            for (const auto& [mono, c] : num.terms()) {
                auto it = partial[slot].find(mono);
                if (it == partial[slot].end())
                    it = partial[slot].emplace(mono, FractionSum(ctx)).first;
                it->second.add(c.num(), c.den() * a);
            }
        }
    });
    KPoly out = k_zero_poly(ctx);
    for (const auto& slot_map : partial)
        for (const auto& [mono, acc] : slot_map) out.add_term(mono, acc.value());
    return out;
}

// e_{mu,mu-d}(theta^{q^{mu-1}}, ..., theta^q, theta)
Poly theta_tower_esym(const FieldPtr& ctx, unsigned mu, unsigned d) {
    std::vector<Poly> nodes;
    nodes.reserve(mu);
    for (unsigned n = 0; n < mu; ++n) nodes.push_back(Poly::theta(ctx).frobenius_twist(n));
    return elementary_symmetric(std::span<const Poly>(nodes),
                                static_cast<long long>(mu - d), Poly::zero(ctx));
}

// One factor of the closed lambda product (without the 1/L_i):
//   sum_{d=0}^{mu} (-1)^{mu-d} e_{mu,mu-d}(...) C_{theta^d}(x)^{q^i}
KPoly lambda_closed_factor(const FieldPtr& ctx, unsigned i, unsigned mu) {
    KPoly acc = k_zero_poly(ctx);
    const std::uint64_t qi = q_pow(ctx, i);
    for (unsigned d = 0; d <= mu; ++d) {
        Poly e = theta_tower_esym(ctx, mu, d);
        if ((mu - d) % 2 != 0) e = -e;
        const KPoly cpow = carlitz_action_on_x(Poly::theta_pow(ctx, d)).char_power(qi);
        acc += cpow.scaled(RatFun(e));
    }
    return acc;
}

}  // namespace

std::vector<unsigned> digit_positions(std::uint64_t q, std::uint64_t m) {
    std::vector<unsigned> out;
    unsigned pos = 0;
    while (m != 0) {
        for (std::uint64_t d = m % q; d != 0; --d) out.push_back(pos);
        m /= q;
        ++pos;
    }
    return out;
}

KPoly lambda_brute(const FieldPtr& ctx, unsigned i, std::uint64_t m, const SumOptions& opt) {
    return monic_fraction_sum(ctx, i, opt,
                              [&](const Poly& a) { return carlitz_action_on_x(a).pow(m); });
}

KPoly lambda_closed_single(const FieldPtr& ctx, unsigned i, unsigned mu) {
    return lambda_closed_factor(ctx, i, mu)
        .scaled(RatFun(Poly::one(ctx), factorial_l(ctx, i)));
}

KPoly lambda_closed_multi(const FieldPtr& ctx, unsigned i, std::span<const unsigned> mus) {
    if (mus.empty() || mus.size() > ctx->q() - 1)
        throw usage_error("product form needs 1 <= s <= q-1 digits");
    KPoly acc = KPoly::constant(RatFun::one(ctx));
    for (unsigned mu : mus) acc *= lambda_closed_factor(ctx, i, mu);
    return acc.scaled(RatFun(Poly::one(ctx), factorial_l(ctx, i)));
}

TruncSeries special_poly_series(const FieldPtr& ctx, std::uint64_t m, long long order,
                                const SumOptions& opt) {
    KPoly beta = k_zero_poly(ctx);
    beta.add_term(Mono::var(Var::x(), static_cast<long long>(m)), RatFun::one(ctx));
    return special_poly_linear(beta, order, opt);
}

TruncSeries special_poly_linear(const KPoly& beta, long long order, const SumOptions& opt) {
    const FieldPtr& ctx = beta.proto().ctx();
    for (const auto& [mono, c] : beta.terms()) {
        if (!mono.without(Var::x()).is_unit())
            throw usage_error("beta must be a polynomial in x alone");
        if (!c.is_integral()) throw usage_error("beta must have coefficients in A");
    }
    KPoly arg = k_zero_poly(ctx);
    for (unsigned i = 0; q_pow(ctx, i) < static_cast<std::uint64_t>(order); ++i) {
        KPoly lam = k_zero_poly(ctx);
        try {
            lam = monic_fraction_sum(ctx, i, opt, [&](const Poly& a) {
                return beta.substitute(Var::x(), carlitz_action_on_x(a));
            });
        } catch (const resource_error& err) {
            throw resource_error(std::string(err.what()) + "; largest completed degree: " +
                                 (i == 0 ? std::string("none") : std::to_string(i - 1)));
        }
        arg += lam * KPoly::variable(RatFun::zero(ctx), Var::z(),
                                     static_cast<long long>(q_pow(ctx, i)));
    }
    return exp_carlitz(TruncSeries(order, arg));
}

KPoly special_poly_thakur(const FieldPtr& ctx, std::uint64_t m) {
    const auto mus = digit_positions(ctx->q(), m);
    const std::size_t s = mus.size();
    if (s == 0) throw unsupported_error("no closed form for m = 0");
    if (s > ctx->q() - 1)
        throw unsupported_error("no closed form when the base-q digit sum " + std::to_string(s) +
                                " exceeds q-1 = " + std::to_string(ctx->q() - 1));

    KPoly acc = k_zero_poly(ctx);
    // odometer over (d_1..d_s), 0 <= d_r <= mu_r
    std::vector<unsigned> d(s, 0);
    while (true) {
        Poly coeff = Poly::one(ctx);
        unsigned sign = 0;
        KPoly inner = KPoly::constant(RatFun::one(ctx));
        for (std::size_t r = 0; r < s; ++r) {
            coeff *= theta_tower_esym(ctx, mus[r], d[r]);
            sign += mus[r] - d[r];
            inner *= carlitz_action_on_x(Poly::theta_pow(ctx, d[r]));
        }
        inner *= KPoly::variable(RatFun::zero(ctx), Var::z(), 1);
        KPoly term = carlitz_eval(coeff, inner);
        acc += (sign % 2 == 0) ? term : -term;

        std::size_t r = 0;
        while (r < s && d[r] == mus[r]) d[r++] = 0;
        if (r == s) break;
        ++d[r];
    }
    if (!all_integral(acc))
        throw internal_error("Thakur special polynomial has a non-integral coefficient");
    return acc;
}

LogAlgReport verify_log_algebraicity(const FieldPtr& ctx, std::uint64_t m, long long order,
                                     const SumOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    LogAlgReport rep{.m = m, .q = ctx->q(), .order = order, .poly = k_zero_poly(ctx)};

    rep.poly = special_poly_thakur(ctx, m);
    rep.integral = all_integral(rep.poly);  // also asserted inside the construction

    const TruncSeries series = special_poly_series(ctx, m, order, opt);
    rep.match = rep.poly.truncated(Var::z(), order) == series.poly();

    for (unsigned i = 0; q_pow(ctx, i) < static_cast<std::uint64_t>(order); ++i) rep.max_i = i;
    rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return rep;
}

}  // namespace carlitz
