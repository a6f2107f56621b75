#include "carlitz/powersums.hpp"

#include <map>

#include "carlitz/hyperderiv.hpp"
#include "carlitz/parallel.hpp"
#include "carlitz/symfun.hpp"

namespace carlitz {

namespace {

std::uint64_t q_pow(const FieldPtr& ctx, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) r *= ctx->q();
    return r;
}

// Accumulates sums of (numerator, denominator) fraction terms across a
// partition of the monic range.  Slots combine in index order; the final
// value is canonical, so the partition never shows in the result.
RatFun summed_fractions(const FieldPtr& ctx, const MonicRange& range, unsigned threads,
                        const std::function<void(const Poly&, FractionSum&)>& per_element) {
    const unsigned slots = parallel_slot_count(range.size(), threads);
    std::vector<FractionSum> partial(slots, FractionSum(ctx));
    parallel_chunks(range.size(), threads, [&](std::uint64_t b, std::uint64_t e, unsigned slot) {
        for (std::uint64_t idx = b; idx < e; ++idx) per_element(range.at(idx), partial[slot]);
    });
    FractionSum total(ctx);
    for (const auto& p : partial) total.add(p.value());
    return total.value();
}

}  // namespace

RatFun power_sum_brute(const FieldPtr& ctx, unsigned i, long long k, const SumOptions& opt) {
    const MonicRange range(ctx, i, opt.cap);
    if (k >= 0) {
        // polynomial sum, no fractions involved
        std::vector<Poly> partial(parallel_slot_count(range.size(), opt.threads),
                                  Poly::zero(ctx));
        parallel_chunks(range.size(), opt.threads,
                        [&](std::uint64_t b, std::uint64_t e, unsigned slot) {
                            for (std::uint64_t idx = b; idx < e; ++idx)
                                partial[slot] += range.at(idx).pow(static_cast<std::uint64_t>(k));
                        });
        Poly total = Poly::zero(ctx);
        for (const auto& p : partial) total += p;
        return RatFun(total);
    }
    const auto m = static_cast<std::uint64_t>(-k);
    return summed_fractions(ctx, range, opt.threads, [&](const Poly& a, FractionSum& acc) {
        acc.add(Poly::one(ctx), a.pow(m));
    });
}

unsigned sigma_q(std::uint64_t q, std::uint64_t k) {
    unsigned s = 0;
    while (k != 0) {
        s += static_cast<unsigned>(k % q);
        k /= q;
    }
    return s;
}

bool power_sum_vanishes(const FieldPtr& ctx, unsigned i, std::uint64_t k) {
    if (sigma_q(ctx->q(), k) < static_cast<std::uint64_t>(i) * (ctx->q() - 1)) return true;
    // k < q^i - 1, computed without overflowing q^i
    std::uint64_t qi = 1;
    for (unsigned n = 0; n < i; ++n) {
        if (qi > (UINT64_MAX - 1) / ctx->q()) return true;  // q^i - 1 exceeds any representable k
        qi *= ctx->q();
    }
    return k < qi - 1;
}

RatFun power_sum_closed(const FieldPtr& ctx, unsigned i, std::span<const unsigned> ells) {
    const std::size_t s = ells.size();
    if (s < 1 || s > ctx->q() - 1)
        throw usage_error("closed form needs 1 <= s <= q-1 exponents, got " + std::to_string(s));
    for (unsigned l : ells)
        if (l < i) return RatFun::zero(ctx);
    Poly num = Poly::one(ctx);
    Poly den = factorial_l(ctx, i);
    for (unsigned l : ells) {
        num *= factorial_d(ctx, l);
        den *= factorial_d(ctx, l - i).frobenius_twist(i);
    }
    return RatFun(num, den);
}

PellarinSides angles_pellarin_both_sides(const FieldPtr& ctx, unsigned i, unsigned s,
                                         const SumOptions& opt) {
    if (s > ctx->q() - 1) throw usage_error("need 0 <= s <= q-1, got s = " + std::to_string(s));

    // brute side: per-monomial fraction accumulators over the monic range
    const MonicRange range(ctx, i, opt.cap);
    using TermMap = std::map<Mono, FractionSum>;
    std::vector<TermMap> partial(parallel_slot_count(range.size(), opt.threads));
    parallel_chunks(range.size(), opt.threads, [&](std::uint64_t b, std::uint64_t e, unsigned slot) {
        for (std::uint64_t idx = b; idx < e; ++idx) {
            const Poly a = range.at(idx);
            FqPoly prod = FqPoly::constant(Fq::one(ctx));
            for (unsigned r = 1; r <= s; ++r) prod *= fq_on_var(a, Var::t_sub(r));
            for (const auto& [mono, c] : prod.terms()) {
                auto it = partial[slot].find(mono);
                if (it == partial[slot].end())
                    it = partial[slot].emplace(mono, FractionSum(ctx)).first;
                it->second.add(Poly::constant(c), a);
            }
        }
    });
    KPoly brute = k_zero_poly(ctx);
    for (const auto& slot_map : partial)
        for (const auto& [mono, acc] : slot_map) brute.add_term(mono, acc.value());

    // closed side: (1/L_i) prod_r prod_{v<i} (t_r - theta^{q^v})
    KPoly closed = k_const(RatFun(Poly::one(ctx), factorial_l(ctx, i)));
    for (unsigned r = 1; r <= s; ++r)
        for (unsigned v = 0; v < i; ++v) {
            KPoly factor = k_zero_poly(ctx);
            factor.add_term(Mono::var(Var::t_sub(r)), RatFun::one(ctx));
            factor.add_term(Mono::unit(), RatFun(-Poly::theta(ctx).frobenius_twist(v)));
            closed *= factor;
        }
    return {std::move(brute), std::move(closed)};
}

RatFun hyper_sum_brute(const FieldPtr& ctx, unsigned i, std::span<const HyperFactor> factors,
                       bool over_a, const SumOptions& opt) {
    const MonicRange range(ctx, i, opt.cap);
    return summed_fractions(ctx, range, opt.threads, [&](const Poly& a, FractionSum& acc) {
        Poly num = Poly::one(ctx);
        for (const auto& f : factors)
            num *= hyperderivative(a, f.j).frobenius_twist(f.mu);
        acc.add(num, over_a ? a : Poly::one(ctx));
    });
}

RatFun hyper_sum_general(const FieldPtr& ctx, unsigned i,
                         std::span<const std::pair<unsigned, long long>> jk,
                         const SumOptions& opt) {
    const MonicRange range(ctx, i, opt.cap);
    return summed_fractions(ctx, range, opt.threads, [&](const Poly& a, FractionSum& acc) {
        Poly num = Poly::one(ctx);
        Poly den = Poly::one(ctx);
        for (const auto& [j, k] : jk) {
            const Poly d = hyperderivative(a, j);
            if (k >= 0) {
                num *= d.pow(static_cast<std::uint64_t>(k));
            } else {
                if (d.is_zero())
                    throw domain_error("negative power of a vanishing hyperderivative at a = " +
                                       a.str());
                den *= d.pow(static_cast<std::uint64_t>(-k));
            }
        }
        acc.add(num, den);
    });
}

RatFun hyper_sum_closed(const FieldPtr& ctx, unsigned i, std::span<const HyperFactor> factors) {
    const std::size_t s = factors.size();
    if (i < 1) throw usage_error("closed form needs i >= 1");
    if (s < 1 || s > ctx->q() - 1)
        throw usage_error("closed form needs 1 <= s <= q-1 factors, got " + std::to_string(s));
    const Poly proto = Poly::zero(ctx);
    Poly num = Poly::one(ctx);
    for (const auto& f : factors) {
        if (f.j > i) throw usage_error("closed form needs 0 <= j <= i");
        std::vector<Poly> nodes;
        nodes.reserve(i);
        const Poly shift = Poly::theta(ctx).frobenius_twist(f.mu);
        for (unsigned v = 0; v < i; ++v)
            nodes.push_back(Poly::theta(ctx).frobenius_twist(v) - shift);
        Poly e = elementary_symmetric(std::span<const Poly>(nodes),
                                      static_cast<long long>(i - f.j), proto);
        num *= ((i - f.j) % 2 == 0) ? e : -e;
    }
    return RatFun(num, factorial_l(ctx, i));
}

RatFun hyper_sum_closed_simplified(const FieldPtr& ctx, unsigned i, unsigned j, unsigned mu) {
    if (i < 1 || j > i) throw usage_error("need i >= 1 and 0 <= j <= i");
    const Poly proto = Poly::zero(ctx);
    Poly e = proto;
    if (mu >= i) {
        // e_{i,i-j}(-[mu], -[mu-1]^q, ..., -[mu-i+1]^{q^{i-1}})
        std::vector<Poly> nodes;
        nodes.reserve(i);
        for (unsigned v = 0; v < i; ++v)
            nodes.push_back(-theta_bracket(ctx, mu - v).frobenius_twist(v));
        e = elementary_symmetric(std::span<const Poly>(nodes), static_cast<long long>(i - j),
                                 proto);
    } else {
        // zero slot removed: e_{i-1,i-j}(-[mu], ..., -[1]^{q^{mu-1}},
        //                                [1]^{q^mu}, ..., [i-mu-1]^{q^mu})
        std::vector<Poly> nodes;
        nodes.reserve(i - 1);
        for (unsigned v = 0; v < mu; ++v)
            nodes.push_back(-theta_bracket(ctx, mu - v).frobenius_twist(v));
        for (unsigned n = 1; n + mu < i; ++n)
            nodes.push_back(theta_bracket(ctx, n).frobenius_twist(mu));
        e = elementary_symmetric(std::span<const Poly>(nodes), static_cast<long long>(i - j),
                                 proto);
    }
    if ((i - j) % 2 != 0) e = -e;
    return RatFun(e, factorial_l(ctx, i));
}

}  // namespace carlitz
