#include "carlitz/carlitz.hpp"

#include "carlitz/symfun.hpp"

namespace carlitz {

TwistedPoly::TwistedPoly(FieldPtr ctx, std::vector<Poly> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    normalize();
}

void TwistedPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TwistedPoly TwistedPoly::constant(Poly c) {
    TwistedPoly f(c.ctx());
    if (!c.is_zero()) f.c_.push_back(std::move(c));
    return f;
}

TwistedPoly TwistedPoly::tau(const FieldPtr& ctx) {
    TwistedPoly f(ctx);
    f.c_ = {Poly::zero(ctx), Poly::one(ctx)};
    return f;
}

TwistedPoly TwistedPoly::operator+(const TwistedPoly& o) const {
    TwistedPoly out(ctx_);
    out.c_.resize(std::max(c_.size(), o.c_.size()), Poly::zero(ctx_));
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = coeff(i) + o.coeff(i);
    out.normalize();
    return out;
}

TwistedPoly TwistedPoly::operator-() const {
    TwistedPoly out(ctx_);
    out.c_.reserve(c_.size());
    for (const auto& c : c_) out.c_.push_back(-c);
    return out;
}

TwistedPoly TwistedPoly::operator-(const TwistedPoly& o) const { return *this + (-o); }

TwistedPoly TwistedPoly::operator*(const TwistedPoly& o) const {
    if (is_zero() || o.is_zero()) return TwistedPoly(ctx_);
    TwistedPoly out(ctx_);
    out.c_.assign(c_.size() + o.c_.size() - 1, Poly::zero(ctx_));
    for (std::size_t m = 0; m < c_.size(); ++m) {
        if (c_[m].is_zero()) continue;
        for (std::size_t n = 0; n < o.c_.size(); ++n) {
            if (o.c_[n].is_zero()) continue;
            out.c_[m + n] += c_[m] * o.c_[n].frobenius_twist(static_cast<unsigned>(m));
        }
    }
    out.normalize();
    return out;
}

bool TwistedPoly::operator==(const TwistedPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

TwistedPoly carlitz_of(const Poly& a) {
    const FieldPtr& ctx = a.ctx();
    const TwistedPoly c_theta(ctx, {Poly::theta(ctx), Poly::one(ctx)});
    TwistedPoly acc = TwistedPoly::zero(ctx);
    for (std::size_t n = a.coeffs().size(); n-- > 0;) {
        acc = acc * c_theta;
        acc += TwistedPoly::constant(Poly::constant(a.coeffs()[n]));
    }
    return acc;
}

Poly bracket_direct(const Poly& a, unsigned k) { return carlitz_of(a).coeff(k); }

Poly bracket_carlitz_formula(const Poly& a, unsigned k) {
    const FieldPtr& ctx = a.ctx();
    if (a.is_zero() || static_cast<long long>(k) > a.degree()) return Poly::zero(ctx);
    FractionSum acc(ctx);
    Poly d_j = Poly::one(ctx);  // D_j along the way
    for (unsigned j = 0; j <= k; ++j) {
        if (j > 0) d_j = theta_bracket(ctx, j) * d_j.frobenius_twist(1);
        acc.add(a.frobenius_twist(j), d_j * factorial_l(ctx, k - j).frobenius_twist(j));
    }
    const RatFun sum = acc.value();
    if (!sum.is_integral())
        throw internal_error("bracket fraction formula produced a non-integral value");
    return sum.poly_part();
}

Poly bracket_hyper_formula(const Poly& a, unsigned k) {
    const FieldPtr& ctx = a.ctx();
    std::vector<Poly> brackets;
    brackets.reserve(k);
    for (unsigned n = 1; n <= k; ++n) brackets.push_back(theta_bracket(ctx, n));
    const Poly proto = Poly::zero(ctx);
    Poly acc = proto;
    for (long long j = k; j <= a.degree(); ++j) {
        acc += hyperderivative(a, static_cast<std::uint64_t>(j)) *
               complete_homogeneous(std::span<const Poly>(brackets), j - k, proto);
    }
    return acc;
}

Poly bracket_theta_power(const FieldPtr& ctx, unsigned m, unsigned k) {
    if (k > m) throw usage_error("bracket index k exceeds m");
    std::vector<Poly> powers;
    powers.reserve(k + 1);
    for (unsigned n = 0; n <= k; ++n) powers.push_back(Poly::theta(ctx).frobenius_twist(n));
    return complete_homogeneous(std::span<const Poly>(powers),
                                static_cast<long long>(m - k), Poly::zero(ctx));
}

FqPoly mu_basis(const FieldPtr& ctx, unsigned k) {
    FqPoly acc = FqPoly::constant(Fq::one(ctx));
    for (unsigned n = 0; n < k; ++n) {
        FqPoly factor(Fq::zero(ctx));
        factor.add_term(Mono::var(Var::t()), Fq::one(ctx));
        factor += fq_on_var(-Poly::theta(ctx).frobenius_twist(n), Var::theta());
        acc *= factor;
    }
    return acc;
}

std::vector<Poly> mu_expand(const Poly& a) {
    const FieldPtr& ctx = a.ctx();
    // dense in t with coefficients in A
    const auto d = static_cast<std::size_t>(a.is_zero() ? 0 : a.degree());
    std::vector<Poly> rem(d + 1, Poly::zero(ctx));
    for (std::size_t n = 0; n < a.coeffs().size(); ++n)
        rem[n] = Poly::constant(a.coeffs()[n]);  // a(t): theta renamed to t

    std::vector<Poly> out(d + 1, Poly::zero(ctx));
    for (std::size_t k = d + 1; k-- > 0;) {
        const Poly c = rem[k];
        out[k] = c;
        if (c.is_zero()) continue;
        // subtract c * mu_k; mu_k is monic of degree k in t
        const FqPoly mu = mu_basis(ctx, static_cast<unsigned>(k));
        for (std::size_t j = 0; j <= k; ++j)
            rem[j] -= c * theta_poly_of(mu.coeff_in(Var::t(), static_cast<long long>(j)));
    }
    for (std::size_t k = 0; k <= d; ++k) {
        if (out[k] != bracket_direct(a, static_cast<unsigned>(k)))
            throw internal_error("mu-basis expansion disagrees with the Carlitz brackets");
    }
    return out;
}

KPoly carlitz_action_on_x(const Poly& a) {
    const FieldPtr& ctx = a.ctx();
    KPoly out = k_zero_poly(ctx);
    const TwistedPoly c = carlitz_of(a);
    std::uint64_t qk = 1;
    for (std::size_t k = 0; k < c.coeffs().size(); ++k, qk *= ctx->q())
        out.add_term(Mono::var(Var::x(), static_cast<long long>(qk)), RatFun(c.coeff(k)));
    return out;
}

KPoly carlitz_eval(const Poly& a, const KPoly& f) {
    const FieldPtr& ctx = a.ctx();
    KPoly out = k_zero_poly(ctx);
    const TwistedPoly c = carlitz_of(a);
    std::uint64_t qk = 1;
    for (std::size_t k = 0; k < c.coeffs().size(); ++k, qk *= ctx->q()) {
        if (!c.coeff(k).is_zero()) out += f.char_power(qk).scaled(RatFun(c.coeff(k)));
    }
    return out;
}

TruncSeries carlitz_eval(const Poly& a, const TruncSeries& f) {
    const FieldPtr& ctx = a.ctx();
    TruncSeries out = TruncSeries::zero(ctx, f.order());
    const TwistedPoly c = carlitz_of(a);
    for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
        if (!c.coeff(k).is_zero())
            out = out + f.q_power(static_cast<unsigned>(k)).scaled(RatFun(c.coeff(k)));
    }
    return out;
}

namespace {

enum class CarlitzSeries { Exp, Log };

TruncSeries carlitz_series(const TruncSeries& f, CarlitzSeries kind) {
    const FieldPtr& ctx = f.ctx();
    if (f.has_z_constant_term())
        throw usage_error("series composition requires a zero constant term in z");
    TruncSeries acc = TruncSeries::zero(ctx, f.order());
    Poly denom = Poly::one(ctx);  // D_i or L_i, extended incrementally
    for (unsigned i = 0;; ++i) {
        if (i > 0) {
            const Poly br = theta_bracket(ctx, i);
            denom = kind == CarlitzSeries::Exp ? br * denom.frobenius_twist(1) : -(br * denom);
        }
        const TruncSeries term = f.q_power(i);
        if (term.is_zero()) break;  // q^i >= order: nothing below the truncation survives
        acc = acc + term.scaled(RatFun(Poly::one(ctx), denom));
    }
    return acc;
}

}  // namespace

TruncSeries exp_carlitz(const TruncSeries& f) { return carlitz_series(f, CarlitzSeries::Exp); }

TruncSeries log_carlitz(const TruncSeries& f) { return carlitz_series(f, CarlitzSeries::Log); }

}  // namespace carlitz
