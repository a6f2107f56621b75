#include "carlitz/hyperderiv.hpp"

namespace carlitz {

std::uint32_t lucas_binomial(std::uint64_t n, std::uint64_t j, std::uint32_t p) {
    std::uint64_t result = 1;
    while (j != 0 || n != 0) {
        const std::uint64_t nd = n % p;
        const std::uint64_t jd = j % p;
        if (jd > nd) return 0;
        // C(nd, jd) for digits < p, via the product formula mod p
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t i = 1; i <= jd; ++i) {
            num = num * ((nd + 1 - i) % p) % p;
            den = den * (i % p) % p;
        }
        // den is invertible mod p (all factors < p, p prime)
        std::uint64_t den_inv = 1, base = den, exp = p - 2;
        while (exp) {
            if (exp & 1) den_inv = den_inv * base % p;
            base = base * base % p;
            exp >>= 1;
        }
        result = result * (num * den_inv % p) % p;
        n /= p;
        j /= p;
    }
    return static_cast<std::uint32_t>(result);
}

Poly hyperderivative(const Poly& f, std::uint64_t j) {
    if (j == 0) return f;
    const FieldPtr& ctx = f.ctx();
    if (f.is_zero() || static_cast<std::uint64_t>(f.degree()) < j) return Poly::zero(ctx);
    std::vector<Fq> out(f.coeffs().size() - j, Fq::zero(ctx));
    for (std::size_t n = static_cast<std::size_t>(j); n < f.coeffs().size(); ++n) {
        if (f.coeffs()[n].is_zero()) continue;
        const std::uint32_t b = lucas_binomial(n, j, ctx->p());
        if (b == 0) continue;
        out[n - j] = mul_int(f.coeffs()[n], b);
    }
    return Poly(ctx, std::move(out));
}

std::vector<Poly> taylor_about_theta(const Poly& f, unsigned max_j) {
    std::vector<Poly> out;
    out.reserve(max_j + 1);
    for (unsigned j = 0; j <= max_j; ++j) out.push_back(hyperderivative(f, j));
    return out;
}

ThetaSeries::ThetaSeries(FieldPtr ctx, std::vector<Fq> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (c_.empty()) throw usage_error("series order must be >= 1");
}

ThetaSeries ThetaSeries::from_poly(const Poly& f, unsigned order) {
    ThetaSeries s(f.ctx(), order);
    for (std::size_t i = 0; i < f.coeffs().size() && i < order; ++i) s.c_[i] = f.coeffs()[i];
    return s;
}

ThetaSeries ThetaSeries::operator+(const ThetaSeries& o) const {
    ThetaSeries out(ctx_, order());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
    return out;
}

ThetaSeries ThetaSeries::operator*(const ThetaSeries& o) const {
    ThetaSeries out(ctx_, order());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            out.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return out;
}

bool ThetaSeries::operator==(const ThetaSeries& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

ThetaSeries ThetaSeries::scaled(const Fq& c) const {
    ThetaSeries out(ctx_, order());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * c;
    return out;
}

ThetaSeries ThetaSeries::q_power(unsigned k) const {
    std::uint64_t qk = 1;
    for (unsigned i = 0; i < k; ++i) qk *= ctx_->q();
    ThetaSeries out(ctx_, order());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i * qk >= c_.size()) break;
        out.c_[i * qk] = c_[i].pow(qk);
    }
    return out;
}

ThetaSeries ThetaSeries::hyperderivative(std::uint64_t j) const {
    ThetaSeries out(ctx_, order());
    for (std::size_t n = static_cast<std::size_t>(j); n < c_.size(); ++n) {
        if (c_[n].is_zero()) continue;
        const std::uint32_t b = lucas_binomial(n, j, ctx_->p());
        if (b != 0) out.c_[n - j] = mul_int(c_[n], b);
    }
    return out;
}

bool voloch_qpower_check(const ThetaSeries& g, unsigned k) {
    const FieldPtr& ctx = g.ctx();
    const unsigned n = g.order();
    const ThetaSeries lhs = g.q_power(k);

    ThetaSeries rhs(ctx, n);
    ThetaSeries bracket_pow(ctx, n);
    bracket_pow.set_coeff(0, Fq::one(ctx));  // [k]^0 = 1, including the k = 0 convention
    const ThetaSeries bracket = ThetaSeries::from_poly(theta_bracket(ctx, k), n);
    for (std::uint64_t j = 0; j < n; ++j) {
        if (j > 0) bracket_pow = bracket_pow * bracket;  // [k]^j has theta-order >= j
        rhs = rhs + (g.hyperderivative(j) * bracket_pow);
    }
    return lhs == rhs;
}

}  // namespace carlitz
