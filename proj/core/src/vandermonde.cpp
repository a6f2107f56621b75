#include "carlitz/vandermonde.hpp"

namespace carlitz {

namespace {

std::uint64_t q_pow(const FieldPtr& ctx, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) r *= ctx->q();
    return r;
}

// t^{q^m} - theta^{q^k} as a bivariate polynomial
FqPoly carlitz_node(const FieldPtr& ctx, unsigned m, unsigned k) {
    FqPoly out(Fq::zero(ctx));
    out.add_term(Mono::var(Var::t(), static_cast<long long>(q_pow(ctx, m))), Fq::one(ctx));
    out.add_term(Mono::var(Var::theta(), static_cast<long long>(q_pow(ctx, k))),
                 -Fq::one(ctx));
    return out;
}

// t^{q^l} - t^{q^m}
FqPoly t_node_diff(const FieldPtr& ctx, unsigned l, unsigned m) {
    FqPoly out(Fq::zero(ctx));
    out.add_term(Mono::var(Var::t(), static_cast<long long>(q_pow(ctx, l))), Fq::one(ctx));
    out.add_term(Mono::var(Var::t(), static_cast<long long>(q_pow(ctx, m))), -Fq::one(ctx));
    return out;
}

}  // namespace

KappaRatio kappa_carlitz_nodes(const FieldPtr& ctx, unsigned i, unsigned j, unsigned l,
                               unsigned k) {
    if (j > i || l > i) throw usage_error("kappa indices out of range");
    const FqPoly zero = fq_zero_poly(ctx);
    std::vector<FqPoly> rest;
    rest.reserve(i);
    FqPoly den = one_like(zero);
    for (unsigned m = 0; m <= i; ++m) {
        if (m == l) continue;
        rest.push_back(carlitz_node(ctx, m, k));
        den *= t_node_diff(ctx, l, m);
    }
    FqPoly num =
        elementary_symmetric(std::span<const FqPoly>(rest), static_cast<long long>(i - j), zero);
    if ((i - j) % 2 != 0) num = -num;
    return {std::move(num), std::move(den)};
}

namespace {

// Polynomial in t with coefficients in A, stratified by t-degree.  Leaner
// than the generic sparse representation for the common-denominator sum
// below, whose t-degrees run to i q^i while coefficients stay univariate.
class TStrata {
public:
    explicit TStrata(FieldPtr ctx) : ctx_(std::move(ctx)) {}

    static TStrata term(const FieldPtr& ctx, long long t_exp, Poly c) {
        TStrata out(ctx);
        if (!c.is_zero()) out.s_.emplace(t_exp, std::move(c));
        return out;
    }

    const FieldPtr& ctx() const { return ctx_; }
    std::uint64_t characteristic() const { return ctx_->p(); }
    bool is_zero() const { return s_.empty(); }
    const std::map<long long, Poly>& strata() const { return s_; }

    void add(long long t_exp, const Poly& c) {
        if (c.is_zero()) return;
        auto it = s_.find(t_exp);
        if (it == s_.end()) {
            s_.emplace(t_exp, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) s_.erase(it);
        }
    }

    TStrata operator+(const TStrata& o) const {
        TStrata out = *this;
        for (const auto& [d, c] : o.s_) out.add(d, c);
        return out;
    }
    TStrata operator-() const {
        TStrata out(ctx_);
        for (const auto& [d, c] : s_) out.s_.emplace(d, -c);
        return out;
    }
    TStrata operator-(const TStrata& o) const { return *this + (-o); }
    TStrata operator*(const TStrata& o) const {
        TStrata out(ctx_);
        for (const auto& [d1, c1] : s_)
            for (const auto& [d2, c2] : o.s_) out.add(d1 + d2, c1 * c2);
        return out;
    }
    bool operator==(const TStrata& o) const {
        return s_.size() == o.s_.size() &&
               std::equal(s_.begin(), s_.end(), o.s_.begin(),
                          [](const auto& a, const auto& b) {
                              return a.first == b.first && a.second == b.second;
                          });
    }
    bool operator!=(const TStrata& o) const { return !(*this == o); }

private:
    FieldPtr ctx_;
    std::map<long long, Poly> s_;
};

TStrata zero_like(const TStrata& x) { return TStrata(x.ctx()); }
TStrata one_like(const TStrata& x) {
    return TStrata::term(x.ctx(), 0, Poly::one(x.ctx()));
}

}  // namespace

HyperViaVandermonde hyperderiv_via_vandermonde(const Poly& a, unsigned i, unsigned j,
                                               unsigned k) {
    const FieldPtr& ctx = a.ctx();
    if (a.degree() > static_cast<long long>(i)) throw usage_error("need deg a <= i");
    if (j > i) throw usage_error("need j <= i");

    // Work over the common denominator prod_l D_l, D_l = prod_{m != l}
    // (t^{q^l} - t^{q^m}): every D_l involves t only, with unit leading
    // coefficient, so the t-free quotient falls out of the top stratum.
    const TStrata zero(ctx);
    const Poly one = Poly::one(ctx);

    std::vector<TStrata> dens;  // D_l
    dens.reserve(i + 1);
    for (unsigned l = 0; l <= i; ++l) {
        TStrata d = one_like(zero);
        for (unsigned m = 0; m <= i; ++m) {
            if (m == l) continue;
            TStrata diff = TStrata::term(ctx, static_cast<long long>(q_pow(ctx, l)), one);
            diff.add(static_cast<long long>(q_pow(ctx, m)), -one);
            d = d * diff;
        }
        dens.push_back(std::move(d));
    }

    TStrata num_all(ctx);
    const Poly theta_qk = Poly::theta(ctx).frobenius_twist(k);
    for (unsigned l = 0; l <= i; ++l) {
        // numerator of kappa_{ijl}: signed e_{i,i-j} of the nodes without slot l
        std::vector<TStrata> nodes;
        nodes.reserve(i);
        for (unsigned m = 0; m <= i; ++m) {
            if (m == l) continue;
            TStrata node = TStrata::term(ctx, static_cast<long long>(q_pow(ctx, m)), one);
            node.add(0, -theta_qk);
            nodes.push_back(std::move(node));
        }
        TStrata term = elementary_symmetric(std::span<const TStrata>(nodes),
                                            static_cast<long long>(i - j), zero);
        if ((i - j) % 2 != 0) term = -term;
        // a(t)^{q^l} placed on the strata
        const std::uint64_t ql = q_pow(ctx, l);
        TStrata apow(ctx);
        for (std::size_t n = 0; n < a.coeffs().size(); ++n)
            apow.add(static_cast<long long>(n * ql), Poly::constant(a.coeffs()[n].pow(ql)));
        term = term * apow;
        for (unsigned l2 = 0; l2 <= i; ++l2)
            if (l2 != l) term = term * dens[l2];
        num_all = num_all + term;
    }

    if (num_all.is_zero()) return {Poly::zero(ctx), true};

    TStrata den_all = one_like(zero);
    for (const auto& d : dens) den_all = den_all * d;

    // candidate quotient from the top strata; then certify num == c * den
    const auto& num_top = *num_all.strata().rbegin();
    const auto& den_top = *den_all.strata().rbegin();
    if (num_top.first != den_top.first) return {Poly::zero(ctx), false};
    if (!den_top.second.is_constant())
        throw internal_error("common denominator is not t-only");
    const Poly candidate = num_top.second.scaled(den_top.second.constant_value().inv());

    TStrata product(ctx);
    for (const auto& [d, c] : den_all.strata()) product.add(d, candidate * c);
    if (product != num_all) return {Poly::zero(ctx), false};
    return {candidate, true};
}

}  // namespace carlitz
