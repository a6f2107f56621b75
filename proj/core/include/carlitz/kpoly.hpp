#ifndef CARLITZ_KPOLY_HPP
#define CARLITZ_KPOLY_HPP

#include "carlitz/multipoly.hpp"
#include "carlitz/ratfun.hpp"

namespace carlitz {

// Two homes for polynomials that involve theta:
//   FqPoly — theta is an explicit variable, coefficients in F_q;
//   KPoly  — theta lives inside RatFun coefficients, variables are the rest.
using FqPoly = MultiPoly<Fq>;
using KPoly = MultiPoly<RatFun>;

inline FqPoly fq_zero_poly(const FieldPtr& ctx) { return FqPoly(Fq::zero(ctx)); }
inline KPoly k_zero_poly(const FieldPtr& ctx) { return KPoly(RatFun::zero(ctx)); }
inline KPoly k_const(RatFun c) { return KPoly::constant(std::move(c)); }
inline KPoly k_const(const Poly& c) { return KPoly::constant(RatFun(c)); }

// Univariate a placed on the variable v (e.g. a(t) from a(theta)).
inline FqPoly fq_on_var(const Poly& a, Var v) {
    FqPoly out(Fq::zero(a.ctx()));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        out.add_term(Mono::var(v, static_cast<long long>(i)), a.coeffs()[i]);
    return out;
}

// Extract a plain Poly from a polynomial in theta alone.
inline Poly theta_poly_of(const FqPoly& f) {
    const FieldPtr& ctx = f.proto().ctx();
    std::vector<Fq> cs;
    for (const auto& [m, c] : f.terms()) {
        if (!m.without(Var::theta()).is_unit())
            throw usage_error("polynomial involves variables other than theta");
        auto n = static_cast<std::size_t>(m.exp_of(Var::theta()));
        if (cs.size() <= n) cs.resize(n + 1, Fq::zero(ctx));
        cs[n] = c;
    }
    return Poly(ctx, std::move(cs));
}

inline bool all_integral(const KPoly& f) {
    for (const auto& [m, c] : f.terms())
        if (!c.is_integral()) return false;
    return true;
}

// Truncated power series in z with coefficients in K[x]: the working
// representation for the Carlitz exponential and the log-algebraicity series.
// All stored z-exponents are < order; arithmetic truncates eagerly, which is
// exact modulo z^order.
class TruncSeries {
public:
    TruncSeries(long long order, KPoly poly)
        : order_(order), poly_(poly.truncated(Var::z(), order)) {
        if (order < 1) throw usage_error("truncation order must be >= 1");
    }
    static TruncSeries zero(const FieldPtr& ctx, long long order) {
        return TruncSeries(order, k_zero_poly(ctx));
    }

    long long order() const { return order_; }
    const KPoly& poly() const { return poly_; }
    const FieldPtr& ctx() const { return poly_.proto().ctx(); }

    bool is_zero() const { return poly_.is_zero(); }
    bool has_z_constant_term() const {
        return !poly_.coeff_in(Var::z(), 0).is_zero();
    }

    TruncSeries operator+(const TruncSeries& o) const {
        return TruncSeries(checked_order(o), poly_ + o.poly_);
    }
    TruncSeries operator-(const TruncSeries& o) const {
        return TruncSeries(checked_order(o), poly_ - o.poly_);
    }
    TruncSeries operator*(const TruncSeries& o) const {
        return TruncSeries(checked_order(o), poly_ * o.poly_);
    }
    bool operator==(const TruncSeries& o) const {
        return order_ == checked_order(o) && poly_ == o.poly_;
    }
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

    TruncSeries scaled(const RatFun& c) const { return TruncSeries(order_, poly_.scaled(c)); }

    // Termwise q^k-th power (exact in characteristic p), truncated.
    TruncSeries q_power(unsigned k) const {
        std::uint64_t qk = 1;
        for (unsigned i = 0; i < k; ++i) qk *= ctx()->q();
        return TruncSeries(order_, poly_.char_power(qk));
    }

private:
    long long checked_order(const TruncSeries& o) const {
        if (order_ != o.order_)
            throw usage_error("mismatched truncation orders: " + std::to_string(order_) + " vs " +
                              std::to_string(o.order_));
        return order_;
    }

    long long order_;
    KPoly poly_;
};

}  // namespace carlitz

#endif
