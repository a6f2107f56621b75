#ifndef CARLITZ_HYPERDERIV_HPP
#define CARLITZ_HYPERDERIV_HPP

#include <vector>

#include "carlitz/kpoly.hpp"
#include "carlitz/poly.hpp"

namespace carlitz {

// C(n, j) mod p by Lucas' digit rule; never touches factorials, so n and j
// may be q^i-sized.
std::uint32_t lucas_binomial(std::uint64_t n, std::uint64_t j, std::uint32_t p);

// j-th hyperderivative with respect to theta: theta^n -> C(n,j) theta^{n-j}.
Poly hyperderivative(const Poly& f, std::uint64_t j);

// Same divided-power operator along an arbitrary variable of a MultiPoly.
template <class R>
MultiPoly<R> hyperderivative(const MultiPoly<R>& f, Var v, std::uint64_t j) {
    const std::uint64_t p = f.characteristic();
    if (p == 0) throw usage_error("hyperderivative requires positive characteristic");
    if (j == 0) return f;
    MultiPoly<R> out(f.proto());
    for (const auto& [m, c] : f.terms()) {
        const long long n = m.exp_of(v);
        if (n < static_cast<long long>(j)) continue;
        const std::uint32_t b = lucas_binomial(static_cast<std::uint64_t>(n), j,
                                               static_cast<std::uint32_t>(p));
        if (b == 0) continue;
        Mono reduced = m.without(v) * Mono::var(v, n - static_cast<long long>(j));
        out.add_term(reduced, mul_int(c, b));
    }
    return out;
}

// Taylor coefficients of f about t = theta: the sequence (d^j f)_{j=0..max_j}.
// Sum of d^j(f) (t - theta)^j reproduces f with theta renamed to t.
std::vector<Poly> taylor_about_theta(const Poly& f, unsigned max_j);

// Truncated power series in theta over F_q (dense, order N).
class ThetaSeries {
public:
    ThetaSeries(FieldPtr ctx, unsigned order)
        : ctx_(std::move(ctx)), c_(order, Fq::zero(ctx_)) {
        if (order == 0) throw usage_error("series order must be >= 1");
    }
    ThetaSeries(FieldPtr ctx, std::vector<Fq> coeffs);

    unsigned order() const { return static_cast<unsigned>(c_.size()); }
    const FieldPtr& ctx() const { return ctx_; }
    const Fq& coeff(std::size_t i) const { return c_[i]; }
    void set_coeff(std::size_t i, const Fq& v) { c_[i] = v; }

    ThetaSeries operator+(const ThetaSeries& o) const;
    ThetaSeries operator*(const ThetaSeries& o) const;
    bool operator==(const ThetaSeries& o) const;

    ThetaSeries scaled(const Fq& c) const;
    ThetaSeries q_power(unsigned k) const;       // termwise x -> x^{q^k}
    ThetaSeries hyperderivative(std::uint64_t j) const;

    static ThetaSeries from_poly(const Poly& f, unsigned order);

private:
    FieldPtr ctx_;
    std::vector<Fq> c_;
};

// Voloch's identity on a truncated series: g^{q^k} == sum_j d^j(g) [k]^j
// modulo theta^N, with the convention [0]^0 = 1.
bool voloch_qpower_check(const ThetaSeries& g, unsigned k);

}  // namespace carlitz

#endif
