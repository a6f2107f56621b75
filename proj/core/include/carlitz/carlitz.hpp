#ifndef CARLITZ_CARLITZ_HPP
#define CARLITZ_CARLITZ_HPP

#include <vector>

#include "carlitz/kpoly.hpp"
#include "carlitz/poly.hpp"

namespace carlitz {

// Element of the twisted polynomial ring A[tau], tau c = c^q tau.
// Coefficient k is the coefficient of tau^k.
class TwistedPoly {
public:
    explicit TwistedPoly(FieldPtr ctx) : ctx_(std::move(ctx)) {}
    TwistedPoly(FieldPtr ctx, std::vector<Poly> coeffs);

    static TwistedPoly zero(const FieldPtr& ctx) { return TwistedPoly(ctx); }
    static TwistedPoly one(const FieldPtr& ctx) { return constant(Poly::one(ctx)); }
    static TwistedPoly constant(Poly c);
    static TwistedPoly tau(const FieldPtr& ctx);

    const FieldPtr& ctx() const { return ctx_; }
    bool is_zero() const { return c_.empty(); }
    long long tau_degree() const { return static_cast<long long>(c_.size()) - 1; }
    Poly coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Poly::zero(ctx_); }
    const std::vector<Poly>& coeffs() const { return c_; }

    TwistedPoly operator+(const TwistedPoly& o) const;
    TwistedPoly operator-(const TwistedPoly& o) const;
    TwistedPoly operator-() const;
    TwistedPoly operator*(const TwistedPoly& o) const;  // (a tau^m)(b tau^n) = a b^{q^m} tau^{m+n}
    TwistedPoly& operator*=(const TwistedPoly& o) { return *this = *this * o; }
    TwistedPoly& operator+=(const TwistedPoly& o) { return *this = *this + o; }
    bool operator==(const TwistedPoly& o) const;
    bool operator!=(const TwistedPoly& o) const { return !(*this == o); }

private:
    void normalize();

    FieldPtr ctx_;
    std::vector<Poly> c_;
};

// The Carlitz module map a -> C_a, the image of a under the ring homomorphism
// determined by C_theta = theta + tau.  Horner evaluation of a at C_theta.
TwistedPoly carlitz_of(const Poly& a);

// <a>_k, the coefficient of tau^k in C_a (zero for k > deg a), four ways.
Poly bracket_direct(const Poly& a, unsigned k);

// Carlitz's fraction formula sum_{j<=k} a^{q^j} / (D_j L_{k-j}^{q^j}); the sum
// is assembled in K and must come out integral.
Poly bracket_carlitz_formula(const Poly& a, unsigned k);

// Hyperderivative formula sum_{j=k}^{deg a} d^j(a) h_{k,j-k}([1],...,[k]).
Poly bracket_hyper_formula(const Poly& a, unsigned k);

// <theta^m>_k = h_{k+1,m-k}(theta, theta^q, ..., theta^{q^k}).
Poly bracket_theta_power(const FieldPtr& ctx, unsigned m, unsigned k);

// mu_k(t) = (t - theta)(t - theta^q) ... (t - theta^{q^{k-1}}), mu_0 = 1.
FqPoly mu_basis(const FieldPtr& ctx, unsigned k);

// Coefficients of a(t) in the mu basis, by repeated division; they coincide
// with the brackets of a, which is asserted.
std::vector<Poly> mu_expand(const Poly& a);

// C_a(x) = sum_k <a>_k x^{q^k} as a polynomial in x over K (coefficients lie
// in A).
KPoly carlitz_action_on_x(const Poly& a);

// Substitute f into the commutative polynomial C_a(x).
KPoly carlitz_eval(const Poly& a, const KPoly& f);
TruncSeries carlitz_eval(const Poly& a, const TruncSeries& f);

// Truncated Carlitz exponential / logarithm: sum f^{q^i}/D_i and
// sum f^{q^i}/L_i modulo z^N.  f must have no z-constant term.
TruncSeries exp_carlitz(const TruncSeries& f);
TruncSeries log_carlitz(const TruncSeries& f);

}  // namespace carlitz

#endif
