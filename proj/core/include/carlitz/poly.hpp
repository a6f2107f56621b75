#ifndef CARLITZ_POLY_HPP
#define CARLITZ_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "carlitz/field.hpp"

namespace carlitz {

// Element of A = F_q[theta], coefficients ascending.  The zero polynomial is
// the empty coefficient list; its degree is the sentinel -1 (standing in for
// degree minus infinity).
class Poly {
public:
    explicit Poly(FieldPtr ctx) : ctx_(std::move(ctx)) {}
    Poly(FieldPtr ctx, std::vector<Fq> coeffs);

    static Poly zero(const FieldPtr& ctx) { return Poly(ctx); }
    static Poly one(const FieldPtr& ctx) { return constant(Fq::one(ctx)); }
    static Poly constant(Fq c);
    static Poly theta(const FieldPtr& ctx) { return theta_pow(ctx, 1); }
    static Poly theta_pow(const FieldPtr& ctx, std::uint64_t n);
    static Poly from_ints(const FieldPtr& ctx, std::initializer_list<long long> ascending);

    const FieldPtr& ctx() const { return ctx_; }
    std::uint64_t characteristic() const { return ctx_->p(); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    Fq coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Fq::zero(ctx_); }
    Fq lead() const;
    const std::vector<Fq>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    Fq constant_value() const { return coeff(0); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(const Fq& c) const;

    // Division with remainder: f = quot * g + rem, deg rem < deg g.
    std::pair<Poly, Poly> divmod(const Poly& g) const;
    Poly operator/(const Poly& g) const { return divmod(g).first; }
    Poly operator%(const Poly& g) const { return divmod(g).second; }

    Fq eval(const Fq& x) const;
    Poly pow(std::uint64_t n) const;

    // theta -> theta^{q^k}; equals the q^k-th power map on A.
    Poly frobenius_twist(unsigned k) const;

    std::string str() const;  // rendered with the symbol θ

private:
    void normalize();
    static void check_same(const Poly& a, const Poly& b);

    FieldPtr ctx_;
    std::vector<Fq> c_;
};

inline Poly zero_like(const Poly& f) { return Poly::zero(f.ctx()); }
inline Poly one_like(const Poly& f) { return Poly::one(f.ctx()); }

// Monic gcd; gcd(0, 0) = 0.
Poly gcd_monic(Poly a, Poly b);

// [i] = theta^{q^i} - theta, with [0] = 0.
Poly theta_bracket(const FieldPtr& ctx, unsigned i);

// D_i = [i] [i-1]^q ... [1]^{q^{i-1}}, D_0 = 1.
Poly factorial_d(const FieldPtr& ctx, unsigned i);

// L_i = (-1)^i [i] [i-1] ... [1], L_0 = 1.
Poly factorial_l(const FieldPtr& ctx, unsigned i);

// ([i], D_i, L_i) in one call.
struct SpecialPolys {
    Poly bracket, d, l;
};
SpecialPolys special_polys(const FieldPtr& ctx, unsigned i);

inline constexpr std::uint64_t kDefaultEnumCap = 1000000;

// The q^i monic polynomials of degree i, ordered lexicographically by
// coefficient vector (c_0, ..., c_{i-1}); c_0 is the most significant slot.
class MonicRange {
public:
    MonicRange(FieldPtr ctx, unsigned degree, std::uint64_t cap = kDefaultEnumCap);

    std::uint64_t size() const { return size_; }
    Poly at(std::uint64_t index) const;

    class iterator {
    public:
        iterator(const MonicRange* r, std::uint64_t i) : r_(r), i_(i) {}
        Poly operator*() const { return r_->at(i_); }
        iterator& operator++() {
            ++i_;
            return *this;
        }
        bool operator!=(const iterator& o) const { return i_ != o.i_; }

    private:
        const MonicRange* r_;
        std::uint64_t i_;
    };
    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, size_}; }

private:
    FieldPtr ctx_;
    unsigned degree_;
    std::uint64_t size_;
};

}  // namespace carlitz

#endif
