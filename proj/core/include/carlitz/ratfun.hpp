#ifndef CARLITZ_RATFUN_HPP
#define CARLITZ_RATFUN_HPP

#include <string>
#include <utility>

#include "carlitz/poly.hpp"

namespace carlitz {

// Element of K = F_q(theta) in canonical reduced form: gcd(num, den) = 1 and
// den monic.  Equality is therefore component-wise.
class RatFun {
public:
    explicit RatFun(Poly num) : num_(std::move(num)), den_(Poly::one(num_.ctx())) {}
    RatFun(Poly num, Poly den);

    static RatFun zero(const FieldPtr& ctx) { return RatFun(Poly::zero(ctx)); }
    static RatFun one(const FieldPtr& ctx) { return RatFun(Poly::one(ctx)); }
    static RatFun from_int(const FieldPtr& ctx, long long n) {
        return RatFun(Poly::constant(Fq::from_int(ctx, n)));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FieldPtr& ctx() const { return num_.ctx(); }
    std::uint64_t characteristic() const { return num_.characteristic(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integral() const { return den_.is_one(); }

    // The numerator, provided the denominator is 1.
    Poly poly_part() const;

    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const { return *this + (-o); }
    RatFun operator-() const { return RatFun(Raw{}, -num_, den_); }
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const { return *this * o.inv(); }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun inv() const;
    RatFun pow(std::uint64_t n) const;
    RatFun frobenius_twist(unsigned k) const {
        return RatFun(Raw{}, num_.frobenius_twist(k), den_.frobenius_twist(k));
    }

    std::string str() const;

private:
    struct Raw {};  // tag: inputs already canonical
    RatFun(Raw, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
    void reduce();

    Poly num_, den_;
};

inline RatFun zero_like(const RatFun& x) { return RatFun::zero(x.ctx()); }
inline RatFun one_like(const RatFun& x) { return RatFun::one(x.ctx()); }

// Accumulates sum(n_k / d_k) over a common denominator, running a gcd
// reduction every 64 terms instead of after each addition.
class FractionSum {
public:
    explicit FractionSum(const FieldPtr& ctx)
        : num_(Poly::zero(ctx)), den_(Poly::one(ctx)) {}

    void add(const Poly& n, const Poly& d);
    void add(const RatFun& t) { add(t.num(), t.den()); }
    RatFun value() const { return RatFun(num_, den_); }

private:
    Poly num_, den_;
    unsigned pending_ = 0;
};

}  // namespace carlitz

#endif
