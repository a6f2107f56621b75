#include "carlitz/ratfun.hpp"

namespace carlitz {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw domain_error("rational function with zero denominator");
    reduce();
}

void RatFun::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::one(num_.ctx());
        return;
    }
    Poly g = gcd_monic(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    const Fq lc = den_.lead();
    if (!lc.is_one()) {
        const Fq inv = lc.inv();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Poly RatFun::poly_part() const {
    if (!is_integral()) throw domain_error("rational function is not a polynomial: " + str());
    return num_;
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const {
    // cross-reduce first to keep intermediate degrees low
    Poly g1 = gcd_monic(num_, o.den_);
    Poly g2 = gcd_monic(o.num_, den_);
    Poly n1 = g1.degree() > 0 ? num_ / g1 : num_;
    Poly d2 = g1.degree() > 0 ? o.den_ / g1 : o.den_;
    Poly n2 = g2.degree() > 0 ? o.num_ / g2 : o.num_;
    Poly d1 = g2.degree() > 0 ? den_ / g2 : den_;
    return RatFun(n1 * n2, d1 * d2);
}

RatFun RatFun::inv() const {
    if (is_zero()) throw domain_error("inversion of the zero rational function");
    return RatFun(den_, num_);
}

RatFun RatFun::pow(std::uint64_t n) const {
    RatFun result = RatFun::one(ctx());
    RatFun base = *this;
    while (n != 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n != 0) base *= base;
    }
    return result;
}

std::string RatFun::str() const {
    if (is_integral()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

void FractionSum::add(const Poly& n, const Poly& d) {
    if (d.is_zero()) throw domain_error("fraction term with zero denominator");
    num_ = num_ * d + n * den_;
    den_ = den_ * d;
    if (++pending_ >= 64) {
        RatFun r(num_, den_);
        num_ = r.num();
        den_ = r.den();
        pending_ = 0;
    }
}

}  // namespace carlitz
