#ifndef CARLITZ_BIGINT_HPP
#define CARLITZ_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace carlitz {

// Arbitrary-precision integer with the same ring surface as Fq/Poly/RatFun,
// used as the coefficient ring for symbolic identity checks over Z.
class Int {
public:
    Int() : v_(0) {}
    Int(long long n) : v_() { v_ = static_cast<long>(n); }
    explicit Int(mpz_class v) : v_(std::move(v)) {}

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    std::uint64_t characteristic() const { return 0; }

    Int operator+(const Int& o) const { return Int(v_ + o.v_); }
    Int operator-(const Int& o) const { return Int(v_ - o.v_); }
    Int operator-() const { return Int(-v_); }
    Int operator*(const Int& o) const { return Int(v_ * o.v_); }
    Int& operator+=(const Int& o) {
        v_ += o.v_;
        return *this;
    }
    Int& operator*=(const Int& o) {
        v_ *= o.v_;
        return *this;
    }
    bool operator==(const Int& o) const { return v_ == o.v_; }
    bool operator!=(const Int& o) const { return v_ != o.v_; }

    static Int binomial(unsigned long n, unsigned long k) {
        mpz_class r;
        mpz_bin_uiui(r.get_mpz_t(), n, k);
        return Int(r);
    }
    static Int factorial(unsigned long n) {
        mpz_class r;
        mpz_fac_ui(r.get_mpz_t(), n);
        return Int(r);
    }

    const mpz_class& value() const { return v_; }
    std::string str() const { return v_.get_str(); }

private:
    mpz_class v_;
};

inline Int zero_like(const Int&) { return Int(0); }
inline Int one_like(const Int&) { return Int(1); }

}  // namespace carlitz

#endif
