#ifndef CARLITZ_FIELD_HPP
#define CARLITZ_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "carlitz/errors.hpp"

namespace carlitz {

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

// Description of F_q with q = p^e.  Elements are F_p[u]/(modulus); for e = 1
// the modulus is implicit (u - 0 is never stored) and elements are residues.
class FieldCtx {
public:
    // Prime field F_p.
    static FieldPtr make_prime(std::uint32_t p);

    // Extension field F_{p^e} with an explicit monic irreducible modulus of
    // degree e over F_p, coefficients ascending.
    static FieldPtr make(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

    // Convenience: prime q, or one of the built-in moduli for q in {4, 8, 9}.
    static FieldPtr make_q(std::uint64_t q);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint64_t q() const { return q_; }

    // Monic irreducible modulus, ascending, length e+1; empty when e == 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool same(const FieldCtx& other) const;
    std::string describe() const;

private:
    FieldCtx() = default;

    std::uint32_t p_ = 0;
    std::uint32_t e_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint64_t> ppow_;  // p^0 .. p^e

    friend class Fq;
};

// Element of F_q.  The representation packs the e base-p coordinates into a
// single integer sum(coords[j] * p^j), so copies are cheap and the full field
// enumerates as indices 0 .. q-1.
class Fq {
public:
    Fq() = default;  // null element; usable only as an assignment target

    static Fq zero(const FieldPtr& ctx) { return Fq(ctx, 0); }
    static Fq one(const FieldPtr& ctx) { return Fq(ctx, 1); }

    // n reduced mod p, embedded in the prime subfield.
    static Fq from_int(const FieldPtr& ctx, long long n);

    // Element with packed representation idx (base-p digits are the coords).
    static Fq from_index(const FieldPtr& ctx, std::uint64_t idx);

    static Fq from_coords(const FieldPtr& ctx, const std::vector<std::uint32_t>& coords);

    bool valid() const { return ctx_ != nullptr; }
    const FieldPtr& ctx() const { return ctx_; }
    std::uint64_t index() const { return rep_; }
    std::vector<std::uint32_t> coords() const;

    bool is_zero() const { return rep_ == 0; }
    bool is_one() const { return rep_ == 1; }
    std::uint64_t characteristic() const { return ctx_->p(); }

    Fq operator+(const Fq& o) const;
    Fq operator-(const Fq& o) const;
    Fq operator-() const;
    Fq operator*(const Fq& o) const;
    Fq operator/(const Fq& o) const { return *this * o.inv(); }
    Fq& operator+=(const Fq& o) { return *this = *this + o; }
    Fq& operator-=(const Fq& o) { return *this = *this - o; }
    Fq& operator*=(const Fq& o) { return *this = *this * o; }

    bool operator==(const Fq& o) const;
    bool operator!=(const Fq& o) const { return !(*this == o); }

    Fq inv() const;
    Fq pow(std::uint64_t n) const;
    Fq frobenius() const { return pow(ctx_->p()); }  // x -> x^p

    std::string str() const;  // "2" or "u+1" style

private:
    Fq(FieldPtr ctx, std::uint64_t rep) : ctx_(std::move(ctx)), rep_(rep) {}

    static void check_same(const Fq& a, const Fq& b);

    FieldPtr ctx_;
    std::uint64_t rep_ = 0;
};

inline Fq zero_like(const Fq& x) { return Fq::zero(x.ctx()); }
inline Fq one_like(const Fq& x) { return Fq::one(x.ctx()); }

// x * (n mod char); works for any ring element with + and characteristic().
template <class R>
R mul_int(const R& x, long long n) {
    auto c = x.characteristic();
    unsigned long long m;
    bool neg = false;
    if (c != 0) {
        long long r = n % static_cast<long long>(c);
        if (r < 0) r += static_cast<long long>(c);
        m = static_cast<unsigned long long>(r);
    } else {
        neg = n < 0;
        m = neg ? static_cast<unsigned long long>(-(n + 1)) + 1 : static_cast<unsigned long long>(n);
    }
    R acc = zero_like(x);
    R base = x;
    while (m != 0) {
        if (m & 1) acc = acc + base;
        m >>= 1;
        if (m != 0) base = base + base;
    }
    return neg ? -acc : acc;
}

}  // namespace carlitz

#endif
