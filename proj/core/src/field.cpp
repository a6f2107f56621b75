#include "carlitz/field.hpp"

#include <algorithm>
#include <sstream>

namespace carlitz {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using FpVec = std::vector<std::uint32_t>;

// Arithmetic on F_p[u] coefficient vectors, used only for modulus validation.
FpVec fp_mul_mod(const FpVec& a, const FpVec& b, const FpVec& mod, std::uint32_t p) {
    std::size_t e = mod.size() - 1;
    std::vector<std::uint64_t> tmp(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            tmp[i + j] = (tmp[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
    for (std::size_t i = tmp.size(); i-- > e;) {
        std::uint64_t c = tmp[i];
        if (c == 0) continue;
        tmp[i] = 0;
        for (std::size_t j = 0; j < e; ++j)
            tmp[i - e + j] = (tmp[i - e + j] + c * (p - mod[j])) % p;
    }
    FpVec out(e, 0);
    for (std::size_t j = 0; j < e; ++j) out[j] = static_cast<std::uint32_t>(tmp[j]);
    return out;
}

FpVec fp_upow_mod(std::uint64_t n, const FpVec& mod, std::uint32_t p) {
    // u^n mod `mod`, by square and multiply.
    std::size_t e = mod.size() - 1;
    FpVec result(e, 0);
    result[0] = 1;
    FpVec base(e, 0);
    base[1] = 1;  // only called with e >= 2
    while (n != 0) {
        if (n & 1) result = fp_mul_mod(result, base, mod, p);
        n >>= 1;
        if (n != 0) base = fp_mul_mod(base, base, mod, p);
    }
    return result;
}

FpVec fp_sub(FpVec a, const FpVec& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    return a;
}

bool fp_is_zero(const FpVec& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

FpVec fp_gcd(FpVec a, FpVec b, std::uint32_t p) {
    auto deg = [](const FpVec& v) {
        for (std::size_t i = v.size(); i-- > 0;)
            if (v[i] != 0) return static_cast<long long>(i);
        return -1LL;
    };
    auto inv_mod_p = [p](std::uint32_t x) {
        std::uint32_t r = 1;
        std::uint32_t base = x;
        std::uint32_t n = p - 2;
        while (n) {
            if (n & 1) r = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r) * base % p);
            base = static_cast<std::uint32_t>(static_cast<std::uint64_t>(base) * base % p);
            n >>= 1;
        }
        return r;
    };
    while (!fp_is_zero(b)) {
        long long db = deg(b);
        std::uint32_t lb_inv = inv_mod_p(b[static_cast<std::size_t>(db)]);
        // a mod b
        long long da = deg(a);
        while (da >= db && !fp_is_zero(a)) {
            std::uint64_t f = static_cast<std::uint64_t>(a[static_cast<std::size_t>(da)]) * lb_inv % p;
            for (long long i = 0; i <= db; ++i) {
                auto ai = static_cast<std::size_t>(da - db + i);
                a[ai] = static_cast<std::uint32_t>((a[ai] + (p - b[static_cast<std::size_t>(i)]) * f) % p);
            }
            da = deg(a);
        }
        std::swap(a, b);
    }
    return a;
}

// Irreducibility of a monic degree-e polynomial over F_p.  Degrees 2 and 3
// just need no root; beyond that run the distinct-degree criterion
// u^{p^e} == u mod f together with gcd(u^{p^{e/r}} - u, f) = 1 for prime r | e.
bool fp_irreducible(const FpVec& mod, std::uint32_t p) {
    std::size_t e = mod.size() - 1;
    if (e == 1) return true;
    if (e <= 3) {
        for (std::uint32_t c = 0; c < p; ++c) {
            std::uint64_t val = 0, cp = 1;
            for (std::size_t i = 0; i <= e; ++i) {
                val = (val + mod[i] * cp) % p;
                cp = cp * c % p;
            }
            if (val == 0) return false;
        }
        return true;
    }
    auto pow_pk = [&](std::uint32_t k) {
        std::uint64_t n = 1;
        for (std::uint32_t i = 0; i < k; ++i) n *= p;
        return fp_upow_mod(n, mod, p);
    };
    FpVec u(e, 0);
    u[1] = 1;
    if (!fp_is_zero(fp_sub(pow_pk(static_cast<std::uint32_t>(e)), u, p))) return false;
    for (std::uint32_t r = 2; r <= e; ++r) {
        if (e % r != 0 || !is_prime_u32(r)) continue;
        FpVec g = fp_gcd(fp_sub(pow_pk(static_cast<std::uint32_t>(e / r)), u, p), mod, p);
        long long dg = -1;
        for (std::size_t i = g.size(); i-- > 0;)
            if (g[i] != 0) {
                dg = static_cast<long long>(i);
                break;
            }
        if (dg != 0) return false;
    }
    return true;
}

}  // namespace

FieldPtr FieldCtx::make_prime(std::uint32_t p) {
    return make(p, 1, {});
}

FieldPtr FieldCtx::make(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus) {
    if (p > 65536 || !is_prime_u32(p))
        throw usage_error("field characteristic must be a prime <= 2^16, got " + std::to_string(p));
    if (e < 1) throw usage_error("extension degree must be >= 1");

    // q must fit in 64 bits
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        if (q > UINT64_MAX / p) throw usage_error("q = p^e does not fit in 64 bits");
        q *= p;
    }

    if (e == 1) {
        modulus.clear();
    } else {
        if (modulus.size() != static_cast<std::size_t>(e) + 1)
            throw usage_error("modulus must have degree e = " + std::to_string(e));
        for (auto& c : modulus) c %= p;
        if (modulus.back() != 1) throw usage_error("modulus must be monic");
        if (!fp_irreducible(modulus, p)) throw usage_error("modulus is not irreducible over F_p");
    }

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->e_ = e;
    ctx->q_ = q;
    ctx->modulus_ = std::move(modulus);
    ctx->ppow_.resize(e + 1);
    ctx->ppow_[0] = 1;
    for (std::uint32_t i = 1; i <= e; ++i) ctx->ppow_[i] = ctx->ppow_[i - 1] * p;
    return ctx;
}

FieldPtr FieldCtx::make_q(std::uint64_t q) {
    switch (q) {
        case 4: return make(2, 2, {1, 1, 1});     // u^2 + u + 1
        case 8: return make(2, 3, {1, 1, 0, 1});  // u^3 + u + 1
        case 9: return make(3, 2, {2, 2, 1});     // u^2 + 2u + 2
        default: break;
    }
    if (q > 65536 || !is_prime_u32(static_cast<std::uint32_t>(q)))
        throw usage_error("--q " + std::to_string(q) +
                          " is neither a prime <= 2^16 nor a built-in extension (4, 8, 9); "
                          "pass --p/--e/--modulus instead");
    return make_prime(static_cast<std::uint32_t>(q));
}

bool FieldCtx::same(const FieldCtx& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
}

std::string FieldCtx::describe() const {
    std::ostringstream os;
    os << "F_" << q_;
    if (e_ > 1) os << " = F_" << p_ << "[u]/(modulus)";
    return os.str();
}

Fq Fq::from_int(const FieldPtr& ctx, long long n) {
    long long p = ctx->p();
    long long r = n % p;
    if (r < 0) r += p;
    return Fq(ctx, static_cast<std::uint64_t>(r));
}

Fq Fq::from_index(const FieldPtr& ctx, std::uint64_t idx) {
    if (idx >= ctx->q()) throw usage_error("element index out of range");
    return Fq(ctx, idx);
}

Fq Fq::from_coords(const FieldPtr& ctx, const std::vector<std::uint32_t>& coords) {
    if (coords.size() != ctx->e()) throw usage_error("coordinate vector must have length e");
    std::uint64_t rep = 0;
    for (std::size_t j = coords.size(); j-- > 0;) {
        if (coords[j] >= ctx->p()) throw usage_error("coordinate out of range [0, p)");
        rep = rep * ctx->p() + coords[j];
    }
    return Fq(ctx, rep);
}

std::vector<std::uint32_t> Fq::coords() const {
    std::vector<std::uint32_t> out(ctx_->e());
    std::uint64_t r = rep_;
    for (std::uint32_t j = 0; j < ctx_->e(); ++j) {
        out[j] = static_cast<std::uint32_t>(r % ctx_->p());
        r /= ctx_->p();
    }
    return out;
}

void Fq::check_same(const Fq& a, const Fq& b) {
    if (!a.ctx_ || !b.ctx_) throw usage_error("operation on a null field element");
    if (a.ctx_.get() == b.ctx_.get()) return;
    if (!a.ctx_->same(*b.ctx_)) throw usage_error("mixed field contexts");
}

bool Fq::operator==(const Fq& o) const {
    check_same(*this, o);
    return rep_ == o.rep_;
}

Fq Fq::operator+(const Fq& o) const {
    check_same(*this, o);
    const std::uint32_t p = ctx_->p();
    if (ctx_->e() == 1) {
        std::uint64_t s = rep_ + o.rep_;
        if (s >= p) s -= p;
        return Fq(ctx_, s);
    }
    std::uint64_t a = rep_, b = o.rep_, out = 0;
    for (std::uint32_t j = 0; j < ctx_->e(); ++j) {
        std::uint64_t s = a % p + b % p;
        if (s >= p) s -= p;
        out += s * ctx_->ppow_[j];
        a /= p;
        b /= p;
    }
    return Fq(ctx_, out);
}

Fq Fq::operator-() const {
    if (!ctx_) throw usage_error("operation on a null field element");
    const std::uint32_t p = ctx_->p();
    std::uint64_t a = rep_, out = 0;
    for (std::uint32_t j = 0; j < ctx_->e(); ++j) {
        std::uint64_t d = a % p;
        out += (d == 0 ? 0 : p - d) * ctx_->ppow_[j];
        a /= p;
    }
    return Fq(ctx_, out);
}

Fq Fq::operator-(const Fq& o) const { return *this + (-o); }

Fq Fq::operator*(const Fq& o) const {
    check_same(*this, o);
    const std::uint32_t p = ctx_->p();
    const std::uint32_t e = ctx_->e();
    if (e == 1) return Fq(ctx_, rep_ * o.rep_ % p);
    if (rep_ == 0 || o.rep_ == 0) return Fq(ctx_, 0);

    std::uint32_t a[64], b[64];
    std::uint64_t tmp[127] = {0};
    std::uint64_t ra = rep_, rb = o.rep_;
    for (std::uint32_t j = 0; j < e; ++j, ra /= p, rb /= p) {
        a[j] = static_cast<std::uint32_t>(ra % p);
        b[j] = static_cast<std::uint32_t>(rb % p);
    }
    for (std::uint32_t i = 0; i < e; ++i) {
        if (a[i] == 0) continue;
        for (std::uint32_t j = 0; j < e; ++j)
            tmp[i + j] = (tmp[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
    const auto& mod = ctx_->modulus_;
    for (std::uint32_t i = 2 * e - 2; i + 1 > e; --i) {  // i from 2e-2 down to e
        std::uint64_t c = tmp[i];
        if (c == 0) continue;
        tmp[i] = 0;
        for (std::uint32_t j = 0; j < e; ++j)
            tmp[i - e + j] = (tmp[i - e + j] + c * (p - mod[j])) % p;
    }
    std::uint64_t out = 0;
    for (std::uint32_t j = 0; j < e; ++j) out += tmp[j] * ctx_->ppow_[j];
    return Fq(ctx_, out);
}

Fq Fq::pow(std::uint64_t n) const {
    if (!ctx_) throw usage_error("operation on a null field element");
    Fq result = Fq::one(ctx_);
    Fq base = *this;
    while (n != 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n != 0) base = base * base;
    }
    return result;
}

Fq Fq::inv() const {
    if (is_zero()) throw domain_error("inversion of zero in " + ctx_->describe());
    return pow(ctx_->q() - 2);
}

std::string Fq::str() const {
    if (!ctx_) return "<null>";
    if (ctx_->e() == 1) return std::to_string(rep_);
    auto cs = coords();
    std::string out;
    for (std::size_t j = cs.size(); j-- > 0;) {
        if (cs[j] == 0) continue;
        if (!out.empty()) out += "+";
        if (j == 0) {
            out += std::to_string(cs[j]);
        } else {
            if (cs[j] != 1) out += std::to_string(cs[j]) + "*";
            out += (j == 1) ? "u" : "u^" + std::to_string(j);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace carlitz
