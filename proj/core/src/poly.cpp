#include "carlitz/poly.hpp"

#include <sstream>

namespace carlitz {

Poly::Poly(FieldPtr ctx, std::vector<Fq> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_same(const Poly& a, const Poly& b) {
    if (a.ctx_.get() == b.ctx_.get()) return;
    if (!a.ctx_->same(*b.ctx_)) throw usage_error("mixed field contexts in polynomial arithmetic");
}

Poly Poly::constant(Fq c) {
    Poly f(c.ctx());
    if (!c.is_zero()) f.c_.push_back(std::move(c));
    return f;
}

Poly Poly::theta_pow(const FieldPtr& ctx, std::uint64_t n) {
    Poly f(ctx);
    f.c_.assign(n + 1, Fq::zero(ctx));
    f.c_.back() = Fq::one(ctx);
    return f;
}

Poly Poly::from_ints(const FieldPtr& ctx, std::initializer_list<long long> ascending) {
    std::vector<Fq> cs;
    cs.reserve(ascending.size());
    for (long long v : ascending) cs.push_back(Fq::from_int(ctx, v));
    return Poly(ctx, std::move(cs));
}

Fq Poly::lead() const {
    if (c_.empty()) throw domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    check_same(*this, o);
    Poly out(ctx_);
    out.c_.resize(std::max(c_.size(), o.c_.size()), Fq::zero(ctx_));
    for (std::size_t i = 0; i < out.c_.size(); ++i) {
        if (i < c_.size() && i < o.c_.size())
            out.c_[i] = c_[i] + o.c_[i];
        else if (i < c_.size())
            out.c_[i] = c_[i];
        else
            out.c_[i] = o.c_[i];
    }
    out.normalize();
    return out;
}

Poly Poly::operator-() const {
    Poly out(ctx_);
    out.c_.reserve(c_.size());
    for (const auto& c : c_) out.c_.push_back(-c);
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_same(*this, o);
    if (is_zero() || o.is_zero()) return Poly(ctx_);
    Poly out(ctx_);
    out.c_.assign(c_.size() + o.c_.size() - 1, Fq::zero(ctx_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            out.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    out.normalize();
    return out;
}

bool Poly::operator==(const Poly& o) const {
    check_same(*this, o);
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

Poly Poly::scaled(const Fq& c) const {
    if (c.is_zero()) return Poly(ctx_);
    Poly out(ctx_);
    out.c_.reserve(c_.size());
    for (const auto& a : c_) out.c_.push_back(a * c);
    out.normalize();
    return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& g) const {
    check_same(*this, g);
    if (g.is_zero()) throw domain_error("division by the zero polynomial");
    Poly rem = *this;
    Poly quot(ctx_);
    const long long dg = g.degree();
    if (rem.degree() >= dg) quot.c_.assign(static_cast<std::size_t>(rem.degree() - dg) + 1, Fq::zero(ctx_));
    const Fq lg_inv = g.lead().inv();
    while (!rem.is_zero() && rem.degree() >= dg) {
        const long long shift = rem.degree() - dg;
        const Fq f = rem.lead() * lg_inv;
        quot.c_[static_cast<std::size_t>(shift)] = f;
        for (long long i = 0; i <= dg; ++i) {
            auto ri = static_cast<std::size_t>(shift + i);
            rem.c_[ri] -= f * g.c_[static_cast<std::size_t>(i)];
        }
        rem.normalize();
    }
    quot.normalize();
    return {std::move(quot), std::move(rem)};
}

Fq Poly::eval(const Fq& x) const {
    Fq acc = Fq::zero(ctx_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::pow(std::uint64_t n) const {
    Poly result = Poly::one(ctx_);
    Poly base = *this;
    while (n != 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n != 0) base *= base;
    }
    return result;
}

Poly Poly::frobenius_twist(unsigned k) const {
    if (k == 0 || is_zero()) return *this;
    std::uint64_t qk = 1;
    for (unsigned i = 0; i < k; ++i) qk *= ctx_->q();
    Poly out(ctx_);
    out.c_.assign(static_cast<std::size_t>(degree()) * qk + 1, Fq::zero(ctx_));
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i * qk] = c_[i];
    return out;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = c_[i].str();
        bool needs_parens = cs.find('+') != std::string::npos;
        if (i == 0) {
            os << (needs_parens ? "(" + cs + ")" : cs);
            continue;
        }
        if (!c_[i].is_one()) os << (needs_parens ? "(" + cs + ")" : cs) << "*";
        os << (i == 1 ? std::string("θ") : "θ^" + std::to_string(i));
    }
    return os.str();
}

Poly gcd_monic(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(a.lead().inv());
    return a;
}

Poly theta_bracket(const FieldPtr& ctx, unsigned i) {
    if (i == 0) return Poly::zero(ctx);
    std::uint64_t qi = 1;
    for (unsigned n = 0; n < i; ++n) qi *= ctx->q();
    return Poly::theta_pow(ctx, qi) - Poly::theta(ctx);
}

Poly factorial_d(const FieldPtr& ctx, unsigned i) { return special_polys(ctx, i).d; }

Poly factorial_l(const FieldPtr& ctx, unsigned i) { return special_polys(ctx, i).l; }

SpecialPolys special_polys(const FieldPtr& ctx, unsigned i) {
    SpecialPolys out{Poly::zero(ctx), Poly::one(ctx), Poly::one(ctx)};
    for (unsigned n = 1; n <= i; ++n) {
        out.bracket = theta_bracket(ctx, n);
        out.d = out.bracket * out.d.frobenius_twist(1);
        out.l = -(out.bracket * out.l);
    }
    return out;
}

MonicRange::MonicRange(FieldPtr ctx, unsigned degree, std::uint64_t cap)
    : ctx_(std::move(ctx)), degree_(degree) {
    std::uint64_t n = 1;
    for (unsigned k = 0; k < degree; ++k) {
        if (n > cap / ctx_->q()) {
            throw resource_error("monic enumeration of degree " + std::to_string(degree) +
                                 " needs q^i = " + std::to_string(ctx_->q()) + "^" +
                                 std::to_string(degree) + " elements, exceeding the cap " +
                                 std::to_string(cap));
        }
        n *= ctx_->q();
    }
    size_ = n;
}

Poly MonicRange::at(std::uint64_t index) const {
    if (index >= size_) throw usage_error("monic enumeration index out of range");
    std::vector<Fq> cs(degree_ + 1, Fq::zero(ctx_));
    cs[degree_] = Fq::one(ctx_);
    // lexicographic: c_0 carries the most significant base-q digit
    for (unsigned j = degree_; j-- > 0;) {
        cs[j] = Fq::from_index(ctx_, index % ctx_->q());
        index /= ctx_->q();
    }
    return Poly(ctx_, std::move(cs));
}

}  // namespace carlitz
