#ifndef CARLITZ_MULTIPOLY_HPP
#define CARLITZ_MULTIPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "carlitz/errors.hpp"

namespace carlitz {

// Named variable from the fixed universe theta < t < t_1 < t_2 < ... < x < z,
// plus auxiliary families (y_i and a shift variable T) used for symbolic
// identity checking.  The ordering is the canonical serialization order.
class Var {
public:
    enum class Family : std::uint8_t { Theta = 0, T = 1, TSub = 2, X = 3, Z = 4, YSub = 5, Shift = 6 };

    static Var theta() { return Var(Family::Theta, 0); }
    static Var t() { return Var(Family::T, 0); }
    static Var t_sub(unsigned i) { return Var(Family::TSub, check_sub(i)); }
    static Var x() { return Var(Family::X, 0); }
    static Var z() { return Var(Family::Z, 0); }
    static Var y_sub(unsigned i) { return Var(Family::YSub, check_sub(i)); }
    static Var shift() { return Var(Family::Shift, 0); }

    Family family() const { return fam_; }
    unsigned sub() const { return sub_; }

    std::string name() const {
        switch (fam_) {
            case Family::Theta: return "theta";
            case Family::T: return "t";
            case Family::TSub: return "t" + std::to_string(sub_);
            case Family::X: return "x";
            case Family::Z: return "z";
            case Family::YSub: return "y" + std::to_string(sub_);
            case Family::Shift: return "T";
        }
        return "?";
    }

    static std::optional<Var> parse(std::string_view s) {
        if (s == "theta") return theta();
        if (s == "t") return t();
        if (s == "x") return x();
        if (s == "z") return z();
        if (s == "T") return shift();
        if (s.size() >= 2 && (s[0] == 't' || s[0] == 'y')) {
            unsigned idx = 0;
            for (char ch : s.substr(1)) {
                if (ch < '0' || ch > '9') return std::nullopt;
                idx = idx * 10 + static_cast<unsigned>(ch - '0');
            }
            if (idx == 0) return std::nullopt;
            return s[0] == 't' ? t_sub(idx) : y_sub(idx);
        }
        return std::nullopt;
    }

    auto operator<=>(const Var&) const = default;

private:
    Var(Family f, unsigned s) : fam_(f), sub_(s) {}
    static unsigned check_sub(unsigned i) {
        if (i == 0) throw usage_error("indexed variables start at 1");
        return i;
    }

    Family fam_;
    unsigned sub_;
};

// Monomial: sorted (variable, exponent) pairs, all exponents positive.
class Mono {
public:
    static Mono unit() { return Mono(); }
    static Mono var(Var v, long long e = 1) {
        Mono m;
        if (e < 0) throw usage_error("negative exponent in monomial");
        if (e > 0) m.f_.emplace_back(v, e);
        return m;
    }

    bool is_unit() const { return f_.empty(); }
    long long exp_of(Var v) const {
        for (const auto& [w, e] : f_)
            if (w == v) return e;
        return 0;
    }
    bool contains(Var v) const { return exp_of(v) != 0; }
    const std::vector<std::pair<Var, long long>>& factors() const { return f_; }

    Mono operator*(const Mono& o) const {
        Mono out;
        auto a = f_.begin();
        auto b = o.f_.begin();
        while (a != f_.end() || b != o.f_.end()) {
            if (b == o.f_.end() || (a != f_.end() && a->first < b->first))
                out.f_.push_back(*a++);
            else if (a == f_.end() || b->first < a->first)
                out.f_.push_back(*b++);
            else {
                out.f_.emplace_back(a->first, a->second + b->second);
                ++a, ++b;
            }
        }
        return out;
    }

    Mono pow(long long k) const {
        if (k < 0) throw usage_error("negative monomial power");
        Mono out;
        if (k == 0) return out;
        out.f_ = f_;
        for (auto& [v, e] : out.f_) e *= k;
        return out;
    }

    Mono without(Var v) const {
        Mono out;
        for (const auto& fe : f_)
            if (fe.first != v) out.f_.push_back(fe);
        return out;
    }

    auto operator<=>(const Mono&) const = default;

private:
    std::vector<std::pair<Var, long long>> f_;
};

// Sparse multivariate polynomial over a coefficient ring R.  A prototype zero
// coefficient travels with the polynomial so that the zero polynomial still
// knows its ring (field context and the like).  No zero coefficient is stored.
template <class R>
class MultiPoly {
public:
    explicit MultiPoly(R zero) : zero_(std::move(zero)) {}

    static MultiPoly constant(R c) {
        MultiPoly f(zero_like(c));
        f.add_term(Mono::unit(), std::move(c));
        return f;
    }
    static MultiPoly variable(const R& proto, Var v, long long e = 1) {
        MultiPoly f(zero_like(proto));
        f.add_term(Mono::var(v, e), one_like(proto));
        return f;
    }

    const R& proto() const { return zero_; }
    std::uint64_t characteristic() const { return zero_.characteristic(); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Mono, R>& terms() const { return terms_; }

    void add_term(const Mono& m, R c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, std::move(c));
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const R& coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? zero_ : it->second;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly out = *this;
        for (const auto& [m, c] : o.terms_) out.add_term(m, c);
        return out;
    }
    MultiPoly operator-() const {
        MultiPoly out(zero_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }
    MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }
    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly out(zero_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
        return out;
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) { return *this += -o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    bool operator==(const MultiPoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        for (; a != terms_.end(); ++a, ++b)
            if (a->first != b->first || !(a->second == b->second)) return false;
        return true;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly scaled(const R& c) const {
        MultiPoly out(zero_);
        if (c.is_zero()) return out;
        for (const auto& [m, a] : terms_) out.add_term(m, a * c);
        return out;
    }

    // In characteristic p the p^k-th power acts termwise; general exponents
    // combine that with square-and-multiply over the base-p digits.
    MultiPoly pow(unsigned long long n) const {
        if (n == 0) return constant(one_like(zero_));
        const std::uint64_t p = characteristic();
        if (p == 0) return pow_small(n);
        MultiPoly result = constant(one_like(zero_));
        MultiPoly frob = *this;  // this^(p^j)
        while (true) {
            unsigned long long digit = n % p;
            if (digit != 0) result *= frob.pow_small(digit);
            n /= p;
            if (n == 0) break;
            frob = frob.char_power(p);
        }
        return result;
    }

    // Termwise n-th power; valid when n is a power of the characteristic.
    MultiPoly char_power(unsigned long long n) const {
        MultiPoly out(zero_);
        for (const auto& [m, c] : terms_)
            out.terms_.emplace(m.pow(static_cast<long long>(n)), coeff_pow(c, n));
        return out;
    }

    bool contains_var(Var v) const {
        for (const auto& [m, c] : terms_)
            if (m.contains(v)) return true;
        return false;
    }

    long long degree_in(Var v) const {  // -1 on the zero polynomial
        long long d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exp_of(v));
        return d;
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    R constant_value() const {
        if (terms_.empty()) return zero_;
        if (!is_constant()) throw usage_error("multivariate polynomial is not constant");
        return terms_.begin()->second;
    }

    // Coefficient of v^k, as a polynomial in the remaining variables.
    MultiPoly coeff_in(Var v, long long k) const {
        MultiPoly out(zero_);
        for (const auto& [m, c] : terms_)
            if (m.exp_of(v) == k) out.terms_.emplace(m.without(v), c);
        return out;
    }

    // Substitute g for v.  Powers of g are memoized per distinct exponent.
    MultiPoly substitute(Var v, const MultiPoly& g) const {
        MultiPoly out(zero_);
        std::map<long long, MultiPoly> gpow;
        for (const auto& [m, c] : terms_) {
            long long e = m.exp_of(v);
            if (e == 0) {
                out.add_term(m, c);
                continue;
            }
            auto it = gpow.find(e);
            if (it == gpow.end())
                it = gpow.emplace(e, g.pow(static_cast<unsigned long long>(e))).first;
            MultiPoly rest(zero_);
            rest.terms_.emplace(m.without(v), c);
            out += rest * it->second;
        }
        return out;
    }

    // Drop all terms with exponent of v >= bound.
    MultiPoly truncated(Var v, long long bound) const {
        MultiPoly out(zero_);
        for (const auto& [m, c] : terms_)
            if (m.exp_of(v) < bound) out.terms_.emplace(m, c);
        return out;
    }

    template <class F>
    auto map_coeffs(F&& fn) const -> MultiPoly<decltype(fn(std::declval<const R&>()))> {
        MultiPoly<decltype(fn(std::declval<const R&>()))> out(fn(zero_));
        for (const auto& [m, c] : terms_) out.add_term(m, fn(c));
        return out;
    }

private:
    MultiPoly pow_small(unsigned long long n) const {
        MultiPoly result = constant(one_like(zero_));
        MultiPoly base = *this;
        while (n != 0) {
            if (n & 1) result *= base;
            n >>= 1;
            if (n != 0) base *= base;
        }
        return result;
    }

    static R coeff_pow(const R& c, unsigned long long n) {
        R result = one_like(c);
        R base = c;
        while (n != 0) {
            if (n & 1) result = result * base;
            n >>= 1;
            if (n != 0) base = base * base;
        }
        return result;
    }

    R zero_;
    std::map<Mono, R> terms_;
};

template <class R>
MultiPoly<R> zero_like(const MultiPoly<R>& f) {
    return MultiPoly<R>(f.proto());
}
template <class R>
MultiPoly<R> one_like(const MultiPoly<R>& f) {
    return MultiPoly<R>::constant(one_like(f.proto()));
}

}  // namespace carlitz

#endif
