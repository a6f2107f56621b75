#include "carlitz/parse.hpp"

#include <cctype>

namespace carlitz {

namespace {

class Parser {
public:
    Parser(const FieldPtr& ctx, std::string_view src) : ctx_(ctx), src_(src) {}

    Poly run() {
        Poly v = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    Poly expr() {
        Poly acc = term();
        while (true) {
            skip_ws();
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        while (true) {
            skip_ws();
            if (accept('*'))
                acc *= factor();
            else
                return acc;
        }
    }

    Poly factor() {
        Poly base = atom();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            base = base.pow(integer("exponent"));
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        if (accept('-')) return -atom();
        if (accept('(')) {
            Poly v = expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (peek() == 't') {
            ++pos_;
            return Poly::theta(ctx_);
        }
        if (peek() == 'u') {
            if (ctx_->e() == 1) fail("'u' is only defined in extension fields (e > 1)");
            ++pos_;
            return Poly::constant(Fq::from_index(ctx_, ctx_->p()));  // coords (0,1,0,..)
        }
        if (std::isdigit(static_cast<unsigned char>(peek())))
            return Poly::constant(Fq::from_int(ctx_, static_cast<long long>(integer("number"))));
        fail("expected 't', 'u', a number, or '('");
        return Poly::zero(ctx_);  // unreachable
    }

    std::uint64_t integer(const char* what) {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
        std::uint64_t v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(src_[pos_] - '0');
            if (v > (1ULL << 40)) fail("integer literal too large");
            ++pos_;
        }
        return v;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_ + 1); }

    FieldPtr ctx_;
    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const FieldPtr& ctx, std::string_view src) {
    return Parser(ctx, src).run();
}

}  // namespace carlitz
