#include "hopfbench/expr.hpp"

#include <cctype>
#include <stdexcept>

#include <fmt/format.h>

namespace hb {

namespace {

class PolyParser {
public:
    PolyParser(const std::string& s, const Alphabet& A, const Field& F, const ParamEnv& env)
        : s_(s), A_(A), F_(F), env_(env) {}

    NcPoly relation() {
        NcPoly lhs = expr();
        if (peek() == '=') {
            ++i_;
            lhs = sub(F_, lhs, expr());
        }
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return lhs;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument(fmt::format("parse error in '{}' at {}: {}", s_, i_, msg));
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    char peek() {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail(fmt::format("expected '{}'", c));
        ++i_;
    }

    NcPoly expr() {
        NcPoly acc;
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = s_[i_++] == '-';
        NcPoly t = term();
        acc = negate ? scale(F_, F_.neg(1), t) : t;
        while (peek() == '+' || peek() == '-') {
            bool minus = s_[i_++] == '-';
            NcPoly u = term();
            acc = minus ? sub(F_, acc, u) : add(F_, acc, u);
        }
        return acc;
    }

    bool starts_factor() {
        char c = peek();
        if (c == '\0') return false;
        if (c == '(' || c == '[' || c == '$' || std::isdigit(static_cast<unsigned char>(c))) return true;
        return A_.match(s_, i_).has_value();
    }

    NcPoly term() {
        NcPoly acc = factor();
        for (;;) {
            if (peek() == '*') {
                ++i_;
                acc = mul(F_, acc, factor());
            } else if (starts_factor()) {
                acc = mul(F_, acc, factor());
            } else {
                break;
            }
        }
        return acc;
    }

    NcPoly factor() {
        NcPoly base = primary();
        if (peek() == '^') {
            ++i_;
            long long e = exponent();
            if (e < 0) fail("negative exponent");
            base = pow(F_, base, static_cast<int>(e));
        }
        return base;
    }

    long long integer() {
        skip();
        size_t j = i_;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
        if (j == i_) fail("expected integer");
        long long v = std::stoll(s_.substr(i_, j - i_));
        i_ = j;
        return v;
    }

    std::string ident() {
        size_t j = i_;
        while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
        if (j == i_) fail("expected name");
        std::string n = s_.substr(i_, j - i_);
        i_ = j;
        return n;
    }

    const ParamValue& param() {
        expect('$');
        std::string n = ident();
        auto it = env_.find(n);
        if (it == env_.end()) fail("unbound parameter $" + n);
        return it->second;
    }

    long long int_param() {
        const ParamValue& v = param();
        if (!v.is_int) fail("field-valued parameter used as exponent");
        return v.ival;
    }

    // integer arithmetic inside exponents
    long long exponent() {
        char c = peek();
        if (c == '$') return int_param();
        if (c == '(') {
            ++i_;
            long long v = int_expr();
            expect(')');
            return v;
        }
        return integer();
    }
    long long int_expr() {
        long long v = int_term();
        while (peek() == '+' || peek() == '-') {
            bool minus = s_[i_++] == '-';
            long long w = int_term();
            v = minus ? v - w : v + w;
        }
        return v;
    }
    long long int_term() {
        long long v = int_atom();
        while (peek() == '*') {
            ++i_;
            v *= int_atom();
        }
        return v;
    }
    long long int_atom() {
        char c = peek();
        if (c == '$') return int_param();
        if (c == '(') {
            ++i_;
            long long v = int_expr();
            expect(')');
            return v;
        }
        return integer();
    }

    NcPoly primary() {
        char c = peek();
        if (c == '(') {
            ++i_;
            NcPoly e = expr();
            expect(')');
            return e;
        }
        if (c == '[') {
            ++i_;
            NcPoly a = expr();
            expect(',');
            NcPoly b = expr();
            expect(']');
            return commutator(F_, a, b);
        }
        if (c == '$') return NcPoly::constant(param().as_elem(F_));
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = integer();
            if (!F_.contains(v)) fail(fmt::format("coefficient {} outside {}", v, F_.name()));
            return NcPoly::constant(static_cast<Elem>(v));
        }
        auto m = A_.match(s_, i_);
        if (!m) fail("unknown symbol");
        i_ += m->second;
        return NcPoly::monomial(Word{m->first});
    }

    const std::string& s_;
    const Alphabet& A_;
    const Field& F_;
    const ParamEnv& env_;
    size_t i_ = 0;
};

}  // namespace

NcPoly parse_poly(const std::string& s, const Alphabet& A, const Field& F, const ParamEnv& env) {
    return PolyParser(s, A, F, env).relation();
}

}  // namespace hb
