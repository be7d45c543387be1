#pragma once

#include <cctype>
#include <string>

#include "jetlct/errors.hpp"
#include "jetlct/polynomial.hpp"

namespace jetlct {

/// Recursive-descent parser for the expression grammar
///
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := rational | var | '(' expr ')' | factor '^' uint
///   var      := 'x' uint ('_' uint)?
///   rational := int ('/' uint)?
///
/// Whitespace is insignificant. Multiplication must be explicit. The optional
/// '_' suffix names a jet variable (x1_2 is the level-2 jet of x1).
class PolyParser {
public:
    PolyParser(std::string text, int n) : text_(std::move(text)), n_(n) {
        if (n_ < 1) throw DomainError("ambient variable count must be at least 1");
    }

    Polynomial parse() {
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        int hi = std::max(p.max_level_used(), 0);
        return p.with_ambient(VarSet{n_, 0, hi});
    }

private:
    // The working ambient is wide enough for any level the text can mention;
    // parse() shrinks it to the levels actually used.
    static constexpr int kLevelCap = 64;

    VarSet wide() const { return VarSet{n_, 0, kLevelCap}; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    long parse_uint(const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail(std::string("expected ") + what);
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1000000) fail("number too large");
            ++pos_;
        }
        return value;
    }

    Polynomial parse_expr() {
        Polynomial p = parse_term();
        for (;;) {
            skip_ws();
            if (peek_is('+')) {
                ++pos_;
                p = p + parse_term();
            } else if (peek_is('-')) {
                ++pos_;
                p = p - parse_term();
            } else {
                return p;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (peek_is('*')) {
            ++pos_;
            p = p * parse_factor();
        }
        return p;
    }

    Polynomial parse_factor() {
        Polynomial p = parse_primary();
        while (peek_is('^')) {
            ++pos_;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
            long e = parse_uint("exponent");
            if (e > 255) fail("exponent too large");
            p = p.pow(static_cast<int>(e));
        }
        return p;
    }

    Polynomial parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = parse_expr();
            skip_ws();
            if (!peek_is(')')) fail("expected ')'");
            ++pos_;
            return p;
        }
        if (c == 'x') {
            ++pos_;
            std::size_t at = pos_;
            long base = parse_uint("variable index");
            if (base < 1 || base > n_) {
                pos_ = at;
                fail("variable index out of [1.." + std::to_string(n_) + "]");
            }
            long level = 0;
            if (pos_ < text_.size() && text_[pos_] == '_') {
                ++pos_;
                level = parse_uint("jet level");
                if (level > kLevelCap) fail("jet level too large");
            }
            return Polynomial::variable(
                JetVariable{static_cast<int>(base), static_cast<int>(level)}, wide());
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            bool neg = c == '-';
            if (neg) {
                ++pos_;
                skip_ws();
                if (pos_ >= text_.size() ||
                    !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    fail("expected number after '-'");
            }
            Integer num = parse_bigint();
            Integer den = 1;
            if (peek_is('/')) {
                ++pos_;
                std::size_t at = pos_;
                den = parse_bigint();
                if (den == 0) {
                    pos_ = at;
                    fail("zero denominator");
                }
            }
            Rational q(num, den);
            if (neg) q = -q;
            return Polynomial::constant(q, wide());
        }
        fail("unexpected character");
    }

    Integer parse_bigint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected number");
        Integer value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return value;
    }

    std::string text_;
    int n_;
    std::size_t pos_ = 0;
};

/// Parses `text` as a polynomial in x1..xn (jet suffixes allowed).
inline Polynomial parse_poly(const std::string& text, int n) {
    return PolyParser(text, n).parse();
}

}  // namespace jetlct
