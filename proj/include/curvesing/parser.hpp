// Recursive-descent parser for the polynomial text grammar:
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' natural)?
//   base   := rational-literal | variable | '(' expr ')'
// Implicit multiplication is rejected ("2x" is an error; write "2*x").
#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "curvesing/errors.hpp"
#include "curvesing/polynomial.hpp"

namespace curvesing {

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, const VariableSet& vars) : text_(text), vars_(vars) {}

    Polynomial run() {
        skip_ws();
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("syntax error", pos_);
        return p;
    }

private:
    std::string_view text_;
    const VariableSet& vars_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    Polynomial parse_expr() {
        bool neg = false;
        skip_ws();
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            neg = peek() == '-';
            ++pos_;
        }
        Polynomial acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (at_end() || (peek() != '+' && peek() != '-')) break;
            bool minus = peek() == '-';
            ++pos_;
            Polynomial t = parse_term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        for (;;) {
            skip_ws();
            if (at_end() || peek() != '*') break;
            ++pos_;
            acc *= parse_factor();
        }
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected exponent", pos_);
            std::uint64_t e = 0;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + static_cast<std::uint64_t>(peek() - '0');
                if (e > 1000000) throw ParseError("exponent too large", start);
                ++pos_;
            }
            return base.pow(e);
        }
        return base;
    }

    Polynomial parse_base() {
        skip_ws();
        if (at_end()) throw ParseError("syntax error", pos_);
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_expr();
            skip_ws();
            if (at_end() || peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_literal();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::string name;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
                name += peek();
                ++pos_;
            }
            std::size_t idx = vars_.index_of(name);
            if (idx == VariableSet::npos)
                throw ParseError("unknown variable '" + name + "'", start);
            return Polynomial::variable(vars_, idx);
        }
        throw ParseError("syntax error", pos_);
    }

    Polynomial parse_literal() {
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            ++pos_;
        }
        Integer num = Integer::from_string(digits);
        Integer den(1);
        if (!at_end() && peek() == '/') {
            // lookahead: only treat as a fraction when digits follow
            std::size_t save = pos_;
            ++pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                pos_ = save;
                throw ParseError("expected denominator", pos_ + 1);
            }
            std::string dden;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                dden += peek();
                ++pos_;
            }
            den = Integer::from_string(dden);
            if (den.is_zero()) throw ParseError("zero denominator", save + 1);
        }
        return Polynomial::constant(vars_, Rational(std::move(num), std::move(den)));
    }
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const VariableSet& vars) {
    return detail::PolyParser(text, vars).run();
}

}  // namespace curvesing
