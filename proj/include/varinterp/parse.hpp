#pragma once

/**
 * @file parse.hpp
 * @brief Recursive-descent parser for the polynomial expression grammar.
 *
 *     expr    := term (('+' | '-') term)*
 *     term    := unary (('*' | '/') unary)*
 *     unary   := '-' unary | '+' unary | power
 *     power   := primary ('^' integer)?
 *     primary := integer | identifier | 'i' | '(' expr ')'
 *
 * Multiplication must be explicit. Division is only allowed by a nonzero
 * constant, so `3/2*x` and `x/2` are both accepted. The identifier `i` is
 * the imaginary unit in Q(i) rings and an ordinary name otherwise.
 */

#include <cctype>
#include <string>
#include <string_view>

#include "error.hpp"
#include "polynomial.hpp"

namespace varinterp {

class ExpressionParser {
public:
    /// line/column locate text[0] inside a larger document for error messages.
    ExpressionParser(RingPtr ring, std::string_view text, std::size_t line = 1, std::size_t column = 1)
        : ring_(std::move(ring)), text_(text), line_(line), column_(column) {}

    Polynomial parse() {
        skip_space();
        if (at_end()) fail("expected an expression");
        Polynomial p = expr();
        skip_space();
        if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return p;
    }

private:
    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            skip_space();
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        for (;;) {
            skip_space();
            if (accept('*')) {
                acc *= unary();
            } else if (peek() == '/') {
                std::size_t at = pos_;
                ++pos_;
                Polynomial d = unary();
                if (!d.is_constant() || d.is_zero()) fail_at(at, "division only by a nonzero constant");
                acc *= Scalar(1) / d.constant_term();
            } else {
                return acc;
            }
        }
    }

    Polynomial unary() {
        skip_space();
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        skip_space();
        if (!accept('^')) return base;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a nonnegative integer exponent");
        std::size_t start = pos_;
        std::string digits = read_digits();
        if (digits.size() > 4) fail_at(start, "exponent too large");
        return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }

    Polynomial primary() {
        skip_space();
        if (at_end()) fail("unexpected end of expression");
        char c = peek();
        if (accept('(')) {
            Polynomial inner = expr();
            skip_space();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer value(read_digits());
            return Polynomial::constant(ring_, Scalar(Rational(value)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            std::string name = read_identifier();
            if (auto j = ring_->index_of(name)) return Polynomial::variable(ring_, *j);
            if (name == "i" && ring_->field() == Field::gaussian_rational)
                return Polynomial::constant(ring_, Scalar::imaginary_unit());
            if (name == "i") fail_at(start, "imaginary unit 'i' requires a ring over Qi");
            fail_at(start, "undeclared variable '" + name + "'");
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string read_identifier() {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    bool accept(char c) {
        if (peek() != c || at_end()) return false;
        ++pos_;
        return true;
    }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& message) const {
        throw ParseError(message, line_, column_ + at);
    }

    RingPtr ring_;
    std::string_view text_;
    std::size_t line_;
    std::size_t column_;
    std::size_t pos_ = 0;
};

inline Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
    return ExpressionParser(ring, text).parse();
}

}  // namespace varinterp
