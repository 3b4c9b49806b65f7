// Recursive-descent parser for the ASCII polynomial format.
//
//   expr     := ('+'|'-')? term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := (rational | var | '(' expr ')') ('^' uint)?
//   var      := letter (letter|digit|'_')*
//   rational := '-'? uint ('/' uint)?
//
// Whitespace is insignificant. Multiplication is always explicit via '*', so
// multi-character variable names like "x12" or "t0" stay unambiguous.
#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "symideal/polynomial.hpp"

namespace symideal {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& text, const VariableSet& vars, MonomialOrder order)
        : text_(text), vars_(vars), order_(order) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
        return p;
    }

private:
    Polynomial expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = get() == '-';
        Polynomial result = term();
        if (neg) result = -result;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            Polynomial t = term();
            result = c == '+' ? result + t : result - t;
        }
        return result;
    }

    Polynomial term() {
        Polynomial result = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            get();
            result = result * factor();
        }
        return result;
    }

    Polynomial factor() {
        skip_ws();
        std::size_t start = pos_;
        char c = peek();
        Polynomial base = Polynomial::zero(vars_, order_);
        if (c == '(') {
            get();
            base = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            get();
        } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                   (c == '-' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
            base = Polynomial::constant(vars_, rational(), order_);
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name = identifier();
            if (!vars_.contains(name))
                throw ParseError("unknown variable '" + name + "'", start);
            base = Polynomial::variable(vars_, name, order_);
        } else {
            throw ParseError("expected a factor", pos_);
        }
        skip_ws();
        if (peek() == '^') {
            get();
            base = base.pow(static_cast<int>(uinteger()));
        }
        return base;
    }

    Rational rational() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            get();
            neg = true;
        }
        Integer num(uinteger_digits(), 10);
        Integer den = 1;
        if (peek() == '/') {
            get();
            std::size_t dpos = pos_;
            den = Integer(uinteger_digits(), 10);
            if (den == 0) throw ParseError("zero denominator", dpos);
        }
        if (neg) num = -num;
        return Rational(num, den);
    }

    long uinteger() {
        std::size_t start = pos_;
        std::string d = uinteger_digits();
        if (d.size() > 7) throw ParseError("integer literal too large", start);
        return std::stol(d);
    }

    std::string uinteger_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) get();
        if (pos_ == start) throw ParseError("expected digits", pos_);
        return text_.substr(start, pos_ - start);
    }

    std::string identifier() {
        std::size_t start = pos_;
        get();
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') get();
        return text_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

    const std::string& text_;
    const VariableSet& vars_;
    MonomialOrder order_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text, const VariableSet& vars,
                                   MonomialOrder order = MonomialOrder::grevlex()) {
    return detail::PolyParser(text, vars, order).parse();
}

}  // namespace symideal
