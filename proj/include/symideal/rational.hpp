// Exact arbitrary-precision rational arithmetic on top of GMP.
#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace symideal {

using Integer = mpz_class;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; zero is 0/1. All operations are exact, there is no rounding
/// anywhere in this library.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(denominator(), numerator());
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// Text form "p" or "p/q", lowest terms, optional leading '-'.
    std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    static Rational parse(const std::string& text) {
        std::size_t pos = 0;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        auto digits = [&](const char* what) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start)
                throw std::invalid_argument(std::string("Rational: expected ") + what +
                                            " in '" + text + "'");
            return text.substr(start, pos - start);
        };
        Integer num(digits("numerator"), 10);
        Integer den = 1;
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            den = Integer(digits("denominator"), 10);
        }
        if (pos != text.size())
            throw std::invalid_argument("Rational: trailing characters in '" + text + "'");
        if (neg) num = -num;
        return Rational(num, den);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;  // invariant: canonical (lowest terms, positive denominator)
};

}  // namespace symideal
