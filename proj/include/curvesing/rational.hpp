// Exact rational numbers over Integer. Always stored in canonical form:
// gcd(|num|, den) = 1, den >= 1, zero is 0/1.
#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "curvesing/errors.hpp"
#include "curvesing/integer.hpp"

namespace curvesing {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t v) : num_(v), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        Rational r;
        if (slash == std::string_view::npos) {
            r.num_ = Integer::from_string(s);
            r.den_ = Integer(1);
        } else {
            r.num_ = Integer::from_string(s.substr(0, slash));
            r.den_ = Integer::from_string(s.substr(slash + 1));
            r.normalize();
        }
        return r;
    }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    int sign() const { return num_.sign(); }

    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DomainError("division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

    static int cmp(const Rational& a, const Rational& b) {
        return Integer::cmp(a.num_ * b.den_, b.num_ * a.den_);
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational inverse() const {
        if (is_zero()) throw DomainError("division by zero");
        Rational r;
        if (num_.sign() < 0) {
            r.num_ = -den_;
            r.den_ = -num_;
        } else {
            r.num_ = den_;
            r.den_ = num_;
        }
        return r;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    // 6-significant-digit decimal annotation; exact values stay authoritative
    std::string approx_string() const {
        if (is_zero()) return "0.00000";
        Integer n = num_.abs(), d = den_;
        int exp10 = 0;
        while (n < d) {
            n *= Integer(10);
            --exp10;
        }
        while (n >= d * Integer(10)) {
            d *= Integer(10);
            ++exp10;
        }
        Integer scaled = (n * Integer::pow(Integer(10), 5)) / d;  // 6 significant digits
        std::string digits = scaled.to_string();
        if (digits.size() > 6) {  // rounding edge when n/d == 9.99999...
            digits = digits.substr(0, 6);
            ++exp10;
        }
        std::string out = sign() < 0 ? "-" : "";
        out += digits.substr(0, 1) + "." + digits.substr(1);
        if (exp10 != 0) out += "e" + std::to_string(exp10);
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

private:
    Integer num_, den_;

    void normalize() {
        if (den_.is_zero()) throw DomainError("division by zero");
        if (num_.is_zero()) {
            den_ = Integer(1);
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = Integer::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

}  // namespace curvesing
