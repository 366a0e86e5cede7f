// Dense univariate polynomials over an exact field.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "curvesing/errors.hpp"

namespace curvesing {

template <class F>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UPoly zero() { return UPoly(); }
    static UPoly constant(F v) {
        UPoly p;
        if (!v.is_zero()) p.c_.push_back(std::move(v));
        return p;
    }
    static UPoly variable() {
        UPoly p;
        p.c_ = {F(0), F(1)};
        return p;
    }
    static UPoly monomial(std::size_t k, F v) {
        UPoly p;
        if (v.is_zero()) return p;
        p.c_.assign(k + 1, F(0));
        p.c_[k] = std::move(v);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }
    const F& operator[](std::size_t i) const { return c_[i]; }
    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
    const F& lc() const {
        if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    void set_coeff(std::size_t i, F v) {
        if (i >= c_.size()) {
            if (v.is_zero()) return;
            c_.resize(i + 1, F(0));
        }
        c_[i] = std::move(v);
        trim();
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size()) r.c_[i] += a.c_[i];
            if (i < b.c_.size()) r.c_[i] += b.c_[i];
        }
        r.trim();
        return r;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size()) r.c_[i] += a.c_[i];
            if (i < b.c_.size()) r.c_[i] -= b.c_[i];
        }
        r.trim();
        return r;
    }
    friend UPoly operator-(const UPoly& a) {
        UPoly r = a;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        UPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        r.trim();
        return r;
    }
    friend UPoly operator*(const F& s, const UPoly& a) {
        if (s.is_zero()) return UPoly();
        UPoly r = a;
        for (auto& v : r.c_) v = s * v;
        r.trim();
        return r;
    }
    UPoly& operator+=(const UPoly& b) { return *this = *this + b; }
    UPoly& operator-=(const UPoly& b) { return *this = *this - b; }
    UPoly& operator*=(const UPoly& b) { return *this = *this * b; }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    static std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw DomainError("division by zero polynomial");
        UPoly q, r = a;
        const std::size_t db = b.c_.size() - 1;
        F inv_lc = F(1) / b.lc();
        while (!r.is_zero() && r.c_.size() - 1 >= db) {
            std::size_t shift = r.c_.size() - 1 - db;
            F factor = r.lc() * inv_lc;
            q.set_coeff(shift, factor);
            for (std::size_t i = 0; i <= db; ++i) {
                if (b.c_[i].is_zero()) continue;
                r.c_[i + shift] -= factor * b.c_[i];
            }
            r.c_.pop_back();
            r.trim();
        }
        return {q, r};
    }
    friend UPoly operator/(const UPoly& a, const UPoly& b) { return divrem(a, b).first; }
    friend UPoly operator%(const UPoly& a, const UPoly& b) { return divrem(a, b).second; }

    UPoly monic() const {
        if (is_zero()) return *this;
        F inv = F(1) / lc();
        UPoly r = *this;
        for (auto& v : r.c_) v = v * inv;
        return r;
    }

    static UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            UPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    UPoly derivative() const {
        UPoly r;
        if (c_.size() <= 1) return r;
        r.c_.resize(c_.size() - 1, F(0));
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = F(static_cast<std::int64_t>(i)) * c_[i];
        r.trim();
        return r;
    }

    F eval(const F& x) const {
        F r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    // f(z + a)
    UPoly shift(const F& a) const {
        UPoly r;
        UPoly lin;
        lin.c_ = {a, F(1)};
        for (std::size_t i = c_.size(); i-- > 0;) {
            r = r * lin;
            r += constant(c_[i]);
        }
        return r;
    }

    // f(c * z)
    UPoly scale_arg(const F& s) const {
        UPoly r = *this;
        F powv(1);
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            r.c_[i] = r.c_[i] * powv;
            powv = powv * s;
        }
        r.trim();
        return r;
    }

    UPoly pow(std::uint64_t n) const {
        UPoly r = constant(F(1)), b = *this;
        while (n) {
            if (n & 1) r *= b;
            if (n >>= 1) b *= b;
        }
        return r;
    }

private:
    std::vector<F> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

// Res(a, b) via the Euclidean recursion; exact over any field.
template <class F>
F resultant(UPoly<F> a, UPoly<F> b) {
    if (a.is_zero() || b.is_zero()) return F(0);
    F acc(1);
    bool negate = false;
    while (true) {
        if (b.degree() == 0) {
            F r = acc;
            F l = b.lc();
            for (std::ptrdiff_t i = 0; i < a.degree(); ++i) r = r * l;
            return negate ? -r : r;
        }
        UPoly<F> rem = a % b;
        if (rem.is_zero()) return F(0);
        // Res(a,b) = (-1)^(da*db) lc(b)^(da-dr) Res(b, rem)
        if ((a.degree() % 2) && (b.degree() % 2)) negate = !negate;
        F l = b.lc();
        for (std::ptrdiff_t i = 0; i < a.degree() - rem.degree(); ++i) acc = acc * l;
        a = std::move(b);
        b = std::move(rem);
    }
}

}  // namespace curvesing
