// Truncated power series in one parameter over a number-field tower.
// A series carries the truncation order it is reliable to: arithmetic never
// pretends to know more than min of the operand truncations.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvesing/errors.hpp"
#include "curvesing/numberfield.hpp"
#include "curvesing/polynomial.hpp"

namespace curvesing {

class TruncatedSeries {
public:
    TruncatedSeries() : trunc_(0), c_(1, FieldElem(0)) {}
    explicit TruncatedSeries(std::uint64_t trunc) : trunc_(trunc), c_(trunc + 1, FieldElem(0)) {}
    TruncatedSeries(std::uint64_t trunc, std::vector<FieldElem> coeffs) : trunc_(trunc), c_(std::move(coeffs)) {
        c_.resize(trunc_ + 1, FieldElem(0));
    }

    static TruncatedSeries zero(std::uint64_t trunc) { return TruncatedSeries(trunc); }
    static TruncatedSeries constant(std::uint64_t trunc, FieldElem v) {
        TruncatedSeries s(trunc);
        s.c_[0] = std::move(v);
        return s;
    }
    static TruncatedSeries monomial(std::uint64_t trunc, std::uint64_t k, FieldElem v) {
        TruncatedSeries s(trunc);
        if (k <= trunc) s.c_[k] = std::move(v);
        return s;
    }

    std::uint64_t trunc() const { return trunc_; }
    const FieldElem& coeff(std::uint64_t i) const { return c_[i]; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    void set_coeff(std::uint64_t i, FieldElem v) {
        if (i <= trunc_) c_[i] = std::move(v);
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    // order of the series, when visible below the truncation
    std::optional<std::uint64_t> order() const {
        for (std::uint64_t i = 0; i <= trunc_; ++i)
            if (!c_[i].is_zero()) return i;
        return std::nullopt;
    }

    TruncatedSeries truncated(std::uint64_t t) const {
        if (t >= trunc_) return *this;
        TruncatedSeries s(t);
        for (std::uint64_t i = 0; i <= t; ++i) s.c_[i] = c_[i];
        return s;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::uint64_t t = std::min(a.trunc_, b.trunc_);
        TruncatedSeries r(t);
        for (std::uint64_t i = 0; i <= t; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::uint64_t t = std::min(a.trunc_, b.trunc_);
        TruncatedSeries r(t);
        for (std::uint64_t i = 0; i <= t; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a) {
        TruncatedSeries r(a.trunc_);
        for (std::uint64_t i = 0; i <= a.trunc_; ++i) r.c_[i] = -a.c_[i];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::uint64_t t = std::min(a.trunc_, b.trunc_);
        TruncatedSeries r(t);
        for (std::uint64_t i = 0; i <= t; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::uint64_t j = 0; i + j <= t; ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    friend TruncatedSeries operator*(const FieldElem& s, const TruncatedSeries& a) {
        TruncatedSeries r(a.trunc_);
        if (s.is_zero()) return r;
        for (std::uint64_t i = 0; i <= a.trunc_; ++i)
            if (!a.c_[i].is_zero()) r.c_[i] = s * a.c_[i];
        return r;
    }
    TruncatedSeries& operator+=(const TruncatedSeries& b) { return *this = *this + b; }
    TruncatedSeries& operator-=(const TruncatedSeries& b) { return *this = *this - b; }
    TruncatedSeries& operator*=(const TruncatedSeries& b) { return *this = *this * b; }

    // division by a unit series (nonzero constant term)
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (b.c_[0].is_zero()) throw DomainError("series division by a non-unit");
        std::uint64_t t = std::min(a.trunc_, b.trunc_);
        TruncatedSeries r(t);
        FieldElem inv0 = b.c_[0].inverse();
        for (std::uint64_t k = 0; k <= t; ++k) {
            FieldElem acc = a.c_[k];
            for (std::uint64_t j = 0; j < k; ++j) {
                if (r.c_[j].is_zero() || b.c_[k - j].is_zero()) continue;
                acc -= r.c_[j] * b.c_[k - j];
            }
            r.c_[k] = acc * inv0;
        }
        return r;
    }

    // multiply by t^k (gains truncation: the low-order zeros are exact)
    TruncatedSeries shift_up(std::uint64_t k) const {
        TruncatedSeries r(trunc_ + k);
        for (std::uint64_t i = 0; i <= trunc_; ++i) r.c_[i + k] = c_[i];
        return r;
    }

    // exact division by t^k; requires the low coefficients to vanish
    TruncatedSeries shift_down(std::uint64_t k) const {
        if (k > trunc_) throw InternalError("shift_down past the truncation");
        TruncatedSeries r(trunc_ - k);
        for (std::uint64_t i = 0; i < k; ++i)
            if (!c_[i].is_zero()) throw InternalError("shift_down of a series with a lower-order term");
        for (std::uint64_t i = k; i <= trunc_; ++i) r.c_[i - k] = c_[i];
        return r;
    }

    // substitute t -> t^k (k >= 1)
    TruncatedSeries stretch(std::uint64_t k) const {
        if (k == 0) throw InternalError("stretch by zero");
        TruncatedSeries r(k * (trunc_ + 1) - 1);
        for (std::uint64_t i = 0; i <= trunc_; ++i) r.c_[i * k] = c_[i];
        return r;
    }

    // substitute t -> lambda * t
    TruncatedSeries twist(const FieldElem& lambda) const {
        TruncatedSeries r(trunc_);
        FieldElem p(1);
        for (std::uint64_t i = 0; i <= trunc_; ++i) {
            if (!c_[i].is_zero()) r.c_[i] = c_[i] * p;
            p = p * lambda;
        }
        return r;
    }

    TruncatedSeries derivative() const {
        if (trunc_ == 0) return TruncatedSeries(0);
        TruncatedSeries r(trunc_ - 1);
        for (std::uint64_t i = 1; i <= trunc_; ++i)
            r.c_[i - 1] = FieldElem(static_cast<std::int64_t>(i)) * c_[i];
        return r;
    }

    TruncatedSeries pow(std::uint64_t n) const {
        TruncatedSeries r = constant(trunc_, FieldElem(1));
        TruncatedSeries b = *this;
        while (n) {
            if (n & 1) r *= b;
            if (n >>= 1) b *= b;
        }
        return r;
    }

    // rebase all coefficients into another field presentation
    TruncatedSeries rebased(const std::vector<FieldElem>& images) const {
        TruncatedSeries r(trunc_);
        for (std::uint64_t i = 0; i <= trunc_; ++i)
            if (!c_[i].is_zero()) r.c_[i] = rebase_elem(c_[i], images);
        return r;
    }

    std::string to_string(const std::string& var = "t") const {
        std::string out;
        for (std::uint64_t i = 0; i <= trunc_; ++i) {
            if (c_[i].is_zero()) continue;
            std::string coeff = c_[i].to_string();
            bool simple = c_[i].is_rational();
            std::string term;
            if (i == 0) {
                term = simple ? coeff : "(" + coeff + ")";
            } else {
                std::string tp = var + (i > 1 ? "^" + std::to_string(i) : "");
                if (c_[i].is_one())
                    term = tp;
                else
                    term = (simple ? coeff : "(" + coeff + ")") + "*" + tp;
            }
            if (out.empty())
                out = term;
            else
                out += " + " + term;
        }
        return out.empty() ? "0" : out;
    }

private:
    std::uint64_t trunc_;
    std::vector<FieldElem> c_;
};

// evaluate a bivariate polynomial on a pair of series
inline TruncatedSeries compose_series(const Polynomial& f, const TruncatedSeries& xs,
                                      const TruncatedSeries& ys) {
    if (f.vars().size() != 2) throw DomainError("series composition needs two variables");
    std::uint64_t t = std::min(xs.trunc(), ys.trunc());
    std::map<std::uint32_t, TruncatedSeries> xpow, ypow;
    auto power = [t](std::map<std::uint32_t, TruncatedSeries>& cache, const TruncatedSeries& base,
                     std::uint32_t k) -> const TruncatedSeries& {
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
        TruncatedSeries v = k == 0 ? TruncatedSeries::constant(t, FieldElem(1)) : base.truncated(t).pow(k);
        return cache.emplace(k, std::move(v)).first->second;
    };
    TruncatedSeries acc(t);
    for (const auto& [m, c] : f.terms()) {
        TruncatedSeries term = power(xpow, xs, m.e[0]) * power(ypow, ys, m.e[1]);
        acc += FieldElem(c) * term;
    }
    return acc;
}

}  // namespace curvesing
