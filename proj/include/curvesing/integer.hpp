// Arbitrary-precision signed integers: sign + magnitude in 32-bit limbs.
#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "curvesing/errors.hpp"

namespace curvesing {

class Integer {
public:
    Integer() = default;
    Integer(std::int64_t v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid UB on INT64_MIN
        std::uint64_t m = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
        limbs_.push_back(static_cast<std::uint32_t>(m));
        if (m >> 32) limbs_.push_back(static_cast<std::uint32_t>(m >> 32));
    }

    static Integer from_string(std::string_view s) {
        Integer r;
        if (!r.try_parse(s)) throw DomainError("invalid integer literal '" + std::string(s) + "'");
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const {
        std::uint64_t m = 0;
        if (!limbs_.empty()) m = limbs_[0];
        if (limbs_.size() > 1) m |= static_cast<std::uint64_t>(limbs_[1]) << 32;
        return m;
    }
    // valid when the value fits; used for exponents and small counts
    std::int64_t to_i64() const {
        std::uint64_t m = to_u64();
        return sign_ < 0 ? -static_cast<std::int64_t>(m) : static_cast<std::int64_t>(m);
    }

    friend Integer operator-(const Integer& a) {
        Integer r = a;
        r.sign_ = -r.sign_;
        return r;
    }

    friend Integer operator+(const Integer& a, const Integer& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        Integer r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) return Integer();
            if (c > 0) {
                r.limbs_ = sub_mag(a.limbs_, b.limbs_);
                r.sign_ = a.sign_;
            } else {
                r.limbs_ = sub_mag(b.limbs_, a.limbs_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend Integer operator-(const Integer& a, const Integer& b) { return a + (-b); }

    friend Integer operator*(const Integer& a, const Integer& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return Integer();
        Integer r;
        r.sign_ = a.sign_ * b.sign_;
        r.limbs_ = mul_mag(a.limbs_, b.limbs_);
        return r;
    }

    // truncated toward zero, like C++ integer division
    friend Integer operator/(const Integer& a, const Integer& b) { return divmod(a, b).first; }
    friend Integer operator%(const Integer& a, const Integer& b) { return divmod(a, b).second; }

    static std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b) {
        if (b.sign_ == 0) throw DomainError("division by zero");
        if (a.sign_ == 0) return {Integer(), Integer()};
        auto [qm, rm] = divmod_mag(a.limbs_, b.limbs_);
        Integer q, r;
        q.limbs_ = std::move(qm);
        r.limbs_ = std::move(rm);
        q.normalize_zero();
        r.normalize_zero();
        if (!q.limbs_.empty() && !q.is_zero()) q.sign_ = a.sign_ * b.sign_;
        if (!r.is_zero()) r.sign_ = a.sign_;
        return {q, r};
    }

    Integer& operator+=(const Integer& b) { return *this = *this + b; }
    Integer& operator-=(const Integer& b) { return *this = *this - b; }
    Integer& operator*=(const Integer& b) { return *this = *this * b; }

    friend bool operator==(const Integer& a, const Integer& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
    friend bool operator<(const Integer& a, const Integer& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Integer& a, const Integer& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const Integer& a, const Integer& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const Integer& a, const Integer& b) { return cmp(a, b) >= 0; }

    static int cmp(const Integer& a, const Integer& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.sign_ >= 0 ? c : -c;
    }

    Integer abs() const {
        Integer r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    static Integer gcd(Integer a, Integer b) {
        a.sign_ = a.is_zero() ? 0 : 1;
        b.sign_ = b.is_zero() ? 0 : 1;
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.fits_u64() && b.fits_u64()) {
            std::uint64_t x = a.to_u64(), y = b.to_u64();
            while (y) {
                std::uint64_t t = x % y;
                x = y;
                y = t;
            }
            return from_u64(x);
        }
        while (!b.is_zero()) {
            Integer r = a % b;
            a = std::move(b);
            b = std::move(r);
            if (a.fits_u64() && b.fits_u64()) return gcd(a, b);
        }
        return a;
    }

    static Integer pow(const Integer& base, std::uint64_t e) {
        Integer r(1), b = base;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> m = limbs_;
        std::string out;
        while (!(m.size() == 1 && m[0] == 0)) {
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (m.size() > 1 && m.back() == 0) m.pop_back();
            std::string chunk = std::to_string(rem);
            if (m.size() == 1 && m[0] == 0) {
                std::reverse(chunk.begin(), chunk.end());
                out += chunk;
            } else {
                std::reverse(chunk.begin(), chunk.end());
                chunk.resize(9, '0');
                out += chunk;
            }
        }
        if (sign_ < 0) out += '-';
        std::reverse(out.begin(), out.end());
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

    bool try_parse(std::string_view s) {
        sign_ = 0;
        limbs_.clear();
        if (s.empty()) return false;
        int sg = 1;
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') {
            sg = s[0] == '-' ? -1 : 1;
            i = 1;
        }
        if (i >= s.size()) return false;
        Integer acc;
        const Integer chunk_base = from_u64(1000000000u);
        std::size_t pos = i;
        while (pos < s.size()) {
            std::size_t take = std::min<std::size_t>(9, s.size() - pos);
            std::uint64_t v = 0;
            for (std::size_t k = 0; k < take; ++k) {
                char c = s[pos + k];
                if (c < '0' || c > '9') return false;
                v = v * 10 + static_cast<std::uint64_t>(c - '0');
            }
            Integer scale = take == 9 ? chunk_base : from_u64(pow10(take));
            acc = acc * scale + from_u64(v);
            pos += take;
        }
        *this = acc;
        if (!is_zero()) sign_ = sg;
        return true;
    }

    // number of bits of |x|; 0 for x = 0
    std::size_t bit_length() const {
        if (sign_ == 0) return 0;
        std::uint32_t top = limbs_.back();
        std::size_t b = 0;
        while (top) {
            ++b;
            top >>= 1;
        }
        return (limbs_.size() - 1) * 32 + b;
    }

private:
    int sign_ = 0;                      // -1, 0, +1; zero has sign 0 and no limbs
    std::vector<std::uint32_t> limbs_;  // little-endian, no leading zero limbs

    static std::uint64_t pow10(std::size_t k) {
        std::uint64_t r = 1;
        while (k--) r *= 10;
        return r;
    }
    static Integer from_u64(std::uint64_t m) {
        Integer r;
        if (m == 0) return r;
        r.sign_ = 1;
        r.limbs_.push_back(static_cast<std::uint32_t>(m));
        if (m >> 32) r.limbs_.push_back(static_cast<std::uint32_t>(m >> 32));
        return r;
    }

    void normalize_zero() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty())
            sign_ = 0;
        else if (sign_ == 0)
            sign_ = 1;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r(big.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
            r[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        r[big.size()] = static_cast<std::uint32_t>(carry);
        while (r.size() > 1 && r.back() == 0) r.pop_back();
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
            if (d < 0) {
                d += (std::int64_t(1) << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(d);
        }
        while (r.size() > 1 && r.back() == 0) r.pop_back();
        if (r.size() == 1 && r[0] == 0) r.clear();
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a[i];
            if (ai == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = r[i + j] + ai * b[j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.size();
            while (carry) {
                std::uint64_t cur = r[k] + carry;
                r[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        while (r.size() > 1 && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D on magnitudes; returns (quotient, remainder)
    static std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> divmod_mag(
        const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v) {
        if (cmp_mag(u, v) < 0) return {{}, u};
        if (v.size() == 1) {
            std::uint64_t d = v[0];
            std::vector<std::uint32_t> q(u.size(), 0);
            std::uint64_t rem = 0;
            for (std::size_t i = u.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | u[i];
                q[i] = static_cast<std::uint32_t>(cur / d);
                rem = cur % d;
            }
            while (q.size() > 1 && q.back() == 0) q.pop_back();
            std::vector<std::uint32_t> r;
            if (rem) r.push_back(static_cast<std::uint32_t>(rem));
            return {q, r};
        }
        // normalize so the top divisor limb has its high bit set
        int s = 0;
        {
            std::uint32_t top = v.back();
            while (!(top & 0x80000000u)) {
                top <<= 1;
                ++s;
            }
        }
        auto shl = [](const std::vector<std::uint32_t>& x, int sh, bool extra) {
            std::vector<std::uint32_t> y(x.size() + (extra ? 1 : 0), 0);
            if (sh == 0) {
                std::copy(x.begin(), x.end(), y.begin());
                return y;
            }
            std::uint32_t carry = 0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                y[i] = (x[i] << sh) | carry;
                carry = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x[i]) >> (32 - sh));
            }
            if (extra) y[x.size()] = carry;
            return y;
        };
        std::vector<std::uint32_t> un = shl(u, s, true);
        std::vector<std::uint32_t> vn = shl(v, s, false);
        const std::size_t n = vn.size();
        const std::size_t m = un.size() - n - 1;
        std::vector<std::uint32_t> q(m + 1, 0);
        const std::uint64_t b = std::uint64_t(1) << 32;
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
            std::uint64_t qhat = num / vn[n - 1];
            std::uint64_t rhat = num % vn[n - 1];
            while (qhat >= b || qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
                --qhat;
                rhat += vn[n - 1];
                if (rhat >= b) break;
            }
            // multiply and subtract
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * vn[i] + carry;
                carry = p >> 32;
                std::int64_t t = static_cast<std::int64_t>(un[i + j]) - borrow -
                                 static_cast<std::int64_t>(p & 0xffffffffu);
                if (t < 0) {
                    t += static_cast<std::int64_t>(b);
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                un[i + j] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(un[j + n]) - borrow - static_cast<std::int64_t>(carry);
            if (t < 0) {
                // qhat was one too large; add back
                t += static_cast<std::int64_t>(b);
                --qhat;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t ssum = static_cast<std::uint64_t>(un[i + j]) + vn[i] + c2;
                    un[i + j] = static_cast<std::uint32_t>(ssum);
                    c2 = ssum >> 32;
                }
                t += static_cast<std::int64_t>(c2);
                t &= static_cast<std::int64_t>(b) - 1;
            }
            un[j + n] = static_cast<std::uint32_t>(t);
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        while (q.size() > 1 && q.back() == 0) q.pop_back();
        // denormalize remainder
        std::vector<std::uint32_t> r(n, 0);
        if (s == 0) {
            std::copy(un.begin(), un.begin() + n, r.begin());
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                std::uint32_t hi = (i + 1 < un.size()) ? un[i + 1] : 0;
                r[i] = (un[i] >> s) |
                       static_cast<std::uint32_t>(static_cast<std::uint64_t>(hi) << (32 - s));
            }
        }
        while (r.size() > 1 && r.back() == 0) r.pop_back();
        if (r.size() == 1 && r[0] == 0) r.clear();
        if (q.size() == 1 && q[0] == 0) q.clear();
        return {q, r};
    }
};

}  // namespace curvesing
