// Univariate factorization over Q: Berlekamp modulo a small prime, Hensel
// lifting, and Zassenhaus subset recombination. Degrees stay small here
// (edge polynomials of Newton polygons), so the classical algorithm is the
// right tool.
#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "curvesing/errors.hpp"
#include "curvesing/integer.hpp"
#include "curvesing/rational.hpp"
#include "curvesing/univariate.hpp"

namespace curvesing {
namespace detail {

// ---- arithmetic in F_p, p < 2^31 ----

using FpPoly = std::vector<std::uint64_t>;  // little endian, trimmed

inline void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline std::ptrdiff_t fp_deg(const FpPoly& a) { return static_cast<std::ptrdiff_t>(a.size()) - 1; }

inline std::uint64_t fp_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}
inline std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) { return fp_pow(a, p - 2, p); }

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    fp_trim(r);
    return r;
}

inline FpPoly fp_rem(FpPoly a, const FpPoly& b, std::uint64_t p) {
    std::uint64_t inv = fp_inv(b.back(), p);
    while (fp_deg(a) >= fp_deg(b)) {
        std::uint64_t factor = a.back() * inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t sub = factor * b[i] % p;
            a[i + shift] = (a[i + shift] + p - sub) % p;
        }
        fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        std::uint64_t inv = fp_inv(a.back(), p);
        for (auto& v : a) v = v * inv % p;
    }
    return a;
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, std::uint64_t p) {
    return fp_rem(fp_mul(a, b, p), f, p);
}

inline FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& f, std::uint64_t p) {
    FpPoly r{1};
    base = fp_rem(std::move(base), f, p);
    while (e) {
        if (e & 1) r = fp_mulmod(r, base, f, p);
        base = fp_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

// extended euclid: returns (g, s, t) with s*a + t*b = g, g monic
inline void fp_ext_gcd(FpPoly a, FpPoly b, std::uint64_t p, FpPoly& g, FpPoly& s, FpPoly& t) {
    FpPoly s0{1}, s1{}, t0{}, t1{1};
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        // divide a by b
        FpPoly q;
        FpPoly r = a;
        std::uint64_t inv = fp_inv(b.back(), p);
        while (fp_deg(r) >= fp_deg(b)) {
            std::uint64_t factor = r.back() * inv % p;
            std::size_t shift = r.size() - b.size();
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = factor;
            for (std::size_t i = 0; i < b.size(); ++i) {
                std::uint64_t sub = factor * b[i] % p;
                r[i + shift] = (r[i + shift] + p - sub) % p;
            }
            fp_trim(r);
            if (r.empty()) break;
        }
        fp_trim(q);
        auto combine = [&](const FpPoly& x0, const FpPoly& x1) {
            FpPoly qq = fp_mul(q, x1, p);
            FpPoly res(std::max(x0.size(), qq.size()), 0);
            for (std::size_t i = 0; i < res.size(); ++i) {
                std::uint64_t v0 = i < x0.size() ? x0[i] : 0;
                std::uint64_t v1 = i < qq.size() ? qq[i] : 0;
                res[i] = (v0 + p - v1) % p;
            }
            fp_trim(res);
            return res;
        };
        FpPoly s2 = combine(s0, s1), t2 = combine(t0, t1);
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    std::uint64_t inv = fp_inv(a.back(), p);
    for (auto& v : a) v = v * inv % p;
    for (auto& v : s0) v = v * inv % p;
    for (auto& v : t0) v = v * inv % p;
    g = std::move(a);
    s = std::move(s0);
    t = std::move(t0);
}

// Berlekamp: monic squarefree f over F_p -> monic irreducible factors
inline std::vector<FpPoly> berlekamp(const FpPoly& f, std::uint64_t p) {
    const std::size_t n = static_cast<std::size_t>(fp_deg(f));
    if (n == 1) return {f};
    // Q[i][j] = coeff of x^j in x^(p*i) mod f
    std::vector<std::vector<std::uint64_t>> Q(n, std::vector<std::uint64_t>(n, 0));
    FpPoly xp = fp_powmod(FpPoly{0, 1}, p, f, p);
    FpPoly cur{1};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < cur.size(); ++j) Q[i][j] = cur[j];
        if (i + 1 < n) cur = fp_mulmod(cur, xp, f, p);
    }
    // nullspace of (Q - I)^T: vectors v with v*Q = v
    std::vector<std::vector<std::uint64_t>> M(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t v = Q[i][j] % p;
            if (i == j) v = (v + p - 1) % p;
            M[j][i] = v;  // transpose
        }
    // gaussian elimination, track pivot columns
    std::vector<std::size_t> pivot_col(n, static_cast<std::size_t>(-1));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t sel = static_cast<std::size_t>(-1);
        for (std::size_t r = rank; r < n; ++r)
            if (M[r][col]) {
                sel = r;
                break;
            }
        if (sel == static_cast<std::size_t>(-1)) continue;
        std::swap(M[rank], M[sel]);
        std::uint64_t inv = fp_inv(M[rank][col], p);
        for (std::size_t j = 0; j < n; ++j) M[rank][j] = M[rank][j] * inv % p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || !M[r][col]) continue;
            std::uint64_t factor = M[r][col];
            for (std::size_t j = 0; j < n; ++j)
                M[r][j] = (M[r][j] + p - factor * M[rank][j] % p) % p;
        }
        pivot_col[rank] = col;
        ++rank;
    }
    std::size_t nullity = n - rank;
    std::vector<FpPoly> basis;
    std::vector<char> is_pivot(n, 0);
    for (std::size_t r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        FpPoly v(n, 0);
        v[col] = 1;
        for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = (p - M[r][col]) % p;
        fp_trim(v);
        basis.push_back(std::move(v));
    }
    std::vector<FpPoly> factors{f};
    if (nullity == 1) return factors;
    for (const auto& v : basis) {
        if (factors.size() == nullity) break;
        if (fp_deg(v) < 1) continue;  // the constant vector gives nothing
        for (std::uint64_t c = 0; c < p && factors.size() < nullity; ++c) {
            FpPoly shifted = v;
            if (shifted.empty()) shifted.push_back(0);
            shifted[0] = (shifted[0] + p - c % p) % p;
            fp_trim(shifted);
            if (shifted.empty()) continue;
            std::vector<FpPoly> next;
            for (auto& g : factors) {
                if (fp_deg(g) <= 1) {
                    next.push_back(std::move(g));
                    continue;
                }
                FpPoly d = fp_gcd(g, shifted, p);
                if (fp_deg(d) > 0 && fp_deg(d) < fp_deg(g)) {
                    FpPoly q = g;
                    // exact division
                    FpPoly quo;
                    std::uint64_t inv = fp_inv(d.back(), p);
                    while (fp_deg(q) >= fp_deg(d)) {
                        std::uint64_t factor = q.back() * inv % p;
                        std::size_t shift = q.size() - d.size();
                        if (quo.size() < shift + 1) quo.resize(shift + 1, 0);
                        quo[shift] = factor;
                        for (std::size_t i = 0; i < d.size(); ++i) {
                            std::uint64_t sub = factor * d[i] % p;
                            q[i + shift] = (q[i + shift] + p - sub) % p;
                        }
                        fp_trim(q);
                        if (q.empty()) break;
                    }
                    fp_trim(quo);
                    next.push_back(std::move(d));
                    next.push_back(std::move(quo));
                } else {
                    next.push_back(std::move(g));
                }
            }
            factors = std::move(next);
        }
    }
    if (factors.size() != nullity) throw InternalError("Berlekamp splitting incomplete");
    // normalize monic
    for (auto& g : factors) {
        std::uint64_t inv = fp_inv(g.back(), p);
        for (auto& v : g) v = v * inv % p;
    }
    return factors;
}

// ---- integer polynomials and Hensel lifting ----

using IPoly = std::vector<Integer>;  // little endian, trimmed

inline void ip_trim(IPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}
inline std::ptrdiff_t ip_deg(const IPoly& a) { return static_cast<std::ptrdiff_t>(a.size()) - 1; }

inline IPoly ip_mul(const IPoly& a, const IPoly& b) {
    if (a.empty() || b.empty()) return {};
    IPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    ip_trim(r);
    return r;
}

inline Integer mod_nonneg(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r.is_negative()) r += m;
    return r;
}

inline IPoly ip_mod(IPoly a, const Integer& m) {
    for (auto& v : a) v = mod_nonneg(v, m);
    ip_trim(a);
    return a;
}

inline Integer sym_mod(const Integer& a, const Integer& m) {
    Integer r = mod_nonneg(a, m);
    if (r + r > m) r -= m;
    return r;
}

// divrem modulo m by a monic divisor
inline std::pair<IPoly, IPoly> ip_divrem_monic_mod(IPoly a, const IPoly& b, const Integer& m) {
    IPoly q;
    a = ip_mod(std::move(a), m);
    while (ip_deg(a) >= ip_deg(b)) {
        Integer factor = a.back();
        std::size_t shift = a.size() - b.size();
        if (q.size() < shift + 1) q.resize(shift + 1, Integer(0));
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] = mod_nonneg(a[i + shift] - factor * b[i], m);
        ip_trim(a);
    }
    ip_trim(q);
    return {ip_mod(std::move(q), m), std::move(a)};
}

struct HenselPair {
    IPoly g, h, s, t;  // f = g h, s g + t h = 1 (mod m), h monic
};

// one quadratic step m -> m^2 (von zur Gathen & Gerhard, Alg. 15.10)
inline HenselPair hensel_step(const IPoly& f, const HenselPair& in, const Integer& m) {
    Integer m2 = m * m;
    auto mul = [&](const IPoly& a, const IPoly& b) { return ip_mod(ip_mul(a, b), m2); };
    auto add = [&](IPoly a, const IPoly& b) {
        if (a.size() < b.size()) a.resize(b.size(), Integer(0));
        for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod_nonneg(a[i] + b[i], m2);
        ip_trim(a);
        return a;
    };
    auto sub = [&](IPoly a, const IPoly& b) {
        if (a.size() < b.size()) a.resize(b.size(), Integer(0));
        for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod_nonneg(a[i] - b[i], m2);
        ip_trim(a);
        return a;
    };
    IPoly e = sub(ip_mod(f, m2), mul(in.g, in.h));
    auto [q, r] = ip_divrem_monic_mod(mul(in.s, e), in.h, m2);
    IPoly g_star = add(add(in.g, mul(in.t, e)), mul(q, in.g));
    IPoly h_star = add(in.h, r);
    IPoly one{Integer(1)};
    IPoly b = sub(add(mul(in.s, g_star), mul(in.t, h_star)), one);
    auto [c, d] = ip_divrem_monic_mod(mul(in.s, b), h_star, m2);
    IPoly s_star = sub(in.s, d);
    IPoly t_star = sub(sub(in.t, mul(in.t, b)), mul(c, g_star));
    return HenselPair{g_star, h_star, s_star, t_star};
}

inline FpPoly ip_to_fp(const IPoly& a, std::uint64_t p) {
    FpPoly r(a.size(), 0);
    Integer pi(static_cast<std::int64_t>(p));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint64_t>(mod_nonneg(a[i], pi).to_u64());
    fp_trim(r);
    return r;
}
inline IPoly fp_to_ip(const FpPoly& a) {
    IPoly r(a.size(), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<std::int64_t>(a[i]));
    return r;
}

// lift the modular factorization f = lc(f) * prod(us) (mod p) to mod p^2^k >= target;
// returns the lifted monic factors mod `modulus`
inline void hensel_tree(const IPoly& f, std::vector<FpPoly> us, std::uint64_t p,
                        const Integer& target, Integer& modulus_out, std::vector<IPoly>& out) {
    Integer modulus(static_cast<std::int64_t>(p));
    std::vector<IPoly> work{};
    // recursively lift: node factorization f_node = lc * prod(us)
    struct Frame {
        IPoly f;
        std::vector<FpPoly> us;
    };
    // compute needed modulus chain first: lift pairwise at full precision
    // simple recursion via lambda
    Integer final_mod = modulus;
    while (final_mod <= target) final_mod *= final_mod;
    modulus_out = final_mod;

    auto monic_mod = [&](IPoly a, const Integer& m) {
        a = ip_mod(std::move(a), m);
        if (a.empty()) return a;
        // invert leading coefficient mod m (m = p^2^k, lc invertible since p does not divide it)
        // extended euclid on integers
        Integer r0 = m, r1 = a.back(), s0(0), s1(1);
        while (!r1.is_zero()) {
            auto [qq, rr] = Integer::divmod(r0, r1);
            Integer s2 = s0 - qq * s1;
            r0 = std::move(r1);
            r1 = std::move(rr);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        Integer inv = mod_nonneg(s0, m);
        for (auto& v : a) v = mod_nonneg(v * inv, m);
        return a;
    };

    std::function<void(const IPoly&, std::vector<FpPoly>)> rec =
        [&](const IPoly& fnode, std::vector<FpPoly> part) {
            if (part.size() == 1) {
                out.push_back(monic_mod(fnode, final_mod));
                return;
            }
            std::size_t half = part.size() / 2;
            std::vector<FpPoly> left(part.begin(), part.begin() + half);
            std::vector<FpPoly> right(part.begin() + half, part.end());
            FpPoly gl{1}, hr{1};
            for (const auto& u : left) gl = fp_mul(gl, u, p);
            for (const auto& u : right) hr = fp_mul(hr, u, p);
            // absorb lc(fnode) into the left factor
            std::uint64_t lcf = static_cast<std::uint64_t>(
                mod_nonneg(fnode.back(), Integer(static_cast<std::int64_t>(p))).to_u64());
            for (auto& v : gl) v = v * lcf % p;
            FpPoly g_fp, s_fp, t_fp;
            fp_ext_gcd(gl, hr, p, g_fp, s_fp, t_fp);
            if (fp_deg(g_fp) != 0) throw InternalError("hensel factors not coprime");
            HenselPair pair{fp_to_ip(gl), fp_to_ip(hr), fp_to_ip(s_fp), fp_to_ip(t_fp)};
            Integer m(static_cast<std::int64_t>(p));
            while (m < final_mod) {
                pair = hensel_step(fnode, pair, m);
                m *= m;
            }
            rec(pair.g, std::move(left));
            rec(pair.h, std::move(right));
        };
    rec(f, std::move(us));
    (void)work;
}

inline std::vector<std::uint64_t> small_primes() {
    std::vector<std::uint64_t> ps;
    std::vector<char> sieve(5000, 1);
    for (std::size_t i = 2; i < sieve.size(); ++i) {
        if (!sieve[i]) continue;
        if (i > 2) ps.push_back(i);
        for (std::size_t j = i * i; j < sieve.size(); j += i) sieve[j] = 0;
    }
    return ps;
}

// factor a primitive squarefree integer polynomial of degree >= 1 with
// nonzero constant term; returns primitive integer factors
inline std::vector<IPoly> zassenhaus(const IPoly& f) {
    const std::size_t n = static_cast<std::size_t>(ip_deg(f));
    if (n == 1) return {f};
    static const std::vector<std::uint64_t> primes = small_primes();
    std::uint64_t p = 0;
    std::vector<FpPoly> modular;
    for (std::uint64_t cand : primes) {
        Integer pi(static_cast<std::int64_t>(cand));
        if ((f.back() % pi).is_zero()) continue;
        FpPoly fp = ip_to_fp(f, cand);
        if (static_cast<std::size_t>(fp_deg(fp)) != n) continue;
        FpPoly d(fp.size() - 1, 0);
        for (std::size_t i = 1; i < fp.size(); ++i) d[i - 1] = fp[i] * (i % cand) % cand;
        fp_trim(d);
        if (d.empty()) continue;
        FpPoly g = fp_gcd(fp, d, cand);
        if (fp_deg(g) != 0) continue;  // not squarefree mod p
        // monicize before Berlekamp
        std::uint64_t inv = fp_inv(fp.back(), cand);
        for (auto& v : fp) v = v * inv % cand;
        modular = berlekamp(fp, cand);
        p = cand;
        break;
    }
    if (p == 0) throw InternalError("no usable prime for factorization");
    if (modular.size() == 1) return {f};

    // coefficient bound: |coeffs of any factor * lc| <= 2^n * L1(f) * |lc|
    Integer l1(0);
    for (const auto& c : f) l1 += c.abs();
    Integer bound = Integer::pow(Integer(2), n + 1) * l1 * f.back().abs();
    Integer modulus;
    std::vector<IPoly> lifted;
    hensel_tree(f, modular, p, bound + bound, modulus, lifted);

    auto primitive = [](IPoly a) {
        ip_trim(a);
        if (a.empty()) return a;
        Integer g(0);
        for (const auto& c : a) g = Integer::gcd(g, c);
        if (a.back().is_negative()) g = -g;
        for (auto& c : a) c = c / g;
        return a;
    };

    std::vector<IPoly> result;
    std::vector<char> used(lifted.size(), 0);
    IPoly rem_f = f;
    std::size_t remaining = lifted.size();
    for (std::size_t take = 1; take <= remaining && 2 * take <= remaining + 0; ++take) {
        bool found_this_size = true;
        while (found_this_size) {
            found_this_size = false;
            // enumerate subsets of size `take` of unused indices
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < lifted.size(); ++i)
                if (!used[i]) idx.push_back(i);
            if (idx.size() < take || 2 * take > idx.size()) break;
            std::vector<std::size_t> pick(take);
            for (std::size_t i = 0; i < take; ++i) pick[i] = i;
            while (true) {
                IPoly cand{rem_f.back()};
                for (std::size_t i = 0; i < take; ++i) cand = ip_mod(ip_mul(cand, lifted[idx[pick[i]]]), modulus);
                for (auto& c : cand) c = sym_mod(c, modulus);
                cand = primitive(std::move(cand));
                // trial division over the integers via rational division
                bool divides = false;
                if (!cand.empty() && ip_deg(cand) >= 1) {
                    UPoly<Rational> top(std::vector<Rational>{}), bot(std::vector<Rational>{});
                    std::vector<Rational> tc(rem_f.size()), bc(cand.size());
                    for (std::size_t i = 0; i < rem_f.size(); ++i) tc[i] = Rational(rem_f[i]);
                    for (std::size_t i = 0; i < cand.size(); ++i) bc[i] = Rational(cand[i]);
                    top = UPoly<Rational>(tc);
                    bot = UPoly<Rational>(bc);
                    auto [q, r] = UPoly<Rational>::divrem(top, bot);
                    if (r.is_zero()) {
                        divides = true;
                        IPoly qi(q.coeffs().size());
                        for (std::size_t i = 0; i < qi.size(); ++i) {
                            const Rational& v = q.coeffs()[i];
                            if (!v.den().is_one()) {
                                divides = false;
                                break;
                            }
                            qi[i] = v.num();
                        }
                        if (divides) {
                            result.push_back(cand);
                            for (std::size_t i = 0; i < take; ++i) used[idx[pick[i]]] = 1;
                            remaining -= take;
                            rem_f = primitive(std::move(qi));
                            found_this_size = true;
                        }
                    }
                }
                if (found_this_size) break;
                // next subset
                std::size_t i = take;
                while (i-- > 0) {
                    if (pick[i] != i + idx.size() - take) {
                        ++pick[i];
                        for (std::size_t j = i + 1; j < take; ++j) pick[j] = pick[j - 1] + 1;
                        break;
                    }
                    if (i == 0) {
                        i = static_cast<std::size_t>(-1);
                        break;
                    }
                }
                if (i == static_cast<std::size_t>(-1)) break;
            }
        }
    }
    if (ip_deg(rem_f) >= 1) result.push_back(primitive(std::move(rem_f)));
    return result;
}

}  // namespace detail

// Irreducible monic factors over Q with multiplicities.
inline std::vector<std::pair<UPoly<Rational>, std::size_t>> factor_rational(const UPoly<Rational>& input) {
    if (input.is_zero()) throw DomainError("cannot factor the zero polynomial");
    std::vector<std::pair<UPoly<Rational>, std::size_t>> out;
    UPoly<Rational> f = input.monic();
    if (f.degree() == 0) return out;
    // strip powers of z
    std::size_t zpow = 0;
    while (f.coeff(0).is_zero()) {
        std::vector<Rational> shifted(f.coeffs().begin() + 1, f.coeffs().end());
        f = UPoly<Rational>(shifted);
        ++zpow;
    }
    if (zpow) out.emplace_back(UPoly<Rational>::variable(), zpow);
    if (f.degree() >= 1) {
        UPoly<Rational> sqfree = f / UPoly<Rational>::gcd(f, f.derivative());
        // to primitive integer form
        Integer den_lcm(1);
        for (const auto& c : sqfree.coeffs()) den_lcm = den_lcm * c.den() / Integer::gcd(den_lcm, c.den());
        detail::IPoly fi(sqfree.coeffs().size());
        Integer content(0);
        for (std::size_t i = 0; i < fi.size(); ++i) {
            Rational scaled = sqfree.coeffs()[i] * Rational(den_lcm);
            fi[i] = scaled.num();
            content = Integer::gcd(content, fi[i]);
        }
        if (fi.back().is_negative()) content = -content;
        for (auto& c : fi) c = c / content;
        for (const auto& fac : detail::zassenhaus(fi)) {
            std::vector<Rational> rc(fac.size());
            for (std::size_t i = 0; i < fac.size(); ++i) rc[i] = Rational(fac[i]);
            UPoly<Rational> g = UPoly<Rational>(rc).monic();
            // multiplicity by repeated division
            std::size_t mult = 0;
            UPoly<Rational> cur = f;
            while (true) {
                auto [q, r] = UPoly<Rational>::divrem(cur, g);
                if (!r.is_zero()) break;
                cur = q;
                ++mult;
            }
            if (mult == 0) throw InternalError("factor does not divide input");
            out.emplace_back(std::move(g), mult);
        }
    }
    return out;
}

}  // namespace curvesing
