// Mora's tangent-cone algorithm: weak normal forms with ecart control,
// standard bases for ideals in the local ring, the leading-term staircase,
// and exact colengths.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <optional>
#include <vector>

#include "curvesing/errors.hpp"
#include "curvesing/polynomial.hpp"

namespace curvesing {

struct MoraOptions {
    // Mora terminates in theory; the bound only guards implementation bugs.
    std::uint64_t step_bound = default_step_bound();

    static std::uint64_t default_step_bound() {
        if (const char* env = std::getenv("CURVESING_STEP_BOUND")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return v;
        }
        return 10000000ull;  // 10^7 reduction steps
    }
};

using IdealBasis = std::vector<Polynomial>;

namespace detail {

struct Reducer {
    Polynomial poly;
    Monomial lm;
    Rational lc;
    std::uint64_t ecart;
};

inline Reducer make_reducer(const Polynomial& p) {
    auto [m, c] = p.leading_term();
    return Reducer{p, m, c, p.ecart()};
}

}  // namespace detail

// Weak normal form: the remainder's leading term is divisible by no leading
// term of the (ecart-extended) reducer set, and u*f = sum a_i g_i + r for a
// unit u of the local ring. Reducer choice: minimal ecart, ties by list
// position; h is appended to the reducer set when the chosen ecart exceeds
// ecart(h).
struct StepCounter {
    std::uint64_t used = 0;
};

inline Polynomial mora_reduce(const Polynomial& f, const std::vector<Polynomial>& gens,
                              const MoraOptions& opts = {}, StepCounter* counter = nullptr) {
    std::vector<detail::Reducer> T;
    T.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.is_zero()) throw DomainError("zero polynomial in reducer set");
        T.push_back(detail::make_reducer(g));
    }
    Polynomial h = f;
    StepCounter local;
    StepCounter& steps = counter ? *counter : local;
    while (!h.is_zero()) {
        auto [hm, hc] = h.leading_term();
        std::size_t best = T.size();
        for (std::size_t i = 0; i < T.size(); ++i) {
            if (!T[i].lm.divides(hm)) continue;
            if (best == T.size() || T[i].ecart < T[best].ecart) best = i;
        }
        if (best == T.size()) break;
        if (++steps.used > opts.step_bound)
            throw WatchdogError("Mora reduction exceeded the step bound");
        std::uint64_t h_ecart = h.ecart();
        if (T[best].ecart > h_ecart) T.push_back(detail::Reducer{h, hm, hc, h_ecart});
        // h -= (lt(h)/lt(g)) * g
        Monomial q = T[best].lm.divide_into(hm);
        h -= T[best].poly.times_term(q, hc / T[best].lc);
    }
    return h;
}

class StandardBasis {
public:
    StandardBasis() = default;

    const std::vector<Polynomial>& generators() const { return gens_; }
    const std::vector<Monomial>& staircase() const { return staircase_; }
    const VariableSet& vars() const { return vars_; }
    const MoraOptions& options() const { return opts_; }

    bool in_leading_ideal(const Monomial& m) const {
        for (const auto& s : staircase_)
            if (s.divides(m)) return true;
        return false;
    }

    // minimal exponent d with x_i^d in the leading ideal, per variable;
    // nullopt when some variable has no pure power (infinite colength)
    std::optional<std::vector<std::uint32_t>> pure_power_bounds() const {
        std::vector<std::uint32_t> d(vars_.size(), 0);
        for (std::size_t v = 0; v < vars_.size(); ++v) {
            bool found = false;
            std::uint32_t best = 0;
            for (const auto& s : staircase_) {
                bool pure = true;
                for (std::size_t j = 0; j < vars_.size(); ++j)
                    if (j != v && s.e[j] != 0) pure = false;
                if (!pure) continue;
                if (!found || s.e[v] < best) best = s.e[v];
                found = true;
            }
            if (!found) return std::nullopt;
            d[v] = best;
        }
        return d;
    }

    // monomials outside the leading ideal, sorted descending in the local
    // order (so the unit monomial comes first); empty when infinite
    std::vector<Monomial> standard_monomials() const {
        auto bounds = pure_power_bounds();
        if (!bounds) return {};
        std::vector<Monomial> out;
        Monomial m(vars_.size());
        enumerate_box(*bounds, 0, m, out);
        std::sort(out.begin(), out.end(), LocalOrderGreater{});
        return out;
    }

    friend StandardBasis standard_basis(const IdealBasis&, const MoraOptions&);

private:
    VariableSet vars_;
    std::vector<Polynomial> gens_;
    std::vector<Monomial> staircase_;
    MoraOptions opts_;

    void enumerate_box(const std::vector<std::uint32_t>& bounds, std::size_t var, Monomial& m,
                       std::vector<Monomial>& out) const {
        if (var == bounds.size()) {
            if (!in_leading_ideal(m)) out.push_back(m);
            return;
        }
        for (std::uint32_t e = 0; e < bounds[var]; ++e) {
            m.e[var] = e;
            enumerate_box(bounds, var + 1, m, out);
        }
        m.e[var] = 0;
    }
};

inline StandardBasis standard_basis(const IdealBasis& input, const MoraOptions& opts = {}) {
    if (input.empty()) throw DomainError("empty ideal basis");
    const VariableSet& vars = input.front().vars();
    std::vector<Polynomial> G;
    for (const auto& g : input) {
        if (g.vars() != vars) throw DomainError("variable-set mismatch in ideal basis");
        if (!g.is_zero()) G.push_back(g);
    }
    if (G.empty()) throw DomainError("ideal basis has no nonzero generator");

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        std::uint64_t tick;  // FIFO tie-break
    };
    auto pair_before = [](const Pair& a, const Pair& b) {
        int c = local_cmp(a.lcm, b.lcm);
        if (c != 0) return c > 0;  // larger in the local order (lower degree) first
        return a.tick < b.tick;
    };

    std::vector<Pair> queue;
    StepCounter steps;  // one budget for the whole computation
    std::uint64_t tick = 0;
    auto push_pairs = [&](std::size_t upto) {
        // pairs (i, upto) for all i < upto, product criterion applied
        const Monomial& lm_new = G[upto].leading_monomial();
        for (std::size_t i = 0; i < upto; ++i) {
            const Monomial& lm_i = G[i].leading_monomial();
            Monomial l = Monomial::lcm(lm_i, lm_new);
            if (l == lm_i * lm_new) continue;  // coprime leading terms
            queue.push_back(Pair{i, upto, std::move(l), tick++});
        }
    };
    for (std::size_t j = 1; j < G.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_before);
        Pair p = *it;
        queue.erase(it);
        const Polynomial &f = G[p.i], &g = G[p.j];
        auto [fm, fc] = f.leading_term();
        auto [gm, gc] = g.leading_term();
        Polynomial spoly = f.times_term(fm.divide_into(p.lcm), Rational(1) / fc) -
                           g.times_term(gm.divide_into(p.lcm), Rational(1) / gc);
        if (spoly.is_zero()) continue;
        Polynomial h = mora_reduce(spoly, G, opts, &steps);
        if (!h.is_zero()) {
            G.push_back(h);
            push_pairs(G.size() - 1);
        }
    }

    // minimalize: keep only generators whose leading monomials are not
    // divisible by another kept one
    std::vector<char> drop(G.size(), 0);
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (drop[i]) continue;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j || drop[j]) continue;
            const Monomial &mi = G[i].leading_monomial(), &mj = G[j].leading_monomial();
            if (mj.divides(mi) && !(mi == mj && j > i)) {
                drop[i] = 1;
                break;
            }
        }
    }
    StandardBasis sb;
    sb.vars_ = vars;
    sb.opts_ = opts;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (!drop[i]) {
            sb.staircase_.push_back(G[i].leading_monomial());
            sb.gens_.push_back(std::move(G[i]));
        }
    return sb;
}

// Number of monomials outside the staircase; nullopt means infinite (some
// variable has no pure power in the leading ideal — a non-isolated
// singularity upstream, not an error here).
inline std::optional<std::uint64_t> colength(const StandardBasis& sb) {
    auto bounds = sb.pure_power_bounds();
    if (!bounds) return std::nullopt;
    return sb.standard_monomials().size();
}

inline bool ideal_membership(const Polynomial& f, const StandardBasis& sb) {
    if (f.is_zero()) return true;
    return mora_reduce(f, sb.generators(), sb.options()).is_zero();
}

}  // namespace curvesing
