// Sparse multivariate polynomials over Rational with the fixed local
// monomial order (negative-degree reverse-lexicographic, Singular's `ds`).
#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "curvesing/errors.hpp"
#include "curvesing/rational.hpp"

namespace curvesing {

class VariableSet {
public:
    VariableSet() = default;
    explicit VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) throw DomainError("variable set must be nonempty");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (!valid_name(names_[i]))
                throw DomainError("invalid variable name '" + names_[i] + "'");
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw DomainError("duplicate variable name '" + names_[i] + "'");
        }
    }

    static bool valid_name(const std::string& s) {
        if (s.empty()) return false;
        if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
        for (char c : s)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
        return true;
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    // npos when absent
    std::size_t index_of(const std::string& n) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return i;
        return npos;
    }
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    friend bool operator==(const VariableSet& a, const VariableSet& b) { return a.names_ == b.names_; }
    friend bool operator!=(const VariableSet& a, const VariableSet& b) { return !(a == b); }

private:
    std::vector<std::string> names_;
};

struct Monomial {
    std::vector<std::uint32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }
    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.e.size());
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
        return r;
    }
    // requires divides(m / this)
    Monomial divide_into(const Monomial& m) const {
        Monomial r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = m.e[i] - e[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.e.size());
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

// Local order: a > b iff totaldeg(a) < totaldeg(b); on equal degree reverse
// lex, scanning exponents from the last variable backward, and the monomial
// with the smaller exponent at the first difference is the larger (so 1 is
// the global maximum and x^2 > x*y in (x, y)).
inline int local_cmp(const Monomial& a, const Monomial& b) {
    std::uint64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? 1 : -1;
    for (std::size_t i = a.e.size(); i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

struct LocalOrderGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return local_cmp(a, b) > 0; }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, LocalOrderGreater>;

    Polynomial() = default;
    explicit Polynomial(VariableSet vars) : vars_(std::move(vars)) {}

    static Polynomial constant(const VariableSet& vars, const Rational& c) {
        Polynomial p(vars);
        if (!c.is_zero()) p.terms_.emplace(Monomial(vars.size()), c);
        return p;
    }
    static Polynomial variable(const VariableSet& vars, std::size_t idx) {
        Polynomial p(vars);
        Monomial m(vars.size());
        m.e[idx] = 1;
        p.terms_.emplace(std::move(m), Rational(1));
        return p;
    }
    static Polynomial term(const VariableSet& vars, Monomial m, const Rational& c) {
        Polynomial p(vars);
        if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
        return p;
    }

    const VariableSet& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    Rational constant_term() const {
        Monomial one(vars_.size());
        auto it = terms_.find(one);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    bool vanishes_at_origin() const { return constant_term().is_zero(); }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_vars(a, b);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        check_vars(a, b);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r(a.vars_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_vars(a, b);
        Polynomial r(a.vars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    friend Polynomial operator*(const Rational& c, const Polynomial& a) {
        Polynomial r(a.vars_);
        if (c.is_zero()) return r;
        for (const auto& [m, k] : a.terms_) r.terms_.emplace(m, c * k);
        return r;
    }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    // this * (single term), cheaper than building a one-term polynomial
    Polynomial times_term(const Monomial& m, const Rational& c) const {
        Polynomial r(vars_);
        if (c.is_zero()) return r;
        for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm * m, cc * c);
        return r;
    }

    Polynomial pow(std::uint64_t n) const {
        Polynomial r = constant(vars_, Rational(1));
        Polynomial b = *this;
        while (n) {
            if (n & 1) r *= b;
            if (n >>= 1) b *= b;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative(std::size_t var) const {
        if (var >= vars_.size()) throw DomainError("unknown variable index");
        Polynomial r(vars_);
        for (const auto& [m, c] : terms_) {
            if (m.e[var] == 0) continue;
            Monomial d = m;
            Rational k = c * Rational(static_cast<std::int64_t>(m.e[var]));
            d.e[var] -= 1;
            r.terms_.emplace(std::move(d), std::move(k));
        }
        return r;
    }
    Polynomial derivative(const std::string& var) const {
        std::size_t i = vars_.index_of(var);
        if (i == VariableSet::npos) throw DomainError("unknown variable '" + var + "'");
        return derivative(i);
    }

    // minimal total degree over the support (the multiplicity/order at 0)
    std::uint64_t order() const {
        if (terms_.empty()) throw DomainError("order undefined for the zero polynomial");
        std::uint64_t best = UINT64_MAX;
        for (const auto& [m, c] : terms_) best = std::min(best, m.total_degree());
        return best;
    }
    std::uint64_t max_degree() const {
        std::uint64_t best = 0;
        for (const auto& [m, c] : terms_) best = std::max(best, m.total_degree());
        return best;
    }

    std::pair<Monomial, Rational> leading_term() const {
        if (terms_.empty()) throw DomainError("leading term undefined for the zero polynomial");
        return *terms_.begin();
    }
    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw DomainError("leading term undefined for the zero polynomial");
        return terms_.begin()->first;
    }

    // totaldeg(f) - totaldeg(lm(f)); controls Mora reduction
    std::uint64_t ecart() const { return max_degree() - leading_monomial().total_degree(); }

    // exact division by a single variable; requires divisibility
    Polynomial divide_by_variable(std::size_t var) const {
        Polynomial r(vars_);
        for (const auto& [m, c] : terms_) {
            if (m.e[var] == 0) throw DomainError("polynomial not divisible by variable");
            Monomial d = m;
            d.e[var] -= 1;
            r.terms_.emplace(std::move(d), c);
        }
        return r;
    }
    bool divisible_by_variable(std::size_t var) const {
        if (terms_.empty()) return false;
        for (const auto& [m, c] : terms_)
            if (m.e[var] == 0) return false;
        return true;
    }

    std::string render_monomial(const Monomial& m) const {
        std::string out;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += vars_.name(i);
            if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
        }
        return out;
    }

    // canonical text form; parses back to the same polynomial
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = c.abs();
            if (first) {
                if (c.sign() < 0) out += "-";
                first = false;
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            std::string mono = render_monomial(m);
            if (mono.empty()) {
                out += a.to_string();
            } else {
                if (!a.is_one()) out += a.to_string() + "*";
                out += mono;
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

private:
    VariableSet vars_;
    TermMap terms_;

    static void check_vars(const Polynomial& a, const Polynomial& b) {
        if (a.vars_ != b.vars_) throw DomainError("variable-set mismatch");
    }
};

// Determinant by Laplace expansion; fine for the n <= 3 sizes that occur.
inline Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, const VariableSet& vars) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(vars, Rational(1));
    if (n == 1) return m[0][0];
    Polynomial det(vars);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Polynomial>> sub;
        sub.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        Polynomial cof = m[0][j] * poly_det(sub, vars);
        if (j % 2 == 0)
            det += cof;
        else
            det -= cof;
    }
    return det;
}

// All maximal minors of the Jacobian matrix of `gens` (n generators in
// N = n + 1 variables), column subsets enumerated in lexicographic order.
inline std::vector<Polynomial> jacobian_minors(const std::vector<Polynomial>& gens,
                                               const VariableSet& vars) {
    const std::size_t n = gens.size();
    const std::size_t N = vars.size();
    if (n + 1 != N)
        throw DomainError("jacobian minors need n generators in n+1 variables");
    for (const auto& g : gens)
        if (g.vars() != vars) throw DomainError("variable-set mismatch");
    std::vector<std::vector<Polynomial>> jac(n);
    for (std::size_t i = 0; i < n; ++i) {
        jac[i].reserve(N);
        for (std::size_t j = 0; j < N; ++j) jac[i].push_back(gens[i].derivative(j));
    }
    // with n = N-1, a column subset of size n is "all but column k"
    std::vector<Polynomial> minors;
    for (std::size_t skip = N; skip-- > 0;) {
        std::vector<std::vector<Polynomial>> sub(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < N; ++j)
                if (j != skip) sub[i].push_back(jac[i][j]);
        minors.push_back(poly_det(sub, vars));
    }
    // skip = N-1 first leaves columns {0..N-2}, which is lexicographically
    // smallest, so reverse-iteration above already yields lex order
    return minors;
}

}  // namespace curvesing
