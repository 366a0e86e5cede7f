// Finite-dimensional quotient algebras O/I as explicit vector spaces over Q:
// monomial bases, exact linear normal forms through jet-space elimination,
// multiplication maps, and the brute-force jet colength oracle.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "curvesing/linalg.hpp"
#include "curvesing/mora.hpp"
#include "curvesing/polynomial.hpp"

namespace curvesing {

namespace detail {

inline void enumerate_monomials_below(std::size_t nvars, std::uint64_t maxdeg_exclusive,
                                      std::vector<Monomial>& out) {
    if (maxdeg_exclusive == 0) return;
    Monomial m(nvars);
    // iterative odometer over total degree < maxdeg_exclusive
    for (;;) {
        out.push_back(m);
        std::size_t i = 0;
        for (;;) {
            m.e[i] += 1;
            if (m.total_degree() < maxdeg_exclusive) break;
            m.e[i] = 0;
            ++i;
            if (i == nvars) return;
        }
    }
}

}  // namespace detail

// O/I with a monomial basis (the staircase complement, descending local
// order). Coordinates come from exact elimination on the degree-D jet space,
// where D is one more than the staircase corner degree sum; every monomial
// of degree >= D lies in the leading ideal, hence m^D is contained in I and
// the jet picture computes true classes. The resulting normal form is
// linear, unlike iterated local reduction.
class QuotientAlgebra {
public:
    explicit QuotientAlgebra(StandardBasis sb) : sb_(std::move(sb)) {
        auto bounds = sb_.pure_power_bounds();
        if (!bounds) throw NonIsolatedError("not an isolated singularity");
        basis_ = sb_.standard_monomials();
        jet_bound_ = 1;
        for (auto d : *bounds) jet_bound_ += d > 0 ? d - 1 : 0;

        std::vector<Monomial> jets;
        detail::enumerate_monomials_below(sb_.vars().size(), jet_bound_, jets);
        // leading-ideal monomials first, standard monomials after, both in
        // descending local order; pivots of the ideal span then stay in the
        // leading block and residues read off as basis coordinates
        std::vector<Monomial> lead;
        for (const auto& m : jets)
            if (sb_.in_leading_ideal(m)) lead.push_back(m);
        std::sort(lead.begin(), lead.end(), LocalOrderGreater{});
        columns_ = lead;
        columns_.insert(columns_.end(), basis_.begin(), basis_.end());
        for (std::size_t i = 0; i < columns_.size(); ++i) col_of_.emplace(columns_[i], i);

        Echelon<Rational> ideal_span(columns_.size());
        for (const auto& g : sb_.generators()) {
            std::uint64_t o = g.order();
            if (o >= jet_bound_) continue;
            std::vector<Monomial> mults;
            detail::enumerate_monomials_below(sb_.vars().size(), jet_bound_ - o, mults);
            for (const auto& q : mults) {
                std::vector<Rational> row(columns_.size());
                bool nonzero = false;
                for (const auto& [m, c] : g.terms()) {
                    Monomial prod = q * m;
                    if (prod.total_degree() >= jet_bound_) continue;
                    row[col_of_.at(prod)] += c;
                    nonzero = true;
                }
                if (nonzero) ideal_span.insert(std::move(row));
            }
        }
        if (ideal_span.rank() != lead.size())
            throw InternalError("jet span rank does not match the staircase");
        for (auto c : ideal_span.pivot_cols())
            if (c >= lead.size()) throw InternalError("jet pivot escaped the leading block");
        span_ = std::make_unique<Echelon<Rational>>(std::move(ideal_span));
    }

    QuotientAlgebra(QuotientAlgebra&&) = default;

    std::size_t dimension() const { return basis_.size(); }
    const std::vector<Monomial>& basis() const { return basis_; }
    const StandardBasis& standard_basis_used() const { return sb_; }
    const VariableSet& vars() const { return sb_.vars(); }

    // coordinates of the class of h in the monomial basis; linear in h
    std::vector<Rational> nf_vector(const Polynomial& h) const {
        if (h.vars() != sb_.vars()) throw DomainError("variable-set mismatch");
        std::vector<Rational> row(columns_.size());
        for (const auto& [m, c] : h.terms()) {
            if (m.total_degree() >= jet_bound_) continue;  // in m^D, hence in I
            row[col_of_.at(m)] += c;
        }
        span_->reduce(row);
        std::size_t lead_count = columns_.size() - basis_.size();
        for (std::size_t i = 0; i < lead_count; ++i)
            if (!row[i].is_zero()) throw InternalError("normal form kept a leading-ideal term");
        return std::vector<Rational>(row.begin() + lead_count, row.end());
    }

    // columns are nf_vector(f * basis[j])
    std::vector<std::vector<Rational>> multiplication_matrix(const Polynomial& f) const {
        std::vector<std::vector<Rational>> cols;
        cols.reserve(basis_.size());
        for (const auto& b : basis_)
            cols.push_back(nf_vector(f.times_term(b, Rational(1))));
        return cols;
    }

private:
    StandardBasis sb_;
    std::vector<Monomial> basis_;
    std::vector<Monomial> columns_;
    std::map<Monomial, std::size_t, LocalOrderGreater> col_of_;
    std::uint64_t jet_bound_ = 0;
    std::unique_ptr<Echelon<Rational>> span_;
};

inline std::size_t multiplication_rank(const Polynomial& f, const QuotientAlgebra& a) {
    auto cols = a.multiplication_matrix(f);
    return matrix_rank(cols, a.dimension());
}

// dim ker(m_f : A -> A); for A = M(f) this is the Tjurina number
inline std::size_t multiplication_kernel_dim(const Polynomial& f, const QuotientAlgebra& a) {
    return a.dimension() - multiplication_rank(f, a);
}

// dim of the ideal generated by f inside A; for A = M(f) this is mu - tau
inline std::size_t principal_ideal_dim(const Polynomial& f, const QuotientAlgebra& a) {
    return multiplication_rank(f, a);
}

// Independent colength oracle from the raw generators: exact row reduction
// of the images of I in the jet spaces of degrees bound-1 and bound; the
// common value when the two agree, nullopt ("unstable") otherwise.
inline std::optional<std::uint64_t> jet_colength_oracle(const IdealBasis& ideal,
                                                        std::uint64_t degree_bound) {
    if (ideal.empty()) throw DomainError("empty ideal basis");
    if (degree_bound < 1) throw DomainError("degree bound must be at least 1");
    const VariableSet& vars = ideal.front().vars();
    auto dim_at = [&](std::uint64_t k) -> std::uint64_t {
        std::vector<Monomial> jets;
        detail::enumerate_monomials_below(vars.size(), k, jets);
        std::map<Monomial, std::size_t, LocalOrderGreater> col;
        for (std::size_t i = 0; i < jets.size(); ++i) col.emplace(jets[i], i);
        Echelon<Rational> span(jets.size());
        for (const auto& g : ideal) {
            if (g.is_zero()) continue;
            std::uint64_t o = g.order();
            if (o >= k) continue;
            std::vector<Monomial> mults;
            detail::enumerate_monomials_below(vars.size(), k - o, mults);
            for (const auto& q : mults) {
                std::vector<Rational> row(jets.size());
                bool nonzero = false;
                for (const auto& [m, c] : g.terms()) {
                    Monomial prod = q * m;
                    if (prod.total_degree() >= k) continue;
                    row[col.at(prod)] += c;
                    nonzero = true;
                }
                if (nonzero) span.insert(std::move(row));
            }
        }
        return jets.size() - span.rank();
    };
    std::uint64_t lo = degree_bound == 1 ? 0 : dim_at(degree_bound - 1);
    std::uint64_t hi = dim_at(degree_bound);
    if (lo == hi) return lo;
    return std::nullopt;
}

}  // namespace curvesing
