// Differential forms pulled back to a parametrized branch: the span of
// nu*(h) x'(t) dt and nu*(h) y'(t) dt inside C{t} dt as an explicit
// truncated vector space, its codimension, and the conductor-shift identity
// between the pulled-back Jacobian ideal and t^(2*delta) times that span.
//
// Stabilization certificates use the module property: these spans are
// O-modules, so their order sets are closed under adding the branch value
// semigroup; a trailing gap-free run longer than the largest semigroup gap
// proves every higher order is present.
#pragma once

#include <optional>
#include <vector>

#include "curvesing/errors.hpp"
#include "curvesing/polynomial.hpp"
#include "curvesing/puiseux.hpp"
#include "curvesing/series.hpp"

namespace curvesing {

namespace detail {

// echelon of truncated series keyed by leading t-order
class OrderEchelon {
public:
    explicit OrderEchelon(std::uint64_t bound) : bound_(bound), piv_(bound + 1) {}

    bool insert(TruncatedSeries s) {
        while (true) {
            auto o = s.order();
            if (!o || *o > bound_) return false;
            if (!piv_[*o]) {
                piv_[*o] = std::move(s);
                ++rank_;
                return true;
            }
            FieldElem factor = s.coeff(*o) / piv_[*o]->coeff(*o);
            s -= factor * *piv_[*o];
        }
    }

    bool contains(TruncatedSeries s) const {
        while (true) {
            auto o = s.order();
            if (!o || *o > bound_) return true;
            if (!piv_[*o]) return false;
            FieldElem factor = s.coeff(*o) / piv_[*o]->coeff(*o);
            s -= factor * *piv_[*o];
        }
    }

    bool pivot_at(std::uint64_t k) const { return piv_[k].has_value(); }
    std::uint64_t rank() const { return rank_; }
    std::uint64_t bound() const { return bound_; }
    const std::optional<TruncatedSeries>& row(std::uint64_t k) const { return piv_[k]; }

    // first index of the trailing all-pivot run; bound+1 when the top order
    // itself is missing
    std::uint64_t tail_start() const {
        std::uint64_t c = bound_ + 1;
        while (c > 0 && piv_[c - 1]) --c;
        return c;
    }

private:
    std::uint64_t bound_;
    std::vector<std::optional<TruncatedSeries>> piv_;
    std::uint64_t rank_ = 0;
};

// pulled-back monomials of order <= bound, fed to a sink
template <class Sink>
void for_each_monomial_pullback(const PuiseuxBranch& b, std::uint64_t bound, Sink&& sink) {
    std::optional<std::uint64_t> vx = b.x_order(), vy = b.y_order();
    TruncatedSeries xs = b.x_as_series().truncated(bound), ys = b.y_as_series().truncated(bound);
    std::vector<TruncatedSeries> xp, yp;
    for (std::uint64_t a = 0;; ++a) {
        if (vx && a * *vx > bound) break;
        if (!vx && a > 0) break;
        if (xp.size() <= a)
            xp.push_back(a == 0 ? TruncatedSeries::constant(bound, FieldElem(1)) : xp.back() * xs);
        for (std::uint64_t bb = 0;; ++bb) {
            std::uint64_t lower = (vx ? a * *vx : 0) + (vy ? bb * *vy : 0);
            if (lower > bound) break;
            if (!vy && bb > 0) break;
            if (yp.size() <= bb)
                yp.push_back(bb == 0 ? TruncatedSeries::constant(bound, FieldElem(1)) : yp.back() * ys);
            sink(xp[a] * yp[bb]);
        }
    }
}

}  // namespace detail

// certified value-set data of one branch
struct ValueProfile {
    std::uint64_t delta = 0;      // gap count
    std::uint64_t conductor = 0;  // first order of the infinite tail
    std::uint64_t maxgap = 0;     // largest gap, 0 when the set is all of N
};

inline ValueProfile branch_value_profile(const PuiseuxBranch& b) {
    for (std::uint64_t bound = std::min<std::uint64_t>(b.trunc, 16);;
         bound = std::min(b.trunc, bound * 2)) {
        std::vector<std::uint64_t> values = branch_values(b, bound);
        std::vector<char> present(bound + 1, 0);
        for (auto v : values) present[v] = 1;
        if (!present[0]) throw InternalError("value set must contain 0");
        std::uint64_t c = bound + 1;
        while (c > 0 && present[c - 1]) --c;
        if (c <= bound) {
            ValueProfile prof;
            prof.conductor = c;
            for (std::uint64_t i = 0; i < c; ++i)
                if (!present[i]) {
                    ++prof.delta;
                    prof.maxgap = i;
                }
            if (bound + 1 - c >= prof.maxgap + 1) return prof;
        }
        if (bound == b.trunc)
            throw PrecisionError("insufficient precision: value set did not stabilize");
    }
}

// row-reduced span of { nu*(h) x'(t), nu*(h) y'(t) } over monomials h with
// ord nu*(h) <= N, as forms u(t) dt truncated at t^N dt
struct FormSpan {
    std::uint64_t trunc = 0;
    std::vector<std::uint64_t> orders;         // pivot orders, ascending
    std::vector<TruncatedSeries> rows;         // echelon rows matching `orders`
    std::uint64_t rank() const { return orders.size(); }
    std::uint64_t codim() const { return trunc + 1 - orders.size(); }
    bool order_present(std::uint64_t k) const {
        for (auto o : orders)
            if (o == k) return true;
        return false;
    }
};

namespace detail {

inline OrderEchelon omega_span_echelon(const PuiseuxBranch& b, std::uint64_t N) {
    if (N + 1 > b.trunc)
        throw PrecisionError("branch truncation too small for the requested form span");
    TruncatedSeries dx = b.x_as_series().derivative().truncated(N);
    TruncatedSeries dy = b.y_as_series().derivative().truncated(N);
    OrderEchelon ech(N);
    for_each_monomial_pullback(b, N, [&](const TruncatedSeries& pb) {
        ech.insert(pb.truncated(N) * dx);
        ech.insert(pb.truncated(N) * dy);
    });
    return ech;
}

inline FormSpan span_from_echelon(const OrderEchelon& ech) {
    FormSpan s;
    s.trunc = ech.bound();
    for (std::uint64_t k = 0; k <= ech.bound(); ++k)
        if (ech.pivot_at(k)) {
            s.orders.push_back(k);
            s.rows.push_back(*ech.row(k));
        }
    return s;
}

}  // namespace detail

inline FormSpan omega_span(const PuiseuxBranch& b, std::uint64_t N) {
    return detail::span_from_echelon(detail::omega_span_echelon(b, N));
}


// dim of C{t}dt / nu*Omega for one branch, certified by the module tail rule
inline std::uint64_t omega_codim(const PuiseuxBranch& b) {
    ValueProfile prof = branch_value_profile(b);
    std::uint64_t N = std::max<std::uint64_t>(16, 2 * prof.conductor + 2);
    N = std::min(N, b.trunc > 0 ? b.trunc - 1 : 0);
    for (;;) {
        detail::OrderEchelon ech = detail::omega_span_echelon(b, N);
        std::uint64_t c = ech.tail_start();
        if (c <= N && N + 1 - c >= prof.maxgap + 1) {
            std::uint64_t codim = 0;
            for (std::uint64_t k = 0; k < c; ++k)
                if (!ech.pivot_at(k)) ++codim;
            return codim;
        }
        if (N >= b.trunc - 1)
            throw PrecisionError("insufficient precision: form span did not stabilize");
        N = std::min(b.trunc - 1, N * 2);
    }
}

struct PolIdentity {
    bool holds = false;                // J_X = g * (nu*Omega / dt) inside C{t}
    std::uint64_t jacobian_codim = 0;  // codim of the pulled-back Jacobian ideal in C{t}
};

// conductor identity on an irreducible germ's single branch: the pulled-back
// Jacobian ideal equals g * (nu*Omega / dt), where g = nu*(f_y) / x'(t) is
// the conductor generator coming from the dualizing form dx/f_y (along the
// branch f_x x' + f_y y' = 0, so the same series is -nu*(f_x)/y'); its
// t-order is the conductor 2*delta = mu
inline PolIdentity pol_identity_check_on_branch(const Polynomial& f, const PuiseuxBranch& b) {
    if (b.axis != PuiseuxBranch::Axis::none || b.conj_count != 1 || b.field)
        throw DomainError("precondition violated (reducible or non-rational branch)");
    ValueProfile prof = branch_value_profile(b);
    const std::uint64_t two_delta = 2 * prof.delta;
    std::vector<Polynomial> minors = jacobian_minors({f}, f.vars());
    std::vector<TruncatedSeries> minor_pb;
    for (const auto& g : minors) minor_pb.push_back(pullback(b, g, b.trunc));

    // g = nu*(f_y) / (e gamma t^(e-1)), peeled as t^(2 delta) * unit
    TruncatedSeries fy_pb = pullback(b, f.derivative(std::size_t{1}), b.trunc);
    auto fy_ord = fy_pb.order();
    if (!fy_ord) throw PrecisionError("nu*(f_y) vanishes to the truncation order");
    if (*fy_ord != two_delta + b.e - 1)
        throw InternalError("nu*(f_y) does not have the conductor-predicted order");
    FieldElem lead_inv =
        (FieldElem(static_cast<std::int64_t>(b.e)) * b.gamma).inverse();
    TruncatedSeries unit_part = (lead_inv * fy_pb).shift_down(*fy_ord);

    std::uint64_t N = std::max<std::uint64_t>(32, 2 * two_delta + prof.maxgap + 2);
    for (;;) {
        if (N + b.e > b.trunc + 1 || N < two_delta)
            throw PrecisionError("insufficient precision for the conductor identity");
        // A: the pulled-back Jacobian ideal
        detail::OrderEchelon A(N);
        detail::for_each_monomial_pullback(b, N, [&](const TruncatedSeries& pb) {
            for (const auto& gpb : minor_pb) A.insert(pb.truncated(N) * gpb.truncated(N));
        });
        // B: g * (nu*Omega / dt)
        detail::OrderEchelon Bsh(N);
        std::vector<TruncatedSeries> b_rows;
        {
            detail::OrderEchelon om = detail::omega_span_echelon(b, N - two_delta);
            TruncatedSeries u = unit_part.truncated(N - two_delta);
            for (std::uint64_t k = 0; k <= om.bound(); ++k)
                if (om.pivot_at(k)) {
                    TruncatedSeries shifted = (u * *om.row(k)).shift_up(two_delta).truncated(N);
                    b_rows.push_back(shifted);
                    Bsh.insert(std::move(shifted));
                }
        }
        std::uint64_t cA = A.tail_start(), cB = Bsh.tail_start();
        bool certified = cA <= N && N + 1 - cA >= prof.maxgap + 1 && cB <= N &&
                         N + 1 - cB >= prof.maxgap + 1;
        if (certified) {
            PolIdentity out;
            out.jacobian_codim = 0;
            for (std::uint64_t k = 0; k <= N; ++k)
                if (!A.pivot_at(k)) ++out.jacobian_codim;
            bool equal = A.rank() == Bsh.rank();
            if (equal) {
                for (const auto& row : b_rows)
                    if (!A.contains(row)) {
                        equal = false;
                        break;
                    }
            }
            out.holds = equal;
            return out;
        }
        if (N >= b.trunc - 1)
            throw PrecisionError("insufficient precision: Jacobian span did not stabilize");
        N = std::min(b.trunc - 1, N * 2);
    }
}

inline PolIdentity pol_identity_check(const Polynomial& f, const BranchSet& B) {
    if (B.branch_count() != 1) throw DomainError("precondition violated (reducible)");
    return pol_identity_check_on_branch(f, B.branches[0]);
}

}  // namespace curvesing
