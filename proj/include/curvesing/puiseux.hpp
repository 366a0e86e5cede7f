// Newton polygon and Newton-Puiseux expansion of plane curve germs.
//
// Expansion follows the rational (Duval-style) scheme: for an edge with
// primitive normal (p, q) and an edge-polynomial root xi, substitute
//   x -> xi^s X^p,  y -> xi^t X^q (1 + Y),   s q - t p = 1,
// so no p-th roots are ever adjoined; field extensions enter only through
// irreducible factors of edge polynomials. One expansion leaf over a field
// K describes [K:Q] Galois-conjugate analytic branches, which is how the
// branch count r is obtained.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvesing/errors.hpp"
#include "curvesing/numberfield.hpp"
#include "curvesing/parser.hpp"
#include "curvesing/polynomial.hpp"
#include "curvesing/series.hpp"

namespace curvesing {

struct PuiseuxOptions {
    // floor for the series truncation; expansion starts at
    // max(precision, 24, 4*ord f) and consumers that cannot certify their
    // results at that truncation ask for a doubled re-expansion
    std::uint64_t precision = 0;
    std::uint64_t tower_height_cap = 6;
    std::uint64_t degree_cap = 24;
    std::uint64_t depth_cap = 128;
};

struct NewtonEdge {
    std::uint64_t a0, b0;  // endpoint with the larger y-exponent
    std::uint64_t a1, b1;
    std::uint64_t p, q;    // primitive inner normal: p*a + q*b constant on the edge
    std::uint64_t lattice_length;
};

namespace detail {

struct SupportPoint {
    std::uint64_t a, b;
};

inline std::vector<NewtonEdge> lower_hull_edges(std::vector<SupportPoint> pts) {
    if (pts.empty()) return {};
    // keep the lowest b for each a
    std::sort(pts.begin(), pts.end(), [](const SupportPoint& u, const SupportPoint& v) {
        return u.a != v.a ? u.a < v.a : u.b < v.b;
    });
    std::vector<SupportPoint> mins;
    for (const auto& p : pts)
        if (mins.empty() || mins.back().a != p.a) mins.push_back(p);
    std::vector<SupportPoint> hull;
    auto cross = [](const SupportPoint& o, const SupportPoint& u, const SupportPoint& v) {
        // sign of (u-o) x (v-o); <= 0 when u is above or on chord o-v
        std::int64_t ua = static_cast<std::int64_t>(u.a) - static_cast<std::int64_t>(o.a);
        std::int64_t ub = static_cast<std::int64_t>(u.b) - static_cast<std::int64_t>(o.b);
        std::int64_t va = static_cast<std::int64_t>(v.a) - static_cast<std::int64_t>(o.a);
        std::int64_t vb = static_cast<std::int64_t>(v.b) - static_cast<std::int64_t>(o.b);
        return ua * vb - ub * va;
    };
    for (const auto& p : mins) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    std::vector<NewtonEdge> edges;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        const auto& u = hull[i];
        const auto& v = hull[i + 1];
        if (v.b >= u.b) break;  // only the negative-slope faces bound the germ
        std::uint64_t da = v.a - u.a;
        std::uint64_t db = u.b - v.b;
        std::uint64_t g = static_cast<std::uint64_t>(
            Integer::gcd(Integer(static_cast<std::int64_t>(da)), Integer(static_cast<std::int64_t>(db)))
                .to_u64());
        edges.push_back(NewtonEdge{u.a, u.b, v.a, v.b, db / g, da / g, g});
    }
    return edges;
}

}  // namespace detail

// Compact negative-slope faces of the Newton polygon of f.
inline std::vector<NewtonEdge> newton_polygon(const Polynomial& f) {
    if (f.vars().size() != 2) throw DomainError("newton polygon needs two variables");
    if (f.is_zero()) throw DomainError("newton polygon of the zero polynomial");
    if (!f.vanishes_at_origin()) throw DomainError("newton polygon needs f(0,0) = 0");
    std::vector<detail::SupportPoint> pts;
    for (const auto& [m, c] : f.terms()) pts.push_back({m.e[0], m.e[1]});
    return detail::lower_hull_edges(std::move(pts));
}

// One analytic branch. Non-axis branches are parametrized x = gamma t^e,
// y = y_series(t) over a flat (height <= 1) coefficient field; an expansion
// leaf over a degree-d field is listed as d conjugate branches sharing data.
struct PuiseuxBranch {
    enum class Axis { none, x_zero, y_zero };  // x_zero: the component {x=0}, param (0, t)

    Axis axis = Axis::none;
    TowerPtr field;            // nullptr = Q
    std::uint64_t e = 1;       // ord_t x(t) for non-axis branches
    FieldElem gamma{1};
    TruncatedSeries y_series;  // ord >= 1; identically zero for y_zero
    std::uint64_t trunc = 0;
    std::size_t leaf_index = 0;
    std::uint64_t conj_count = 1;
    std::uint64_t conj_index = 0;

    std::uint64_t field_degree() const { return field ? field->abs_degree : 1; }

    std::optional<std::uint64_t> x_order() const {
        if (axis == Axis::x_zero) return std::nullopt;
        return e;
    }
    std::optional<std::uint64_t> y_order() const {
        if (axis == Axis::y_zero) return std::nullopt;
        if (axis == Axis::x_zero) return 1;
        return y_series.order();
    }

    TruncatedSeries x_as_series() const {
        if (axis == Axis::x_zero) return TruncatedSeries::zero(trunc);
        if (axis == Axis::y_zero) return TruncatedSeries::monomial(trunc, 1, FieldElem(1));
        return TruncatedSeries::monomial(trunc, e, gamma);
    }
    TruncatedSeries y_as_series() const {
        if (axis == Axis::x_zero) return TruncatedSeries::monomial(trunc, 1, FieldElem(1));
        if (axis == Axis::y_zero) return TruncatedSeries::zero(trunc);
        return y_series;
    }

    std::string to_string() const {
        if (axis == Axis::x_zero) return "x = 0, y = t";
        if (axis == Axis::y_zero) return "x = t, y = 0";
        std::string xs = "x = ";
        if (!gamma.is_one()) xs += gamma.is_rational() ? gamma.to_string() + "*" : "(" + gamma.to_string() + ")*";
        xs += e == 1 ? "t" : "t^" + std::to_string(e);
        return xs + ", y = " + y_series.to_string() + " + O(t^" + std::to_string(trunc + 1) + ")";
    }
};

struct BranchSet {
    Polynomial source;
    std::vector<PuiseuxBranch> branches;  // one entry per analytic branch, r total
    std::uint64_t precision = 0;          // t-precision the series carry

    std::uint64_t branch_count() const { return branches.size(); }
};

// h(x(t), y(t)) mod t^(N+1)
inline TruncatedSeries pullback(const PuiseuxBranch& b, const Polynomial& h, std::uint64_t N) {
    if (N > b.trunc) throw PrecisionError("requested pullback precision exceeds the branch truncation");
    TruncatedSeries xs = b.x_as_series().truncated(N);
    TruncatedSeries ys = b.y_as_series().truncated(N);
    return compose_series(h, xs, ys);
}

namespace detail {

// ---- bivariate polynomials over a tower, used only inside the expansion ----

struct BiTerm {
    std::uint64_t a, b;  // x^a y^b
    FieldElem c;
};
using BiPoly = std::vector<BiTerm>;

inline void bi_normalize(BiPoly& f) {
    std::sort(f.begin(), f.end(), [](const BiTerm& u, const BiTerm& v) {
        return u.a != v.a ? u.a < v.a : u.b < v.b;
    });
    BiPoly out;
    for (auto& t : f) {
        if (!out.empty() && out.back().a == t.a && out.back().b == t.b)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
    }
    f.clear();
    for (auto& t : out)
        if (!t.c.is_zero()) f.push_back(std::move(t));
}

inline BiPoly bi_from_polynomial(const Polynomial& f) {
    BiPoly out;
    for (const auto& [m, c] : f.terms()) out.push_back(BiTerm{m.e[0], m.e[1], FieldElem(c)});
    bi_normalize(out);
    return out;
}

inline bool bi_divisible_x(const BiPoly& f) {
    if (f.empty()) return false;
    for (const auto& t : f)
        if (t.a == 0) return false;
    return true;
}
inline bool bi_divisible_y(const BiPoly& f) {
    if (f.empty()) return false;
    for (const auto& t : f)
        if (t.b == 0) return false;
    return true;
}
inline BiPoly bi_divide_y(BiPoly f) {
    for (auto& t : f) t.b -= 1;
    return f;
}

inline bool bi_constant_term_zero(const BiPoly& f) {
    for (const auto& t : f)
        if (t.a == 0 && t.b == 0) return false;
    return true;
}

// order of f(0, y) in y; nullopt when f(0, y) == 0
inline std::optional<std::uint64_t> bi_y_order_at_x0(const BiPoly& f) {
    std::optional<std::uint64_t> best;
    for (const auto& t : f)
        if (t.a == 0 && (!best || t.b < *best)) best = t.b;
    return best;
}

inline std::vector<NewtonEdge> bi_polygon(const BiPoly& f) {
    std::vector<SupportPoint> pts;
    for (const auto& t : f) pts.push_back({t.a, t.b});
    return lower_hull_edges(std::move(pts));
}

// edge polynomial: coefficient k belongs to lattice point (a0 + k q, b0 - k p)
inline UPoly<FieldElem> bi_face_poly(const BiPoly& f, const NewtonEdge& e) {
    std::vector<FieldElem> c(e.lattice_length + 1, FieldElem(0));
    for (const auto& t : f) {
        if (t.a < e.a0 || t.a > e.a1) continue;
        std::uint64_t da = t.a - e.a0;
        if (da % e.q != 0) continue;
        std::uint64_t k = da / e.q;
        if (k > e.lattice_length) continue;
        if (e.b0 != t.b + k * e.p) continue;
        c[k] = t.c;
    }
    return UPoly<FieldElem>(c);
}

inline Rational binomial(std::uint64_t n, std::uint64_t k) {
    Integer num(1), den(1);
    if (k > n - k) k = n - k;
    for (std::uint64_t i = 0; i < k; ++i) {
        num *= Integer(static_cast<std::int64_t>(n - i));
        den *= Integer(static_cast<std::int64_t>(i + 1));
    }
    return Rational(num, den);
}

// f(xi^s X^p, xi^t X^q (1 + Y)) / X^N
inline BiPoly bi_substitute(const BiPoly& f, std::uint64_t p, std::uint64_t q, std::uint64_t s,
                            std::uint64_t t, const FieldElem& xi) {
    std::uint64_t N = UINT64_MAX;
    for (const auto& term : f) N = std::min(N, p * term.a + q * term.b);
    BiPoly out;
    for (const auto& term : f) {
        FieldElem base = term.c * xi.pow(s * term.a + t * term.b);
        std::uint64_t xexp = p * term.a + q * term.b - N;
        for (std::uint64_t j = 0; j <= term.b; ++j)
            out.push_back(BiTerm{xexp, j, base * FieldElem(binomial(term.b, j))});
    }
    bi_normalize(out);
    return out;
}

inline BiPoly bi_derivative_y(const BiPoly& f) {
    BiPoly out;
    for (const auto& t : f) {
        if (t.b == 0) continue;
        out.push_back(BiTerm{t.a, t.b - 1, FieldElem(static_cast<std::int64_t>(t.b)) * t.c});
    }
    bi_normalize(out);
    return out;
}

// evaluate at (X = t, Y = ys): Horner in y with exact x-polynomial layers
inline TruncatedSeries bi_eval_at_t(const BiPoly& f, const TruncatedSeries& ys, std::uint64_t trunc) {
    std::uint64_t degy = 0;
    for (const auto& t : f) degy = std::max(degy, t.b);
    TruncatedSeries acc(trunc);
    for (std::uint64_t b = degy + 1; b-- > 0;) {
        acc = acc * ys.truncated(trunc);
        for (const auto& t : f) {
            if (t.b != b || t.a > trunc) continue;
            acc.set_coeff(t.a, acc.coeff(t.a) + t.c);
        }
    }
    return acc;
}

// ---- the expansion proper ----

struct Transform {
    std::uint64_t p, q, s, t;
    FieldElem xi;
};

struct RawLeaf {
    TowerPtr field;
    std::vector<Transform> path;
    TruncatedSeries tail;  // Y at the deepest level, as a series in t = deepest X
};

struct ExpandState {
    PuiseuxOptions opts;
    std::uint64_t T = 0;
    std::vector<RawLeaf> leaves;
    std::uint64_t nodes = 0;
};

inline TruncatedSeries solve_smooth_tail(const BiPoly& f, std::uint64_t Tx) {
    BiPoly fy = bi_derivative_y(f);
    TruncatedSeries y = TruncatedSeries::zero(0);
    // Newton with doubling; known = provably correct coefficient count
    std::uint64_t known = 1, cur = 1;
    while (known < Tx + 1) {
        cur = std::min(std::max<std::uint64_t>(cur * 2, 2), Tx);
        TruncatedSeries yc = y.truncated(std::min(y.trunc(), cur));
        TruncatedSeries ywide(cur);
        for (std::uint64_t i = 0; i <= yc.trunc(); ++i) ywide.set_coeff(i, yc.coeff(i));
        TruncatedSeries num = bi_eval_at_t(f, ywide, cur);
        TruncatedSeries den = bi_eval_at_t(fy, ywide, cur);
        if (den.coeff(0).is_zero()) throw InternalError("smooth tail with singular derivative");
        y = ywide - num / den;
        known = std::min(2 * known, cur + 1);
    }
    TruncatedSeries residue = bi_eval_at_t(f, y, Tx);
    if (!residue.is_zero()) throw InternalError("smooth tail did not satisfy its equation");
    return y;
}

inline void expand_node(const BiPoly& f_in, const TowerPtr& K, std::vector<Transform>& path,
                        std::uint64_t Tx, ExpandState& st) {
    if (++st.nodes > st.opts.depth_cap * 16)
        throw NonIsolatedError("expansion did not separate branches (non-reduced input?)");
    if (path.size() > st.opts.depth_cap)
        throw NonIsolatedError("expansion depth cap exceeded (non-reduced input?)");
    BiPoly f = f_in;
    if (bi_divisible_x(f)) throw InternalError("expansion node divisible by x");
    if (bi_divisible_y(f)) {
        // Y = 0 solves this node exactly: a terminating branch
        st.leaves.push_back(RawLeaf{K, path, TruncatedSeries::zero(Tx)});
        f = bi_divide_y(std::move(f));
        if (bi_divisible_y(f)) throw NonIsolatedError("repeated component (non-reduced input)");
        if (!bi_constant_term_zero(f)) return;  // nothing more through the origin
    }
    auto d = bi_y_order_at_x0(f);
    if (!d) throw InternalError("expansion node divisible by x after y-split");
    if (*d == 0) return;  // unit at this node
    if (*d == 1) {
        st.leaves.push_back(RawLeaf{K, path, solve_smooth_tail(f, Tx)});
        return;
    }
    for (const NewtonEdge& edge : bi_polygon(f)) {
        UPoly<FieldElem> face = bi_face_poly(f, edge);
        for (const auto& [h, mult] : factor_over(K, face)) {
            TowerPtr K2 = K;
            FieldElem xi;
            if (h.degree() == 1) {
                xi = -h.coeff(0);
            } else {
                std::uint64_t new_height = (K ? static_cast<std::uint64_t>(K->height) : 0) + 1;
                std::uint64_t new_degree =
                    (K ? K->abs_degree : 1) * static_cast<std::uint64_t>(h.degree());
                if (new_height > st.opts.tower_height_cap)
                    throw Error("extension-tower height exceeded");
                if (new_degree > st.opts.degree_cap)
                    throw Error("extension-tower degree exceeded");
                K2 = Tower::extend(K, h, "b" + std::to_string(new_height) + "_" +
                                             std::to_string(st.leaves.size()));
                xi = FieldElem::generator(K2);
            }
            // bezout: s q - t p = 1 with 1 <= s <= p (s = q^{-1} mod p)
            std::uint64_t s = 1;
            if (edge.p > 1) {
                while ((s * edge.q) % edge.p != 1) ++s;
            }
            std::uint64_t t = (s * edge.q - 1) / edge.p;
            BiPoly next = bi_substitute(f, edge.p, edge.q, s, t, xi);
            auto next_d = bi_y_order_at_x0(next);
            if (!next_d || *next_d != mult)
                throw InternalError("edge-root multiplicity mismatch after substitution");
            std::uint64_t sigma = edge.q;  // this level's y gains x1^q
            std::uint64_t next_Tx = Tx > sigma ? Tx - sigma : 1;
            path.push_back(Transform{edge.p, edge.q, s, t, xi});
            expand_node(next, K2, path, next_Tx, st);
            path.pop_back();
        }
    }
}

}  // namespace detail

inline BranchSet puiseux_branches(const Polynomial& f_in, const PuiseuxOptions& opts = {}) {
    if (f_in.vars().size() != 2) throw DomainError("puiseux expansion needs two variables");
    if (f_in.is_zero()) throw DomainError("puiseux expansion of the zero polynomial");
    if (!f_in.vanishes_at_origin()) throw DomainError("germ must vanish at the origin");

    const std::uint64_t m = f_in.order();
    const std::uint64_t T = std::max<std::uint64_t>(4 * m, std::max<std::uint64_t>(opts.precision, 24));

    BranchSet out;
    out.source = f_in;
    out.precision = T;

    Polynomial f = f_in;
    std::size_t leaf_index = 0;
    // coordinate pre-pass: axis components split off as explicit branches
    if (f.divisible_by_variable(0)) {
        f = f.divide_by_variable(0);
        if (!f.is_zero() && f.divisible_by_variable(0))
            throw NonIsolatedError("x^2 divides the germ (non-reduced)");
        PuiseuxBranch b;
        b.axis = PuiseuxBranch::Axis::x_zero;
        b.trunc = T;
        b.y_series = TruncatedSeries::monomial(T, 1, FieldElem(1));
        b.leaf_index = leaf_index++;
        out.branches.push_back(std::move(b));
    }
    if (!f.is_constant() || !f.constant_term().is_zero()) {
        if (f.divisible_by_variable(1)) {
            f = f.divide_by_variable(1);
            if (f.divisible_by_variable(1))
                throw NonIsolatedError("y^2 divides the germ (non-reduced)");
            PuiseuxBranch b;
            b.axis = PuiseuxBranch::Axis::y_zero;
            b.trunc = T;
            b.y_series = TruncatedSeries::zero(T);
            b.leaf_index = leaf_index++;
            out.branches.push_back(std::move(b));
        }
    }

    detail::ExpandState st;
    st.opts = opts;
    st.T = T;
    if (!f.is_constant() && f.vanishes_at_origin()) {
        detail::BiPoly bf = detail::bi_from_polynomial(f);
        std::vector<detail::Transform> path;
        detail::expand_node(bf, nullptr, path, T, st);
    } else if (f.is_constant() && f.constant_term().is_zero()) {
        throw InternalError("zero polynomial survived the axis pre-pass");
    }

    // assemble leaves: back-substitute the transforms, flatten towers,
    // expand Galois conjugates
    struct Assembled {
        PuiseuxBranch branch;
        std::string sort_key;
    };
    std::vector<Assembled> assembled;
    for (const auto& leaf : st.leaves) {
        // x(t) through the transform chain
        FieldElem gamma(1);
        std::uint64_t e = 1;
        for (std::size_t i = leaf.path.size(); i-- > 0;) {
            const auto& tr = leaf.path[i];
            gamma = tr.xi.pow(tr.s) * gamma.pow(tr.p);
            e *= tr.p;
        }
        // y(t) bottom-up: S_i = xi^t * (gamma_{i+1} t^{e_{i+1}})^q * (1 + S_{i+1})
        TruncatedSeries S = leaf.tail;
        FieldElem sub_gamma(1);
        std::uint64_t sub_e = 1;
        for (std::size_t i = leaf.path.size(); i-- > 0;) {
            const auto& tr = leaf.path[i];
            TruncatedSeries one_plus = TruncatedSeries::constant(S.trunc(), FieldElem(1)) + S;
            FieldElem coeff = tr.xi.pow(tr.t) * sub_gamma.pow(tr.q);
            S = (coeff * one_plus).shift_up(tr.q * sub_e);
            sub_gamma = tr.xi.pow(tr.s) * sub_gamma.pow(tr.p);
            sub_e *= tr.p;
        }
        if (leaf.path.empty()) {
            // smooth at the root: y = tail directly
            S = leaf.tail;
        }
        TruncatedSeries yser = S.truncated(std::min<std::uint64_t>(S.trunc(), T));
        // widen exact-terminating branches to the common precision
        if (yser.trunc() < T) {
            TruncatedSeries wide(T);
            for (std::uint64_t i = 0; i <= yser.trunc(); ++i) wide.set_coeff(i, yser.coeff(i));
            yser = wide;
        }

        // flatten the tower and rebase
        FlatField flat = flatten_tower(leaf.field);
        if (leaf.field && leaf.field->height >= 2) {
            gamma = rebase_elem(gamma, flat.gen_images);
            yser = yser.rebased(flat.gen_images);
        }
        TowerPtr field = flat.field;

        // e = 1 leaves get gamma normalized to 1 by reparametrizing t
        if (e == 1 && !gamma.is_one()) {
            FieldElem ginv = gamma.inverse();
            TruncatedSeries fixed(yser.trunc());
            FieldElem powv(1);
            for (std::uint64_t i = 0; i <= yser.trunc(); ++i) {
                if (!yser.coeff(i).is_zero()) fixed.set_coeff(i, yser.coeff(i) * powv);
                powv = powv * ginv;
            }
            yser = std::move(fixed);
            gamma = FieldElem(1);
        }

        PuiseuxBranch b;
        b.axis = PuiseuxBranch::Axis::none;
        b.field = field;
        b.e = e;
        b.gamma = gamma;
        b.y_series = std::move(yser);
        b.trunc = T;
        b.conj_count = field ? field->abs_degree : 1;
        Assembled a;
        a.sort_key = (field ? "F" : "Q") + std::to_string(e) + "|" + b.to_string();
        a.branch = std::move(b);
        assembled.push_back(std::move(a));
    }
    std::sort(assembled.begin(), assembled.end(), [](const Assembled& u, const Assembled& v) {
        if (u.branch.e != v.branch.e) return u.branch.e < v.branch.e;
        return u.sort_key < v.sort_key;
    });
    for (auto& a : assembled) {
        a.branch.leaf_index = leaf_index;
        for (std::uint64_t k = 0; k < a.branch.conj_count; ++k) {
            PuiseuxBranch copy = a.branch;
            copy.conj_index = k;
            out.branches.push_back(std::move(copy));
        }
        ++leaf_index;
    }

    // exactness check: every non-axis branch must satisfy its equation
    for (const auto& b : out.branches) {
        if (b.axis != PuiseuxBranch::Axis::none || b.conj_index != 0) continue;
        TruncatedSeries residue = pullback(b, f_in, T);
        if (!residue.is_zero())
            throw InternalError("branch parametrization does not satisfy the germ equation");
    }
    if (out.branches.empty()) throw InternalError("no branches produced for a vanishing germ");
    return out;
}

// ---- value semigroups and the delta invariant per branch ----

// all orders ord_t nu*(h) <= bound realized by polynomials h, by exact
// elimination on pulled-back monomials
inline std::vector<std::uint64_t> branch_values(const PuiseuxBranch& b, std::uint64_t bound) {
    if (bound > b.trunc) throw PrecisionError("insufficient precision for the requested bound");
    std::optional<std::uint64_t> vx = b.x_order(), vy = b.y_order();
    std::vector<TruncatedSeries> rows;
    TruncatedSeries xs = b.x_as_series().truncated(bound), ys = b.y_as_series().truncated(bound);
    std::vector<TruncatedSeries> xp, yp;
    for (std::uint64_t a = 0;; ++a) {
        if (vx && a * *vx > bound) break;
        if (!vx && a > 0) break;
        xp.push_back(a == 0 ? TruncatedSeries::constant(bound, FieldElem(1)) : xp.back() * xs);
        for (std::uint64_t bb = 0;; ++bb) {
            std::uint64_t lower = (vx ? a * *vx : 0) + (vy ? bb * *vy : 0);
            if (lower > bound) break;
            if (!vy && bb > 0) break;
            if (yp.size() <= bb)
                yp.push_back(bb == 0 ? TruncatedSeries::constant(bound, FieldElem(1)) : yp.back() * ys);
            rows.push_back(xp[a] * yp[bb]);
        }
    }
    // echelon by increasing t-order; pivot orders are the value set
    std::vector<std::optional<TruncatedSeries>> pivot(bound + 1);
    for (auto& row : rows) {
        TruncatedSeries cur = std::move(row);
        while (true) {
            auto o = cur.order();
            if (!o || *o > bound) break;
            if (!pivot[*o]) {
                pivot[*o] = std::move(cur);
                break;
            }
            FieldElem factor = cur.coeff(*o) / pivot[*o]->coeff(*o);
            cur -= factor * *pivot[*o];
        }
    }
    std::vector<std::uint64_t> values;
    for (std::uint64_t i = 0; i <= bound; ++i)
        if (pivot[i]) values.push_back(i);
    return values;
}

// gap count of the branch value set, with the bound grown adaptively until
// the set is provably stable: the value set is closed under addition, so a
// trailing gap-free run longer than the largest gap certifies every higher
// order is present
inline std::uint64_t delta_branch(const PuiseuxBranch& b) {
    for (std::uint64_t bound = std::min<std::uint64_t>(b.trunc, 16);; bound = std::min(b.trunc, bound * 2)) {
        std::vector<std::uint64_t> values = branch_values(b, bound);
        if (values.empty() || values[0] != 0) throw InternalError("value set must contain 0");
        std::vector<char> present(bound + 1, 0);
        for (auto v : values) present[v] = 1;
        // conductor candidate: start of the trailing gap-free run
        std::uint64_t c = bound + 1;
        while (c > 0 && present[c - 1]) --c;
        if (c <= bound) {
            std::uint64_t gaps = 0, maxgap = 0;
            for (std::uint64_t i = 0; i < c; ++i)
                if (!present[i]) {
                    ++gaps;
                    maxgap = i;
                }
            if (bound + 1 - c >= maxgap + 1) return gaps;
        }
        if (bound == b.trunc)
            throw PrecisionError("insufficient precision: value set did not stabilize");
    }
}

// ord_t of g(x(t), y(t)); g must not vanish on the branch
inline std::uint64_t intersection_multiplicity(const PuiseuxBranch& b, const Polynomial& g) {
    TruncatedSeries s = pullback(b, g, b.trunc);
    auto o = s.order();
    if (!o) throw PrecisionError("insufficient precision or vanishing component");
    return *o;
}

// ---- pairwise contacts between analytic branches, and the delta oracle ----
//
// Contacts with a whole Galois orbit of branches need no field
// factorization: the orbit's leaf carries a Weierstrass equation W(x, y)
// over its field K = Q[w]/(M) (coefficients from zeta-free power sums of
// the parametrization), the generator is replaced by the indeterminate w,
// W is composed with the partner branch, and the sum of contacts over the
// orbit is ord_t det( V(C_M) ) — the norm of W along the partner, taken as
// a companion-matrix determinant over truncated series.

namespace detail {

// coefficients A_0..A_e of the single-branch Weierstrass polynomial
// W(x, y) = y^e + A_{e-1}(x) y^(e-1) + ... + A_0(x) over the leaf's field,
// via Newton's identities on the power sums of the conjugate y-series
inline std::vector<TruncatedSeries> weierstrass_coeffs(const PuiseuxBranch& b,
                                                       std::uint64_t x_prec = UINT64_MAX) {
    const std::uint64_t e = b.e;
    const std::uint64_t Mx = std::min(b.trunc / e, x_prec);  // x-precision of the coefficients
    const std::uint64_t work_trunc = std::min(b.trunc, (Mx + 1) * e - 1);
    FieldElem gamma_inv = b.gamma.inverse();
    // p_k as a series in x: u-exponents divisible by e survive the zeta
    // averaging, and x^m = gamma^m u^(m e)
    std::vector<TruncatedSeries> psums(e + 1, TruncatedSeries::zero(Mx));
    TruncatedSeries ypow = TruncatedSeries::constant(work_trunc, FieldElem(1));
    for (std::uint64_t k = 1; k <= e; ++k) {
        ypow *= b.y_series.truncated(work_trunc);
        TruncatedSeries pk(Mx);
        FieldElem gpow(1);
        for (std::uint64_t m = 0; m <= Mx; ++m) {
            if (m * e <= ypow.trunc() && !ypow.coeff(m * e).is_zero())
                pk.set_coeff(m, FieldElem(static_cast<std::int64_t>(e)) * ypow.coeff(m * e) * gpow);
            gpow = gpow * gamma_inv;
        }
        psums[k] = std::move(pk);
    }
    // Newton: k s_k = sum_{i=1..k} (-1)^(i-1) s_{k-i} p_i
    std::vector<TruncatedSeries> s(e + 1, TruncatedSeries::zero(Mx));
    s[0] = TruncatedSeries::constant(Mx, FieldElem(1));
    for (std::uint64_t k = 1; k <= e; ++k) {
        TruncatedSeries acc(Mx);
        for (std::uint64_t i = 1; i <= k; ++i) {
            TruncatedSeries term = s[k - i] * psums[i];
            if (i % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        s[k] = FieldElem(Rational(1, static_cast<std::int64_t>(k))) * acc;
    }
    // W = sum_i (-1)^(e-i) s_{e-i} y^i
    std::vector<TruncatedSeries> A(e + 1, TruncatedSeries::zero(Mx));
    for (std::uint64_t i = 0; i <= e; ++i) {
        A[i] = s[e - i];
        if ((e - i) % 2 == 1) A[i] = -A[i];
    }
    return A;
}

// split a series over a height <= 1 field into rational component series
// indexed by generator powers
inline std::vector<TruncatedSeries> generator_components(const TruncatedSeries& s, std::uint64_t d) {
    std::vector<TruncatedSeries> comp(d, TruncatedSeries::zero(s.trunc()));
    for (std::uint64_t i = 0; i <= s.trunc(); ++i) {
        const FieldElem& c = s.coeff(i);
        if (c.is_zero()) continue;
        if (c.is_rational()) {
            comp[0].set_coeff(i, c);
        } else {
            const auto& vec = c.coeffs();
            for (std::size_t j = 0; j < vec.size(); ++j)
                if (!vec[j].is_zero()) comp[j].set_coeff(i, vec[j]);
        }
    }
    return comp;
}

// V_j(t) for V(w, t) = W_w(x_P(t), y_P(t)): the orbit equation with its
// generator replaced by w, composed with the partner parametrization
inline std::vector<TruncatedSeries> orbit_equation_along(const PuiseuxBranch& Q,
                                                         const std::vector<TruncatedSeries>& WQ,
                                                         const PuiseuxBranch& P) {
    const std::uint64_t d = Q.field_degree();
    const std::uint64_t Mx = WQ[0].trunc();
    const std::uint64_t ex_p = P.axis == PuiseuxBranch::Axis::y_zero ? 1 : P.e;
    // the composed coefficients are reliable only to x-precision Mx of W
    const std::uint64_t trunc = P.axis == PuiseuxBranch::Axis::x_zero
                                    ? P.trunc
                                    : std::min(P.trunc, (Mx + 1) * ex_p - 1);
    TruncatedSeries ys = P.y_as_series();
    std::vector<TruncatedSeries> V(d, TruncatedSeries::zero(trunc));
    TruncatedSeries ypow = TruncatedSeries::constant(trunc, FieldElem(1));
    for (std::size_t i = 0; i < WQ.size(); ++i) {
        if (i > 0) ypow *= ys;
        auto comp = generator_components(WQ[i], d);
        for (std::uint64_t j = 0; j < d; ++j) {
            if (comp[j].is_zero()) continue;
            // compose the component x-series with x_P(t)
            TruncatedSeries composed(trunc);
            if (P.axis == PuiseuxBranch::Axis::x_zero) {
                composed.set_coeff(0, comp[j].coeff(0));
            } else {
                std::uint64_t ex = P.axis == PuiseuxBranch::Axis::y_zero ? 1 : P.e;
                FieldElem gpow(1);
                for (std::uint64_t m = 0; m <= comp[j].trunc() && m * ex <= trunc; ++m) {
                    if (!comp[j].coeff(m).is_zero())
                        composed.set_coeff(m * ex, comp[j].coeff(m) * gpow);
                    if (P.axis == PuiseuxBranch::Axis::none) gpow = gpow * P.gamma;
                }
            }
            V[j] += composed * ypow;
        }
    }
    return V;
}

// exact determinant of a matrix of truncated series (Bareiss; divisions are
// exact in the series domain); common t-powers of rows and columns are
// pulled out first, which both avoids precision erosion and restores
// truncation in the result
inline TruncatedSeries series_det(std::vector<std::vector<TruncatedSeries>> a) {
    const std::size_t d = a.size();
    if (d == 0) return TruncatedSeries::constant(0, FieldElem(1));
    std::uint64_t pulled = 0;
    auto pull_line = [&](bool rows, std::size_t idx) {
        std::uint64_t m = UINT64_MAX, min_trunc = UINT64_MAX;
        for (std::size_t k = 0; k < d; ++k) {
            const TruncatedSeries& e = rows ? a[idx][k] : a[k][idx];
            auto o = e.order();
            m = std::min(m, o ? *o : e.trunc() + 1);
            min_trunc = std::min(min_trunc, e.trunc());
        }
        m = std::min(m, min_trunc);
        if (m == 0 || m == UINT64_MAX) return;
        for (std::size_t k = 0; k < d; ++k) {
            TruncatedSeries& e = rows ? a[idx][k] : a[k][idx];
            e = e.shift_down(m);
        }
        pulled += m;
    };
    for (std::size_t r = 0; r < d; ++r) pull_line(true, r);
    for (std::size_t c = 0; c < d; ++c) pull_line(false, c);
    auto divide_exact = [](const TruncatedSeries& num, const TruncatedSeries& den) {
        auto o = den.order();
        if (!o) throw PrecisionError("pivot vanished to the truncation order");
        std::uint64_t t = std::min(num.trunc(), den.trunc());
        if (t < *o) throw PrecisionError("series too short for an exact division");
        TruncatedSeries unit = den.shift_down(*o);
        TruncatedSeries shifted = num.truncated(t).shift_down(*o);
        return shifted / unit;
    };
    bool negate = false;
    TruncatedSeries prev = TruncatedSeries::constant(a[0][0].trunc(), FieldElem(1));
    for (std::size_t k = 0; k + 1 < d; ++k) {
        std::size_t sel = d;
        std::uint64_t best = UINT64_MAX;
        for (std::size_t r = k; r < d; ++r) {
            auto o = a[r][k].order();
            if (o && *o < best) {
                best = *o;
                sel = r;
            }
        }
        if (sel == d) throw PrecisionError("determinant not visible at this truncation");
        if (sel != k) {
            std::swap(a[k], a[sel]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < d; ++i) {
            for (std::size_t j = k + 1; j < d; ++j)
                a[i][j] = divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = TruncatedSeries::zero(a[i][k].trunc());
        }
        prev = a[k][k];
    }
    TruncatedSeries det = a[d - 1][d - 1].shift_up(pulled);
    return negate ? -det : det;
}

// powers of the companion matrix of the leaf's minimal polynomial over Q
inline std::vector<std::vector<std::vector<Rational>>> companion_powers(const PuiseuxBranch& b) {
    const std::uint64_t d = b.field_degree();
    std::vector<std::vector<Rational>> C(d, std::vector<Rational>(d, Rational(0)));
    if (b.field) {
        for (std::uint64_t i = 1; i < d; ++i) C[i][i - 1] = Rational(1);
        for (std::uint64_t i = 0; i < d; ++i) {
            const FieldElem& c = b.field->minpoly[i];
            C[i][d - 1] = c.is_zero() ? Rational(0) : -c.rational();
        }
    }
    std::vector<std::vector<std::vector<Rational>>> pows;
    std::vector<std::vector<Rational>> cur(d, std::vector<Rational>(d, Rational(0)));
    for (std::uint64_t i = 0; i < d; ++i) cur[i][i] = Rational(1);
    pows.push_back(cur);
    for (std::uint64_t k = 1; k < d; ++k) {
        std::vector<std::vector<Rational>> nxt(d, std::vector<Rational>(d, Rational(0)));
        for (std::uint64_t i = 0; i < d; ++i)
            for (std::uint64_t l = 0; l < d; ++l) {
                if (cur[i][l].is_zero()) continue;
                for (std::uint64_t j = 0; j < d; ++j)
                    if (!C[l][j].is_zero()) nxt[i][j] += cur[i][l] * C[l][j];
            }
        pows.push_back(nxt);
        cur = std::move(nxt);
    }
    return pows;
}

// Weierstrass data of one leaf: W over its field, and the rational orbit
// equation F = prod of the Galois conjugates of W (monic of y-degree d*e)
struct LeafEquation {
    std::uint64_t e = 1;
    std::uint64_t d = 1;
    std::uint64_t x_prec = 0;
    std::vector<std::vector<TruncatedSeries>> Wcomp;  // W_i split by generator powers
    std::vector<TruncatedSeries> F;                   // rational, index = y-power
};

inline LeafEquation leaf_equation(const PuiseuxBranch& b, std::uint64_t x_prec = UINT64_MAX) {
    LeafEquation eq;
    eq.e = b.e;
    eq.d = b.field_degree();
    std::vector<TruncatedSeries> W = weierstrass_coeffs(b, x_prec);
    eq.x_prec = W[0].trunc();
    for (const auto& wi : W) eq.Wcomp.push_back(generator_components(wi, eq.d));
    if (eq.d == 1) {
        eq.F.reserve(W.size());
        for (auto& comps : eq.Wcomp) eq.F.push_back(comps[0]);
        return eq;
    }
    // F by interpolation in y: F(x, y_pt) = det( sum_j V_j(x; y_pt) C^j )
    auto pows = companion_powers(b);
    const std::uint64_t degF = eq.d * eq.e;
    std::vector<std::int64_t> nodes(degF + 1);
    for (std::uint64_t k = 0; k <= degF; ++k)
        nodes[k] = k == 0 ? 0
                          : (k % 2 ? static_cast<std::int64_t>((k + 1) / 2)
                                   : -static_cast<std::int64_t>(k / 2));
    std::vector<TruncatedSeries> values;
    for (std::uint64_t pt = 0; pt <= degF; ++pt) {
        FieldElem ypt(nodes[pt]);
        std::vector<TruncatedSeries> Vj(eq.d, TruncatedSeries::zero(eq.x_prec));
        for (std::uint64_t j = 0; j < eq.d; ++j) {
            FieldElem p(1);
            for (std::size_t i = 0; i < eq.Wcomp.size(); ++i) {
                if (!eq.Wcomp[i][j].is_zero()) Vj[j] += p * eq.Wcomp[i][j];
                p = p * ypt;
            }
        }
        std::vector<std::vector<TruncatedSeries>> mat(
            eq.d, std::vector<TruncatedSeries>(eq.d, TruncatedSeries::zero(eq.x_prec)));
        for (std::uint64_t j = 0; j < eq.d; ++j) {
            if (Vj[j].is_zero()) continue;
            for (std::uint64_t rr = 0; rr < eq.d; ++rr)
                for (std::uint64_t cc = 0; cc < eq.d; ++cc)
                    if (!pows[j][rr][cc].is_zero()) mat[rr][cc] += FieldElem(pows[j][rr][cc]) * Vj[j];
        }
        values.push_back(series_det(std::move(mat)));
    }
    // Lagrange interpolation over the symmetric nodes
    eq.F.assign(degF + 1, TruncatedSeries::zero(eq.x_prec));
    for (std::uint64_t pt = 0; pt <= degF; ++pt) {
        // a value that looks like zero hides an order beyond the truncation
        if (values[pt].is_zero())
            throw PrecisionError("orbit-equation value vanished to the truncation");
        // L_pt(y) = prod_{q != pt} (y - node_q) / (node_pt - node_q)
        std::vector<Rational> L{Rational(1)};
        Rational denom(1);
        for (std::uint64_t q = 0; q <= degF; ++q) {
            if (q == pt) continue;
            std::vector<Rational> nxt(L.size() + 1, Rational(0));
            for (std::size_t i = 0; i < L.size(); ++i) {
                nxt[i + 1] += L[i];
                nxt[i] -= L[i] * Rational(nodes[q]);
            }
            L = std::move(nxt);
            denom *= Rational(nodes[pt] - nodes[q]);
        }
        Rational scale = denom.inverse();
        for (std::size_t i = 0; i < L.size(); ++i) {
            Rational c = L[i] * scale;
            if (!c.is_zero()) eq.F[i] += FieldElem(c) * values[pt];
        }
    }
    if (!eq.F[degF].is_zero()) {
        TruncatedSeries lead = eq.F[degF];
        bool monic = lead.coeff(0).is_one();
        for (std::uint64_t i = 1; monic && i <= lead.trunc(); ++i)
            if (!lead.coeff(i).is_zero()) monic = false;
        if (!monic) throw InternalError("orbit equation is not monic");
    }
    return eq;
}

// compose a y-indexed family of rational x-series with a branch
// parametrization; returns ord_t or a PrecisionError
inline std::uint64_t compose_equation_ord(const std::vector<TruncatedSeries>& F,
                                          std::uint64_t x_prec, const PuiseuxBranch& P) {
    const std::uint64_t ex = P.axis == PuiseuxBranch::Axis::y_zero ? 1 : P.e;
    const std::uint64_t trunc = P.axis == PuiseuxBranch::Axis::x_zero
                                    ? P.trunc
                                    : std::min(P.trunc, (x_prec + 1) * ex - 1);
    TruncatedSeries ys = P.y_as_series();
    TruncatedSeries acc(trunc);
    for (std::size_t i = F.size(); i-- > 0;) {
        acc = acc * ys.truncated(trunc);
        if (F[i].is_zero()) continue;
        // compose the rational x-series with x_P(t)
        if (P.axis == PuiseuxBranch::Axis::x_zero) {
            acc.set_coeff(0, acc.coeff(0) + F[i].coeff(0));
        } else {
            FieldElem gpow(1);
            for (std::uint64_t m = 0; m <= F[i].trunc() && m * ex <= trunc; ++m) {
                if (!F[i].coeff(m).is_zero())
                    acc.set_coeff(m * ex, acc.coeff(m * ex) + F[i].coeff(m) * gpow);
                if (P.axis == PuiseuxBranch::Axis::none) gpow = gpow * P.gamma;
            }
        }
    }
    auto o = acc.order();
    if (!o) throw PrecisionError("contact not visible at this truncation");
    return *o;
}

// quotient F / W over the leaf's own field (exact division in y; W monic)
inline std::vector<TruncatedSeries> divide_out_own_factor(const LeafEquation& eq,
                                                          const PuiseuxBranch& b) {
    FieldElem theta = b.field ? FieldElem::generator(b.field) : FieldElem(0);
    // W over K, coefficient i = sum_j theta^j Wcomp[i][j]
    std::vector<TruncatedSeries> W(eq.Wcomp.size(), TruncatedSeries::zero(eq.x_prec));
    for (std::size_t i = 0; i < eq.Wcomp.size(); ++i) {
        FieldElem tp(1);
        for (std::uint64_t j = 0; j < eq.d; ++j) {
            if (!eq.Wcomp[i][j].is_zero()) W[i] += tp * eq.Wcomp[i][j];
            tp = tp * theta;
        }
    }
    std::vector<TruncatedSeries> rem(eq.F);
    const std::size_t degF = eq.F.size() - 1;
    const std::size_t degW = W.size() - 1;
    std::vector<TruncatedSeries> quot(degF - degW + 1, TruncatedSeries::zero(eq.x_prec));
    for (std::size_t k = degF - degW + 1; k-- > 0;) {
        TruncatedSeries lead = rem[k + degW];
        quot[k] = lead;
        if (lead.is_zero()) continue;
        for (std::size_t i = 0; i <= degW; ++i) rem[k + i] -= lead * W[i];
    }
    for (std::size_t i = 0; i < degW; ++i)
        if (!rem[i].is_zero()) throw InternalError("own Weierstrass factor does not divide the orbit equation");
    return quot;
}

}  // namespace detail

// run a computation on the branch set, re-expanding at doubled precision
// whenever the consumer cannot certify its result at the current truncation
template <class Fn>
auto with_precision_retry(const Polynomial& f, PuiseuxOptions opts, Fn&& fn)
    -> decltype(fn(std::declval<const BranchSet&>())) {
    const std::uint64_t m = f.order();
    const std::uint64_t cap = std::max<std::uint64_t>(64 * m * m, 4096);
    for (;;) {
        BranchSet b = puiseux_branches(f, opts);
        try {
            return fn(b);
        } catch (const PrecisionError&) {
            if (b.precision >= cap) throw;
            opts.precision = b.precision * 2;
        }
    }
}

// delta of the whole germ: per-branch gap counts plus pairwise intersection
// multiplicities, everything exact
inline std::uint64_t delta_oracle(const BranchSet& B) {
    using Axis = PuiseuxBranch::Axis;
    std::map<std::size_t, const PuiseuxBranch*> leaf_rep;
    for (const auto& b : B.branches)
        if (b.conj_index == 0) leaf_rep[b.leaf_index] = &b;
    std::uint64_t total = 0;
    for (const auto& [idx, rep] : leaf_rep) total += rep->conj_count * delta_branch(*rep);

    // one orbit equation per non-axis leaf, built lazily at a small
    // x-precision and grown only when a contact order is not yet visible
    struct EqState {
        detail::LeafEquation eq;
        std::uint64_t x_prec = 0;
    };
    std::map<std::size_t, EqState> eqs;
    auto equation = [&](std::size_t idx, const PuiseuxBranch& rep) -> EqState& {
        auto it = eqs.find(idx);
        if (it == eqs.end()) {
            EqState st;
            st.x_prec = std::min<std::uint64_t>(8, rep.trunc / rep.e);
            st.eq = detail::leaf_equation(rep, st.x_prec);
            it = eqs.emplace(idx, std::move(st)).first;
        }
        return it->second;
    };
    auto grow = [&](std::size_t idx, const PuiseuxBranch& rep) -> bool {
        EqState& st = eqs.at(idx);
        std::uint64_t cap = rep.trunc / rep.e;
        if (st.x_prec >= cap) return false;
        st.x_prec = std::min(cap, st.x_prec * 2);
        st.eq = detail::leaf_equation(rep, st.x_prec);
        return true;
    };

    // cross-leaf pairs: sum over conjugates of Q of contacts with a fixed
    // embedding of P, times the P-orbit size
    for (auto it = leaf_rep.begin(); it != leaf_rep.end(); ++it) {
        for (auto jt = std::next(it); jt != leaf_rep.end(); ++jt) {
            const PuiseuxBranch &P = *it->second, &Q = *jt->second;
            std::uint64_t pair_total;
            if (Q.axis != Axis::none && P.axis != Axis::none) {
                pair_total = 1;  // the two coordinate axes meet transversally
            } else if (Q.axis != Axis::none) {
                auto o = Q.axis == Axis::x_zero ? P.x_order() : P.y_order();
                if (!o) throw InternalError("two equal axis components");
                pair_total = P.conj_count * *o;
            } else {
                for (;;) {
                    const EqState& st = equation(jt->first, Q);
                    try {
                        pair_total =
                            P.conj_count * detail::compose_equation_ord(st.eq.F, st.eq.x_prec, P);
                        break;
                    } catch (const PrecisionError&) {
                        if (!grow(jt->first, Q)) throw;
                    }
                }
            }
            total += pair_total;
        }
    }
    // within-leaf conjugate pairs: divide W out of F, compose with the leaf's
    // own representative, halve the ordered sum
    for (const auto& [idx, rep] : leaf_rep) {
        if (rep->conj_count < 2) continue;
        std::uint64_t phi;
        for (;;) {
            const EqState& st = equation(idx, *rep);
            try {
                std::vector<TruncatedSeries> G = detail::divide_out_own_factor(st.eq, *rep);
                phi = detail::compose_equation_ord(G, st.eq.x_prec, *rep);
                break;
            } catch (const PrecisionError&) {
                if (!grow(idx, *rep)) throw;
            }
        }
        std::uint64_t twice = rep->conj_count * phi;
        if (twice % 2 != 0) throw InternalError("within-leaf contact sum must be even");
        total += twice / 2;
    }
    return total;
}

}  // namespace curvesing
