// Towers of simple algebraic extensions of Q. Elements are nested coefficient
// vectors, always demoted to the lowest level that can represent them, so a
// rational stays a rational no matter which tower it passes through.
//
// Factorization over a tower uses Trager's norm descent; towers of height
// two or more can be flattened to a primitive element for faster arithmetic
// and for conjugate enumeration.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "curvesing/errors.hpp"
#include "curvesing/qfactor.hpp"
#include "curvesing/rational.hpp"
#include "curvesing/univariate.hpp"

namespace curvesing {

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

class FieldElem {
public:
    FieldElem() : rat_(0) {}
    FieldElem(std::int64_t v) : rat_(v) {}
    FieldElem(Rational r) : rat_(std::move(r)) {}

    static FieldElem algebraic(TowerPtr tower, std::vector<FieldElem> coeffs);
    static FieldElem generator(const TowerPtr& tower);

    bool is_rational() const { return tower_ == nullptr; }
    const Rational& rational() const {
        if (!is_rational()) throw InternalError("element is not rational");
        return rat_;
    }
    const TowerPtr& tower() const { return tower_; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    int height() const;

    bool is_zero() const { return is_rational() && rat_.is_zero(); }
    bool is_one() const { return is_rational() && rat_.is_one(); }

    friend FieldElem operator-(const FieldElem& a) {
        if (a.is_rational()) return FieldElem(-a.rat_);
        FieldElem r = a;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }
    FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
    FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
    FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        if (a.is_rational() != b.is_rational()) return false;
        if (a.is_rational()) return a.rat_ == b.rat_;
        if (a.tower_ != b.tower_) return false;
        return a.c_ == b.c_;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    FieldElem inverse() const;

    FieldElem pow(std::uint64_t n) const {
        FieldElem r(1), b = *this;
        while (n) {
            if (n & 1) r *= b;
            if (n >>= 1) b *= b;
        }
        return r;
    }

    std::string to_string() const;

private:
    TowerPtr tower_;             // nullptr: rational
    Rational rat_;               // payload when rational
    std::vector<FieldElem> c_;   // coefficients over the parent level otherwise

    friend class Tower;
};

class Tower {
public:
    TowerPtr parent;                  // nullptr for an extension of Q
    std::vector<FieldElem> minpoly;   // monic, coefficients strictly below this level
    std::string gen_name;
    int height = 1;
    std::uint64_t degree = 0;         // degree of this extension step
    std::uint64_t abs_degree = 0;     // product over all levels

    static TowerPtr extend(TowerPtr base, const UPoly<FieldElem>& monic_minpoly, std::string name) {
        if (!monic_minpoly.is_monic() || monic_minpoly.degree() < 2)
            throw InternalError("tower extensions need a monic minimal polynomial of degree >= 2");
        auto t = std::make_shared<Tower>();
        t->parent = base;
        t->minpoly = monic_minpoly.coeffs();
        t->gen_name = std::move(name);
        t->height = base ? base->height + 1 : 1;
        t->degree = static_cast<std::uint64_t>(monic_minpoly.degree());
        t->abs_degree = t->degree * (base ? base->abs_degree : 1);
        return t;
    }
};

inline int FieldElem::height() const { return tower_ ? tower_->height : 0; }

namespace detail {

// is `anc` (possibly null = Q) an ancestor-or-self of tower `t`?
inline bool tower_has_ancestor(const TowerPtr& t, const TowerPtr& anc) {
    if (!anc) return true;
    for (TowerPtr cur = t; cur; cur = cur->parent)
        if (cur == anc) return true;
    return false;
}

inline void check_compatible(const FieldElem& low, const FieldElem& high) {
    if (!tower_has_ancestor(high.tower(), low.tower()))
        throw InternalError("field elements live in unrelated towers");
}

}  // namespace detail

inline FieldElem FieldElem::algebraic(TowerPtr tower, std::vector<FieldElem> coeffs) {
    if (!tower) {
        if (coeffs.empty()) return FieldElem(0);
        if (coeffs.size() != 1) throw InternalError("rational element with several coefficients");
        return coeffs[0];
    }
    const std::size_t d = static_cast<std::size_t>(tower->degree);
    // reduce modulo the (monic) minimal polynomial
    while (coeffs.size() > d) {
        FieldElem top = std::move(coeffs.back());
        coeffs.pop_back();
        if (top.is_zero()) continue;
        std::size_t off = coeffs.size() - d;
        for (std::size_t j = 0; j < d; ++j) {
            if (tower->minpoly[j].is_zero()) continue;
            coeffs[off + j] -= top * tower->minpoly[j];
        }
    }
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.empty()) return FieldElem(0);
    if (coeffs.size() == 1) return std::move(coeffs[0]);  // demote constants
    FieldElem r;
    r.tower_ = std::move(tower);
    r.rat_ = Rational(0);
    for (const auto& c : coeffs)
        if (c.height() >= r.tower_->height)
            throw InternalError("coefficient level too high for tower element");
    r.c_ = std::move(coeffs);
    return r;
}

inline FieldElem FieldElem::generator(const TowerPtr& tower) {
    if (!tower) throw InternalError("the rational level has no generator");
    return algebraic(tower, {FieldElem(0), FieldElem(1)});
}

inline FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    if (a.is_rational() && b.is_rational()) return FieldElem(a.rat_ + b.rat_);
    if (a.height() == b.height()) {
        if (a.tower_ != b.tower_) throw InternalError("field elements live in unrelated towers");
        std::vector<FieldElem> c(std::max(a.c_.size(), b.c_.size()), FieldElem(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] += a.c_[i];
            if (i < b.c_.size()) c[i] += b.c_[i];
        }
        return FieldElem::algebraic(a.tower_, std::move(c));
    }
    const FieldElem& low = a.height() < b.height() ? a : b;
    const FieldElem& high = a.height() < b.height() ? b : a;
    detail::check_compatible(low, high);
    std::vector<FieldElem> c = high.c_;
    c[0] += low;
    return FieldElem::algebraic(high.tower_, std::move(c));
}

inline FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    if (a.is_rational() && b.is_rational()) return FieldElem(a.rat_ * b.rat_);
    if (a.is_zero() || b.is_zero()) return FieldElem(0);
    if (a.height() == b.height()) {
        if (a.tower_ != b.tower_) throw InternalError("field elements live in unrelated towers");
        std::vector<FieldElem> c(a.c_.size() + b.c_.size() - 1, FieldElem(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                c[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return FieldElem::algebraic(a.tower_, std::move(c));
    }
    const FieldElem& low = a.height() < b.height() ? a : b;
    const FieldElem& high = a.height() < b.height() ? b : a;
    detail::check_compatible(low, high);
    std::vector<FieldElem> c = high.c_;
    for (auto& v : c) v = v * low;
    return FieldElem::algebraic(high.tower_, std::move(c));
}

inline FieldElem FieldElem::inverse() const {
    if (is_rational()) return FieldElem(rat_.inverse());
    // extended euclid in parent[z] against the minimal polynomial
    UPoly<FieldElem> r0{std::vector<FieldElem>(tower_->minpoly)};
    UPoly<FieldElem> r1{std::vector<FieldElem>(c_)};
    UPoly<FieldElem> s0, s1 = UPoly<FieldElem>::constant(FieldElem(1));
    while (!r1.is_zero() && r1.degree() > 0) {
        auto [q, r] = UPoly<FieldElem>::divrem(r0, r1);
        UPoly<FieldElem> s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.is_zero()) throw InternalError("minimal polynomial is not irreducible (gcd found)");
    // r1 is a nonzero constant: s1 * this = r1 (mod minpoly)
    FieldElem scale = r1.coeff(0).inverse();
    std::vector<FieldElem> coeffs = s1.coeffs();
    for (auto& v : coeffs) v = v * scale;
    return algebraic(tower_, std::move(coeffs));
}

inline std::string FieldElem::to_string() const {
    if (is_rational()) return rat_.to_string();
    std::string out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string part;
        std::string coeff = c_[i].to_string();
        bool needs_parens = !c_[i].is_rational() || coeff.find('/') != std::string::npos;
        if (i == 0) {
            part = needs_parens && !c_[i].is_rational() ? "(" + coeff + ")" : coeff;
        } else {
            std::string genpow = tower_->gen_name + (i > 1 ? "^" + std::to_string(i) : "");
            if (c_[i].is_one())
                part = genpow;
            else
                part = (needs_parens ? "(" + coeff + ")" : coeff) + "*" + genpow;
        }
        if (first) {
            out = part;
            first = false;
        } else {
            out += " + " + part;
        }
    }
    return out.empty() ? "0" : out;
}

// ---------- factorization over a tower (Trager) ----------

namespace detail {

// view a tower element as a polynomial in the generator of `K`
inline UPoly<FieldElem> poly_in_generator(const FieldElem& e, const TowerPtr& K) {
    if (e.height() == K->height) return UPoly<FieldElem>(std::vector<FieldElem>(e.coeffs()));
    return UPoly<FieldElem>::constant(e);
}

inline UPoly<Rational> to_rational_poly(const UPoly<FieldElem>& f) {
    std::vector<Rational> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!f.coeffs()[i].is_rational()) throw InternalError("expected rational coefficients");
        c[i] = f.coeffs()[i].rational();
    }
    return UPoly<Rational>(c);
}

inline UPoly<FieldElem> from_rational_poly(const UPoly<Rational>& f) {
    std::vector<FieldElem> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = FieldElem(f.coeffs()[i]);
    return UPoly<FieldElem>(c);
}

}  // namespace detail

// monic irreducible factors of a squarefree monic polynomial over the field
// at the top of tower K (K == nullptr means Q)
inline std::vector<UPoly<FieldElem>> factor_squarefree_over(const TowerPtr& K, const UPoly<FieldElem>& f) {
    if (f.degree() <= 0) return {};
    if (f.degree() == 1) return {f};
    if (!K) {
        std::vector<UPoly<FieldElem>> out;
        for (const auto& [g, mult] : factor_rational(detail::to_rational_poly(f))) {
            if (mult != 1) throw InternalError("squarefree input had a repeated factor");
            out.push_back(detail::from_rational_poly(g));
        }
        return out;
    }
    const FieldElem alpha = FieldElem::generator(K);
    const std::uint64_t d = K->degree;
    UPoly<FieldElem> minpoly_w{std::vector<FieldElem>(K->minpoly)};

    const std::size_t norm_deg = static_cast<std::size_t>(f.degree()) * d;
    for (std::int64_t step = 0;; ++step) {
        std::int64_t s = (step % 2 == 0) ? step / 2 : -(step / 2 + 1);
        UPoly<FieldElem> fs = f.shift(FieldElem(-s) * alpha);
        // evaluate z |-> c_j, take Res_w against the minimal polynomial,
        // and interpolate the norm N(z) of degree norm_deg
        std::vector<FieldElem> nodes(norm_deg + 1), values(norm_deg + 1);
        for (std::size_t j = 0; j <= norm_deg; ++j) {
            FieldElem c(static_cast<std::int64_t>(j));
            nodes[j] = c;
            // P_c(w) = sum_i coeff_i(w) * c^i
            UPoly<FieldElem> pcw;
            FieldElem cpow(1);
            for (std::size_t i = 0; i < fs.coeffs().size(); ++i) {
                pcw += cpow * detail::poly_in_generator(fs.coeffs()[i], K);
                cpow = cpow * c;
            }
            values[j] = resultant(minpoly_w, pcw);
        }
        // Lagrange interpolation at 0..norm_deg
        UPoly<FieldElem> N;
        UPoly<FieldElem> master = UPoly<FieldElem>::constant(FieldElem(1));
        for (std::size_t j = 0; j <= norm_deg; ++j)
            master *= UPoly<FieldElem>(std::vector<FieldElem>{-nodes[j], FieldElem(1)});
        for (std::size_t j = 0; j <= norm_deg; ++j) {
            if (values[j].is_zero()) continue;
            auto [lj, rem] = UPoly<FieldElem>::divrem(
                master, UPoly<FieldElem>(std::vector<FieldElem>{-nodes[j], FieldElem(1)}));
            if (!rem.is_zero()) throw InternalError("interpolation node mismatch");
            FieldElem denom = lj.eval(nodes[j]);
            N += (values[j] / denom) * lj;
        }
        if (N.degree() != static_cast<std::ptrdiff_t>(norm_deg)) continue;  // degenerate shift
        if (UPoly<FieldElem>::gcd(N, N.derivative()).degree() != 0) continue;  // norm not squarefree
        // recurse one level down
        std::vector<UPoly<FieldElem>> subs = factor_squarefree_over(K->parent, N.monic());
        std::vector<UPoly<FieldElem>> out;
        std::ptrdiff_t total = 0;
        for (const auto& n : subs) {
            UPoly<FieldElem> shifted = n.shift(FieldElem(s) * alpha);
            UPoly<FieldElem> g = UPoly<FieldElem>::gcd(f, shifted);
            if (g.degree() >= 1) {
                total += g.degree();
                out.push_back(g.monic());
            }
        }
        if (total != f.degree()) throw InternalError("norm factors do not recombine");
        return out;
    }
}

// factorization with multiplicities over the field at the top of K
inline std::vector<std::pair<UPoly<FieldElem>, std::size_t>> factor_over(const TowerPtr& K,
                                                                         const UPoly<FieldElem>& input) {
    if (input.is_zero()) throw DomainError("cannot factor the zero polynomial");
    UPoly<FieldElem> f = input.monic();
    std::vector<std::pair<UPoly<FieldElem>, std::size_t>> out;
    if (f.degree() == 0) return out;
    UPoly<FieldElem> sqfree = f / UPoly<FieldElem>::gcd(f, f.derivative());
    for (auto& g : factor_squarefree_over(K, sqfree)) {
        std::size_t mult = 0;
        UPoly<FieldElem> cur = f;
        while (true) {
            auto [q, r] = UPoly<FieldElem>::divrem(cur, g);
            if (!r.is_zero()) break;
            cur = std::move(q);
            ++mult;
        }
        if (mult == 0) throw InternalError("factor does not divide input");
        out.emplace_back(std::move(g), mult);
    }
    return out;
}

// ---------- flattening to a primitive element ----------

// A tower rewritten as a height <= 1 field together with the images of all
// original generators (bottom level first).
struct FlatField {
    TowerPtr field;                      // nullptr (Q) or a height-1 tower
    std::vector<FieldElem> gen_images;   // one per original level
};

// evaluate the nested representation of `e`, replacing the level-i generator
// with images[i-1]
inline FieldElem rebase_elem(const FieldElem& e, const std::vector<FieldElem>& images) {
    if (e.is_rational()) return e;
    const int lvl = e.height();
    const FieldElem& g = images.at(static_cast<std::size_t>(lvl - 1));
    FieldElem acc(0);
    for (std::size_t i = e.coeffs().size(); i-- > 0;) acc = acc * g + rebase_elem(e.coeffs()[i], images);
    return acc;
}

namespace detail {

// coordinates of a height <= 2 element in the basis beta^i alpha^j
inline std::vector<Rational> coords_h2(const FieldElem& e, std::uint64_t dbeta, std::uint64_t dalpha) {
    std::vector<Rational> out(dbeta * dalpha, Rational(0));
    auto put_h1 = [&](const FieldElem& v, std::size_t j) {
        if (v.is_rational()) {
            out[j * dbeta] = v.rational();
            return;
        }
        for (std::size_t i = 0; i < v.coeffs().size(); ++i) {
            if (!v.coeffs()[i].is_rational()) throw InternalError("unexpected nesting depth");
            out[j * dbeta + i] = v.coeffs()[i].rational();
        }
    };
    if (e.height() <= 1) {
        put_h1(e, 0);
    } else {
        for (std::size_t j = 0; j < e.coeffs().size(); ++j) put_h1(e.coeffs()[j], j);
    }
    return out;
}

}  // namespace detail

inline FlatField flatten_tower(const TowerPtr& K) {
    if (!K) return FlatField{nullptr, {}};
    if (K->height == 1) return FlatField{K, {FieldElem::generator(K)}};
    FlatField base = flatten_tower(K->parent);
    // rebase the top minimal polynomial over the flattened parent
    std::vector<FieldElem> mp(K->minpoly.size());
    for (std::size_t i = 0; i < mp.size(); ++i) mp[i] = rebase_elem(K->minpoly[i], base.gen_images);
    UPoly<FieldElem> m_top(mp);
    if (!base.field) {
        // parent collapsed to Q: the top level alone is the flat field
        TowerPtr flat = Tower::extend(nullptr, m_top, K->gen_name);
        std::vector<FieldElem> images;
        for (const auto& img : base.gen_images) images.push_back(img);  // rationals
        images.push_back(FieldElem::generator(flat));
        return FlatField{flat, images};
    }
    const TowerPtr& Kp = base.field;
    const std::uint64_t dbeta = Kp->degree;
    const std::uint64_t dalpha = static_cast<std::uint64_t>(m_top.degree());
    const std::uint64_t D = dbeta * dalpha;
    UPoly<FieldElem> Mp{std::vector<FieldElem>(Kp->minpoly)};

    TowerPtr two = Tower::extend(Kp, m_top, "t#");
    FieldElem alpha2 = FieldElem::generator(two);
    FieldElem beta2 = FieldElem::generator(Kp);

    for (std::int64_t step = 1;; ++step) {
        std::int64_t c = (step % 2) ? (step + 1) / 2 : -step / 2;
        // norm of m_top(z - c*w) against Mp(w): evaluation-interpolation
        const std::size_t nd = static_cast<std::size_t>(D);
        std::vector<FieldElem> values(nd + 1);
        bool ok = true;
        for (std::size_t j = 0; j <= nd; ++j) {
            FieldElem cj(static_cast<std::int64_t>(j));
            // m_top(cj - c*w) as a polynomial in w
            UPoly<FieldElem> pw;
            // powers of (cj - c*w)
            UPoly<FieldElem> lin(std::vector<FieldElem>{cj, FieldElem(-c)});
            UPoly<FieldElem> cur = UPoly<FieldElem>::constant(FieldElem(1));
            for (std::size_t i = 0; i < m_top.coeffs().size(); ++i) {
                pw += detail::poly_in_generator(m_top.coeffs()[i], Kp) * cur;
                cur *= lin;
            }
            values[j] = resultant(Mp, pw);
        }
        UPoly<FieldElem> N;
        {
            UPoly<FieldElem> master = UPoly<FieldElem>::constant(FieldElem(1));
            for (std::size_t j = 0; j <= nd; ++j)
                master *= UPoly<FieldElem>(
                    std::vector<FieldElem>{FieldElem(-static_cast<std::int64_t>(j)), FieldElem(1)});
            for (std::size_t j = 0; j <= nd; ++j) {
                if (values[j].is_zero()) continue;
                auto [lj, rem] = UPoly<FieldElem>::divrem(
                    master, UPoly<FieldElem>(
                                std::vector<FieldElem>{FieldElem(-static_cast<std::int64_t>(j)), FieldElem(1)}));
                (void)rem;
                FieldElem denom = lj.eval(FieldElem(static_cast<std::int64_t>(j)));
                N += (values[j] / denom) * lj;
            }
        }
        if (N.degree() != static_cast<std::ptrdiff_t>(D)) ok = false;
        if (ok && UPoly<FieldElem>::gcd(N, N.derivative()).degree() != 0) ok = false;
        if (!ok) continue;

        TowerPtr flat = Tower::extend(nullptr, N.monic(), K->gen_name + "#");
        // theta = alpha + c*beta; solve for alpha and beta in Q[theta]
        FieldElem theta = alpha2 + FieldElem(c) * beta2;
        std::vector<std::vector<Rational>> cols;
        FieldElem tp(1);
        for (std::uint64_t k = 0; k < D; ++k) {
            cols.push_back(detail::coords_h2(tp, dbeta, dalpha));
            tp = tp * theta;
        }
        // gaussian solve for beta2 and alpha2 coordinates
        std::vector<std::vector<Rational>> aug(D, std::vector<Rational>(D + 2, Rational(0)));
        auto bcol = detail::coords_h2(beta2, dbeta, dalpha);
        auto acol = detail::coords_h2(alpha2, dbeta, dalpha);
        for (std::uint64_t r = 0; r < D; ++r) {
            for (std::uint64_t k = 0; k < D; ++k) aug[r][k] = cols[k][r];
            aug[r][D] = bcol[r];
            aug[r][D + 1] = acol[r];
        }
        // forward elimination with partial pivot by first nonzero
        std::vector<std::size_t> where(D, static_cast<std::size_t>(-1));
        std::size_t row = 0;
        for (std::size_t col = 0; col < D && row < D; ++col) {
            std::size_t sel = static_cast<std::size_t>(-1);
            for (std::size_t r = row; r < D; ++r)
                if (!aug[r][col].is_zero()) {
                    sel = r;
                    break;
                }
            if (sel == static_cast<std::size_t>(-1)) continue;
            std::swap(aug[row], aug[sel]);
            Rational inv = aug[row][col].inverse();
            for (std::size_t k = col; k < D + 2; ++k) aug[row][k] *= inv;
            for (std::size_t r = 0; r < D; ++r) {
                if (r == row || aug[r][col].is_zero()) continue;
                Rational factor = aug[r][col];
                for (std::size_t k = col; k < D + 2; ++k) aug[r][k] -= factor * aug[row][k];
            }
            where[col] = row;
            ++row;
        }
        if (row != D) throw InternalError("theta powers do not span the field");
        std::vector<FieldElem> beta_c(D), alpha_c(D);
        for (std::size_t col = 0; col < D; ++col) {
            beta_c[col] = FieldElem(aug[where[col]][D]);
            alpha_c[col] = FieldElem(aug[where[col]][D + 1]);
        }
        FieldElem beta_img = FieldElem::algebraic(flat, std::move(beta_c));
        FieldElem alpha_img = FieldElem::algebraic(flat, std::move(alpha_c));
        // original generator images: parent images were polynomials in beta
        std::vector<FieldElem> images;
        for (const auto& img : base.gen_images)
            images.push_back(rebase_elem(img, std::vector<FieldElem>{beta_img}));
        images.push_back(alpha_img);
        return FlatField{flat, images};
    }
}

// cyclotomic polynomial Phi_n over Q
inline UPoly<Rational> cyclotomic(std::uint64_t n) {
    std::vector<Rational> c(n + 1, Rational(0));
    c[0] = Rational(-1);
    c[n] = Rational(1);
    UPoly<Rational> f(c);  // z^n - 1
    for (std::uint64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        f = f / cyclotomic(d);
    }
    return f;
}

// a root of `poly` over the field K: either found inside K (degree-1 factor)
// or by extending the tower with an irreducible factor.
struct RootAdjunction {
    TowerPtr field;    // K itself or an extension of it
    FieldElem root;
    std::uint64_t factor_degree = 1;
};

inline RootAdjunction adjoin_root(const TowerPtr& K, const UPoly<FieldElem>& poly, const std::string& name) {
    UPoly<FieldElem> f = poly.monic();
    UPoly<FieldElem> sq = f / UPoly<FieldElem>::gcd(f, f.derivative());
    auto factors = factor_squarefree_over(K, sq);
    if (factors.empty()) throw InternalError("no factor found for root adjunction");
    // prefer a root inside K
    for (const auto& g : factors)
        if (g.degree() == 1) return RootAdjunction{K, -g.coeff(0), 1};
    const UPoly<FieldElem>& g = factors.front();
    TowerPtr ext = Tower::extend(K, g, name);
    return RootAdjunction{ext, FieldElem::generator(ext), static_cast<std::uint64_t>(g.degree())};
}

}  // namespace curvesing
