#include "wd/roots.hpp"

#include "wd/error.hpp"
#include "wd/qpoly.hpp"

#include <algorithm>

namespace wd {

namespace {

using BiPoly = Poly<PolyQ>;  /* outer variable v, inner variable u */

BiPoly bi_zero() { return BiPoly(PolyQ(Rational(0))); }
BiPoly bi_const(const Rational& r) { return BiPoly(PolyQ(r)); }

/* element of K[u,v] written as re + xc * x for quadratic K */
struct Split {
    BiPoly re, xc;
};

/* roots of a squarefree polynomial over a quadratic field K = Q[x]/(x^2+f1*x+f0):
   write the root as u + v*x, split q(u+vx) into two rational equations,
   eliminate v with a resultant, then lift rational candidates and verify */
std::vector<FieldElement> quadratic_field_roots(const PolyK& q0) {
    const FieldPtr& K = q0.c[0].field();
    PolyK q = q0.monic();
    Rational f0 = K->minpoly()[0], f1 = K->minpoly()[1];

    BiPoly U(PolyQ(std::vector<Rational>{Rational(0), Rational(1)}));
    BiPoly V = BiPoly(std::vector<PolyQ>{PolyQ(Rational(0)), PolyQ(Rational(1))});

    Split acc{bi_zero(), bi_zero()};
    for (std::size_t i = q.c.size(); i-- > 0;) {
        /* acc = acc * (u + v x) + q_i, with x^2 = -f0 - f1 x */
        BiPoly re = acc.re * U - acc.xc * V * bi_const(f0);
        BiPoly xc = acc.re * V + acc.xc * U - acc.xc * V * bi_const(f1);
        const auto& ci = q.c[i].coords();
        acc.re = re + bi_const(ci[0]);
        acc.xc = xc + bi_const(ci[1]);
    }

    /* Sylvester resultant in v over Q[u] */
    auto vdeg = [](const BiPoly& p) { return p.degree(); };
    int m1 = vdeg(acc.re), m2 = vdeg(acc.xc);
    if (m1 < 0 || m2 < 0)
        throw InvalidField("degenerate elimination, monic input expected");
    std::vector<FieldElement> out;
    PolyQ R(Rational(0));
    if (m1 == 0 && m2 == 0) {
        /* no v-dependence: common rational roots of the two u-polynomials */
        R = poly_gcd(acc.re.c[0], acc.xc.c[0]);
    } else {
        std::size_t n = static_cast<std::size_t>(m1 + m2);
        PolyQ zero_q(Rational(0)), one_q(Rational(1));
        std::vector<std::vector<PolyQ>> syl(n, std::vector<PolyQ>(n, zero_q));
        for (int r = 0; r < m2; ++r)
            for (int k = 0; k <= m1; ++k)
                syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] =
                    acc.re.coeff(static_cast<std::size_t>(m1 - k));
        for (int r = 0; r < m1; ++r)
            for (int k = 0; k <= m2; ++k)
                syl[static_cast<std::size_t>(m2 + r)][static_cast<std::size_t>(r + k)] =
                    acc.xc.coeff(static_cast<std::size_t>(m2 - k));
        R = bareiss_det(std::move(syl), one_q);
        if (R.is_zero())
            throw InvalidField("vanishing resultant on squarefree input");
    }
    for (const auto& ur : rational_roots(R)) {
        const Rational& u0 = ur.first;
        /* common v-roots at u = u0 */
        std::vector<Rational> v_cands;
        PolyQ a_u(Rational(0)), b_u(Rational(0));
        {
            std::vector<Rational> ac, bc;
            for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max(m1, 0)); ++i)
                ac.push_back(acc.re.coeff(i).eval(u0));
            for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max(m2, 0)); ++i)
                bc.push_back(acc.xc.coeff(i).eval(u0));
            a_u = PolyQ(ac);
            b_u = PolyQ(bc);
        }
        PolyQ g = a_u.is_zero() ? b_u : (b_u.is_zero() ? a_u : poly_gcd(a_u, b_u));
        if (g.is_zero())
            throw InvalidField("positive-dimensional root locus");
        if (g.degree() == 0) continue;
        for (const auto& vr : rational_roots(g)) v_cands.push_back(vr.first);
        for (const auto& v0 : v_cands) {
            FieldElement cand(K, std::vector<Rational>{u0, v0});
            if (q.eval(cand).is_zero()) out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const FieldElement& a, const FieldElement& b) { return a.cmp(b) < 0; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const FieldElement& a, const FieldElement& b) { return a == b; }),
              out.end());
    return out;
}

/* norm of q down to Q[t] as Res_x(f(x), q(t) with coefficients in Q[x]) */
PolyQ field_norm(const PolyK& q) {
    const FieldPtr& K = q.c[0].field();
    int d = K->degree();
    const auto& f = K->minpoly();
    int dx = 0;
    for (const auto& c : q.c)
        for (int i = d - 1; i >= 1; --i)
            if (c.coords()[static_cast<std::size_t>(i)] != 0) { dx = std::max(dx, i); break; }
    if (dx == 0) {
        /* rational coefficients: norm is q^d */
        std::vector<Rational> rc;
        for (const auto& c : q.c) rc.push_back(c.coords()[0]);
        return poly_pow(PolyQ(rc), static_cast<unsigned>(d));
    }
    std::size_t n = static_cast<std::size_t>(d + dx);
    PolyQ zero_t(Rational(0)), one_t(Rational(1));
    std::vector<std::vector<PolyQ>> syl(n, std::vector<PolyQ>(n, zero_t));
    /* rows for f (degree d), constant in t */
    for (int r = 0; r < dx; ++r)
        for (int k = 0; k <= d; ++k)
            syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] =
                PolyQ(f[static_cast<std::size_t>(d - k)]);
    /* rows for q viewed in x with Q[t] coefficients */
    for (int r = 0; r < d; ++r)
        for (int k = 0; k <= dx; ++k) {
            std::vector<Rational> tc;
            for (const auto& c : q.c) tc.push_back(c.coords()[static_cast<std::size_t>(dx - k)]);
            syl[static_cast<std::size_t>(dx + r)][static_cast<std::size_t>(r + k)] = PolyQ(tc);
        }
    return bareiss_det(std::move(syl), one_t);
}

/* Trager-style root extraction for deg(K) >= 3 */
std::vector<FieldElement> trager_roots(const PolyK& q0) {
    const FieldPtr& K = q0.c[0].field();
    int d = K->degree();
    PolyK q = q0.monic();
    FieldElement x = FieldElement::generator(K);
    for (long s = 0; s <= 24; s = s > 0 ? -s : -s + 1) {
        FieldElement shift = x * Rational(-s);
        PolyK qs = q.shift(shift); /* q(t - s x) */
        PolyQ norm = field_norm(qs);
        if (squarefree_part(norm).degree() != norm.degree()) continue;
        auto factors = factor_bounded(norm, d).first;
        std::vector<FieldElement> out;
        for (const auto& m : factors) {
            PolyK mk = lift_poly(K, m);
            PolyK g = poly_gcd(qs, mk);
            if (g.degree() == 1) {
                FieldElement mu = -(g.c[0] / g.c[1]);
                FieldElement lambda = mu + shift;  /* qs(t) = q(t + shift) */
                if (q.eval(lambda).is_zero()) out.push_back(lambda);
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const FieldElement& a, const FieldElement& b) { return a.cmp(b) < 0; });
        return out;
    }
    throw DegreeBudgetExceeded("no squarefree shifted norm found");
}

std::vector<FieldElement> squarefree_roots(const PolyK& q) {
    const FieldPtr& K = q.c[0].field();
    std::vector<FieldElement> out;
    if (q.degree() < 1) return out;
    if (q.degree() == 1) {
        out.push_back(-(q.c[0] / q.c[1]));
        return out;
    }
    int d = K->degree();
    if (d == 1) {
        std::vector<Rational> rc;
        for (const auto& c : q.c) rc.push_back(c.rational_part());
        for (const auto& rm : rational_roots(PolyQ(rc)))
            out.push_back(FieldElement::from_rational(K, rm.first));
        return out;
    }
    if (d == 2) return quadratic_field_roots(q);
    return trager_roots(q);
}

}

std::vector<std::pair<FieldElement, unsigned>> roots_in_field(const PolyK& p) {
    if (p.is_zero()) throw ZeroScale("roots of the zero polynomial");
    std::vector<std::pair<FieldElement, unsigned>> out;
    for (const auto& [part, mult] : squarefree_decomposition(p))
        for (const auto& r : squarefree_roots(part)) out.emplace_back(r, mult);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first.cmp(b.first) < 0; });
    return out;
}

std::optional<FieldElement> sqrt_in_field(const FieldElement& a) {
    return nth_root_in_field(a, 2);
}

std::optional<FieldElement> nth_root_in_field(const FieldElement& a, unsigned n) {
    if (n == 0) return std::nullopt;
    const FieldPtr& K = a.field();
    if (a.is_rational() && K->is_rationals()) {
        auto r = rational_nth_root(a.rational_part(), n);
        if (!r) return std::nullopt;
        return FieldElement::from_rational(K, *r);
    }
    std::vector<FieldElement> c(static_cast<std::size_t>(n) + 1, FieldElement::zero(K));
    c[0] = -a;
    c[static_cast<std::size_t>(n)] = FieldElement::one(K);
    auto roots = roots_in_field(PolyK(std::move(c)));
    if (roots.empty()) return std::nullopt;
    return roots.back().first;  /* lexicographically largest */
}

}
