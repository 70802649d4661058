#include "wd/qpoly.hpp"

#include "wd/error.hpp"

#include <algorithm>
#include <deque>

namespace wd {

namespace {

int sgn(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

std::vector<PolyQ> signed_remainder_chain(const PolyQ& p, const PolyQ& q) {
    std::vector<PolyQ> chain;
    chain.push_back(p);
    if (!q.is_zero()) chain.push_back(q);
    while (chain.size() >= 2 && !chain.back().is_zero()) {
        auto [quo, rem] = poly_divrem(chain[chain.size() - 2], chain.back());
        if (rem.is_zero()) break;
        chain.push_back(-rem);
    }
    return chain;
}

int variations(const std::vector<PolyQ>& chain, const Rational& x) {
    int v = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

/* sign variations at +/- infinity from leading terms */
int variations_inf(const std::vector<PolyQ>& chain, int dir) {
    int v = 0, prev = 0;
    for (const auto& p : chain) {
        if (p.is_zero()) continue;
        int s = sgn(p.lead());
        if (dir < 0 && p.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}

int cauchy_index(const PolyQ& p, const PolyQ& q, const Rational& a, const Rational& b) {
    if (p.is_zero()) return 0;
    auto chain = signed_remainder_chain(p, q);
    return variations(chain, a) - variations(chain, b);
}

int sturm_count(const PolyQ& p, const Rational& a, const Rational& b) {
    PolyQ sf = squarefree_part(p);
    if (sf.degree() <= 0) return 0;
    if (sf.eval(a) == 0 || sf.eval(b) == 0)
        throw DimensionMismatch("sturm_count endpoint is a root");
    return cauchy_index(sf, sf.derivative(), a, b);
}

int sturm_count_all(const PolyQ& p) {
    PolyQ sf = squarefree_part(p);
    if (sf.degree() <= 0) return 0;
    auto chain = signed_remainder_chain(sf, sf.derivative());
    return variations_inf(chain, -1) - variations_inf(chain, +1);
}

namespace {

/* integer roots of a monic squarefree integer-coefficient polynomial,
   located by Sturm bisection so no divisor enumeration is ever needed */
std::vector<Integer> monic_integer_roots(const PolyQ& q) {
    std::vector<Integer> roots;
    if (q.degree() <= 0) return roots;
    auto chain = signed_remainder_chain(q, q.derivative());
    auto count = [&](const Rational& a, const Rational& b) {
        return variations(chain, a) - variations(chain, b);
    };
    Rational bound(1);
    for (const auto& c : q.c) {
        Rational a = abs(c);
        if (a > bound) bound = a;
    }
    bound += 1;
    auto test = [&](const Integer& n) {
        if (q.eval(Rational(n)) == 0) roots.push_back(n);
    };
    Rational half(1, 2);
    std::deque<std::pair<Rational, Rational>> work;
    work.emplace_back(-bound - half, bound + half);
    while (!work.empty()) {
        auto [lo, hi] = work.front();
        work.pop_front();
        /* integers strictly inside (lo, hi) */
        Integer first, last;
        mpz_fdiv_q(first.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
        first += 1;
        mpz_cdiv_q(last.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
        last -= 1;
        if (first > last) continue;
        if (first == last) {
            test(first);
            continue;
        }
        if (count(lo, hi) == 0) continue;
        Rational mid = (lo + hi) / 2;
        if (is_integer(mid)) {
            test(mid.get_num());
            work.emplace_back(lo, mid - half);
            work.emplace_back(mid + half, hi);
        } else {
            work.emplace_back(lo, mid);
            work.emplace_back(mid, hi);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/* clear denominators, divide by integer content; sign of the lead preserved */
PolyQ primitive_integer(const PolyQ& p) {
    Integer lcm(1);
    for (const auto& c : p.c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Integer gcd(0);
    for (const auto& c : p.c) {
        Integer n = c.get_num() * (lcm / c.get_den());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), n.get_mpz_t());
    }
    if (gcd == 0) return p;
    std::vector<Rational> out;
    out.reserve(p.c.size());
    for (const auto& c : p.c) out.push_back(c * Rational(lcm) / Rational(gcd));
    return PolyQ(std::move(out));
}

}

std::vector<std::pair<Rational, unsigned>> rational_roots(const PolyQ& p) {
    std::vector<std::pair<Rational, unsigned>> out;
    if (p.degree() <= 0) return out;
    PolyQ sf = primitive_integer(squarefree_part(p));
    /* y = lead * t turns P into a monic integer polynomial in y */
    Rational lead = sf.lead();
    int e = sf.degree();
    std::vector<Rational> mc(static_cast<std::size_t>(e) + 1, Rational(0));
    for (int i = 0; i <= e; ++i)
        mc[static_cast<std::size_t>(i)] = sf.coeff(static_cast<std::size_t>(i)) * rat_pow(lead, e - 1 - i);
    PolyQ monic{std::move(mc)};
    for (const Integer& y : monic_integer_roots(monic)) {
        Rational root = Rational(y) / lead;
        PolyQ lin{std::vector<Rational>{-root, Rational(1)}};
        PolyQ rest = p;
        unsigned mult = 0;
        while (true) {
            auto [q, r] = poly_divrem(rest, lin);
            if (!r.is_zero()) break;
            rest = q;
            ++mult;
        }
        if (mult) out.emplace_back(root, mult);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<std::pair<long, unsigned>> integer_roots(const PolyQ& p) {
    std::vector<std::pair<long, unsigned>> out;
    for (const auto& [r, m] : rational_roots(p)) {
        if (!is_integer(r)) continue;
        if (!r.get_num().fits_slong_p())
            throw DegreeBudgetExceeded("integer root does not fit in long");
        out.emplace_back(r.get_num().get_si(), m);
    }
    return out;
}

namespace {

using BiPoly = Poly<PolyQ>;  /* outer x, inner y */

/* split f(x+iy) into real and imaginary bivariate parts */
std::pair<BiPoly, BiPoly> complex_split(const PolyQ& f) {
    PolyQ qz(Rational(0)), qone(Rational(1));
    BiPoly re = BiPoly::zero(qz), im = BiPoly::zero(qz);
    /* z = x + i y: re(z) = x, im(z) = y */
    BiPoly zx = BiPoly::t(qz);
    BiPoly zy(PolyQ(std::vector<Rational>{Rational(0), Rational(1)}));
    for (std::size_t i = f.c.size(); i-- > 0;) {
        /* (re + i im) * (x + iy) = (re*x - im*y) + i(re*y + im*x) */
        BiPoly nre = re * zx - im * zy;
        BiPoly nim = re * zy + im * zx;
        re = nre + BiPoly(PolyQ(f.c[i]));
        im = nim;
    }
    return {re, im};
}

PolyQ substitute_y(const BiPoly& p, const Rational& y) {
    std::vector<Rational> out;
    out.reserve(p.c.size());
    for (const auto& inner : p.c) out.push_back(inner.eval(y));
    return PolyQ(std::move(out));
}

PolyQ substitute_x(const BiPoly& p, const Rational& x) {
    PolyQ acc(Rational(0));
    for (std::size_t i = p.c.size(); i-- > 0;) acc = acc * PolyQ(x) + p.c[i];
    return acc;
}

}

int count_roots_in_rectangle(const PolyQ& f0, const Rect& r) {
    if (!(r.re_lo < r.re_hi) || !(r.im_lo < r.im_hi))
        throw InvalidField("degenerate rectangle");
    PolyQ f = squarefree_part(f0);
    if (f.degree() < 1) throw InvalidField("constant polynomial");
    auto [P, Q] = complex_split(f);
    /* counterclockwise circuit, each edge as (P(t), Q(t)) with t increasing */
    struct Edge {
        PolyQ p, q;
        Rational a, b;
        int dir;
    };
    std::vector<Edge> edges = {
        {substitute_y(P, r.im_lo), substitute_y(Q, r.im_lo), r.re_lo, r.re_hi, +1},
        {substitute_x(P, r.re_hi), substitute_x(Q, r.re_hi), r.im_lo, r.im_hi, +1},
        {substitute_y(P, r.im_hi), substitute_y(Q, r.im_hi), r.re_lo, r.re_hi, -1},
        {substitute_x(P, r.re_lo), substitute_x(Q, r.re_lo), r.im_lo, r.im_hi, -1},
    };
    for (const auto& e : edges) {
        /* a root of f on the closed edge is a common zero of p and q there */
        PolyQ g = poly_gcd(e.p, e.q);
        if (g.is_zero())
            throw InvalidField("rectangle boundary lies inside the zero set");
        if (g.degree() > 0) {
            if (g.eval(e.a) == 0 || g.eval(e.b) == 0)
                throw InvalidField("root of f on a rectangle corner");
            if (sturm_count(g, e.a, e.b) > 0)
                throw InvalidField("root of f on the rectangle boundary");
        }
        if (e.p.is_zero())
            throw InvalidField("curve degenerates along a rectangle edge");
        if (e.p.eval(e.a) == 0 || e.p.eval(e.b) == 0)
            throw InvalidField("index chain degenerates at a rectangle corner");
    }
    int total = 0;
    for (const auto& e : edges) total += e.dir * cauchy_index(e.p, e.q, e.a, e.b);
    if (total % 2 != 0)
        throw InvalidField("inconsistent boundary index");
    return std::abs(total / 2);
}

namespace {

constexpr std::size_t kDivisorCap = 4096;
constexpr std::size_t kTupleCap = 500000;

/* one monic factor of degree in [1, maxdeg] of monic f, or nullopt when
   certified absent (Kronecker interpolation through divisor tuples) */
std::optional<PolyQ> kronecker_factor(const PolyQ& f0, int maxdeg) {
    /* rational roots first: catches every degree-1 factor */
    {
        auto roots = rational_roots(f0);
        if (!roots.empty())
            return PolyQ(std::vector<Rational>{-roots.front().first, Rational(1)});
    }
    /* substitute t = y/c so the divisor enumeration sees integer values;
       monic factors correspond both ways by the content argument */
    Integer den(1);
    for (const auto& c : f0.c)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    PolyQ f = f0;
    if (den != 1) {
        int n = f0.degree();
        std::vector<Rational> fc;
        for (int i = 0; i <= n; ++i)
            fc.push_back(f0.coeff(static_cast<std::size_t>(i)) * rat_pow(Rational(den), n - i));
        f = PolyQ(std::move(fc));
    }
    for (int k = 2; k <= maxdeg; ++k) {
        std::vector<Rational> pts;
        std::vector<std::vector<Integer>> divs;
        long next = 0;
        while (static_cast<int>(pts.size()) < k + 1) {
            Rational x(next);
            next = next > 0 ? -next : -next + 1;
            Rational v = f.eval(x);
            auto dv = divisors(v.get_num(), kDivisorCap);
            if (!dv) throw DegreeBudgetExceeded("divisor enumeration for Kronecker");
            pts.push_back(x);
            divs.push_back(std::move(*dv));
        }
        std::size_t tuples = 1;
        for (const auto& dv : divs) {
            tuples *= dv.size() * 2;
            if (tuples > kTupleCap) throw DegreeBudgetExceeded("Kronecker tuple budget");
        }
        /* Lagrange basis through the points, shared by every tuple */
        std::vector<PolyQ> basis;
        std::vector<Rational> leadc;
        for (int i = 0; i <= k; ++i) {
            PolyQ term(Rational(1));
            Rational scale(1);
            for (int j = 0; j <= k; ++j) {
                if (j == i) continue;
                term = term * PolyQ(std::vector<Rational>{
                                -pts[static_cast<std::size_t>(j)], Rational(1)});
                scale *= pts[static_cast<std::size_t>(i)] - pts[static_cast<std::size_t>(j)];
            }
            basis.push_back(term * (1 / scale));
            leadc.push_back(1 / scale);
        }
        /* odometer over divisor choices with both signs everywhere; the
           non-monic mirror of a factor is skipped by the lead screen */
        std::vector<std::size_t> idx(static_cast<std::size_t>(k) + 1, 0);
        std::vector<Rational> vals(static_cast<std::size_t>(k) + 1);
        while (true) {
            for (int i = 0; i <= k; ++i) {
                std::size_t ii = static_cast<std::size_t>(i);
                std::size_t j = idx[ii];
                std::size_t half = divs[ii].size();
                Integer dvi = divs[ii][j % half];
                if (j >= half) dvi = -dvi;
                vals[ii] = Rational(dvi);
            }
            /* leading coefficient of the interpolant: 1 exactly when the
               candidate is monic of degree k */
            Rational lead(0);
            for (int i = 0; i <= k; ++i)
                lead += vals[static_cast<std::size_t>(i)] * leadc[static_cast<std::size_t>(i)];
            if (lead == 1) {
                PolyQ g(Rational(0));
                for (int i = 0; i <= k; ++i)
                    g = g + basis[static_cast<std::size_t>(i)] * vals[static_cast<std::size_t>(i)];
                bool integral = true;
                for (const auto& c : g.c)
                    if (!is_integer(c)) { integral = false; break; }
                if (integral) {
                    auto [quo, rem] = poly_divrem(f, g);
                    if (rem.is_zero()) {
                        if (den == 1) return g;
                        /* undo the t = y/c substitution */
                        std::vector<Rational> back;
                        for (int i = 0; i <= k; ++i)
                            back.push_back(g.coeff(static_cast<std::size_t>(i)) *
                                           rat_pow(Rational(den), i - k));
                        return PolyQ(std::move(back));
                    }
                }
            }
            int pos = 0;
            for (; pos <= k; ++pos) {
                std::size_t ii = static_cast<std::size_t>(pos);
                if (++idx[ii] < divs[ii].size() * 2) break;
                idx[ii] = 0;
            }
            if (pos > k) break;
        }
    }
    return std::nullopt;
}

}

bool irreducible_over_q(const PolyQ& f) {
    if (f.is_zero() || f.degree() < 1) return false;
    if (f.lead() != 1) throw InvalidField("irreducibility check expects monic input");
    int d = f.degree();
    if (d == 1) return true;
    if (squarefree_part(f).degree() != d) return false;
    return !kronecker_factor(f, d / 2).has_value();
}

std::pair<std::vector<PolyQ>, PolyQ> factor_bounded(const PolyQ& f, int maxdeg) {
    std::vector<PolyQ> found;
    PolyQ rest = f.monic();
    while (rest.degree() > 0) {
        int cap = std::min(maxdeg, rest.degree());
        /* a composite factor of degree <= cap would itself have a factor of
           degree <= cap, so greedy extraction with re-splitting is complete */
        auto g = kronecker_factor(rest, cap);
        if (!g) break;
        PolyQ h = *g;
        /* split h down to an irreducible piece */
        while (h.degree() > 1) {
            auto sub = kronecker_factor(h, h.degree() / 2);
            if (!sub) break;
            h = *sub;
        }
        found.push_back(h);
        rest = poly_exact_div(rest, h);
    }
    std::sort(found.begin(), found.end(), [](const PolyQ& a, const PolyQ& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (std::size_t i = a.c.size(); i-- > 0;)
            if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
        return false;
    });
    return {found, rest};
}

}
