#pragma once

#include "wd/error.hpp"
#include "wd/rational.hpp"

#include <vector>

namespace wd {

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_zero_elem(const Rational& r) { return r == 0; }
inline Rational inverse_elem(const Rational& r) {
    if (r == 0) throw ZeroScale("inverse of 0");
    return 1 / r;
}

/* dense univariate polynomial, ascending coefficients; the vector is never
   empty so c[0] doubles as an exemplar of the coefficient field */
template <class F>
struct Poly {
    std::vector<F> c;

    explicit Poly(F constant) : c{std::move(constant)} {}
    explicit Poly(std::vector<F> coeffs) : c(std::move(coeffs)) {
        if (c.empty()) throw DimensionMismatch("empty polynomial");
        normalize();
    }

    void normalize() {
        while (c.size() > 1 && is_zero_elem(c.back())) c.pop_back();
    }

    bool is_zero() const { return c.size() == 1 && is_zero_elem(c[0]); }
    int degree() const { return is_zero() ? -1 : static_cast<int>(c.size()) - 1; }
    const F& lead() const { return c.back(); }
    F exemplar_zero() const { return zero_like(c[0]); }
    F exemplar_one() const { return one_like(c[0]); }

    static Poly zero(const F& like) { return Poly(zero_like(like)); }
    static Poly one(const F& like) { return Poly(one_like(like)); }
    /* the monomial t */
    static Poly t(const F& like) {
        return Poly(std::vector<F>{zero_like(like), one_like(like)});
    }

    const F coeff(std::size_t i) const {
        return i < c.size() ? c[i] : exemplar_zero();
    }

    bool operator==(const Poly& o) const {
        if (c.size() != o.c.size()) return false;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!(c[i] == o.c[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const {
        std::vector<F> r;
        std::size_t n = std::max(c.size(), o.c.size());
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.push_back(coeff(i) + o.coeff(i));
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const {
        std::vector<F> r;
        std::size_t n = std::max(c.size(), o.c.size());
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.push_back(coeff(i) - o.coeff(i));
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<F> r;
        r.reserve(c.size());
        for (const F& x : c) r.push_back(exemplar_zero() - x);
        return Poly(std::move(r));
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return zero(c[0]);
        std::vector<F> r(c.size() + o.c.size() - 1, exemplar_zero());
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] = r[i + j] + c[i] * o.c[j];
        return Poly(std::move(r));
    }
    Poly operator*(const F& s) const {
        std::vector<F> r;
        r.reserve(c.size());
        for (const F& x : c) r.push_back(x * s);
        return Poly(std::move(r));
    }

    Poly derivative() const {
        if (c.size() == 1) return zero(c[0]);
        std::vector<F> r;
        r.reserve(c.size() - 1);
        F k = exemplar_one();
        for (std::size_t i = 1; i < c.size(); ++i) {
            r.push_back(c[i] * k);
            k = k + exemplar_one();
        }
        return Poly(std::move(r));
    }

    F eval(const F& x) const {
        F acc = exemplar_zero();
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    /* evaluate into any ring with F-scalar action, e.g. a matrix */
    template <class R>
    R eval_in(const R& x, const R& identity) const {
        R acc = identity * coeff(c.size() - 1);
        for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * x + identity * c[i];
        return acc;
    }

    Poly monic() const {
        if (is_zero()) throw ZeroScale("monic of zero polynomial");
        return *this * inverse_elem(lead());
    }

    /* substitute t -> t + a */
    Poly shift(const F& a) const {
        Poly lin(std::vector<F>{a, exemplar_one()});
        Poly acc = zero(c[0]);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * lin + Poly(c[i]);
        return acc;
    }

    Poly compose(const Poly& inner) const {
        Poly acc = zero(c[0]);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * inner + Poly(c[i]);
        return acc;
    }
};

template <class F>
Poly<F> zero_like(const Poly<F>& p) { return Poly<F>::zero(p.c[0]); }
template <class F>
Poly<F> one_like(const Poly<F>& p) { return Poly<F>::one(p.c[0]); }
template <class F>
bool is_zero_elem(const Poly<F>& p) { return p.is_zero(); }

template <class F>
std::pair<Poly<F>, Poly<F>> poly_divrem(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw ZeroScale("polynomial division by zero");
    Poly<F> q = Poly<F>::zero(a.c[0]), r = a;
    F lead_inv = inverse_elem(b.lead());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        F coef = r.lead() * lead_inv;
        std::vector<F> mono(shift + 1, a.exemplar_zero());
        mono[shift] = coef;
        Poly<F> m{std::move(mono)};
        q = q + m;
        r = r - m * b;
    }
    return {q, r};
}

template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        auto [q, r] = poly_divrem(a, b);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.monic();
}

/* exact division; throws if the remainder is nonzero */
template <class F>
Poly<F> poly_exact_div(const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) throw DimensionMismatch("inexact polynomial division");
    return q;
}

template <class F>
Poly<F> poly_pow(const Poly<F>& p, unsigned e) {
    Poly<F> acc = Poly<F>::one(p.c[0]), b = p;
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

/* squarefree part p / gcd(p, p') */
template <class F>
Poly<F> squarefree_part(const Poly<F>& p) {
    if (p.degree() <= 0) return Poly<F>::one(p.c[0]);
    Poly<F> g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p.monic();
    return poly_exact_div(p, g).monic();
}

/* (factor, multiplicity) with factor squarefree: Yun's algorithm */
template <class F>
std::vector<std::pair<Poly<F>, unsigned>> squarefree_decomposition(const Poly<F>& p) {
    std::vector<std::pair<Poly<F>, unsigned>> out;
    if (p.degree() <= 0) return out;
    Poly<F> a = p.monic();
    Poly<F> g = poly_gcd(a, a.derivative());
    if (g.degree() == 0) {
        out.emplace_back(a, 1);
        return out;
    }
    Poly<F> w = poly_exact_div(a, g);
    Poly<F> y = poly_exact_div(a.derivative() * inverse_elem(a.lead()), g);
    unsigned i = 1;
    while (w.degree() > 0) {
        Poly<F> z = y - w.derivative();
        Poly<F> f = poly_gcd(w, z);
        if (f.degree() > 0) out.emplace_back(f, i);
        w = poly_exact_div(w, f);
        y = poly_exact_div(z, f);
        ++i;
    }
    return out;
}

using PolyQ = Poly<Rational>;

template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) { return poly_exact_div(a, b); }
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

/* fraction-free determinant over an integral domain with exact division */
template <class D>
D bareiss_det(std::vector<std::vector<D>> m, const D& one) {
    std::size_t n = m.size();
    if (n == 0) throw DimensionMismatch("empty determinant");
    D prev = one;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && is_zero_elem(m[piv][k])) ++piv;
        if (piv == n) return one - one;  /* zero of D */
        if (piv != k) {
            std::swap(m[piv], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = one - one;
        }
        prev = m[k][k];
    }
    D det = m[n - 1][n - 1];
    if (negate) det = (one - one) - det;
    return det;
}

}
