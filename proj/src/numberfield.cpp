#include "wd/numberfield.hpp"

#include "wd/error.hpp"

#include <sstream>

namespace wd {

FieldPtr NumberField::rationals() {
    static FieldPtr q = [] {
        auto K = std::shared_ptr<NumberField>(new NumberField());
        K->f_ = {Rational(0), Rational(1)};  /* x */
        return FieldPtr(K);
    }();
    return q;
}

FieldPtr NumberField::create(std::vector<Rational> minpoly, std::optional<Rect> embedding) {
    if (minpoly.size() < 2) throw InvalidField("minimal polynomial must have degree >= 1");
    PolyQ f(minpoly);
    if (f.degree() + 1 != static_cast<int>(minpoly.size()))
        throw InvalidField("minimal polynomial has zero leading coefficient");
    if (f.lead() != 1) throw InvalidField("minimal polynomial must be monic");
    if (!irreducible_over_q(f)) throw InvalidField("minimal polynomial is reducible over Q");
    if (embedding) {
        int inside = count_roots_in_rectangle(f, *embedding);
        if (inside != 1)
            throw InvalidField("embedding rectangle contains " + std::to_string(inside) +
                               " roots, expected exactly 1");
    }
    auto K = std::shared_ptr<NumberField>(new NumberField());
    K->f_ = std::move(minpoly);
    K->rect_ = std::move(embedding);
    int d = K->degree();
    if (d > 1) {
        /* x^d = -(f - x^d), then x^{d+k} by shifting and reducing */
        std::vector<Rational> xd(static_cast<std::size_t>(d), Rational(0));
        for (int i = 0; i < d; ++i) xd[static_cast<std::size_t>(i)] = -K->f_[static_cast<std::size_t>(i)];
        K->xpow_.push_back(xd);
        for (int k = 1; k <= d - 2; ++k) {
            const auto& prev = K->xpow_.back();
            std::vector<Rational> next(static_cast<std::size_t>(d), Rational(0));
            for (int i = 0; i < d - 1; ++i) next[static_cast<std::size_t>(i + 1)] = prev[static_cast<std::size_t>(i)];
            Rational top = prev[static_cast<std::size_t>(d - 1)];
            if (top != 0)
                for (int i = 0; i < d; ++i)
                    next[static_cast<std::size_t>(i)] += top * K->xpow_[0][static_cast<std::size_t>(i)];
            K->xpow_.push_back(std::move(next));
        }
    }
    return K;
}

bool NumberField::same(const NumberField& o) const {
    return this == &o || f_ == o.f_;
}

std::vector<Rational> NumberField::reduce(std::vector<Rational> c) const {
    std::size_t d = static_cast<std::size_t>(degree());
    if (c.size() < d) c.resize(d, Rational(0));
    if (c.size() > 2 * d - 1) throw DimensionMismatch("reduce input too long");
    std::vector<Rational> out(c.begin(), c.begin() + static_cast<long>(d));
    for (std::size_t k = d; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        const auto& rep = xpow_[k - d];
        for (std::size_t i = 0; i < d; ++i) out[i] += c[k] * rep[i];
    }
    return out;
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!a || !b) throw DimensionMismatch("null field");
    if (!a->same(*b)) throw DimensionMismatch("elements of different fields");
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords) : K_(std::move(field)) {
    if (!K_) throw DimensionMismatch("null field");
    std::size_t d = static_cast<std::size_t>(K_->degree());
    if (coords.size() > 2 * d - 1 && d > 1)
        throw DimensionMismatch("coordinate vector too long");
    if (coords.size() != d)
        coords = K_->reduce(std::move(coords));
    c_ = std::move(coords);
}

FieldElement FieldElement::zero(const FieldPtr& K) {
    return FieldElement(K, std::vector<Rational>(static_cast<std::size_t>(K->degree()), Rational(0)));
}

FieldElement FieldElement::one(const FieldPtr& K) { return from_rational(K, Rational(1)); }

FieldElement FieldElement::from_rational(const FieldPtr& K, const Rational& r) {
    std::vector<Rational> c(static_cast<std::size_t>(K->degree()), Rational(0));
    c[0] = r;
    return FieldElement(K, std::move(c));
}

FieldElement FieldElement::generator(const FieldPtr& K) {
    if (K->degree() == 1) {
        /* generator of Q[x]/(x - a) is the rational a */
        return from_rational(K, -K->minpoly()[0]);
    }
    std::vector<Rational> c(static_cast<std::size_t>(K->degree()), Rational(0));
    c[1] = Rational(1);
    return FieldElement(K, std::move(c));
}

bool FieldElement::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool FieldElement::is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

const Rational& FieldElement::rational_part() const {
    if (!is_rational()) throw NonSplitSpectrum("element is not rational");
    return c_[0];
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(K_, o.K_);
    std::vector<Rational> c(c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return FieldElement(K_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(K_, o.K_);
    std::vector<Rational> c(c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
    return FieldElement(K_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    std::vector<Rational> c(c_);
    for (auto& x : c) x = -x;
    return FieldElement(K_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(K_, o.K_);
    std::size_t d = c_.size();
    if (d == 1) return FieldElement(K_, {c_[0] * o.c_[0]});
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    return FieldElement(K_, K_->reduce(std::move(prod)));
}

FieldElement FieldElement::operator*(const Rational& s) const {
    std::vector<Rational> c(c_);
    for (auto& x : c) x *= s;
    return FieldElement(K_, std::move(c));
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw ZeroScale("inverse of zero field element");
    if (K_->degree() == 1) return FieldElement(K_, {1 / c_[0]});
    /* extended euclid in Q[x]: u*self + v*f = 1 */
    PolyQ a(c_);
    PolyQ f = K_->minpoly_poly();
    PolyQ r0 = f, r1 = a;
    PolyQ s0(Rational(0)), s1(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = poly_divrem(r0, r1);
        PolyQ s2 = s0 - q * s1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
    }
    /* r0 = gcd = nonzero constant since f is irreducible and a != 0 mod f */
    if (r0.degree() != 0) throw InvalidField("non-invertible element, field broken");
    PolyQ inv = s0 * (1 / r0.c[0]);
    std::vector<Rational> c = inv.c;
    return FieldElement(K_, K_->reduce(std::move(c)));
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement acc = one(K_), b = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * b;
        b = b * b;
        k >>= 1;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    require_same_field(K_, o.K_);
    return c_ == o.c_;
}

int FieldElement::cmp(const FieldElement& o) const {
    require_same_field(K_, o.K_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] < o.c_[i]) return -1;
        if (c_[i] > o.c_[i]) return 1;
    }
    return 0;
}

std::string FieldElement::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << rat_to_string(c_[i]);
    }
    os << "]";
    return os.str();
}

FieldElement zero_like(const FieldElement& x) { return FieldElement::zero(x.field()); }
FieldElement one_like(const FieldElement& x) { return FieldElement::one(x.field()); }
bool is_zero_elem(const FieldElement& x) { return x.is_zero(); }
FieldElement inverse_elem(const FieldElement& x) { return x.inverse(); }

FieldElement lift_to(const FieldPtr& K, const FieldElement& x) {
    if (K->same(*x.field())) return FieldElement(K, x.coords());
    if (x.is_rational()) return FieldElement::from_rational(K, x.rational_part());
    throw NonSplitSpectrum("cannot embed " + x.str() + " into the requested field");
}

PolyK lift_poly(const FieldPtr& K, const PolyQ& p) {
    std::vector<FieldElement> c;
    c.reserve(p.c.size());
    for (const auto& r : p.c) c.push_back(FieldElement::from_rational(K, r));
    return PolyK(std::move(c));
}

PolyQ rational_poly(const PolyK& p) {
    std::vector<Rational> c;
    c.reserve(p.c.size());
    for (const auto& e : p.c) c.push_back(e.rational_part());
    return PolyQ(std::move(c));
}

}
