#pragma once

#include "wd/poly.hpp"
#include "wd/qpoly.hpp"
#include "wd/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wd {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/* K = Q[x]/(f) with f monic irreducible, elements in the power basis
   1, x, ..., x^{d-1}; an optional rectangle with rational corners pins one
   complex root of f as the meaning of the generator */
class NumberField {
public:
    static FieldPtr rationals();
    static FieldPtr create(std::vector<Rational> minpoly,
                           std::optional<Rect> embedding = std::nullopt);

    int degree() const { return static_cast<int>(f_.size()) - 1; }
    const std::vector<Rational>& minpoly() const { return f_; }
    PolyQ minpoly_poly() const { return PolyQ(f_); }
    const std::optional<Rect>& embedding() const { return rect_; }
    bool is_rationals() const { return degree() == 1; }

    bool same(const NumberField& o) const;

    /* reduce coordinates of length <= 2d-1 modulo f */
    std::vector<Rational> reduce(std::vector<Rational> c) const;

private:
    NumberField() = default;
    std::vector<Rational> f_;
    std::vector<std::vector<Rational>> xpow_;  /* x^d .. x^{2d-2} mod f */
    std::optional<Rect> rect_;
};

class FieldElement {
public:
    FieldElement(FieldPtr field, std::vector<Rational> coords);

    static FieldElement zero(const FieldPtr& K);
    static FieldElement one(const FieldPtr& K);
    static FieldElement from_rational(const FieldPtr& K, const Rational& r);
    static FieldElement generator(const FieldPtr& K);

    const FieldPtr& field() const { return K_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    const Rational& rational_part() const;  /* requires is_rational */

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator*(const Rational& s) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement pow(long e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /* deterministic total order for canonical sorting */
    int cmp(const FieldElement& o) const;

    std::string str() const;

private:
    FieldPtr K_;
    std::vector<Rational> c_;
};

FieldElement zero_like(const FieldElement& x);
FieldElement one_like(const FieldElement& x);
bool is_zero_elem(const FieldElement& x);
FieldElement inverse_elem(const FieldElement& x);

using PolyK = Poly<FieldElement>;

/* coerce an element of Q into any field, or lift an element into its own
   field; general extension towers are out of scope */
FieldElement lift_to(const FieldPtr& K, const FieldElement& x);

PolyK lift_poly(const FieldPtr& K, const PolyQ& p);

/* coefficients must all be rational multiples of 1 */
PolyQ rational_poly(const PolyK& p);

void require_same_field(const FieldPtr& a, const FieldPtr& b);

}
