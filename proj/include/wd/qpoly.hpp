#pragma once

#include "wd/poly.hpp"
#include "wd/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace wd {

/* roots strictly inside (a, b); endpoints must not be roots */
int sturm_count(const PolyQ& p, const Rational& a, const Rational& b);

int sturm_count_all(const PolyQ& p);

/* Cauchy index of q/p over (a, b) via the signed remainder chain */
int cauchy_index(const PolyQ& p, const PolyQ& q, const Rational& a, const Rational& b);

/* all rational roots with multiplicity; complete for any degree, no integer
   factorisation involved */
std::vector<std::pair<Rational, unsigned>> rational_roots(const PolyQ& p);

std::vector<std::pair<long, unsigned>> integer_roots(const PolyQ& p);

struct Rect {
    Rational re_lo, re_hi, im_lo, im_hi;
};

/* number of complex roots of f strictly inside the rectangle, counted without
   multiplicity (f is replaced by its squarefree part); throws InvalidField if
   the rectangle touches a root or degenerates on the boundary */
int count_roots_in_rectangle(const PolyQ& f, const Rect& r);

/* true if f (monic, degree >= 1) is irreducible over Q; certification may
   throw DegreeBudgetExceeded when divisor enumeration blows the budget */
bool irreducible_over_q(const PolyQ& f);

/* monic irreducible factors of monic f with degree <= maxdeg, plus the
   cofactor all of whose irreducible factors have degree > maxdeg */
std::pair<std::vector<PolyQ>, PolyQ> factor_bounded(const PolyQ& f, int maxdeg);

}
