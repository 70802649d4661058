#pragma once

#include "wd/numberfield.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace wd {

/* all roots of p lying in its coefficient field, with multiplicity, sorted by
   the canonical coordinate order; complete for deg(K) <= 2, Trager-style with
   a factorisation budget above that */
std::vector<std::pair<FieldElement, unsigned>> roots_in_field(const PolyK& p);

/* canonical square root in K: of the pair {r, -r} the lexicographically
   larger coordinate vector is returned */
std::optional<FieldElement> sqrt_in_field(const FieldElement& a);

std::optional<FieldElement> nth_root_in_field(const FieldElement& a, unsigned n);

}
