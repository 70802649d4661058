#pragma once

#include "wd/conjugacy.hpp"
#include "wd/verdict.hpp"
#include "wd/wdpair.hpp"

namespace wd {

/* two-generator data of a tamely ramified representation: the image of a
   Frobenius lift and the image of the inertia generator */
struct TamePresentation {
    GroupSpec group;
    Matrix sigma;
    Matrix gamma;
    Rational q;
};

struct PresentationReport {
    bool sizes_ok = false;
    bool q_ok = false;
    bool sigma_in_group = false;
    bool gamma_in_group = false;
    bool gamma_unipotent = false;
    bool relation_ok = false;

    bool ok() const {
        return sizes_ok && q_ok && sigma_in_group && gamma_in_group && gamma_unipotent &&
               relation_ok;
    }
};

/* checks the conjugation relation sigma gamma sigma^-1 = gamma^q exactly,
   with q required to be an integer at least 2 */
PresentationReport validate_presentation(const TamePresentation& t);

/* (sigma, log gamma, q); conjugating the logarithm of the relation turns it
   into the twist condition of the pair */
WDPair extract_wd(const TamePresentation& t);

/* presentation with sigma = s and gamma = exp N; inverse of extract_wd */
TamePresentation presentation_of(const WDPair& p);

/* the pair seen from a degree-e totally ramified extension: the inertia
   generator becomes a power, so N picks up the factor e; renormalizing the
   inertia coordinate divides it back out */
WDPair restrict_totally_ramified(const WDPair& p, int e, bool renormalize);

/* cross-characteristic comparison: classes over local fields with the same
   residue size match iff the pairs are group-conjugate */
Verdict identify_across_fields(const WDPair& p_mixed, const WDPair& p_equal,
                               const Budget& budget = {});

}
