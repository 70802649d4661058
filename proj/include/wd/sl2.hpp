#pragma once

#include "wd/verdict.hpp"
#include "wd/wdpair.hpp"

namespace wd {

/* [H,E] = 2E, [H,F] = -2F, [E,F] = H, all inside Lie(G); H has integer
   eigenvalues */
struct SL2Triple {
    Matrix E, H, F;

    SL2Triple lift(const FieldPtr& K2) const;
    bool is_zero() const { return E.is_zero() && H.is_zero() && F.is_zero(); }
};

bool sl2_brackets_hold(const SL2Triple& t);

/* completes a nilpotent N to a triple with E = N by linear solving over the
   tangent algebra; zero triple for N = 0 */
SL2Triple jacobson_morozov(const Matrix& N, const GroupSpec& g);

/* triple through N whose H is fixed by conjugation by s and whose F scales
   by 1/q, so the triple interacts with the Frobenius twist */
SL2Triple adapted_triple(const Matrix& N, const GroupSpec& g, const Matrix& s,
                         const Rational& q);

/* t^H for semisimple H with integer spectrum: eigenvalue t^k on the
   H = k eigenspace, computed through interpolation projectors */
Matrix weight_scale(const FieldElement& t, const Matrix& H);

/* splitting of a URFS pair into a commuting semisimple part and a weight
   line: s = sqrt_q^H · s_prime^{-1}, s_prime central for the triple */
struct ImaiData {
    FieldPtr field;
    WDPair pair;
    SL2Triple triple;
    FieldElement sqrt_q;
    Matrix s_prime;
};

/* may extend the ground field by x^2 - q (positive-root embedding);
   all reported data lives over `field` */
ImaiData imai_decompose(const WDPair& p);

/* conjugacy of two triples inside the centralizer of the constraint
   element; both triples must commute with it */
Verdict triples_conjugate_in(const GroupSpec& g, const Matrix& constraint,
                             const SL2Triple& t1, const SL2Triple& t2);

}
