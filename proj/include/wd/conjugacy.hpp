#pragma once

#include "wd/rep.hpp"
#include "wd/verdict.hpp"
#include "wd/wdpair.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wd {

struct Budget {
    int degree = 3;        /* rep enumeration bound for refutation stages */
    int trial_radius = 2;  /* coefficient range scanned for witnesses */
    int attempts = 200;    /* randomized candidates before giving up */
    long grid_cap = 2000000; /* max points for the exhaustive determinant grid */
    unsigned seed = 1;
};

/* one ladder of eigenvalues (base, q*base, ..., q^k*base) together with the
   graded structure of N on it: eigen_dims[i] = dim of the q^i*base eigenspace,
   intervals[(i,j)] = number of indecomposable strands living on positions i..j */
struct ChainData {
    FieldElement base;
    std::vector<int> eigen_dims;
    std::map<std::pair<int, int>, int> intervals;

    int length() const { return static_cast<int>(eigen_dims.size()); }
    bool operator==(const ChainData& o) const {
        return base == o.base && eigen_dims == o.eigen_dims && intervals == o.intervals;
    }
};

struct ChainInvariant {
    std::vector<ChainData> chains; /* sorted by base eigenvalue */

    bool operator==(const ChainInvariant& o) const { return chains == o.chains; }
    std::string str() const;
};

/* complete conjugacy invariant for general-linear pairs whose Frobenius
   spectrum splits over the working field */
ChainInvariant chain_invariant(const WDPair& p);

/* diagonal model pair realizing an invariant */
WDPair canonical_model(const ChainInvariant& inv, const Rational& q, const FieldPtr& K);

/* change of basis carrying p to canonical_model(chain_invariant(p), ...) */
Matrix adapted_basis(const WDPair& p, const ChainInvariant& inv);

/* conjugacy under the full linear group: decided by invariant equality,
   witnesses built from adapted bases and verified exactly */
Verdict gl_equivalent(const WDPair& p1, const WDPair& p2);

/* simultaneous conjugation of matrix tuples by a group element; tuple
   members must individually lie in the group or its tangent algebra */
Verdict tuple_conjugate_in(const GroupSpec& g, const std::vector<Matrix>& t1,
                           const std::vector<Matrix>& t2, const Budget& budget = {});

/* staged decision for a common group: invariant refutation, splitting
   comparison across a representation family, then intertwiner search */
Verdict g_equivalent(const WDPair& p1, const WDPair& p2, const Budget& budget = {});

struct ElementConjugacy {
    bool conjugate = false;
    std::optional<Rep> separating;
};

/* true iff every family representation pushes the pairs to equivalent
   general-linear pairs */
ElementConjugacy element_conjugate(const WDPair& p1, const WDPair& p2, int degree_bound);

/* finite-image variant: walks the subgroup generated by the tuples in
   lockstep and compares characteristic polynomials representation by
   representation */
ElementConjugacy element_conjugate_tuples(const GroupSpec& g,
                                          const std::vector<Matrix>& gens1,
                                          const std::vector<Matrix>& gens2,
                                          int degree_bound);

/* field automorphism of K over its rationals, given by the image of the
   generator among the roots of the defining polynomial */
struct FieldAutomorphism {
    FieldElement image;
};

std::vector<FieldAutomorphism> field_automorphisms(const FieldPtr& K);
FieldElement apply_automorphism(const FieldAutomorphism& a, const FieldElement& x);
Matrix apply_automorphism(const FieldAutomorphism& a, const Matrix& m);
WDPair apply_automorphism(const FieldAutomorphism& a, const WDPair& p);

/* whether the conjugacy class of p is fixed by every listed automorphism;
   nullopt when some comparison is inconclusive */
std::optional<bool> class_defined_over(const WDPair& p,
                                       const std::vector<FieldAutomorphism>& auts,
                                       const Budget& budget = {});

}
