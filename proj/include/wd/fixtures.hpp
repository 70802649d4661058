#pragma once

#include "wd/group.hpp"
#include "wd/matrix.hpp"
#include "wd/wdpair.hpp"

#include <vector>

namespace wd {

/* images of the generators of a finite group, with defining relations given
   as signed one-based generator words */
struct FiniteImagePair {
    GroupSpec group;
    std::vector<Matrix> generators;
    std::vector<std::vector<int>> relations;
};

struct FiniteImageReport {
    bool sizes_ok = false;
    bool generators_in_group = false;
    bool relations_hold = false;

    bool ok() const { return sizes_ok && generators_in_group && relations_hold; }
};

FiniteImageReport validate_finite_image(const FiniteImagePair& f);

/* evaluate a signed one-based word in the generator images */
Matrix word_eval(const FiniteImagePair& f, const std::vector<int>& word);

/* the rank-two pair with Frobenius eigenvalues 1 and q joined by the one
   monodromy line the twist relation allows */
WDPair tate_pair(const Rational& q);

/* two homomorphisms of Z/4 x Z/4 into the split six dimensional special
   orthogonal group over Q[i] that agree element by element but are conjugate
   only through a determinant minus one orthogonal transformation */
struct So6Counterexample {
    FiniteImagePair rho1;
    FiniteImagePair rho2;
    std::string element_certificate;
    std::string group_certificate;
};

So6Counterexample so6_counterexample_search(long candidate_cap = 4096);

}
