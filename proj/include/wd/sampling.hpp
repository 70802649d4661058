#pragma once

#include "wd/wdpair.hpp"

#include <random>
#include <vector>

namespace wd {

using Rng = std::mt19937_64;

long rand_int(Rng& g, long bound);

FieldElement rand_element(Rng& g, const FieldPtr& K, long bound);

Matrix rand_matrix(Rng& g, const FieldPtr& K, int rows, int cols, long bound);

Matrix rand_invertible(Rng& g, const FieldPtr& K, int n, long bound);

/* product of random transvections, reflections or elementary matrices,
   depending on the group */
Matrix rand_group_element(Rng& g, const GroupSpec& G, long bound);

/* basis of { N in Lie(G) : s N = q N s } */
std::vector<Matrix> twist_space(const GroupSpec& G, const Matrix& s, const Rational& q);

/* URFS pair with a random chained spectrum, random monodromy inside the twist
   space and a random change of basis; the group decides the spectrum shape */
WDPair rand_urfs_pair(Rng& g, const GroupSpec& G, const Rational& q);

/* antidiagonal 1s form of even size, the split orthogonal geometry */
GroupSpec so_split(const FieldPtr& K, int n);

}
