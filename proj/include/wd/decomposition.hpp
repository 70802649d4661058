#pragma once

#include "wd/matrix.hpp"

#include <optional>

namespace wd {

/* multiplicative Jordan decomposition m = s * u = u * s,
   s semisimple, u unipotent, both polynomials in m */
struct JordanParts {
    Matrix s;
    Matrix u;
};

/* additive decomposition m = s + n, [s, n] = 0, n nilpotent */
struct AdditiveParts {
    Matrix s;
    Matrix n;
};

AdditiveParts semisimple_nilpotent_parts(const Matrix& m);
JordanParts jordan_decomposition(const Matrix& m);

bool is_semisimple(const Matrix& m);

Matrix exp_nilpotent(const Matrix& n);
Matrix log_unipotent(const Matrix& u);

/* square root of an invertible matrix lying in the algebra K[a],
   so it commutes with everything commuting with a; needs the
   semisimple spectrum and its square roots to live in the field */
std::optional<Matrix> commuting_sqrt(const Matrix& a);

}
