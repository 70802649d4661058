#include "doctest.h"
#include "wd/decomposition.hpp"
#include "wd/error.hpp"

using namespace wd;

namespace {

FieldPtr Q() { return NumberField::rationals(); }

Matrix M(std::vector<std::vector<long>> rows) {
    auto K = Q();
    std::vector<std::vector<FieldElement>> r;
    for (const auto& row : rows) {
        std::vector<FieldElement> er;
        for (long v : row) er.push_back(FieldElement::from_rational(K, rat(v)));
        r.push_back(er);
    }
    return Matrix::from_rows(K, r);
}

}

TEST_CASE("jordan split of a single block") {
    Matrix m = M({{2, 1}, {0, 2}});
    auto [s, u] = jordan_decomposition(m);
    CHECK(s == M({{2, 0}, {0, 2}}));
    CHECK(s * u == m);
    CHECK(u * s == m);
    CHECK(is_unipotent(u));
    CHECK(u.at(0, 1) == FieldElement::from_rational(Q(), rat(1, 2)));
}

TEST_CASE("jordan split of a mixed spectrum") {
    Matrix m = M({{5, 1, 0}, {0, 5, 0}, {0, 0, 3}});
    auto [s, n] = semisimple_nilpotent_parts(m);
    CHECK(s == M({{5, 0, 0}, {0, 5, 0}, {0, 0, 3}}));
    CHECK(n == M({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}));
    CHECK(s * n == n * s);
    CHECK(is_nilpotent(n));
}

TEST_CASE("semisimple matrices are fixed") {
    Matrix m = M({{1, 1}, {0, 2}});
    auto [s, n] = semisimple_nilpotent_parts(m);
    CHECK(s == m);
    CHECK(n.is_zero());
    CHECK(is_semisimple(m));

    /* irreducible quadratic block plus a rational eigenvalue */
    Matrix r = M({{0, -2, 1}, {1, 0, 0}, {0, 0, 2}});
    CHECK(is_semisimple(r));
    auto [rs, rn] = semisimple_nilpotent_parts(r);
    CHECK(rs == r);
    CHECK(rn.is_zero());

    CHECK_FALSE(is_semisimple(M({{2, 1}, {0, 2}})));
}

TEST_CASE("multiplicative split needs invertibility") {
    CHECK_THROWS_AS(jordan_decomposition(M({{0, 1}, {0, 0}})), SingularMatrix);
}

TEST_CASE("exp and log") {
    Matrix n = M({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    Matrix e = exp_nilpotent(n);
    CHECK(e.at(0, 1) == FieldElement::one(Q()));
    CHECK(e.at(0, 2) == FieldElement::from_rational(Q(), rat(1, 2)));
    CHECK(e.at(1, 2) == FieldElement::one(Q()));
    CHECK(log_unipotent(e) == n);

    Matrix u = M({{1, 2, 3}, {0, 1, 4}, {0, 0, 1}});
    CHECK(exp_nilpotent(log_unipotent(u)) == u);

    CHECK_THROWS_AS(exp_nilpotent(M({{1, 0}, {0, 1}})), NotNilpotent);
    CHECK_THROWS_AS(log_unipotent(M({{2, 0}, {0, 1}})), NotUnipotent);
}

TEST_CASE("commuting square roots") {
    Matrix a = M({{4, 4}, {0, 4}});
    auto r = commuting_sqrt(a);
    REQUIRE(r.has_value());
    CHECK(*r == M({{2, 1}, {0, 2}}));
    CHECK(*r * *r == a);
    CHECK(comm(*r, a).is_zero());

    auto d = commuting_sqrt(M({{1, 0}, {0, 4}}));
    REQUIRE(d.has_value());
    CHECK(*d == M({{1, 0}, {0, 2}}));

    CHECK_FALSE(commuting_sqrt(M({{2, 0}, {0, 3}})).has_value());
    CHECK_FALSE(commuting_sqrt(M({{0, -1}, {1, 0}})).has_value());

    /* spectrum lives in the field but the square roots do not */
    auto K = NumberField::create({rat(1), rat(0), rat(1)});
    auto i = FieldElement::generator(K);
    Matrix ji = Matrix::diagonal(K, {i, -i});
    CHECK_FALSE(commuting_sqrt(ji).has_value());

    /* square roots in a real quadratic extension */
    auto K2 = NumberField::create({rat(-2), rat(0), rat(1)});
    Matrix two = Matrix::diagonal(K2, {FieldElement::from_rational(K2, rat(2)),
                                       FieldElement::from_rational(K2, rat(8))});
    auto rt = commuting_sqrt(two);
    REQUIRE(rt.has_value());
    auto x = FieldElement::generator(K2);
    CHECK(*rt == Matrix::diagonal(K2, {x, x * rat(2)}));
}
