#include "doctest.h"
#include "wd/error.hpp"
#include "wd/matrix.hpp"

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

TEST_CASE("construction and arithmetic") {
    auto K = Q();
    Matrix id = Matrix::identity(K, 2);
    Matrix a = M({{1, 2}, {3, 4}});
    CHECK(a * id == a);
    CHECK(a + Matrix::zero(K, 2, 2) == a);
    CHECK(a - a == Matrix::zero(K, 2, 2));
    CHECK(a * M({{0, 1}, {1, 0}}) == M({{2, 1}, {4, 3}}));
    CHECK(a.transpose() == M({{1, 3}, {2, 4}}));
    CHECK((a * rat(2)) == M({{2, 4}, {6, 8}}));
    CHECK(Matrix::unit(K, 2, 0, 1) == M({{0, 1}, {0, 0}}));
    CHECK_THROWS_AS(a * Matrix::zero(K, 3, 3), DimensionMismatch);
    CHECK(a.trace() == FieldElement::from_rational(K, rat(5)));
}

TEST_CASE("determinant rank inverse") {
    Matrix a = M({{1, 2}, {3, 4}});
    CHECK(a.det() == FieldElement::from_rational(Q(), rat(-2)));
    CHECK(a.rank() == 2);
    CHECK(a.inverse() * a == Matrix::identity(Q(), 2));
    Matrix s = M({{1, 2}, {2, 4}});
    CHECK(s.det().is_zero());
    CHECK(s.rank() == 1);
    CHECK_THROWS_AS(s.inverse(), SingularMatrix);
    auto ker = s.kernel();
    REQUIRE(ker.size() == 1);
    /* kernel vector kills the matrix */
    Matrix v = Matrix::from_rows(Q(), {{ker[0][0]}, {ker[0][1]}});
    CHECK((s * v).is_zero());

    Matrix p = M({{2, 0}, {0, 3}});
    CHECK(p.pow(3) == M({{8, 0}, {0, 27}}));
    CHECK(p.pow(-1) * p == Matrix::identity(Q(), 2));
    CHECK(p.pow(0) == Matrix::identity(Q(), 2));
}

TEST_CASE("characteristic and minimal polynomials") {
    Matrix a = M({{2, 1}, {0, 2}});
    auto K = Q();
    auto one = FieldElement::one(K);
    PolyK cp = a.charpoly();
    /* (t-2)^2 = t^2 - 4t + 4 */
    REQUIRE(cp.degree() == 2);
    CHECK(cp.coeff(0) == FieldElement::from_rational(K, rat(4)));
    CHECK(cp.coeff(1) == FieldElement::from_rational(K, rat(-4)));
    CHECK(cp.coeff(2) == one);
    CHECK(a.minpoly() == cp);

    Matrix d = M({{2, 0}, {0, 2}});
    PolyK mp = d.minpoly();
    REQUIRE(mp.degree() == 1);
    CHECK(mp.coeff(0) == FieldElement::from_rational(K, rat(-2)));

    Matrix c = M({{0, -1}, {1, 0}});
    PolyK cc = c.charpoly();
    CHECK(cc.coeff(0) == one);
    CHECK(cc.coeff(1).is_zero());

    /* non triangular 3x3 with known spectrum */
    Matrix e = M({{2, 1, 0}, {1, 2, 0}, {0, 0, 5}});
    PolyK ce = e.charpoly();
    /* (t-1)(t-3)(t-5) = t^3 - 9t^2 + 23t - 15 */
    CHECK(ce.coeff(0) == FieldElement::from_rational(K, rat(-15)));
    CHECK(ce.coeff(1) == FieldElement::from_rational(K, rat(23)));
    CHECK(ce.coeff(2) == FieldElement::from_rational(K, rat(-9)));
}

TEST_CASE("solve") {
    Matrix a = M({{1, 1}, {0, 1}});
    Matrix b = M({{3}, {2}});
    auto x = Matrix::solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
    CHECK(*x == M({{1}, {2}}));

    /* inconsistent system */
    Matrix s = M({{1, 2}, {2, 4}});
    CHECK_FALSE(Matrix::solve(s, M({{1}, {3}})).has_value());

    /* underdetermined: free variables pinned to zero */
    auto u = Matrix::solve(M({{1, 2}}), M({{5}}));
    REQUIRE(u.has_value());
    CHECK(M({{1, 2}}) * *u == M({{5}}));
}

TEST_CASE("predicates") {
    CHECK(M({{0, 1}, {0, 0}}).is_triangular());
    CHECK_FALSE(M({{0, 1}, {1, 0}}).is_triangular());
    CHECK(M({{3, 0}, {0, 7}}).is_diagonal());
    CHECK(is_nilpotent(M({{0, 1}, {0, 0}})));
    CHECK_FALSE(is_nilpotent(M({{1, 1}, {0, 0}})));
    CHECK(is_unipotent(M({{1, 5}, {0, 1}})));
    CHECK_FALSE(is_unipotent(M({{2, 0}, {0, 1}})));
}

TEST_CASE("kron comm conjugate") {
    Matrix a = M({{1, 2}, {3, 4}});
    Matrix b = M({{0, 1}, {1, 0}});
    Matrix k = kron(a, b);
    CHECK(k.rows() == 4);
    CHECK(k.at(0, 1) == FieldElement::one(Q()));
    CHECK(k.at(0, 3) == FieldElement::from_rational(Q(), rat(2)));
    CHECK(comm(a, b) == a * b - b * a);
    Matrix g = M({{1, 1}, {0, 1}});
    CHECK(conjugate(g, a) == g * a * g.inverse());

    /* vec convention matches kron for the two sided action */
    Matrix x = M({{1, 2}, {3, 4}});
    auto vx = vec(x);
    Matrix lhs = kron(a, Matrix::identity(Q(), 2)) - kron(Matrix::identity(Q(), 2), b.transpose());
    Matrix xcol = Matrix::from_rows(Q(), {{vx[0]}, {vx[1]}, {vx[2]}, {vx[3]}});
    Matrix want = a * x - x * b;
    auto vw = vec(want);
    Matrix got = lhs * xcol;
    for (int i = 0; i < 4; ++i) CHECK(got.at(i, 0) == vw[static_cast<std::size_t>(i)]);
}

TEST_CASE("block helpers") {
    Matrix a = M({{1}});
    Matrix b = M({{2, 0}, {0, 3}});
    Matrix blk = block_diagonal({a, b});
    CHECK(blk.rows() == 3);
    CHECK(blk.at(0, 0) == FieldElement::one(Q()));
    CHECK(blk.at(2, 2) == FieldElement::from_rational(Q(), rat(3)));
    CHECK(blk.at(0, 1).is_zero());

    Matrix v = vstack({M({{1, 2}}), M({{3, 4}})});
    CHECK(v == M({{1, 2}, {3, 4}}));
}

TEST_CASE("field lift") {
    auto K = NumberField::create({rat(-2), rat(0), rat(1)});
    Matrix a = M({{1, 2}, {3, 4}});
    Matrix al = a.lift(K);
    CHECK(al.field()->same(*K));
    CHECK(al.at(1, 0) == FieldElement::from_rational(K, rat(3)));
    auto x = FieldElement::generator(K);
    Matrix d = Matrix::diagonal(K, {x, -x});
    CHECK(d.det() == FieldElement::from_rational(K, rat(-2)));
    CHECK(d.trace().is_zero());
    PolyK cp = d.charpoly();
    CHECK(cp.coeff(0) == FieldElement::from_rational(K, rat(-2)));
    CHECK(cp.coeff(1).is_zero());
}
