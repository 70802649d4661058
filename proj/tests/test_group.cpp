#include "doctest.h"
#include "wd/error.hpp"
#include "wd/group.hpp"

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

int rank_of(const std::vector<Matrix>& basis) {
    if (basis.empty()) return 0;
    std::vector<std::vector<FieldElement>> rows;
    for (const auto& b : basis) rows.push_back(vec(b));
    return Matrix::from_rows(basis.front().field(), rows).rank();
}

}

TEST_CASE("form factories reject malformed forms") {
    CHECK_THROWS_AS(GroupSpec::sp(M({{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}})), InvalidGroup);
    CHECK_THROWS_AS(GroupSpec::sp(M({{1, 0}, {0, 1}})), InvalidGroup);
    CHECK_THROWS_AS(GroupSpec::sp(M({{0, 1}, {-1, 0}, {0, 0}})), InvalidGroup);
    CHECK_THROWS_AS(GroupSpec::so(M({{0, 1}, {-1, 0}})), InvalidGroup);
    CHECK_THROWS_AS(GroupSpec::so(M({{1, 0}, {0, 0}})), InvalidGroup);
    CHECK_THROWS_AS(GroupSpec::gl(Q(), 0), InvalidGroup);
    CHECK_THROWS_AS(GroupSpec::product({}), InvalidGroup);
    CHECK_THROWS_AS(
        GroupSpec::tensor_stabilizer(Q(), 2, {{"std", {FieldElement::one(Q())}}}),
        InvalidGroup);
}

TEST_CASE("standard symplectic form for rank two is the determinant condition") {
    auto g = GroupSpec::sp_standard(Q(), 2);
    CHECK(g.form() == M({{0, 1}, {-1, 0}}));
    CHECK(contains(g, M({{1, 1}, {0, 1}})));
    CHECK(contains(g, M({{1, 0}, {0, 1}})));
    CHECK_FALSE(contains(g, M({{2, 0}, {0, 1}})));
    CHECK(contains(g, M({{2, 0}, {0, 0}})) == false);
}

TEST_CASE("plane rotations versus reflections in the orthogonal groups") {
    auto so2 = GroupSpec::so_standard(Q(), 2);
    auto o2 = GroupSpec::orthogonal(Matrix::identity(Q(), 2));
    Matrix rot = M({{0, -1}, {1, 0}});
    Matrix refl = M({{0, 1}, {1, 0}});
    CHECK(contains(so2, rot));
    CHECK(contains(o2, rot));
    CHECK_FALSE(contains(so2, refl));
    CHECK(contains(o2, refl));
    CHECK_FALSE(contains(so2, M({{1, 1}, {0, 1}})));
}

TEST_CASE("special linear membership") {
    auto g = GroupSpec::sl(Q(), 2);
    CHECK(contains(g, M({{1, 5}, {0, 1}})));
    CHECK(contains(g, M({{2, 0}, {0, 1}})) == false);
    CHECK(lie_contains(g, M({{1, 0}, {0, -1}})));
    CHECK_FALSE(lie_contains(g, M({{1, 0}, {0, 1}})));
}

TEST_CASE("orthogonal and symplectic tangent conditions") {
    auto so2 = GroupSpec::so_standard(Q(), 2);
    CHECK(lie_contains(so2, M({{0, 1}, {-1, 0}})));
    CHECK_FALSE(lie_contains(so2, M({{0, 1}, {1, 0}})));
    auto sp2 = GroupSpec::sp_standard(Q(), 2);
    CHECK(lie_contains(sp2, M({{1, 0}, {0, -1}})));
    CHECK(lie_contains(sp2, M({{0, 1}, {0, 0}})));
    CHECK_FALSE(lie_contains(sp2, M({{1, 0}, {0, 1}})));
}

TEST_CASE("tangent space dimensions match the classical counts") {
    CHECK(lie_basis(GroupSpec::gl(Q(), 3), Q()).size() == 9);
    CHECK(lie_basis(GroupSpec::sl(Q(), 3), Q()).size() == 8);
    CHECK(lie_basis(GroupSpec::sp_standard(Q(), 4), Q()).size() == 10);
    CHECK(lie_basis(GroupSpec::so_standard(Q(), 4), Q()).size() == 6);
    CHECK(lie_basis(GroupSpec::so_standard(Q(), 3), Q()).size() == 3);
    CHECK(lie_basis(GroupSpec::orthogonal(Matrix::identity(Q(), 4)), Q()).size() == 6);
}

TEST_CASE("tangent basis members satisfy the defining equations independently") {
    for (auto g : {GroupSpec::sl(Q(), 3), GroupSpec::sp_standard(Q(), 4),
                   GroupSpec::so_standard(Q(), 4)}) {
        auto basis = lie_basis(g, Q());
        for (const auto& b : basis) CHECK(lie_contains(g, b));
        CHECK(rank_of(basis) == static_cast<int>(basis.size()));
    }
}

TEST_CASE("products act blockwise") {
    auto g = GroupSpec::product({GroupSpec::gl(Q(), 1), GroupSpec::sl(Q(), 2)});
    CHECK(g.dim() == 3);
    CHECK(contains(g, M({{5, 0, 0}, {0, 1, 3}, {0, 0, 1}})));
    CHECK_FALSE(contains(g, M({{5, 1, 0}, {0, 1, 3}, {0, 0, 1}})));
    CHECK_FALSE(contains(g, M({{5, 0, 0}, {0, 2, 0}, {0, 0, 1}})));
    CHECK(lie_contains(g, M({{7, 0, 0}, {0, 2, 0}, {0, 0, -2}})));
    CHECK_FALSE(lie_contains(g, M({{7, 0, 0}, {0, 2, 0}, {0, 0, 2}})));
    CHECK(lie_basis(g, Q()).size() == 4);
}

TEST_CASE("vector stabilizer fixes the flagged column") {
    auto K = Q();
    auto e1 = std::vector<FieldElement>{FieldElement::one(K), FieldElement::zero(K)};
    auto g = GroupSpec::tensor_stabilizer(K, 2, {{"std", e1}});
    CHECK(contains(g, M({{1, 5}, {0, 3}})));
    CHECK_FALSE(contains(g, M({{2, 0}, {0, 1}})));
    CHECK(lie_contains(g, M({{0, 4}, {0, -1}})));
    CHECK_FALSE(lie_contains(g, M({{1, 0}, {0, 0}})));
    CHECK(lie_basis(g, K).size() == 2);
}

TEST_CASE("a symmetric tensor invariant cuts out the orthogonal group") {
    auto K = Q();
    std::vector<FieldElement> flat;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            flat.push_back(i == j ? FieldElement::one(K) : FieldElement::zero(K));
    auto g = GroupSpec::tensor_stabilizer(K, 2, {{"tensor(dual(std),dual(std))", flat}});
    CHECK(contains(g, M({{0, -1}, {1, 0}})));
    CHECK(contains(g, M({{0, 1}, {1, 0}})));
    CHECK_FALSE(contains(g, M({{2, 0}, {0, 1}})));
    CHECK(lie_basis(g, K).size() == 1);
    CHECK(lie_contains(g, M({{0, 1}, {-1, 0}})));
}

TEST_CASE("specs lift along field extensions") {
    auto K = NumberField::create({rat(-2), rat(0), rat(1)});
    auto g = GroupSpec::sp_standard(Q(), 4).lift(K);
    CHECK(g.field()->same(*K));
    CHECK(g.form().field()->same(*K));
    CHECK(contains(g, Matrix::identity(K, 4)));
    CHECK(g.same(GroupSpec::sp_standard(K, 4)));
    CHECK_FALSE(g.same(GroupSpec::sp_standard(Q(), 4)));
    CHECK(GroupSpec::gl(Q(), 2).str() == "GL(2)");
}

TEST_CASE("membership checks reject wrong sizes") {
    CHECK_THROWS_AS(contains(GroupSpec::gl(Q(), 3), M({{1, 0}, {0, 1}})), DimensionMismatch);
    CHECK_THROWS_AS(lie_contains(GroupSpec::sl(Q(), 3), M({{1}})), DimensionMismatch);
}
