#include "doctest.h"

#include "wd/conjugacy.hpp"
#include "wd/error.hpp"
#include "wd/group.hpp"
#include "wd/matrix.hpp"
#include "wd/numberfield.hpp"
#include "wd/sampling.hpp"
#include "wd/wdpair.hpp"

using namespace wd;

namespace {

FieldPtr Q() { return NumberField::rationals(); }

Matrix M(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<FieldElement>> elems;
    for (const auto& r : rows) {
        std::vector<FieldElement> row;
        for (long v : r) row.push_back(FieldElement::from_rational(Q(), rat(v)));
        elems.push_back(std::move(row));
    }
    return Matrix::from_rows(Q(), elems);
}

Matrix diag_q(const FieldPtr& K, const std::vector<Rational>& d) {
    std::vector<FieldElement> elems;
    for (const auto& v : d) elems.push_back(FieldElement::from_rational(K, v));
    return Matrix::diagonal(K, elems);
}

WDPair tate_like() {
    return WDPair{GroupSpec::gl(Q(), 2), diag_q(Q(), {rat(1), rat(2)}),
                  M({{0, 0}, {1, 0}}), rat(2)};
}

FieldElement felt(long v) { return FieldElement::from_rational(Q(), rat(v)); }

}  // namespace

TEST_CASE("chain data of the basic pair is a single two step strand") {
    auto inv = chain_invariant(tate_like());
    REQUIRE(inv.chains.size() == 1);
    CHECK(inv.chains[0].base == felt(1));
    CHECK(inv.chains[0].eigen_dims == std::vector<int>{1, 1});
    CHECK(inv.chains[0].intervals ==
          std::map<std::pair<int, int>, int>{{{0, 1}, 1}});
}

TEST_CASE("zero monodromy splits a ladder into singleton strands") {
    WDPair p{GroupSpec::gl(Q(), 2), diag_q(Q(), {rat(1), rat(2)}),
             Matrix::zero(Q(), 2, 2), rat(2)};
    auto inv = chain_invariant(p);
    REQUIRE(inv.chains.size() == 1);
    CHECK(inv.chains[0].eigen_dims == std::vector<int>{1, 1});
    CHECK(inv.chains[0].intervals ==
          std::map<std::pair<int, int>, int>({{{0, 0}, 1}, {{1, 1}, 1}}));
}

TEST_CASE("eigenvalues without ratio q sit in separate chains") {
    WDPair p{GroupSpec::gl(Q(), 2), diag_q(Q(), {rat(1), rat(3)}),
             Matrix::zero(Q(), 2, 2), rat(2)};
    auto inv = chain_invariant(p);
    REQUIRE(inv.chains.size() == 2);
    CHECK(inv.chains[0].base == felt(1));
    CHECK(inv.chains[1].base == felt(3));
    for (const auto& c : inv.chains) CHECK(c.eigen_dims == std::vector<int>{1});
}

TEST_CASE("mixed strand lengths are separated by rank counting") {
    Matrix s = diag_q(Q(), {rat(1), rat(2), rat(2), rat(4)});
    Matrix N = Matrix::zero(Q(), 4, 4);
    N.at(1, 0) = felt(1);
    N.at(3, 1) = felt(1);
    WDPair p{GroupSpec::gl(Q(), 4), s, N, rat(2)};
    auto inv = chain_invariant(p);
    REQUIRE(inv.chains.size() == 1);
    CHECK(inv.chains[0].eigen_dims == std::vector<int>{1, 2, 1});
    CHECK(inv.chains[0].intervals ==
          std::map<std::pair<int, int>, int>({{{0, 2}, 1}, {{1, 1}, 1}}));
}

TEST_CASE("chain data refuses spectra outside the field and non linear groups") {
    WDPair p{GroupSpec::gl(Q(), 2), M({{0, 1}, {-2, 0}}), Matrix::zero(Q(), 2, 2),
             rat(2)};
    REQUIRE(is_urfs(p));
    CHECK_THROWS_AS(chain_invariant(p), NonSplitSpectrum);
    WDPair sp{GroupSpec::sp_standard(Q(), 2), diag_q(Q(), {rat(2), rat(1, 2)}),
              Matrix::zero(Q(), 2, 2), rat(4)};
    CHECK_THROWS_AS(chain_invariant(sp), InvalidGroup);
}

TEST_CASE("the canonical model realizes its own invariant") {
    auto p = tate_like();
    auto inv = chain_invariant(p);
    auto model = canonical_model(inv, p.q, Q());
    CHECK(model.s == p.s);
    CHECK(model.N == M({{0, 0}, {1, 0}}));
    CHECK(chain_invariant(model) == inv);
}

TEST_CASE("an adapted basis carries the pair onto the model") {
    Matrix g = M({{3, 1, 0}, {1, 1, 2}, {0, 1, 1}});
    Matrix s = diag_q(Q(), {rat(1), rat(2), rat(4)});
    Matrix N = Matrix::zero(Q(), 3, 3);
    N.at(1, 0) = felt(1);
    N.at(2, 1) = felt(1);
    WDPair p = apply_conjugation(WDPair{GroupSpec::gl(Q(), 3), s, N, rat(2)}, g);
    auto inv = chain_invariant(p);
    Matrix P = adapted_basis(p, inv);
    auto model = canonical_model(inv, p.q, Q());
    CHECK(p.s * P == P * model.s);
    CHECK(p.N * P == P * model.N);
    ChainInvariant other = inv;
    other.chains[0].base = felt(7);
    CHECK_THROWS_AS(adapted_basis(p, other), DimensionMismatch);
}

TEST_CASE("linear equivalence finds a witness for conjugated pairs") {
    auto p = tate_like();
    auto moved = apply_conjugation(p, M({{2, 1}, {1, 1}}));
    auto v = gl_equivalent(p, moved);
    REQUIRE(v.equivalent());
    CHECK(conjugate(*v.witness, p.s) == moved.s);
    CHECK(conjugate(*v.witness, p.N) == moved.N);
}

TEST_CASE("linear equivalence separates different monodromy ranks") {
    auto p = tate_like();
    WDPair flat{p.group, p.s, Matrix::zero(Q(), 2, 2), p.q};
    auto v = gl_equivalent(p, flat);
    CHECK(v.inequivalent());
}

TEST_CASE("monodromy rescaling is invisible to linear equivalence") {
    auto p = tate_like();
    auto scaled = rescale_nilpotent(p, felt(5));
    auto v = gl_equivalent(p, scaled);
    REQUIRE(v.equivalent());
    CHECK(conjugate(*v.witness, p.N) == scaled.N);
}

TEST_CASE("incomparable pairs are rejected up front") {
    auto p = tate_like();
    WDPair other{GroupSpec::gl(Q(), 3), Matrix::identity(Q(), 3),
                 Matrix::zero(Q(), 3, 3), rat(2)};
    CHECK_THROWS_AS(gl_equivalent(p, other), DimensionMismatch);
    WDPair wrong_q{p.group, p.s, p.N, rat(3)};
    CHECK_THROWS_AS(gl_equivalent(p, wrong_q), DimensionMismatch);
}

TEST_CASE("tuple matching in the full linear group") {
    auto g = GroupSpec::gl(Q(), 2);
    auto v = tuple_conjugate_in(g, {diag_q(Q(), {rat(1), rat(2)})},
                                {diag_q(Q(), {rat(2), rat(1)})});
    REQUIRE(v.equivalent());
    CHECK(conjugate(*v.witness, diag_q(Q(), {rat(1), rat(2)})) ==
          diag_q(Q(), {rat(2), rat(1)}));
}

TEST_CASE("tuple matching respects the special linear determinant") {
    auto g = GroupSpec::sl(Q(), 2);
    Matrix N = M({{0, 1}, {0, 0}});
    auto v = tuple_conjugate_in(g, {N}, {N * rat(4)});
    REQUIRE(v.equivalent());
    CHECK(v.witness->det().is_one());
    CHECK(conjugate(*v.witness, N) == N * rat(4));
}

TEST_CASE("tuple matching lands inside the symplectic group") {
    auto g = GroupSpec::sp_standard(Q(), 2);
    Matrix a = diag_q(Q(), {rat(2), rat(1, 2)});
    Matrix b = diag_q(Q(), {rat(1, 2), rat(2)});
    auto v = tuple_conjugate_in(g, {a}, {b});
    REQUIRE(v.equivalent());
    CHECK(contains(g, *v.witness));
    CHECK(conjugate(*v.witness, a) == b);
}

TEST_CASE("special orthogonal weyl elements are found") {
    auto g = so_split(Q(), 4);
    Matrix a = diag_q(Q(), {rat(2), rat(3), rat(1, 3), rat(1, 2)});
    Matrix b = diag_q(Q(), {rat(3), rat(2), rat(1, 2), rat(1, 3)});
    auto v = tuple_conjugate_in(g, {a}, {b});
    REQUIRE(v.equivalent());
    CHECK(contains(g, *v.witness));
    CHECK(conjugate(*v.witness, a) == b);
}

TEST_CASE("a forced negative determinant refutes special orthogonal matching") {
    auto g = so_split(Q(), 4);
    Matrix a = diag_q(Q(), {rat(2), rat(3), rat(1, 3), rat(1, 2)});
    Matrix b = diag_q(Q(), {rat(1, 2), rat(3), rat(1, 3), rat(2)});
    auto v = tuple_conjugate_in(g, {a}, {b});
    CHECK(v.inequivalent());
}

TEST_CASE("a vanishing determinant on the matching space is a refutation") {
    auto g = GroupSpec::gl(Q(), 2);
    auto v = tuple_conjugate_in(g, {Matrix::zero(Q(), 2, 2)}, {M({{0, 1}, {0, 0}})});
    CHECK(v.inequivalent());
}

TEST_CASE("honest indecision when no rational witness exists") {
    auto g = GroupSpec::so(Matrix::identity(Q(), 2));
    Matrix r = M({{0, -1}, {1, 0}});
    auto v = tuple_conjugate_in(g, {r}, {r.inverse()});
    CHECK(v.unknown());
}

TEST_CASE("tuple matching recurses through product blocks") {
    auto g = GroupSpec::product({GroupSpec::gl(Q(), 1), GroupSpec::gl(Q(), 1)});
    auto v = tuple_conjugate_in(g, {diag_q(Q(), {rat(2), rat(3)})},
                                {diag_q(Q(), {rat(3), rat(2)})});
    CHECK(v.inequivalent());
    auto g2 = GroupSpec::product({GroupSpec::gl(Q(), 2), GroupSpec::gl(Q(), 1)});
    Matrix x = Matrix::zero(Q(), 3, 3);
    x.at(0, 1) = felt(1);
    x.at(2, 2) = felt(5);
    Matrix y = Matrix::zero(Q(), 3, 3);
    y.at(0, 1) = felt(2);
    y.at(2, 2) = felt(5);
    auto v2 = tuple_conjugate_in(g2, {x}, {y});
    REQUIRE(v2.equivalent());
    CHECK(conjugate(*v2.witness, x) == y);
}

TEST_CASE("tuple members must touch the group or its algebra") {
    auto g = GroupSpec::sl(Q(), 2);
    CHECK_THROWS_AS(
        tuple_conjugate_in(g, {diag_q(Q(), {rat(2), rat(1)})},
                           {diag_q(Q(), {rat(1), rat(2)})}),
        NotInGroup);
}

namespace {

WDPair sp4_regular() {
    auto g = GroupSpec::sp_standard(Q(), 4);
    Matrix s = diag_q(Q(), {rat(8), rat(2), rat(1, 2), rat(1, 8)});
    Matrix N = Matrix::zero(Q(), 4, 4);
    N.at(0, 1) = felt(1);
    N.at(1, 2) = felt(1);
    N.at(2, 3) = felt(-1);
    return WDPair{g, s, N, rat(4)};
}

WDPair sp4_two_blocks() {
    auto g = GroupSpec::sp_standard(Q(), 4);
    Matrix s = diag_q(Q(), {rat(4), rat(1), rat(1), rat(1, 4)});
    Matrix N = Matrix::zero(Q(), 4, 4);
    N.at(0, 1) = felt(1);
    N.at(2, 3) = felt(-1);
    return WDPair{g, s, N, rat(4)};
}

}  // namespace

TEST_CASE("symplectic pairs with different strand shapes are separated") {
    auto p1 = sp4_regular();
    auto p2 = sp4_two_blocks();
    REQUIRE(is_urfs(p1));
    REQUIRE(is_urfs(p2));
    auto v = g_equivalent(p1, p2);
    CHECK(v.inequivalent());
}

TEST_CASE("conjugated symplectic pairs are matched inside the group") {
    auto p1 = sp4_regular();
    Matrix t = Matrix::identity(Q(), 4);
    t.at(0, 3) = felt(1);
    REQUIRE(contains(p1.group, t));
    auto p2 = apply_conjugation(p1, t);
    auto v = g_equivalent(p1, p2);
    REQUIRE(v.equivalent());
    const Matrix& w = *v.witness;
    CHECK(contains(p1.group, w));
    CHECK(conjugate(w, p1.s) == p2.s);
    CHECK(conjugate(w, p1.N) == p2.N);
}

TEST_CASE("a weyl flip matches block swapped orthogonal frobenii") {
    auto g = so_split(Q(), 4);
    WDPair p1{g, diag_q(Q(), {rat(2), rat(3), rat(1, 3), rat(1, 2)}),
              Matrix::zero(Q(), 4, 4), rat(2)};
    WDPair p2{g, diag_q(Q(), {rat(3), rat(2), rat(1, 2), rat(1, 3)}),
              Matrix::zero(Q(), 4, 4), rat(2)};
    auto v = g_equivalent(p1, p2);
    REQUIRE(v.equivalent());
    CHECK(v.witness->field()->is_rationals());
    CHECK(contains(g, *v.witness));
    CHECK(conjugate(*v.witness, p1.s) == p2.s);
}

TEST_CASE("group equivalence demands matching settings") {
    auto p1 = sp4_regular();
    WDPair p2 = tate_like();
    CHECK_THROWS_AS(g_equivalent(p1, p2), DimensionMismatch);
}

TEST_CASE("pointwise conjugacy across the representation family") {
    auto p = tate_like();
    auto moved = apply_conjugation(p, M({{1, 0}, {3, 1}}));
    auto r1 = element_conjugate(p, moved, 2);
    CHECK(r1.conjugate);
    WDPair flat{p.group, p.s, Matrix::zero(Q(), 2, 2), p.q};
    auto r2 = element_conjugate(p, flat, 2);
    CHECK_FALSE(r2.conjugate);
    REQUIRE(r2.separating.has_value());
    CHECK(r2.separating->str() == "std");
}

TEST_CASE("finite image walks compare characteristic data wordwise") {
    auto g = GroupSpec::gl(Q(), 2);
    Matrix r = M({{0, -1}, {1, 0}});
    auto res = element_conjugate_tuples(g, {r}, {r.inverse()}, 2);
    CHECK(res.conjugate);
    auto res2 = element_conjugate_tuples(g, {Matrix::identity(Q(), 2)},
                                         {diag_q(Q(), {rat(1), rat(-1)})}, 2);
    CHECK_FALSE(res2.conjugate);
    REQUIRE(res2.separating.has_value());
    CHECK_THROWS_AS(
        element_conjugate_tuples(g, {M({{1, 1}, {0, 1}})}, {M({{1, 1}, {0, 1}})}, 2),
        BudgetExhausted);
}

TEST_CASE("rational fields admit only the identity symmetry") {
    auto auts = field_automorphisms(Q());
    REQUIRE(auts.size() == 1);
    auto p = tate_like();
    auto moved = apply_automorphism(auts[0], p);
    CHECK(moved.s == p.s);
    CHECK(moved.N == p.N);
    CHECK(class_defined_over(p, auts) == std::optional<bool>(true));
}

namespace {

FieldPtr gauss_field() { return NumberField::create({rat(1), rat(0), rat(1)}); }

}  // namespace

TEST_CASE("quadratic fields have the expected pair of symmetries") {
    auto K = gauss_field();
    auto auts = field_automorphisms(K);
    REQUIRE(auts.size() == 2);
    FieldElement i = FieldElement::generator(K);
    bool saw_identity = false, saw_conjugation = false;
    for (const auto& a : auts) {
        if (apply_automorphism(a, i) == i) saw_identity = true;
        if (apply_automorphism(a, i) == -i) saw_conjugation = true;
        FieldElement mixed = i * rat(3) + FieldElement::from_rational(K, rat(7));
        CHECK(apply_automorphism(a, mixed) ==
              apply_automorphism(a, i) * rat(3) + FieldElement::from_rational(K, rat(7)));
    }
    CHECK(saw_identity);
    CHECK(saw_conjugation);
}

TEST_CASE("a single imaginary ladder is moved by conjugation") {
    auto K = gauss_field();
    FieldElement i = FieldElement::generator(K);
    Matrix s = Matrix::diagonal(K, {i, i * rat(2)});
    Matrix N = Matrix::zero(K, 2, 2);
    N.at(1, 0) = FieldElement::one(K);
    WDPair p{GroupSpec::gl(K, 2), s, N, rat(2)};
    REQUIRE(is_urfs(p));
    CHECK(class_defined_over(p, field_automorphisms(K)) == std::optional<bool>(false));
}

TEST_CASE("balanced imaginary ladders are stable under conjugation") {
    auto K = gauss_field();
    FieldElement i = FieldElement::generator(K);
    Matrix s = Matrix::diagonal(K, {i, i * rat(2), -i, -i * rat(2)});
    Matrix N = Matrix::zero(K, 4, 4);
    N.at(1, 0) = FieldElement::one(K);
    N.at(3, 2) = FieldElement::one(K);
    WDPair p{GroupSpec::gl(K, 4), s, N, rat(2)};
    REQUIRE(is_urfs(p));
    CHECK(class_defined_over(p, field_automorphisms(K)) == std::optional<bool>(true));
}

TEST_CASE("symmetries must preserve the ambient field and group") {
    auto K = gauss_field();
    auto p = tate_like();
    CHECK_THROWS_AS(apply_automorphism({FieldElement::generator(K)}, p), InvalidField);
    CHECK_THROWS_AS(
        apply_automorphism({FieldElement::from_rational(K, rat(5))}, tate_like().lift(K)),
        InvalidField);
}
