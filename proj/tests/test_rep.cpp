#include "doctest.h"
#include "wd/decomposition.hpp"
#include "wd/error.hpp"
#include "wd/rep.hpp"

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

TEST_CASE("word text round trips") {
    for (const char* s : {"std", "dual(std)", "tensor(std,dual(std))", "sym^2(std)",
                          "alt^3(std)", "directsum(std,alt^2(std))",
                          "tensor(sym^2(std),sym^2(std))"})
        CHECK(word_str(parse_word(s)) == s);
    CHECK(word_str(parse_word("  dual ")) == "dual(std)");
    CHECK(word_str(parse_word("sym^2( dual )")) == "sym^2(dual(std))");
    CHECK(word_str(word_alt(2)) == "alt^2(std)");
    CHECK_THROWS_AS(parse_word("sym^(std)"), ParseError);
    CHECK_THROWS_AS(parse_word("std extra"), ParseError);
    CHECK_THROWS_AS(parse_word("spin"), ParseError);
    CHECK_THROWS_AS(parse_word("tensor(std)"), ParseError);
}

TEST_CASE("dimension bookkeeping") {
    CHECK(word_dim(word_std(), 4) == 4);
    CHECK(word_dim(word_dual(), 4) == 4);
    CHECK(word_dim(parse_word("tensor(std,std)"), 3) == 9);
    CHECK(word_dim(parse_word("directsum(std,std)"), 3) == 6);
    CHECK(word_dim(word_sym(2), 2) == 3);
    CHECK(word_dim(word_sym(3), 3) == 10);
    CHECK(word_dim(word_alt(2), 2) == 1);
    CHECK(word_dim(word_alt(2), 4) == 6);
    CHECK(word_dim(word_alt(2), 6) == 15);
    CHECK_THROWS_AS(word_dim(word_alt(3), 2), DegreeBudgetExceeded);
    CHECK_THROWS_AS(word_dim(word_sym(13), 2), DegreeBudgetExceeded);
    CHECK_THROWS_AS(word_dim(word_sym(12), 20), DegreeBudgetExceeded);
    CHECK(word_degree(parse_word("tensor(sym^2(std),dual(std))")) == 3);
    CHECK(word_degree(parse_word("directsum(std,alt^2(std))")) == 2);
}

TEST_CASE("monomial index tuples") {
    CHECK(sym_tuples(2, 2) ==
          std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 1}});
    CHECK(alt_tuples(4, 2) ==
          std::vector<std::vector<int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("top exterior power is the determinant") {
    Matrix g = M({{1, 2}, {3, 4}});
    CHECK(word_group_eval(word_alt(2), g) == M({{-2}}));
    Matrix h = M({{2, 0, 1}, {0, 1, 0}, {1, 0, 1}});
    CHECK(word_group_eval(word_alt(3), h) == M({{1}}));
    CHECK(word_lie_eval(word_alt(2), M({{5, 7}, {11, -2}})) == M({{3}}));
}

TEST_CASE("symmetric square of a unipotent map") {
    Matrix g = M({{1, 1}, {0, 1}});
    CHECK(word_group_eval(word_sym(2), g) == M({{1, 1, 1}, {0, 1, 2}, {0, 0, 1}}));
    Matrix d = M({{2, 0}, {0, 3}});
    CHECK(word_group_eval(word_sym(2), d) == M({{4, 0, 0}, {0, 6, 0}, {0, 0, 9}}));
}

TEST_CASE("dual acts by inverse transpose") {
    Matrix g = M({{1, 2}, {0, 1}});
    CHECK(word_group_eval(word_dual(), g) == M({{1, 0}, {-2, 1}}));
    CHECK(word_lie_eval(word_dual(), M({{1, 2}, {3, 4}})) == M({{-1, -3}, {-2, -4}}));
}

TEST_CASE("tensor with the dual gives the adjoint-style derivative") {
    Matrix x = M({{1, 2}, {3, 4}});
    Matrix expect = kron(x, Matrix::identity(Q(), 2)) -
                    kron(Matrix::identity(Q(), 2), x.transpose());
    CHECK(word_lie_eval(parse_word("tensor(std,dual(std))"), x) == expect);
}

TEST_CASE("group evaluation is multiplicative") {
    Matrix g = M({{1, 2}, {1, 3}});
    Matrix h = M({{0, -1}, {1, 1}});
    for (const char* s : {"sym^2(std)", "alt^2(std)", "tensor(std,dual(std))",
                          "directsum(std,sym^3(std))", "sym^2(dual(std))"}) {
        auto w = parse_word(s);
        CHECK(word_group_eval(w, g * h) ==
              word_group_eval(w, g) * word_group_eval(w, h));
        CHECK(word_group_eval(w, Matrix::identity(Q(), 2)).is_identity());
    }
}

TEST_CASE("derivative intertwines exponentials") {
    Matrix x = M({{0, 2, -1}, {0, 0, 3}, {0, 0, 0}});
    for (const char* s : {"sym^2(std)", "alt^2(std)", "dual(std)",
                          "tensor(std,dual(std))", "directsum(std,alt^3(std))"}) {
        auto w = parse_word(s);
        CHECK(word_group_eval(w, exp_nilpotent(x)) ==
              exp_nilpotent(word_lie_eval(w, x)));
    }
}

TEST_CASE("derivative respects commutators") {
    Matrix x = M({{1, 2}, {0, -1}});
    Matrix y = M({{0, 1}, {1, 3}});
    for (const char* s : {"sym^3(std)", "alt^2(std)", "tensor(dual(std),std)"}) {
        auto w = parse_word(s);
        CHECK(word_lie_eval(w, comm(x, y)) ==
              comm(word_lie_eval(w, x), word_lie_eval(w, y)));
    }
}

TEST_CASE("direct sums act blockwise") {
    Matrix g = M({{1, 2}, {3, 4}});
    Matrix r = word_group_eval(parse_word("directsum(std,alt^2(std))"), g);
    CHECK(r == M({{1, 2, 0}, {3, 4, 0}, {0, 0, -2}}));
}

TEST_CASE("rep family enumeration for small groups") {
    auto f1 = rep_family(GroupSpec::gl(Q(), 2), 1);
    REQUIRE(f1.size() == 2);
    CHECK(f1[0].str() == "std");
    CHECK(f1[1].str() == "dual(std)");

    auto f2 = rep_family(GroupSpec::gl(Q(), 3), 2);
    CHECK(f2.size() == 7);
    for (const auto& r : f2) {
        CHECK(word_degree(r.word()) <= 2);
        CHECK(r.dim() <= 9);
    }

    bool has_alt2 = false;
    for (const auto& r : rep_family(GroupSpec::so_standard(Q(), 6), 2))
        if (r.str() == "alt^2(std)") {
            has_alt2 = true;
            CHECK(r.dim() == 15);
        }
    CHECK(has_alt2);
}

TEST_CASE("rep wrapper checks sizes") {
    Rep r = build_rep(GroupSpec::gl(Q(), 2), "sym^2(std)");
    CHECK(r.dim() == 3);
    CHECK(r.source().same(GroupSpec::gl(Q(), 2)));
    CHECK(r.group_action(M({{2, 0}, {0, 3}})).at(2, 2) ==
          FieldElement::from_rational(Q(), rat(9)));
    CHECK_THROWS_AS(r.group_action(Matrix::identity(Q(), 3)), DimensionMismatch);
    CHECK_THROWS_AS(r.lie_action(Matrix::identity(Q(), 3)), DimensionMismatch);
}
