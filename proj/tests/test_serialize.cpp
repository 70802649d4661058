#include "doctest.h"

#include "wd/conjugacy.hpp"
#include "wd/decomposition.hpp"
#include "wd/error.hpp"
#include "wd/fixtures.hpp"
#include "wd/sampling.hpp"
#include "wd/serialize.hpp"

using namespace wd;

namespace {

FieldPtr Q() { return NumberField::rationals(); }

FieldPtr Qi() { return NumberField::create({rat(1), rat(0), rat(1)}); }

Matrix M(const FieldPtr& K, const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<FieldElement>> data;
    for (const auto& r : rows) {
        std::vector<FieldElement> row;
        for (long v : r) row.push_back(FieldElement::from_rational(K, rat(v)));
        data.push_back(std::move(row));
    }
    return Matrix::from_rows(K, data);
}

/* dump-level equality, the round-trip contract */
template <typename T, typename Emit, typename Parse>
void roundtrip(const T& value, Emit emit, Parse parse) {
    Json j = emit(value);
    T back = parse(parse_document(j.dump()));
    CHECK(emit(back).dump() == j.dump());
}

}  // namespace

TEST_CASE("rationals serialize as fraction strings") {
    CHECK(rational_json(rat(3, 7)) == "3/7");
    CHECK(rational_json(rat(-2)) == "-2");
    CHECK(rational_from_json(Json("22/7")) == rat(22, 7));
    CHECK(rational_from_json(Json("-5")) == rat(-5));
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), ParseError);
    CHECK_THROWS_AS(rational_from_json(Json(7)), ParseError);
    CHECK_THROWS_AS(rational_from_json(Json("x")), ParseError);
}

TEST_CASE("fields serialize with minimal polynomial and embedding") {
    Json q = field_json(Q());
    CHECK(q["minpoly"] == Json::array({"0", "1"}));
    CHECK(field_from_json(q)->is_rationals());

    FieldPtr K = NumberField::create({rat(-2), rat(0), rat(1)},
                                     Rect{rat(0), rat(2), rat(-1), rat(1)});
    Json jk = field_json(K);
    FieldPtr back = field_from_json(jk);
    CHECK(back->same(*K));
    CHECK(back->embedding().has_value());
    CHECK(field_json(back).dump() == jk.dump());
}

TEST_CASE("field parsing rejects malformed data") {
    CHECK_THROWS_AS(field_from_json(parse_document(R"({"minpoly": ["1"]})")), ParseError);
    CHECK_THROWS_AS(field_from_json(parse_document(R"({"minpoly": ["-5", "1"]})")), ParseError);
    CHECK_THROWS_AS(field_from_json(parse_document(R"({"minpoly": ["0", "1"], "embedding": ["0", "1", "0", "1"]})")),
                    ParseError);
    CHECK_THROWS_AS(field_from_json(parse_document(R"({"minpoly": ["-4", "0", "1"]})")),
                    InvalidField);
    CHECK_THROWS_AS(field_from_json(parse_document(R"({"nope": []})")), ParseError);
}

TEST_CASE("elements and matrices round-trip bit-exactly") {
    FieldPtr K = Qi();
    FieldElement i = FieldElement::generator(K);
    FieldElement x = i * rat(3, 5) + FieldElement::from_rational(K, rat(-7, 2));
    Json jx = element_json(x);
    CHECK(element_from_json(jx, K) == x);

    Matrix m = M(K, {{1, 2}, {3, 4}});
    m.at(0, 1) = x;
    roundtrip(m, [](const Matrix& a) { return matrix_json(a); },
              [&](const Json& j) { return matrix_from_json(j, K); });
    CHECK(matrix_from_json(matrix_json(m), K) == m);
}

TEST_CASE("matrix parsing rejects malformed data") {
    FieldPtr K = Q();
    CHECK_THROWS_AS(matrix_from_json(parse_document("[]"), K), ParseError);
    CHECK_THROWS_AS(matrix_from_json(parse_document(R"([[["1"], ["2"]], [["3"]]])"), K),
                    ParseError);
    CHECK_THROWS_AS(matrix_from_json(parse_document(R"([[["1", "0"]]])"), K), ParseError);
    CHECK_THROWS_AS(matrix_from_json(parse_document(R"([["1"]])"), K), ParseError);
}

TEST_CASE("every group variant round-trips") {
    FieldPtr K = Q();
    std::vector<GroupSpec> specs = {
        GroupSpec::gl(K, 3),
        GroupSpec::sl(K, 2),
        GroupSpec::sp_standard(K, 4),
        so_split(K, 4),
        GroupSpec::so_standard(K, 3),
        GroupSpec::orthogonal(Matrix::identity(K, 2)),
        GroupSpec::product({GroupSpec::gl(K, 2), GroupSpec::sl(K, 2)}),
        GroupSpec::tensor_stabilizer(K, 2, {{"std", {FieldElement::one(K), FieldElement::zero(K)}}}),
    };
    for (const auto& g : specs) {
        Json j = group_json(g);
        GroupSpec back = group_from_json(parse_document(j.dump()), K);
        CHECK(back.same(g));
        CHECK(group_json(back).dump() == j.dump());
    }
}

TEST_CASE("group parsing rejects malformed data") {
    FieldPtr K = Q();
    CHECK_THROWS_AS(group_from_json(parse_document(R"({"variant": "su", "n": 2})"), K),
                    ParseError);
    CHECK_THROWS_AS(group_from_json(parse_document(R"({"variant": "gl", "n": 0})"), K),
                    ParseError);
    CHECK_THROWS_AS(group_from_json(parse_document(R"({"variant": "gl"})"), K), ParseError);
    CHECK_THROWS_AS(group_from_json(parse_document(R"({"variant": "product", "factors": []})"), K),
                    ParseError);
    /* n inconsistent with the form data */
    Json j = group_json(GroupSpec::sp_standard(K, 4));
    j["n"] = 6;
    CHECK_THROWS_AS(group_from_json(j, K), ParseError);
}

TEST_CASE("pairs round-trip over the rationals and an extension") {
    WDPair t = tate_pair(rat(2));
    Json j = pair_json(t);
    WDPair back = pair_from_json(parse_document(j.dump()));
    CHECK(back.group.same(t.group));
    CHECK(back.s == t.s);
    CHECK(back.N == t.N);
    CHECK(back.q == t.q);
    CHECK(pair_json(back).dump() == j.dump());

    FieldPtr K = NumberField::create({rat(-2), rat(0), rat(1)},
                                     Rect{rat(0), rat(2), rat(-1), rat(1)});
    WDPair lifted = t.lift(K);
    lifted.s.at(0, 0) = FieldElement::generator(K);
    Json j2 = pair_json(lifted);
    WDPair back2 = pair_from_json(parse_document(j2.dump()));
    CHECK(back2.s == lifted.s);
    CHECK(pair_json(back2).dump() == j2.dump());
}

TEST_CASE("pair parsing rejects mismatched and missing pieces") {
    Json j = pair_json(tate_pair(rat(2)));
    Json wrong = j;
    wrong.erase("q");
    CHECK_THROWS_AS(pair_from_json(wrong), ParseError);
    wrong = j;
    wrong["s"] = matrix_json(Matrix::identity(Q(), 3));
    CHECK_THROWS_AS(pair_from_json(wrong), ParseError);
}

TEST_CASE("presentations round-trip") {
    WDPair t = tate_pair(rat(3));
    TamePresentation pres{t.group, t.s, exp_nilpotent(t.N), t.q};
    Json j = presentation_json(pres);
    TamePresentation back = presentation_from_json(parse_document(j.dump()));
    CHECK(back.sigma == pres.sigma);
    CHECK(back.gamma == pres.gamma);
    CHECK(back.q == pres.q);
    CHECK(presentation_json(back).dump() == j.dump());
}

TEST_CASE("log modules round-trip with u-coefficient lists") {
    FieldPtr K = Q();
    Matrix a0 = Matrix::zero(K, 2, 2);
    a0.at(1, 0) = FieldElement::from_rational(K, rat(-1));
    Matrix p0 = Matrix::diagonal(K, {FieldElement::one(K), FieldElement::from_rational(K, rat(1, 2))});
    LogModule m = constant_module(2, 3, a0, p0);
    m.A[1].at(0, 1) = FieldElement::from_rational(K, rat(5, 3));
    Json j = log_module_json(m);
    CHECK(j["A"][0][1][1] == Json::array({"5/3"}));
    LogModule back = log_module_from_json(parse_document(j.dump()));
    CHECK(back.p == m.p);
    CHECK(back.order == m.order);
    for (int k = 0; k < m.order; ++k) {
        CHECK(back.A[static_cast<std::size_t>(k)] == m.A[static_cast<std::size_t>(k)]);
        CHECK(back.Phi[static_cast<std::size_t>(k)] == m.Phi[static_cast<std::size_t>(k)]);
    }
    CHECK(log_module_json(back).dump() == j.dump());

    Json wrong = j;
    wrong["A"][0][0] = Json::array({Json::array({"1"})});
    CHECK_THROWS_AS(log_module_from_json(wrong), ParseError);
}

TEST_CASE("phi-n modules round-trip") {
    FieldPtr K = Q();
    PhiNModule m{2, M(K, {{1, 0}, {0, 2}}), M(K, {{0, 0}, {1, 0}})};
    Json j = phi_n_json(m);
    PhiNModule back = phi_n_from_json(parse_document(j.dump()));
    CHECK(back.phi0 == m.phi0);
    CHECK(back.N == m.N);
    CHECK(phi_n_json(back).dump() == j.dump());
}

TEST_CASE("finite image pairs round-trip") {
    FieldPtr K = Q();
    FiniteImagePair f{GroupSpec::gl(K, 2),
                      {M(K, {{0, 1}, {1, 0}})},
                      {{1, 1}}};
    Json j = finite_image_json(f);
    FiniteImagePair back = finite_image_from_json(parse_document(j.dump()));
    CHECK(back.generators == f.generators);
    CHECK(back.relations == f.relations);
    CHECK(finite_image_json(back).dump() == j.dump());

    Json wrong = j;
    wrong["relations"] = Json::array({Json::array({2})});
    CHECK_THROWS_AS(finite_image_from_json(wrong), ParseError);
}

TEST_CASE("invariants and verdicts serialize for reports") {
    Json inv = invariant_json(chain_invariant(tate_pair(rat(2))));
    CHECK(inv["chains"].size() == 1);
    CHECK(inv["chains"][0]["dims"] == Json::array({1, 1}));
    CHECK(inv["chains"][0]["strands"][0]["from"] == 0);
    CHECK(inv["chains"][0]["strands"][0]["to"] == 1);
    CHECK(inv["chains"][0]["strands"][0]["count"] == 1);

    Verdict v = Verdict::equivalent_with(Matrix::identity(Q(), 2), "direct check");
    Json jv = verdict_json(v);
    CHECK(jv["kind"] == "equivalent");
    CHECK(jv["witness"]["matrix"] == matrix_json(Matrix::identity(Q(), 2)));
    CHECK(verdict_json(Verdict::undecided("budget"))["kind"] == "unknown");
    CHECK(verdict_json(Verdict::inequivalent_because("rank"))["kind"] == "inequivalent");
}

TEST_CASE("malformed text reports the byte position") {
    try {
        parse_document("{\"a\": ");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
}
