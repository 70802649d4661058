#include "wd/fixtures.hpp"

#include "wd/conjugacy.hpp"
#include "wd/error.hpp"
#include "wd/sampling.hpp"

#include <array>
#include <utility>

namespace wd {

Matrix word_eval(const FiniteImagePair& f, const std::vector<int>& word) {
    if (f.generators.empty()) throw DimensionMismatch("no generators to evaluate");
    const Matrix& g0 = f.generators.front();
    Matrix acc = Matrix::identity(g0.field(), g0.rows());
    for (int letter : word) {
        long idx = (letter < 0 ? -static_cast<long>(letter) : letter) - 1;
        if (letter == 0 || idx >= static_cast<long>(f.generators.size()))
            throw DimensionMismatch("relation letter out of range");
        const Matrix& g = f.generators[static_cast<std::size_t>(idx)];
        acc = acc * (letter > 0 ? g : g.inverse());
    }
    return acc;
}

FiniteImageReport validate_finite_image(const FiniteImagePair& f) {
    FiniteImageReport r;
    int n = f.group.dim();
    r.sizes_ok = !f.generators.empty();
    for (const auto& g : f.generators)
        if (!g.square() || g.rows() != n || !g.field()->same(*f.group.field()))
            r.sizes_ok = false;
    for (const auto& w : f.relations)
        for (int letter : w) {
            long idx = (letter < 0 ? -static_cast<long>(letter) : letter);
            if (letter == 0 || idx > static_cast<long>(f.generators.size())) r.sizes_ok = false;
        }
    if (!r.sizes_ok) return r;
    r.generators_in_group = true;
    for (const auto& g : f.generators)
        if (!contains(f.group, g)) r.generators_in_group = false;
    r.relations_hold = true;
    for (const auto& w : f.relations)
        if (!word_eval(f, w).is_identity()) r.relations_hold = false;
    return r;
}

WDPair tate_pair(const Rational& q) {
    auto qi = rat_as_long(q);
    if (!qi || *qi < 2) throw InvalidModule("tate pair needs an integer q at least 2");
    auto factors = factor_integer(Integer(*qi));
    if (!factors || factors->size() != 1)
        throw InvalidModule("tate pair needs a prime power q");
    const FieldPtr& Q = NumberField::rationals();
    Matrix s = Matrix::diagonal(Q, {FieldElement::one(Q), FieldElement::from_rational(Q, q)});
    Matrix N = Matrix::unit(Q, 2, 1, 0);
    WDPair p{GroupSpec::gl(Q, 2), std::move(s), std::move(N), q};
    if (!validate_pair(p).ok()) throw Error("tate pair failed its own validation");
    return p;
}

namespace {

/* six characters of Z/4 x Z/4 in slots paired (0,5), (1,4), (2,3), each pair
   holding a character and its inverse so the diagonal image preserves the
   split form */
using CharTuple = std::array<std::pair<int, int>, 6>;

CharTuple slot_characters(int c) {
    std::array<int, 6> digit{};
    for (int t = 0; t < 6; ++t) {
        digit[static_cast<std::size_t>(5 - t)] = c % 4;
        c /= 4;
    }
    auto neg = [](int e) { return (4 - e) % 4; };
    CharTuple cs;
    cs[0] = {digit[0], digit[1]};
    cs[1] = {digit[2], digit[3]};
    cs[2] = {digit[4], digit[5]};
    cs[3] = {neg(cs[2].first), neg(cs[2].second)};
    cs[4] = {neg(cs[1].first), neg(cs[1].second)};
    cs[5] = {neg(cs[0].first), neg(cs[0].second)};
    return cs;
}

Matrix diag_of(const FieldPtr& K, const CharTuple& cs, bool second_generator) {
    FieldElement i = FieldElement::generator(K);
    std::vector<FieldElement> d;
    for (const auto& [ea, eb] : cs) d.push_back(i.pow(second_generator ? eb : ea));
    return Matrix::diagonal(K, d);
}

}  // namespace

So6Counterexample so6_counterexample_search(long candidate_cap) {
    FieldPtr K = NumberField::create({rat(1), rat(0), rat(1)},
                                     Rect{rat(-1), rat(1), rat(1, 2), rat(2)});
    GroupSpec G = so_split(K, 6);
    std::vector<std::vector<int>> relations = {{1, 1, 1, 1}, {2, 2, 2, 2}, {1, 2, -1, -2}};

    long limit = candidate_cap < 4096 ? candidate_cap : 4096;
    for (long c = 0; c < limit; ++c) {
        CharTuple cs = slot_characters(static_cast<int>(c));
        bool distinct = true;
        for (int x = 0; x < 6 && distinct; ++x)
            for (int y = x + 1; y < 6; ++y)
                if (cs[static_cast<std::size_t>(x)] == cs[static_cast<std::size_t>(y)]) {
                    distinct = false;
                    break;
                }
        if (!distinct) continue;

        Matrix ra = diag_of(K, cs, false);
        Matrix rb = diag_of(K, cs, true);
        /* conjugate by the slot swap (0 5), a determinant minus one element of
           the orthogonal group of the split form */
        CharTuple swapped = cs;
        std::swap(swapped[0], swapped[5]);
        Matrix ra2 = diag_of(K, swapped, false);
        Matrix rb2 = diag_of(K, swapped, true);

        if (!contains(G, ra) || !contains(G, rb) || !contains(G, ra2) || !contains(G, rb2))
            continue;

        auto elem = element_conjugate_tuples(G, {ra, rb}, {ra2, rb2}, 2);
        if (!elem.conjugate) continue;
        Verdict so = tuple_conjugate_in(G, {ra, rb}, {ra2, rb2});
        if (!so.inequivalent()) continue;

        So6Counterexample out{
            FiniteImagePair{G, {ra, rb}, relations},
            FiniteImagePair{G, {ra2, rb2}, relations},
            "every generated word matches characteristic polynomials across the "
            "degree 2 representation family",
            so.certificate};
        if (!validate_finite_image(out.rho1).ok() || !validate_finite_image(out.rho2).ok())
            throw Error("counterexample failed its own validation");
        return out;
    }
    throw NotFound("no counterexample within the candidate budget");
}

}
