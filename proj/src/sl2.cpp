#include "wd/sl2.hpp"

#include "wd/conjugacy.hpp"
#include "wd/decomposition.hpp"
#include "wd/error.hpp"
#include "wd/roots.hpp"

#include <functional>

namespace wd {

namespace {

using Op = std::function<Matrix(const Matrix&)>;

/* least-squares-free exact solve of sum_b c_b ops(basis_b) = rhs, all
   operators stacked; returns the combined element of the span */
std::optional<Matrix> solve_in_span(const std::vector<Matrix>& basis,
                                    const std::vector<Op>& ops,
                                    const std::vector<Matrix>& rhs) {
    if (basis.empty()) return std::nullopt;
    const FieldPtr& K = basis.front().field();
    int n = basis.front().rows();
    int n2 = n * n;
    int rows = static_cast<int>(ops.size()) * n2;
    Matrix A(K, rows, static_cast<int>(basis.size()));
    for (std::size_t b = 0; b < basis.size(); ++b)
        for (std::size_t o = 0; o < ops.size(); ++o) {
            auto col = vec(ops[o](basis[b]));
            for (int i = 0; i < n2; ++i)
                A.at(static_cast<int>(o) * n2 + i, static_cast<int>(b)) =
                    col[static_cast<std::size_t>(i)];
        }
    Matrix B(K, rows, 1);
    for (std::size_t o = 0; o < rhs.size(); ++o) {
        auto col = vec(rhs[o]);
        for (int i = 0; i < n2; ++i)
            B.at(static_cast<int>(o) * n2 + i, 0) = col[static_cast<std::size_t>(i)];
    }
    auto X = Matrix::solve(A, B);
    if (!X) return std::nullopt;
    Matrix Z = Matrix::zero(K, n, n);
    for (std::size_t b = 0; b < basis.size(); ++b)
        Z = Z + basis[b] * X->at(static_cast<int>(b), 0);
    return Z;
}

}  // namespace

SL2Triple SL2Triple::lift(const FieldPtr& K2) const {
    return {E.lift(K2), H.lift(K2), F.lift(K2)};
}

bool sl2_brackets_hold(const SL2Triple& t) {
    return comm(t.H, t.E) == t.E * rat(2) && comm(t.H, t.F) == t.F * rat(-2) &&
           comm(t.E, t.F) == t.H;
}

SL2Triple jacobson_morozov(const Matrix& N, const GroupSpec& g) {
    if (!lie_contains(g, N))
        throw NotInGroup("nilpotent outside the tangent algebra of " + g.str());
    if (!is_nilpotent(N)) throw NotNilpotent("raising candidate");
    const FieldPtr& K = N.field();
    int n = N.rows();
    Matrix zero = Matrix::zero(K, n, n);
    if (N.is_zero()) return {zero, zero, zero};
    auto basis = lie_basis(g, K);
    auto Z = solve_in_span(basis, {[&](const Matrix& z) { return comm(comm(N, z), N); }},
                           {N * rat(2)});
    if (!Z) throw NotFound("no grading operator over the nilpotent in " + g.str());
    Matrix H = comm(N, *Z);
    auto F = solve_in_span(basis,
                           {[&](const Matrix& f) { return comm(N, f); },
                            [&](const Matrix& f) { return comm(H, f) + f * rat(2); }},
                           {H, zero});
    if (!F) throw NotFound("no lowering operator over the nilpotent in " + g.str());
    SL2Triple t{N, H, *F};
    if (!sl2_brackets_hold(t)) throw Error("bracket certification failed");
    return t;
}

SL2Triple adapted_triple(const Matrix& N, const GroupSpec& g, const Matrix& s,
                         const Rational& q) {
    if (!lie_contains(g, N))
        throw NotInGroup("nilpotent outside the tangent algebra of " + g.str());
    if (!is_nilpotent(N)) throw NotNilpotent("raising candidate");
    const FieldPtr& K = N.field();
    int n = N.rows();
    Matrix zero = Matrix::zero(K, n, n);
    if (N.is_zero()) return {zero, zero, zero};
    auto basis = lie_basis(g, K);
    auto Z = solve_in_span(
        basis,
        {[&](const Matrix& z) { return comm(comm(N, z), N); },
         [&](const Matrix& z) { return conjugate(s, comm(N, z)) - comm(N, z); }},
        {N * rat(2), zero});
    if (!Z) throw NotFound("no Frobenius-fixed grading operator in " + g.str());
    Matrix H = comm(N, *Z);
    auto F = solve_in_span(
        basis,
        {[&](const Matrix& f) { return comm(N, f); },
         [&](const Matrix& f) { return comm(H, f) + f * rat(2); },
         [&](const Matrix& f) { return conjugate(s, f) * q - f; }},
        {H, zero, zero});
    if (!F) throw NotFound("no Frobenius-scaled lowering operator in " + g.str());
    SL2Triple t{N, H, *F};
    if (!sl2_brackets_hold(t) || !(conjugate(s, t.H) == t.H))
        throw Error("adapted bracket certification failed");
    return t;
}

Matrix weight_scale(const FieldElement& t, const Matrix& H) {
    if (!H.square()) throw DimensionMismatch("weight operator must be square");
    if (t.is_zero()) throw ZeroScale("weight base");
    const FieldPtr& K = H.field();
    int n = H.rows();
    PolyK mp = H.minpoly();
    std::vector<long> weights;
    for (long k = -n; k <= n; ++k)
        if (mp.eval(FieldElement::from_rational(K, rat(k))).is_zero()) weights.push_back(k);
    PolyK split = PolyK::one(FieldElement::one(K));
    for (long k : weights)
        split = split * PolyK(std::vector<FieldElement>{
                          FieldElement::from_rational(K, rat(-k)), FieldElement::one(K)});
    if (!(split == mp))
        throw NotFound("weight operator without integral semisimple spectrum");
    Matrix out = Matrix::zero(K, n, n);
    for (long k : weights) {
        Matrix proj = Matrix::identity(K, n);
        for (long l : weights) {
            if (l == k) continue;
            proj = proj * (H - Matrix::identity(K, n) * rat(l)) * rat(1, k - l);
        }
        out = out + proj * t.pow(k);
    }
    return out;
}

ImaiData imai_decompose(const WDPair& p) {
    if (!is_urfs(p)) throw NotURFS("splitting needs a semisimple Frobenius with nilpotent twist");
    FieldPtr K = p.s.field();
    std::optional<FieldElement> root = sqrt_in_field(FieldElement::from_rational(K, p.q));
    FieldPtr F = K;
    WDPair pl = p;
    if (!root) {
        if (!K->is_rationals())
            throw NonSplitSpectrum("square root of q outside the working field");
        F = NumberField::create({-p.q, rat(0), rat(1)},
                                Rect{rat(0), p.q + rat(1), rat(-1), rat(1)});
        pl = p.lift(F);
    }
    FieldElement t = root ? *root : FieldElement::generator(F);
    SL2Triple triple = adapted_triple(pl.N, pl.group, pl.s, p.q);
    Matrix tH = weight_scale(t, triple.H);
    Matrix s_prime = tH * pl.s.inverse();
    bool central = s_prime * triple.E == triple.E * s_prime &&
                   s_prime * triple.H == triple.H * s_prime &&
                   s_prime * triple.F == triple.F * s_prime;
    if (!central || !(tH * s_prime.inverse() == pl.s) || !contains(pl.group, s_prime))
        throw Error("splitting certification failed");
    return ImaiData{F, pl, triple, t, s_prime};
}

Verdict triples_conjugate_in(const GroupSpec& g, const Matrix& constraint,
                             const SL2Triple& t1, const SL2Triple& t2) {
    if (!(t1.H.charpoly() == t2.H.charpoly()))
        return Verdict::inequivalent_because("weight spectra differ");
    Verdict v = tuple_conjugate_in(g, {constraint, t1.E, t1.H},
                                   {constraint, t2.E, t2.H});
    if (v.equivalent()) {
        const Matrix& w = *v.witness;
        if (!(w * t1.F == t2.F * w))
            throw Error("lowering operator escaped a certified witness");
    }
    return v;
}

}
