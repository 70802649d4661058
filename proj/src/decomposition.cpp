#include "wd/decomposition.hpp"

#include "wd/error.hpp"
#include "wd/roots.hpp"

namespace wd {

namespace {

PolyK lift_charpoly_sf(const Matrix& m) {
    return squarefree_part(m.charpoly());
}

Rational inv_factorial(unsigned k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(1) / Rational(f);
}

}

AdditiveParts semisimple_nilpotent_parts(const Matrix& m) {
    if (!m.square()) throw DimensionMismatch("square matrix expected");
    Matrix id = Matrix::identity(m.field(), m.rows());
    PolyK g = lift_charpoly_sf(m);
    PolyK dg = g.derivative();
    Matrix s = m;
    for (int iter = 0; iter < 64; ++iter) {
        Matrix gs = g.eval_in(s, id);
        if (gs.is_zero()) break;
        s = s - gs * dg.eval_in(s, id).inverse();
    }
    if (!g.eval_in(s, id).is_zero())
        throw BudgetExhausted("semisimple part iteration did not settle");
    Matrix nil = m - s;
    if (!is_nilpotent(nil) || !(s * nil == nil * s))
        throw BudgetExhausted("semisimple part certification failed");
    return {s, nil};
}

JordanParts jordan_decomposition(const Matrix& m) {
    auto [s, nil] = semisimple_nilpotent_parts(m);
    Matrix u = s.inverse() * m;
    if (!is_unipotent(u)) throw NotUnipotent("unipotent factor certification failed");
    return {s, u};
}

bool is_semisimple(const Matrix& m) {
    PolyK mu = m.minpoly();
    return squarefree_part(mu).degree() == mu.degree();
}

Matrix exp_nilpotent(const Matrix& n) {
    if (!n.square()) throw DimensionMismatch("square matrix expected");
    if (!is_nilpotent(n)) throw NotNilpotent("exp of a non-nilpotent matrix");
    int d = n.rows();
    Matrix acc = Matrix::identity(n.field(), d);
    Matrix pw = Matrix::identity(n.field(), d);
    for (unsigned k = 1; k <= static_cast<unsigned>(d); ++k) {
        pw = pw * n;
        if (pw.is_zero()) break;
        acc = acc + pw * inv_factorial(k);
    }
    return acc;
}

Matrix log_unipotent(const Matrix& u) {
    if (!u.square()) throw DimensionMismatch("square matrix expected");
    int d = u.rows();
    Matrix m = u - Matrix::identity(u.field(), d);
    if (!is_nilpotent(m)) throw NotUnipotent("log of a non-unipotent matrix");
    Matrix acc = Matrix::zero(u.field(), d, d);
    Matrix pw = Matrix::identity(u.field(), d);
    for (unsigned k = 1; k <= static_cast<unsigned>(d); ++k) {
        pw = pw * m;
        if (pw.is_zero()) break;
        acc = acc + pw * rat(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
    }
    return acc;
}

std::optional<Matrix> commuting_sqrt(const Matrix& a) {
    if (!a.square()) throw DimensionMismatch("square matrix expected");
    int d = a.rows();
    const FieldPtr& K = a.field();
    Matrix id = Matrix::identity(K, d);
    auto [s, u] = jordan_decomposition(a);
    PolyK g = s.minpoly();
    auto spec = roots_in_field(g);
    if (static_cast<int>(spec.size()) != g.degree()) return std::nullopt;
    std::vector<FieldElement> lam, rt;
    for (const auto& [r, mult] : spec) {
        (void)mult;
        auto sq = sqrt_in_field(r);
        if (!sq) return std::nullopt;
        lam.push_back(r);
        rt.push_back(*sq);
    }
    /* interpolate t -> sqrt(t) on the spectrum, evaluate at s */
    Matrix ssqrt = Matrix::zero(K, d, d);
    for (std::size_t i = 0; i < lam.size(); ++i) {
        Matrix proj = id;
        FieldElement denom = FieldElement::one(K);
        for (std::size_t j = 0; j < lam.size(); ++j) {
            if (j == i) continue;
            proj = proj * (s - id * lam[j]);
            denom = denom * (lam[i] - lam[j]);
        }
        ssqrt = ssqrt + proj * (rt[i] / denom);
    }
    Matrix r = ssqrt * exp_nilpotent(log_unipotent(u) * rat(1, 2));
    if (!(r * r == a)) return std::nullopt;
    return r;
}

}
