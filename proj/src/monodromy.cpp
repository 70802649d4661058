#include "wd/monodromy.hpp"

#include "wd/decomposition.hpp"
#include "wd/error.hpp"

namespace wd {

namespace {

Matrix mat_pow(Matrix base, long e) {
    Matrix acc = Matrix::identity(base.field(), base.rows());
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

}  // namespace

PresentationReport validate_presentation(const TamePresentation& t) {
    PresentationReport r;
    int n = t.group.dim();
    r.sizes_ok = t.sigma.square() && t.gamma.square() && t.sigma.rows() == n &&
                 t.gamma.rows() == n && t.sigma.field()->same(*t.group.field()) &&
                 t.gamma.field()->same(*t.group.field());
    if (!r.sizes_ok) return r;
    auto e = rat_as_long(t.q);
    r.q_ok = is_integer(t.q) && e && *e >= 2;
    r.sigma_in_group = contains(t.group, t.sigma);
    r.gamma_in_group = contains(t.group, t.gamma);
    r.gamma_unipotent = is_unipotent(t.gamma);
    if (r.q_ok && !t.sigma.det().is_zero())
        r.relation_ok =
            t.sigma * t.gamma * t.sigma.inverse() == mat_pow(t.gamma, *e);
    return r;
}

WDPair extract_wd(const TamePresentation& t) {
    PresentationReport r = validate_presentation(t);
    if (!r.sizes_ok) throw DimensionMismatch("presentation sizes disagree");
    if (!r.gamma_unipotent) throw NotUnipotent("inertia image");
    if (!r.ok()) throw InvalidModule("presentation fails its defining relation");
    WDPair p{t.group, t.sigma, log_unipotent(t.gamma), t.q};
    if (!validate_pair(p).ok()) throw Error("extracted pair failed validation");
    return p;
}

TamePresentation presentation_of(const WDPair& p) {
    if (!validate_pair(p).ok()) throw InvalidModule("presentation requires a valid pair");
    return {p.group, p.s, exp_nilpotent(p.N), p.q};
}

WDPair restrict_totally_ramified(const WDPair& p, int e, bool renormalize) {
    if (e <= 0) throw ZeroScale("ramification degree");
    if (!validate_pair(p).ok()) throw InvalidModule("restriction requires a valid pair");
    if (e == 1 || renormalize) return p;
    return rescale_nilpotent(p, FieldElement::from_rational(p.s.field(), rat(e)));
}

Verdict identify_across_fields(const WDPair& p_mixed, const WDPair& p_equal,
                               const Budget& budget) {
    return g_equivalent(p_mixed, p_equal, budget);
}

}
