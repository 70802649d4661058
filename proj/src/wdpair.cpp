#include "wd/wdpair.hpp"

#include "wd/decomposition.hpp"
#include "wd/error.hpp"

#include <sstream>

namespace wd {

WDPair WDPair::lift(const FieldPtr& K2) const {
    return WDPair{group.lift(K2), s.lift(K2), N.lift(K2), q};
}

std::string PairReport::str() const {
    std::ostringstream os;
    os << "sizes " << (sizes_ok ? "ok" : "FAIL")
       << ", q " << (q_ok ? "ok" : "FAIL")
       << ", s in group " << (s_in_group ? "ok" : "FAIL")
       << ", N in Lie " << (n_in_lie ? "ok" : "FAIL")
       << ", twist " << (twist_ok ? "ok" : "FAIL")
       << ", N nilpotent " << (n_nilpotent ? "ok" : "FAIL");
    return os.str();
}

PairReport validate_pair(const WDPair& p) {
    PairReport r;
    r.sizes_ok = p.s.square() && p.N.square() && p.s.rows() == p.group.dim() &&
                 p.N.rows() == p.group.dim() && p.s.field()->same(*p.N.field());
    if (!r.sizes_ok) return r;
    r.q_ok = p.q > 1;
    r.s_in_group = contains(p.group, p.s);
    r.n_in_lie = lie_contains(p.group, p.N);
    if (r.s_in_group) r.twist_ok = p.s * p.N == p.N * p.s * p.q;
    r.n_nilpotent = is_nilpotent(p.N);
    return r;
}

bool is_urfs(const WDPair& p) {
    if (!validate_pair(p).ok()) return false;
    return is_semisimple(p.s);
}

WDPair semisimplify(const WDPair& p) {
    return WDPair{p.group, jordan_decomposition(p.s).s, p.N, p.q};
}

WDPair pushforward(const WDPair& p, const Rep& r) {
    if (!r.source().same(p.group))
        throw DimensionMismatch("representation source " + r.source().str() +
                                " does not match " + p.group.str());
    return WDPair{GroupSpec::gl(p.s.field(), r.dim()), r.group_action(p.s),
                  r.lie_action(p.N), p.q};
}

WDPair rescale_nilpotent(const WDPair& p, const FieldElement& a) {
    if (a.is_zero()) throw ZeroScale("monodromy rescale by zero");
    return WDPair{p.group, p.s, p.N * a, p.q};
}

WDPair apply_conjugation(const WDPair& p, const Matrix& g) {
    if (!contains(p.group, g))
        throw NotInGroup("conjugator is not in " + p.group.str());
    Matrix gi = g.inverse();
    return WDPair{p.group, g * p.s * gi, g * p.N * gi, p.q};
}

}
