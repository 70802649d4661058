#include "wd/isocrystal.hpp"

#include "wd/error.hpp"

namespace wd {

namespace {

bool prime_long(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

USeries padded(const FieldPtr& K, int n, USeries s, int T) {
    while (static_cast<int>(s.size()) < T) s.push_back(Matrix::zero(K, n, n));
    s.resize(static_cast<std::size_t>(T), Matrix::zero(K, n, n));
    return s;
}

USeries s_mul(const USeries& a, const USeries& b, int T) {
    const FieldPtr& K = a.front().field();
    int n = a.front().rows();
    USeries out;
    for (int k = 0; k < T; ++k) {
        Matrix c = Matrix::zero(K, n, n);
        for (int i = 0; i <= k; ++i)
            if (i < static_cast<int>(a.size()) && k - i < static_cast<int>(b.size()))
                c = c + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k - i)];
        out.push_back(std::move(c));
    }
    return out;
}

/* u d/du termwise */
USeries s_theta(const USeries& a) {
    USeries out;
    for (std::size_t k = 0; k < a.size(); ++k) out.push_back(a[k] * rat(static_cast<long>(k)));
    return out;
}

USeries s_sub_up(const USeries& a, long p, int T) {
    const FieldPtr& K = a.front().field();
    int n = a.front().rows();
    USeries out = padded(K, n, {}, T);
    for (std::size_t k = 0; k < a.size(); ++k) {
        long kp = static_cast<long>(k) * p;
        if (kp < T) out[static_cast<std::size_t>(kp)] = a[k];
    }
    return out;
}

USeries s_inverse(const USeries& a, int T) {
    const FieldPtr& K = a.front().field();
    int n = a.front().rows();
    Matrix inv0 = a.front().inverse();
    USeries out = {inv0};
    for (int k = 1; k < T; ++k) {
        Matrix acc = Matrix::zero(K, n, n);
        for (int i = 1; i <= k; ++i)
            if (i < static_cast<int>(a.size()))
                acc = acc + a[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(k - i)];
        out.push_back(inv0 * acc * rat(-1));
    }
    return out;
}

bool s_is_zero(const USeries& a) {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

Matrix mat_pow(Matrix base, long e) {
    Matrix acc = Matrix::identity(base.field(), base.rows());
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool shapes_ok(const LogModule& m) {
    if (m.order < 1 || m.A.empty() || m.Phi.empty()) return false;
    if (static_cast<int>(m.A.size()) != m.order ||
        static_cast<int>(m.Phi.size()) != m.order)
        return false;
    const Matrix& a0 = m.A.front();
    if (!a0.square()) return false;
    for (const auto* s : {&m.A, &m.Phi})
        for (const auto& c : *s)
            if (!c.square() || c.rows() != a0.rows() || !c.field()->same(*a0.field()))
                return false;
    return true;
}

}  // namespace

int LogModule::dim() const { return A.empty() ? 0 : A.front().rows(); }

const FieldPtr& LogModule::field() const { return A.front().field(); }

LogModuleReport validate_log_module(const LogModule& m) {
    LogModuleReport r;
    r.sizes_ok = shapes_ok(m);
    if (!r.sizes_ok) return r;
    r.p_prime = prime_long(m.p);
    r.residue_nilpotent = is_nilpotent(m.A.front());
    r.frobenius_invertible = !m.Phi.front().det().is_zero();
    if (!r.p_prime) return r;
    USeries lhs = s_mul(m.A, m.Phi, m.order);
    USeries theta = s_theta(m.Phi);
    USeries rhs = s_mul(m.Phi, s_sub_up(m.A, m.p, m.order), m.order);
    r.compatible = true;
    for (int k = 0; k < m.order; ++k) {
        Matrix diff = theta[static_cast<std::size_t>(k)] + lhs[static_cast<std::size_t>(k)] -
                      rhs[static_cast<std::size_t>(k)] * rat(m.p);
        if (!diff.is_zero()) {
            r.compatible = false;
            r.first_bad_power = k;
            break;
        }
    }
    return r;
}

LogModule constant_module(long p, int order, const Matrix& A0, const Matrix& P) {
    const FieldPtr& K = A0.field();
    int n = A0.rows();
    LogModule m{p, order, padded(K, n, {A0}, order), padded(K, n, {P}, order)};
    return m;
}

PhiNReport validate_phi_n(const PhiNModule& d) {
    PhiNReport r;
    r.sizes_ok = d.phi0.square() && d.N.square() && d.phi0.rows() == d.N.rows() &&
                 d.phi0.field()->same(*d.N.field());
    if (!r.sizes_ok) return r;
    r.p_prime = prime_long(d.p);
    r.phi0_invertible = !d.phi0.det().is_zero();
    r.n_nilpotent = is_nilpotent(d.N);
    r.relation_ok = d.N * d.phi0 == d.phi0 * d.N * rat(d.p);
    return r;
}

PhiNModule special_fiber(const LogModule& m) {
    if (!validate_log_module(m).ok()) throw InvalidModule("log module fails validation");
    PhiNModule d{m.p, m.Phi.front(), m.A.front() * rat(-1)};
    if (!validate_phi_n(d).ok()) throw Error("fiber certification failed");
    return d;
}

LogModule gauge_transform(const LogModule& m, const USeries& G) {
    if (!shapes_ok(m)) throw DimensionMismatch("log module shapes disagree");
    if (G.empty() || !G.front().square() || G.front().rows() != m.dim())
        throw DimensionMismatch("gauge shape disagrees");
    int T = m.order;
    const FieldPtr& K = m.field();
    int n = m.dim();
    USeries g = padded(K, n, G, T);
    USeries ginv = s_inverse(g, T);
    USeries inner = s_mul(m.A, g, T);
    USeries tg = s_theta(g);
    for (int k = 0; k < T; ++k)
        inner[static_cast<std::size_t>(k)] =
            inner[static_cast<std::size_t>(k)] + tg[static_cast<std::size_t>(k)];
    USeries newA = s_mul(ginv, inner, T);
    USeries newPhi = s_mul(ginv, s_mul(m.Phi, s_sub_up(g, m.p, T), T), T);
    return LogModule{m.p, T, std::move(newA), std::move(newPhi)};
}

GaugeData gauge_to_constant(const LogModule& m) {
    if (!validate_log_module(m).ok()) throw InvalidModule("log module fails validation");
    const FieldPtr& K = m.field();
    int n = m.dim();
    int T = m.order;
    const Matrix& A0 = m.A.front();
    USeries G = {Matrix::identity(K, n)};
    for (int k = 1; k < T; ++k) {
        Matrix rhs = Matrix::zero(K, n, n);
        for (int i = 1; i <= k; ++i)
            rhs = rhs - m.A[static_cast<std::size_t>(i)] * G[static_cast<std::size_t>(k - i)];
        /* invert k + ad_{A0} by the finite geometric series of the
           nilpotent part */
        Matrix gk = Matrix::zero(K, n, n);
        Matrix term = rhs;
        Rational scale = rat(1, k);
        while (!term.is_zero()) {
            gk = gk + term * scale;
            term = (A0 * term - term * A0) * rat(-1);
            scale = scale / k;
        }
        G.push_back(std::move(gk));
    }
    LogModule out = gauge_transform(m, G);
    for (int k = 1; k < T; ++k) {
        if (!out.A[static_cast<std::size_t>(k)].is_zero())
            throw Error("connection failed to become constant");
        if (!out.Phi[static_cast<std::size_t>(k)].is_zero())
            throw Error("transported frobenius failed to become constant");
    }
    if (!(out.A.front() == A0)) throw Error("constant form changed the residue");
    return GaugeData{std::move(G), std::move(out)};
}

FiberComparison check_fiber_comparison(const LogModule& m) {
    GaugeData g = gauge_to_constant(m);
    PhiNModule lattice{m.p, g.constant.Phi.front(), g.constant.A.front() * rat(-1)};
    PhiNModule fiber = special_fiber(m);
    bool pass = lattice.phi0 == fiber.phi0 && lattice.N == fiber.N &&
                validate_phi_n(lattice).ok();
    return FiberComparison{std::move(lattice), std::move(fiber), pass};
}

WDPair wd_from_phin(const PhiNModule& d, int s_deg) {
    if (s_deg < 1) throw InvalidModule("frobenius degree must be positive");
    if (!validate_phi_n(d).ok()) throw InvalidModule("module relation fails");
    const FieldPtr& K = d.phi0.field();
    Matrix s = mat_pow(d.phi0.inverse(), s_deg);
    Rational q = rat_pow(rat(d.p), s_deg);
    WDPair p{GroupSpec::gl(K, d.phi0.rows()), s, d.N, q};
    if (!validate_pair(p).ok()) throw Error("functor output failed validation");
    return p;
}

}
