#include "wd/sampling.hpp"

#include "wd/decomposition.hpp"
#include "wd/error.hpp"

#include <algorithm>

namespace wd {

namespace {

FieldElement from_rat(const FieldPtr& K, const Rational& r) {
    return FieldElement::from_rational(K, r);
}

int rand_index(Rng& g, int n) {
    std::uniform_int_distribution<int> d(0, n - 1);
    return d(g);
}

Matrix outer(const std::vector<FieldElement>& u, const std::vector<FieldElement>& v) {
    const FieldPtr& K = u.front().field();
    Matrix m(K, static_cast<int>(u.size()), static_cast<int>(v.size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m.at(i, j) = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
    return m;
}

std::vector<FieldElement> rand_vector(Rng& g, const FieldPtr& K, int n, long bound) {
    for (;;) {
        std::vector<FieldElement> v;
        for (int i = 0; i < n; ++i) v.push_back(rand_element(g, K, bound));
        for (const auto& x : v)
            if (!x.is_zero()) return v;
    }
}

std::vector<FieldElement> apply_form(const Matrix& B, const std::vector<FieldElement>& v) {
    std::vector<FieldElement> out;
    for (int i = 0; i < B.rows(); ++i) {
        FieldElement acc = FieldElement::zero(B.field());
        for (int j = 0; j < B.cols(); ++j)
            acc = acc + B.at(j, i) * v[static_cast<std::size_t>(j)];
        out.push_back(acc);
    }
    return out;
}

FieldElement dot(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
    FieldElement acc = FieldElement::zero(a.front().field());
    for (std::size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
    return acc;
}

/* x -> x + c (v^T J x) v, symplectic for any v and c */
Matrix transvection(Rng& g, const Matrix& J, long bound) {
    const FieldPtr& K = J.field();
    int n = J.rows();
    std::vector<FieldElement> v = rand_vector(g, K, n, bound);
    FieldElement c = rand_element(g, K, bound);
    return Matrix::identity(K, n) + outer(v, apply_form(J, v)) * c;
}

/* reflection in a vector of nonzero length, orthogonal with determinant -1 */
Matrix reflection(Rng& g, const Matrix& B, long bound) {
    const FieldPtr& K = B.field();
    int n = B.rows();
    for (;;) {
        std::vector<FieldElement> v = rand_vector(g, K, n, bound);
        std::vector<FieldElement> Bv = apply_form(B, v);
        FieldElement len = dot(v, Bv);
        if (len.is_zero()) continue;
        return Matrix::identity(K, n) -
               outer(v, Bv) * (FieldElement::from_rational(K, rat(2)) / len);
    }
}

std::vector<Rational> chained_spectrum(Rng& g, int n, const Rational& q) {
    std::vector<Rational> eigs;
    auto used = [&](const Rational& v) {
        return std::find(eigs.begin(), eigs.end(), v) != eigs.end();
    };
    while (static_cast<int>(eigs.size()) < n) {
        int room = n - static_cast<int>(eigs.size());
        int len = 1 + rand_index(g, std::min(room, 3));
        Rational base;
        for (long c = 1;; ++c) {
            base = rat(c);
            bool clash = false;
            Rational v = base;
            for (int i = 0; i < len; ++i, v *= q)
                if (used(v)) clash = true;
            if (!clash) break;
        }
        Rational v = base;
        for (int i = 0; i < len; ++i, v *= q) {
            eigs.push_back(v);
            if (static_cast<int>(eigs.size()) < n && rand_index(g, 3) == 0) eigs.push_back(v);
        }
    }
    eigs.resize(static_cast<std::size_t>(n));
    return eigs;
}

Matrix rand_twist_element(Rng& g, const GroupSpec& G, const Matrix& s, const Rational& q,
                          long bound) {
    auto space = twist_space(G, s, q);
    Matrix N = Matrix::zero(s.field(), s.rows(), s.rows());
    if (space.empty()) return N;
    bool hit = false;
    for (const auto& b : space) {
        long c = rand_int(g, bound);
        if (c == 0) continue;
        N = N + b * rat(c);
        hit = true;
    }
    if (!hit) N = N + space[static_cast<std::size_t>(rand_index(g, static_cast<int>(space.size())))];
    return N;
}

/* torus member of a group whose form is antidiagonal: inverse-paired diagonal
   with one q-ratio pair up front */
std::vector<Rational> paired_spectrum(Rng& g, int n, const Rational& q) {
    int m = n / 2;
    std::vector<Rational> front;
    Rational b = rat(2 + rand_index(g, 3));
    front.push_back(b * q);
    if (m > 1) front.push_back(b);
    long c = 5;
    while (static_cast<int>(front.size()) < m) {
        front.push_back(rat(c));
        c += 2;
    }
    std::vector<Rational> eigs = front;
    for (int i = m - 1; i >= 0; --i)
        eigs.push_back(1 / front[static_cast<std::size_t>(i)]);
    return eigs;
}

bool antidiagonal_form(const GroupSpec& G) {
    if (G.kind() != GroupKind::Sp && G.kind() != GroupKind::SO && G.kind() != GroupKind::O)
        return false;
    const Matrix& F = G.form();
    for (int i = 0; i < F.rows(); ++i)
        for (int j = 0; j < F.cols(); ++j)
            if (!F.at(i, j).is_zero() && j != F.cols() - 1 - i) return false;
    return true;
}

Matrix diag_of(const FieldPtr& K, const std::vector<Rational>& d) {
    std::vector<FieldElement> e;
    for (const auto& v : d) e.push_back(from_rat(K, v));
    return Matrix::diagonal(K, e);
}

}  // namespace

long rand_int(Rng& g, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    return d(g);
}

FieldElement rand_element(Rng& g, const FieldPtr& K, long bound) {
    std::vector<Rational> c(static_cast<std::size_t>(K->degree()));
    for (auto& x : c) x = rat(rand_int(g, bound));
    return FieldElement(K, std::move(c));
}

Matrix rand_matrix(Rng& g, const FieldPtr& K, int rows, int cols, long bound) {
    Matrix m(K, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rand_element(g, K, bound);
    return m;
}

Matrix rand_invertible(Rng& g, const FieldPtr& K, int n, long bound) {
    for (;;) {
        Matrix m = rand_matrix(g, K, n, n, bound);
        if (!m.det().is_zero()) return m;
    }
}

Matrix rand_group_element(Rng& g, const GroupSpec& G, long bound) {
    const FieldPtr& K = G.field();
    int n = G.dim();
    switch (G.kind()) {
        case GroupKind::GL:
            return rand_invertible(g, K, n, bound);
        case GroupKind::SL: {
            Matrix m = Matrix::identity(K, n);
            for (int t = 0; t < 2 * n + 2; ++t) {
                int i = rand_index(g, n);
                int j = rand_index(g, n);
                if (i == j) continue;
                Matrix e = Matrix::identity(K, n);
                e.at(i, j) = rand_element(g, K, bound);
                m = m * e;
            }
            return m;
        }
        case GroupKind::Sp: {
            Matrix m = Matrix::identity(K, n);
            for (int t = 0; t < 4; ++t) m = m * transvection(g, G.form(), bound);
            return m;
        }
        case GroupKind::SO: {
            Matrix m = Matrix::identity(K, n);
            for (int t = 0; t < 2; ++t)
                m = m * reflection(g, G.form(), bound) * reflection(g, G.form(), bound);
            return m;
        }
        case GroupKind::O: {
            Matrix m = reflection(g, G.form(), bound) * reflection(g, G.form(), bound);
            if (rand_index(g, 2) == 0) m = m * reflection(g, G.form(), bound);
            return m;
        }
        case GroupKind::Product: {
            std::vector<Matrix> blocks;
            for (const auto& f : G.factors()) blocks.push_back(rand_group_element(g, f, bound));
            return block_diagonal(blocks);
        }
        case GroupKind::TensorStabilizer: {
            for (int t = 0; t < 8; ++t) {
                Matrix x = Matrix::zero(K, n, n);
                for (const auto& b : lie_basis(G, K)) x = x + b * rat(rand_int(g, bound));
                if (!x.is_zero() && is_nilpotent(x)) return exp_nilpotent(x);
            }
            return Matrix::identity(K, n);
        }
    }
    throw Error("unreachable group kind");
}

std::vector<Matrix> twist_space(const GroupSpec& G, const Matrix& s, const Rational& q) {
    const FieldPtr& K = s.field();
    int n = s.rows();
    auto basis = lie_basis(G, K);
    Matrix M(K, n * n, static_cast<int>(basis.size()));
    for (std::size_t b = 0; b < basis.size(); ++b) {
        auto col = vec(s * basis[b] - basis[b] * s * q);
        for (int i = 0; i < n * n; ++i) M.at(i, static_cast<int>(b)) = col[static_cast<std::size_t>(i)];
    }
    std::vector<Matrix> out;
    for (const auto& c : M.kernel()) {
        Matrix N = Matrix::zero(K, n, n);
        for (std::size_t b = 0; b < basis.size(); ++b) N = N + basis[b] * c[b];
        out.push_back(std::move(N));
    }
    return out;
}

GroupSpec so_split(const FieldPtr& K, int n) {
    if (n < 2 || n % 2 != 0) throw InvalidGroup("split form needs even size");
    Matrix B = Matrix::zero(K, n, n);
    for (int i = 0; i < n; ++i) B.at(i, n - 1 - i) = FieldElement::one(K);
    return GroupSpec::so(std::move(B));
}

WDPair rand_urfs_pair(Rng& g, const GroupSpec& G, const Rational& q) {
    const FieldPtr& K = G.field();
    int n = G.dim();
    for (int attempt = 0; attempt < 32; ++attempt) {
        Matrix s = Matrix::identity(K, n);
        switch (G.kind()) {
            case GroupKind::GL:
                s = diag_of(K, chained_spectrum(g, n, q));
                break;
            case GroupKind::SL: {
                std::optional<Rational> root = rational_sqrt(q);
                std::vector<Rational> d;
                if (n == 1) {
                    d.push_back(rat(1));
                } else {
                    if (root) {
                        d.push_back(1 / *root);
                        d.push_back(*root);
                    } else {
                        Rational t = rat(2 + rand_index(g, 3));
                        d.push_back(1 / t);
                        d.push_back(t);
                    }
                    while (static_cast<int>(d.size()) + 2 <= n) {
                        Rational lam = d.back() * q;
                        d.push_back(lam);
                        d.push_back(1 / lam);
                    }
                    if (static_cast<int>(d.size()) < n) d.push_back(rat(1));
                }
                s = diag_of(K, d);
                break;
            }
            case GroupKind::Sp:
            case GroupKind::SO:
            case GroupKind::O:
                if (antidiagonal_form(G) && n % 2 == 0)
                    s = diag_of(K, paired_spectrum(g, n, q));
                break;
            case GroupKind::Product: {
                std::vector<Matrix> sb, nb;
                for (const auto& f : G.factors()) {
                    WDPair fp = rand_urfs_pair(g, f, q);
                    sb.push_back(fp.s);
                    nb.push_back(fp.N);
                }
                WDPair p{G, block_diagonal(sb), block_diagonal(nb), q};
                Matrix h = rand_group_element(g, G, 2);
                p = apply_conjugation(p, h);
                if (is_urfs(p)) return p;
                continue;
            }
            case GroupKind::TensorStabilizer:
                break;
        }
        Matrix N = rand_twist_element(g, G, s, q, 2);
        WDPair p{G, s, N, q};
        if (!validate_pair(p).ok()) continue;
        Matrix h = rand_group_element(g, G, 2);
        p = apply_conjugation(p, h);
        if (is_urfs(p)) return p;
    }
    throw Error("no URFS sample found for " + G.str());
}

}
