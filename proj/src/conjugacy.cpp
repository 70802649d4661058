#include "wd/conjugacy.hpp"

#include "wd/decomposition.hpp"
#include "wd/error.hpp"
#include "wd/roots.hpp"
#include "wd/sampling.hpp"
#include "wd/sl2.hpp"

#include <algorithm>
#include <sstream>

namespace wd {

namespace {

using Cols = std::vector<std::vector<FieldElement>>;

Matrix from_cols(const FieldPtr& K, int d, const Cols& cols) {
    Matrix m(K, d, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < d; ++i) m.at(i, static_cast<int>(j)) = cols[j][static_cast<std::size_t>(i)];
    return m;
}

int cols_rank(const FieldPtr& K, const Cols& cols) {
    if (cols.empty()) return 0;
    return Matrix::from_rows(K, cols).rank();
}

/* columns of extra that enlarge the span of base; base grows as they are taken */
Cols complement_in(const FieldPtr& K, Cols base, const Cols& extra) {
    Cols heads;
    int r = cols_rank(K, base);
    for (const auto& v : extra) {
        Cols trial = base;
        trial.push_back(v);
        int r2 = cols_rank(K, trial);
        if (r2 > r) {
            heads.push_back(v);
            base = std::move(trial);
            r = r2;
        }
    }
    return heads;
}

Cols intersect_cols(const FieldPtr& K, int d, const Cols& A, const Cols& B) {
    if (A.empty() || B.empty()) return {};
    Matrix m(K, d, static_cast<int>(A.size() + B.size()));
    for (std::size_t j = 0; j < A.size(); ++j)
        for (int i = 0; i < d; ++i) m.at(i, static_cast<int>(j)) = A[j][static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < B.size(); ++j)
        for (int i = 0; i < d; ++i)
            m.at(i, static_cast<int>(A.size() + j)) = -B[j][static_cast<std::size_t>(i)];
    Cols raw;
    for (const auto& v : m.kernel()) {
        std::vector<FieldElement> w(static_cast<std::size_t>(d), FieldElement::zero(K));
        for (std::size_t j = 0; j < A.size(); ++j)
            for (int i = 0; i < d; ++i)
                w[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] + A[j][static_cast<std::size_t>(i)] * v[j];
        bool nz = false;
        for (const auto& x : w)
            if (!x.is_zero()) nz = true;
        if (nz) raw.push_back(std::move(w));
    }
    return complement_in(K, {}, raw);
}

std::vector<FieldElement> mat_vec(const Matrix& m, const std::vector<FieldElement>& v) {
    std::vector<FieldElement> out;
    for (int i = 0; i < m.rows(); ++i) {
        FieldElement acc = FieldElement::zero(m.field());
        for (int j = 0; j < m.cols(); ++j) acc = acc + m.at(i, j) * v[static_cast<std::size_t>(j)];
        out.push_back(acc);
    }
    return out;
}

/* one eigenvalue ladder with its eigenspaces and graded maps */
struct ChainWork {
    ChainData data;
    std::vector<Matrix> V; /* ambient eigenspace bases, n x d_i */
    std::vector<Matrix> C; /* graded monodromy maps, d_{i+1} x d_i */
};

WDPair as_general_linear(const WDPair& p) {
    if (p.group.kind() == GroupKind::GL) return p;
    return WDPair{GroupSpec::gl(p.s.field(), p.s.rows()), p.s, p.N, p.q};
}

std::vector<ChainWork> analyze_chains(const WDPair& p) {
    if (!is_urfs(p)) throw NotURFS("chain data requires a semisimple Frobenius pair");
    const FieldPtr& K = p.s.field();
    int n = p.s.rows();
    auto roots = roots_in_field(p.s.charpoly());
    int total = 0;
    for (const auto& r : roots) total += static_cast<int>(r.second);
    if (total != n) throw NonSplitSpectrum("Frobenius spectrum leaves the working field");
    FieldElement qK = FieldElement::from_rational(K, p.q);
    auto index_of = [&](const FieldElement& v) -> int {
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (roots[i].first == v) return static_cast<int>(i);
        return -1;
    };

    std::vector<ChainWork> out;
    int positions_seen = 0;
    for (const auto& root : roots) {
        if (index_of(root.first * qK.inverse()) != -1) continue; /* not a ladder base */
        ChainWork w{{root.first, {}, {}}, {}, {}};
        FieldElement v = root.first;
        while (index_of(v) != -1) {
            Matrix shifted = p.s - Matrix::identity(K, n) * v;
            Cols null_vecs = shifted.kernel();
            if (null_vecs.empty()) throw Error("missing eigenspace for a located eigenvalue");
            w.data.eigen_dims.push_back(static_cast<int>(null_vecs.size()));
            w.V.push_back(from_cols(K, n, null_vecs));
            v = v * qK;
            ++positions_seen;
        }
        int k = w.data.length() - 1;
        for (int i = 0; i < k; ++i) {
            auto Ci = Matrix::solve(w.V[static_cast<std::size_t>(i) + 1],
                                    p.N * w.V[static_cast<std::size_t>(i)]);
            if (!Ci) throw Error("monodromy escaped the next eigenspace");
            w.C.push_back(std::move(*Ci));
        }
        if (!(p.N * w.V[static_cast<std::size_t>(k)]).is_zero())
            throw Error("monodromy escaped the top of a ladder");

        auto comp_rank = [&](int i, int j) -> int {
            if (i < 0 || j > k) return 0;
            if (i == j) return w.data.eigen_dims[static_cast<std::size_t>(i)];
            Matrix comp = w.C[static_cast<std::size_t>(i)];
            for (int t = i + 1; t < j; ++t) comp = w.C[static_cast<std::size_t>(t)] * comp;
            return comp.rank();
        };
        for (int i = 0; i <= k; ++i) {
            int covered = 0;
            for (int a = 0; a <= i; ++a)
                for (int b = i; b <= k; ++b) {
                    int m = comp_rank(a, b) - comp_rank(a - 1, b) - comp_rank(a, b + 1) +
                            comp_rank(a - 1, b + 1);
                    if (m < 0) throw Error("negative strand multiplicity");
                    if (m > 0 && a == i) w.data.intervals[{a, b}] = m;
                    covered += m;
                }
            if (covered != w.data.eigen_dims[static_cast<std::size_t>(i)])
                throw Error("strand multiplicities do not cover an eigenspace");
        }
        out.push_back(std::move(w));
    }
    if (positions_seen != static_cast<int>(roots.size()))
        throw Error("ladder walk missed an eigenvalue");
    std::sort(out.begin(), out.end(), [](const ChainWork& a, const ChainWork& b) {
        return a.data.base.cmp(b.data.base) < 0;
    });
    return out;
}

ChainInvariant invariant_of(const std::vector<ChainWork>& works) {
    ChainInvariant inv;
    for (const auto& w : works) inv.chains.push_back(w.data);
    return inv;
}

}  // namespace

std::string ChainInvariant::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t c = 0; c < chains.size(); ++c) {
        if (c) os << "; ";
        os << "base=" << chains[c].base.str() << " dims=[";
        for (std::size_t i = 0; i < chains[c].eigen_dims.size(); ++i) {
            if (i) os << ",";
            os << chains[c].eigen_dims[i];
        }
        os << "]";
        for (const auto& [ij, m] : chains[c].intervals)
            os << " m[" << ij.first << "," << ij.second << "]=" << m;
    }
    os << "}";
    return os.str();
}

ChainInvariant chain_invariant(const WDPair& p) {
    if (p.group.kind() != GroupKind::GL)
        throw InvalidGroup("chain data is defined for general-linear pairs");
    return invariant_of(analyze_chains(p));
}

WDPair canonical_model(const ChainInvariant& inv, const Rational& q, const FieldPtr& K) {
    int n = 0;
    for (const auto& c : inv.chains)
        for (int d : c.eigen_dims) n += d;
    if (n == 0) throw DimensionMismatch("empty invariant");
    FieldElement qK = FieldElement::from_rational(K, q);
    std::vector<FieldElement> diag;
    Matrix N = Matrix::zero(K, n, n);
    for (const auto& c : inv.chains) {
        if (!c.base.field()->same(*K)) throw InvalidField("invariant lives over another field");
        for (const auto& [ij, m] : c.intervals)
            for (int copy = 0; copy < m; ++copy)
                for (int u = ij.first; u <= ij.second; ++u) {
                    diag.push_back(c.base * qK.pow(u));
                    if (u > ij.first) {
                        int col = static_cast<int>(diag.size()) - 2;
                        N.at(col + 1, col) = FieldElement::one(K);
                    }
                }
    }
    if (static_cast<int>(diag.size()) != n) throw Error("canonical layout size mismatch");
    return WDPair{GroupSpec::gl(K, n), Matrix::diagonal(K, diag), N, q};
}

Matrix adapted_basis(const WDPair& p, const ChainInvariant& inv) {
    WDPair a = as_general_linear(p);
    auto works = analyze_chains(a);
    if (!(invariant_of(works) == inv))
        throw DimensionMismatch("invariant does not describe the pair");
    const FieldPtr& K = a.s.field();
    int n = a.s.rows();
    Cols columns;
    for (const auto& w : works) {
        int k = w.data.length() - 1;
        auto composite = [&](int i, int j) -> Matrix { /* d_j x d_i, i < j */
            Matrix comp = w.C[static_cast<std::size_t>(i)];
            for (int t = i + 1; t < j; ++t) comp = w.C[static_cast<std::size_t>(t)] * comp;
            return comp;
        };
        auto kernel_to = [&](int i, int t) -> Cols { /* dies at or before position t */
            int d = w.data.eigen_dims[static_cast<std::size_t>(i)];
            if (t < i) return {};
            if (t >= k) {
                Cols full;
                for (int c = 0; c < d; ++c) {
                    std::vector<FieldElement> e(static_cast<std::size_t>(d),
                                                FieldElement::zero(K));
                    e[static_cast<std::size_t>(c)] = FieldElement::one(K);
                    full.push_back(std::move(e));
                }
                return full;
            }
            return composite(i, t + 1).kernel();
        };
        for (const auto& [ij, m] : w.data.intervals) {
            int i = ij.first, j = ij.second;
            Cols W = kernel_to(i, j);
            Cols U = kernel_to(i, j - 1);
            if (i > 0) {
                Cols im;
                const Matrix& Cprev = w.C[static_cast<std::size_t>(i) - 1];
                for (int col = 0; col < Cprev.cols(); ++col) {
                    std::vector<FieldElement> v;
                    for (int r = 0; r < Cprev.rows(); ++r) v.push_back(Cprev.at(r, col));
                    im.push_back(std::move(v));
                }
                for (auto& v : intersect_cols(K, Cprev.rows(), im, W)) U.push_back(std::move(v));
            }
            Cols heads = complement_in(K, U, W);
            if (static_cast<int>(heads.size()) != m) throw Error("strand head count mismatch");
            for (const auto& h : heads) {
                std::vector<FieldElement> amb = mat_vec(w.V[static_cast<std::size_t>(i)], h);
                columns.push_back(amb);
                for (int u = i; u < j; ++u) {
                    amb = mat_vec(a.N, amb);
                    columns.push_back(amb);
                }
            }
        }
    }
    if (static_cast<int>(columns.size()) != n) throw Error("adapted basis is not square");
    Matrix P = from_cols(K, n, columns);
    WDPair model = canonical_model(inv, a.q, K);
    if (P.det().is_zero() || !(a.s * P == P * model.s) || !(a.N * P == P * model.N))
        throw Error("adapted basis certification failed");
    return P;
}

Verdict gl_equivalent(const WDPair& p1, const WDPair& p2) {
    if (p1.s.rows() != p2.s.rows() || !(p1.q == p2.q) ||
        !p1.s.field()->same(*p2.s.field()))
        throw DimensionMismatch("pairs are not comparable");
    WDPair a = as_general_linear(p1), b = as_general_linear(p2);
    ChainInvariant ia = chain_invariant(a), ib = chain_invariant(b);
    if (!(ia == ib))
        return Verdict::inequivalent_because("chain invariants differ: " + ia.str() +
                                             " vs " + ib.str());
    Matrix P1 = adapted_basis(a, ia), P2 = adapted_basis(b, ib);
    Matrix g = P2 * P1.inverse();
    if (!(g * a.s == b.s * g) || !(g * a.N == b.N * g))
        throw Error("witness certification failed");
    return Verdict::equivalent_with(g, "matching chain invariants");
}

namespace {

std::vector<Matrix> intertwiner_space(const std::vector<Matrix>& t1,
                                      const std::vector<Matrix>& t2, const FieldPtr& K,
                                      int n) {
    if (t1.empty()) {
        std::vector<Matrix> full;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) full.push_back(Matrix::unit(K, n, i, j));
        return full;
    }
    int n2 = n * n;
    Matrix M(K, static_cast<int>(t1.size()) * n2, n2);
    Matrix id = Matrix::identity(K, n);
    for (std::size_t e = 0; e < t1.size(); ++e) {
        Matrix Me = kron(id, t1[e].transpose()) - kron(t2[e], id);
        for (int i = 0; i < n2; ++i)
            for (int j = 0; j < n2; ++j)
                M.at(static_cast<int>(e) * n2 + i, j) = Me.at(i, j);
    }
    std::vector<Matrix> out;
    for (const auto& v : M.kernel()) out.push_back(unvec(K, v, n, n));
    return out;
}

bool intertwines(const Matrix& g, const std::vector<Matrix>& t1,
                 const std::vector<Matrix>& t2) {
    for (std::size_t i = 0; i < t1.size(); ++i)
        if (!(g * t1[i] == t2[i] * g)) return false;
    return true;
}

/* if the solution space is exactly one monomial matrix pattern and the form
   pairs coordinates perfectly, membership in the group forces the whole
   solution; decides the question outright */
std::optional<Verdict> monomial_decision(const GroupSpec& g, const std::vector<Matrix>& S,
                                         const std::vector<Matrix>& t1,
                                         const std::vector<Matrix>& t2) {
    int n = g.dim();
    if (static_cast<int>(S.size()) != n) return std::nullopt;
    std::vector<int> row_of(static_cast<std::size_t>(n), -1);
    for (const auto& B : S)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (B.at(i, j).is_zero()) continue;
                auto& r = row_of[static_cast<std::size_t>(j)];
                if (r == -1)
                    r = i;
                else if (r != i)
                    return std::nullopt;
            }
    std::vector<int> hit(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
        int r = row_of[static_cast<std::size_t>(j)];
        if (r < 0 || hit[static_cast<std::size_t>(r)]++) return std::nullopt;
    }
    const Matrix& B = g.form();
    std::vector<int> match(static_cast<std::size_t>(n), -1);
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
            if (B.at(j, l).is_zero()) continue;
            if (match[static_cast<std::size_t>(j)] != -1) return std::nullopt;
            match[static_cast<std::size_t>(j)] = l;
        }
    for (int j = 0; j < n; ++j)
        if (match[static_cast<std::size_t>(j)] == -1) return std::nullopt;
    for (int j = 0; j < n; ++j)
        if (row_of[static_cast<std::size_t>(match[static_cast<std::size_t>(j)])] !=
            match[static_cast<std::size_t>(row_of[static_cast<std::size_t>(j)])])
            return Verdict::inequivalent_because(
                "form pairing incompatible with the intertwiner pattern");
    for (int j = 0; j < n; ++j)
        if (match[static_cast<std::size_t>(j)] == j) return std::nullopt;
    const FieldPtr& K = g.field();
    Matrix X = Matrix::zero(K, n, n);
    for (int j = 0; j < n; ++j) {
        int l = match[static_cast<std::size_t>(j)];
        if (l < j) continue;
        int sj = row_of[static_cast<std::size_t>(j)], sl = row_of[static_cast<std::size_t>(l)];
        FieldElement r = B.at(j, l) * B.at(sj, sl).inverse();
        X.at(sj, j) = FieldElement::one(K);
        X.at(sl, l) = r;
    }
    if (!intertwines(X, t1, t2)) return std::nullopt;
    if (contains(g, X))
        return Verdict::equivalent_with(X, "forced monomial intertwiner");
    if (g.kind() == GroupKind::SO)
        return Verdict::inequivalent_because(
            "every form-compatible intertwiner has determinant -1");
    return std::nullopt;
}

std::optional<Matrix> so_flip(const GroupSpec& g, const std::vector<Matrix>& t2,
                              const Budget& budget) {
    const FieldPtr& K = g.field();
    int n = g.dim();
    Matrix B = g.form();
    auto in_flip_set = [&](const Matrix& d) {
        return !d.det().is_zero() && d.transpose() * B * d == B &&
               d.det() == -FieldElement::one(K);
    };
    Matrix minus = Matrix::identity(K, n) * rat(-1);
    if (n % 2 == 1 && in_flip_set(minus)) return minus;
    auto Z = intertwiner_space(t2, t2, K, n);
    for (const auto& z : Z)
        if (in_flip_set(z)) return z;
    for (std::size_t i = 0; i < Z.size(); ++i)
        for (std::size_t j = i + 1; j < Z.size(); ++j) {
            if (in_flip_set(Z[i] + Z[j])) return Z[i] + Z[j];
            if (in_flip_set(Z[i] - Z[j])) return Z[i] - Z[j];
        }
    Rng rng(budget.seed + 17);
    for (int a = 0; a < budget.attempts; ++a) {
        Matrix d = Matrix::zero(K, n, n);
        for (const auto& z : Z) d = d + z * rat(rand_int(rng, budget.trial_radius));
        if (in_flip_set(d)) return d;
    }
    return std::nullopt;
}

std::optional<Matrix> to_group_witness(const GroupSpec& g, const Matrix& X,
                                       const std::vector<Matrix>& t1,
                                       const std::vector<Matrix>& t2,
                                       const Budget& budget) {
    const FieldPtr& K = g.field();
    int n = g.dim();
    switch (g.kind()) {
        case GroupKind::GL:
            return X;
        case GroupKind::SL: {
            FieldElement d = X.det();
            if (d.is_one()) return X;
            auto c = nth_root_in_field(d.inverse(), n);
            if (c) return X * *c;
            return std::nullopt;
        }
        case GroupKind::Sp:
        case GroupKind::SO:
        case GroupKind::O: {
            Matrix B = g.form();
            Matrix th = B.inverse() * X.inverse().transpose() * B;
            if (!intertwines(th, t1, t2)) return std::nullopt;
            Matrix c = X.inverse() * th;
            auto h = commuting_sqrt(c);
            if (!h) return std::nullopt;
            Matrix w = X * *h;
            if (g.kind() == GroupKind::SO && !w.det().is_one()) {
                auto flip = so_flip(g, t2, budget);
                if (!flip) return std::nullopt;
                w = *flip * w;
            }
            if (contains(g, w)) return w;
            return std::nullopt;
        }
        case GroupKind::TensorStabilizer:
            if (contains(g, X)) return X;
            return std::nullopt;
        case GroupKind::Product:
            return std::nullopt; /* handled by block recursion */
    }
    return std::nullopt;
}

Matrix block_of(const Matrix& m, int off, int d) {
    Matrix b(m.field(), d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) b.at(i, j) = m.at(off + i, off + j);
    return b;
}

}  // namespace

Verdict tuple_conjugate_in(const GroupSpec& g, const std::vector<Matrix>& t1,
                           const std::vector<Matrix>& t2, const Budget& budget) {
    if (t1.size() != t2.size()) throw DimensionMismatch("tuple lengths differ");
    const FieldPtr& K = g.field();
    int n = g.dim();
    for (const auto* t : {&t1, &t2})
        for (const auto& m : *t) {
            if (!m.square() || m.rows() != n || !m.field()->same(*K))
                throw DimensionMismatch("tuple member size or field mismatch");
            if (!contains(g, m) && !lie_contains(g, m))
                throw NotInGroup("tuple member outside the group and its tangent algebra");
        }

    if (g.kind() == GroupKind::Product) {
        int off = 0;
        std::vector<Matrix> wits;
        for (std::size_t f = 0; f < g.factors().size(); ++f) {
            const GroupSpec& fac = g.factors()[f];
            std::vector<Matrix> a, b;
            for (const auto& m : t1) a.push_back(block_of(m, off, fac.dim()));
            for (const auto& m : t2) b.push_back(block_of(m, off, fac.dim()));
            Verdict v = tuple_conjugate_in(fac, a, b, budget);
            if (v.inequivalent())
                return Verdict::inequivalent_because("factor " + std::to_string(f) + ": " +
                                                     v.certificate);
            if (v.unknown()) return v;
            wits.push_back(*v.witness);
            off += fac.dim();
        }
        Matrix w = block_diagonal(wits);
        if (!intertwines(w, t1, t2) || !contains(g, w))
            throw Error("blockwise witness certification failed");
        return Verdict::equivalent_with(w, "blockwise witnesses");
    }

    bool identical = true;
    for (std::size_t i = 0; i < t1.size(); ++i)
        if (!(t1[i] == t2[i])) identical = false;
    if (identical) return Verdict::equivalent_with(Matrix::identity(K, n), "identical tuples");

    auto S = intertwiner_space(t1, t2, K, n);
    if (S.empty()) return Verdict::inequivalent_because("no intertwiner");

    if (g.kind() == GroupKind::Sp || g.kind() == GroupKind::SO || g.kind() == GroupKind::O) {
        auto md = monomial_decision(g, S, t1, t2);
        if (md) return *md;
    }

    auto try_candidate = [&](const Matrix& X) -> std::optional<Verdict> {
        if (X.det().is_zero()) return std::nullopt;
        auto w = to_group_witness(g, X, t1, t2, budget);
        if (!w || !intertwines(*w, t1, t2) || !contains(g, *w)) return std::nullopt;
        return Verdict::equivalent_with(*w, "verified intertwiner");
    };

    for (const auto& Bm : S)
        if (auto v = try_candidate(Bm)) return *v;
    if (S.size() <= 16)
        for (std::size_t i = 0; i < S.size(); ++i)
            for (std::size_t j = i + 1; j < S.size(); ++j) {
                if (auto v = try_candidate(S[i] + S[j])) return *v;
                if (auto v = try_candidate(S[i] - S[j])) return *v;
            }
    {
        Matrix sum = Matrix::zero(K, n, n);
        for (const auto& Bm : S) sum = sum + Bm;
        if (auto v = try_candidate(sum)) return *v;
    }
    Rng rng(budget.seed);
    for (int a = 0; a < budget.attempts; ++a) {
        Matrix X = Matrix::zero(K, n, n);
        for (const auto& Bm : S) X = X + Bm * rat(rand_int(rng, budget.trial_radius));
        if (auto v = try_candidate(X)) return *v;
    }

    /* exhaustive degree-bounded grid: determinant vanishing on all of it
       proves there is no invertible intertwiner over any extension */
    long pts = 1;
    bool overflow = false;
    for (std::size_t i = 0; i < S.size(); ++i) {
        pts *= n + 1;
        if (pts > budget.grid_cap) {
            overflow = true;
            break;
        }
    }
    if (!overflow) {
        std::vector<int> digits(S.size(), 0);
        bool any_invertible = false;
        int resolved_attempts = 0;
        for (;;) {
            Matrix X = Matrix::zero(K, n, n);
            for (std::size_t i = 0; i < S.size(); ++i)
                if (digits[i]) X = X + S[i] * rat(digits[i]);
            if (!X.det().is_zero()) {
                any_invertible = true;
                if (resolved_attempts < 32) {
                    ++resolved_attempts;
                    if (auto v = try_candidate(X)) return *v;
                }
            }
            std::size_t pos = 0;
            while (pos < digits.size() && ++digits[pos] > n) digits[pos++] = 0;
            if (pos == digits.size()) break;
        }
        if (!any_invertible)
            return Verdict::inequivalent_because(
                "determinant vanishes identically on the intertwiner space");
        return Verdict::undecided("invertible intertwiners exist but none landed in the group");
    }
    return Verdict::undecided("witness search budget exhausted");
}

namespace {

std::optional<std::vector<FieldElement>> split_eigs(const Matrix& m) {
    int n = m.rows();
    try {
        auto roots = roots_in_field(m.charpoly());
        int total = 0;
        for (const auto& r : roots) total += static_cast<int>(r.second);
        if (total != n) return std::nullopt;
        std::vector<FieldElement> out;
        for (const auto& r : roots)
            for (unsigned i = 0; i < r.second; ++i) out.push_back(r.first);
        return out;
    } catch (const DegreeBudgetExceeded&) {
        return std::nullopt;
    }
}

PolyK linear_factor(const FieldElement& root) {
    return PolyK(std::vector<FieldElement>{-root, FieldElement::one(root.field())});
}

PolyK charpoly_via_spectrum(const Matrix& m) {
    int n = m.rows();
    const FieldPtr& K = m.field();
    try {
        PolyK mp = m.minpoly();
        auto roots = roots_in_field(mp);
        bool simple = true;
        int degsum = 0;
        for (const auto& r : roots) {
            if (r.second != 1) simple = false;
            degsum += static_cast<int>(r.second);
        }
        if (simple && degsum == mp.degree()) {
            PolyK cp = PolyK::one(FieldElement::one(K));
            int total = 0;
            for (const auto& r : roots) {
                int d = n - (m - Matrix::identity(K, n) * r.first).rank();
                total += d;
                for (int i = 0; i < d; ++i) cp = cp * linear_factor(r.first);
            }
            if (total == n) return cp;
        }
    } catch (const DegreeBudgetExceeded&) {
    }
    return m.charpoly();
}

/* characteristic polynomial of the representation applied to a semisimple
   element, avoiding the big-matrix determinant when the spectrum splits */
PolyK rep_charpoly(const Rep& r, const Matrix& m) {
    auto eigs = split_eigs(m);
    if (eigs) {
        Matrix D = Matrix::diagonal(m.field(), *eigs);
        Matrix rD = r.group_action(D);
        if (rD.is_diagonal()) {
            PolyK cp = PolyK::one(FieldElement::one(m.field()));
            for (int i = 0; i < rD.rows(); ++i) cp = cp * linear_factor(rD.at(i, i));
            return cp;
        }
    }
    return charpoly_via_spectrum(r.group_action(m));
}

std::optional<Matrix> descend_matrix(const Matrix& m, const FieldPtr& K) {
    if (m.field()->same(*K)) return m;
    if (!K->is_rationals()) return std::nullopt;
    Matrix out(K, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (!m.at(i, j).is_rational()) return std::nullopt;
            out.at(i, j) = FieldElement::from_rational(K, m.at(i, j).rational_part());
        }
    return out;
}

}  // namespace

Verdict g_equivalent(const WDPair& p1, const WDPair& p2, const Budget& budget) {
    if (!p1.group.same(p2.group) || !(p1.q == p2.q))
        throw DimensionMismatch("pairs live in different settings");
    if (!is_urfs(p1) || !is_urfs(p2))
        throw NotURFS("equivalence decision requires semisimple Frobenius pairs");
    if (p1.group.kind() == GroupKind::GL) return gl_equivalent(p1, p2);

    try {
        ChainInvariant i1 = chain_invariant(as_general_linear(p1));
        ChainInvariant i2 = chain_invariant(as_general_linear(p2));
        if (!(i1 == i2))
            return Verdict::inequivalent_because(
                "standard pushforward chain invariants differ: " + i1.str() + " vs " +
                i2.str());
    } catch (const NonSplitSpectrum&) {
    } catch (const DegreeBudgetExceeded&) {
    }

    ImaiData d1 = imai_decompose(p1);
    ImaiData d2 = imai_decompose(p2);
    if (!d1.field->same(*d2.field)) throw Error("splitting fields diverged");
    const GroupSpec& G = d1.pair.group;

    for (const Rep& r : rep_family(G, budget.degree))
        if (!(rep_charpoly(r, d1.s_prime) == rep_charpoly(r, d2.s_prime)))
            return Verdict::inequivalent_because("separating representation " + r.str());

    Verdict v = tuple_conjugate_in(G, {d1.s_prime, d1.triple.E, d1.triple.H},
                                   {d2.s_prime, d2.triple.E, d2.triple.H}, budget);
    if (v.equivalent()) {
        Matrix w = *v.witness;
        if (!(w * d1.pair.s == d2.pair.s * w) || !(w * d1.pair.N == d2.pair.N * w))
            throw Error("splitting witness does not move the pair");
        if (auto down = descend_matrix(w, p1.s.field())) {
            v.witness = *down;
        } else {
            v.note = "witness over the extended field";
        }
        v.certificate = "joint splitting intertwiner";
    }
    return v;
}

ElementConjugacy element_conjugate(const WDPair& p1, const WDPair& p2, int degree_bound) {
    if (!p1.group.same(p2.group) || !(p1.q == p2.q))
        throw DimensionMismatch("pairs live in different settings");
    for (const Rep& r : rep_family(p1.group, degree_bound)) {
        Verdict v = gl_equivalent(pushforward(p1, r), pushforward(p2, r));
        if (!v.equivalent()) return {false, r};
    }
    return {true, std::nullopt};
}

ElementConjugacy element_conjugate_tuples(const GroupSpec& g,
                                          const std::vector<Matrix>& gens1,
                                          const std::vector<Matrix>& gens2,
                                          int degree_bound) {
    if (gens1.size() != gens2.size()) throw DimensionMismatch("generator tuples differ");
    const FieldPtr& K = g.field();
    int n = g.dim();
    Matrix id = Matrix::identity(K, n);
    std::vector<std::pair<Matrix, Matrix>> elems = {{id, id}};
    std::size_t head = 0;
    const std::size_t cap = 1024;
    while (head < elems.size()) {
        auto current = elems[head++];
        for (std::size_t i = 0; i < gens1.size(); ++i) {
            Matrix A = current.first * gens1[i];
            Matrix B = current.second * gens2[i];
            bool seen = false;
            for (const auto& e : elems)
                if (e.first == A && e.second == B) {
                    seen = true;
                    break;
                }
            if (!seen) {
                elems.emplace_back(std::move(A), std::move(B));
                if (elems.size() > cap)
                    throw BudgetExhausted("generated image exceeds the walk budget");
            }
        }
    }
    for (const Rep& r : rep_family(g, degree_bound))
        for (const auto& e : elems)
            if (!(rep_charpoly(r, e.first) == rep_charpoly(r, e.second))) return {false, r};
    return {true, std::nullopt};
}

std::vector<FieldAutomorphism> field_automorphisms(const FieldPtr& K) {
    std::vector<FieldAutomorphism> out;
    if (K->is_rationals()) {
        out.push_back({FieldElement::from_rational(K, rat(0))});
        return out;
    }
    PolyK f = lift_poly(K, K->minpoly_poly());
    for (const auto& r : roots_in_field(f)) out.push_back({r.first});
    return out;
}

FieldElement apply_automorphism(const FieldAutomorphism& a, const FieldElement& x) {
    const FieldPtr& K = x.field();
    FieldElement acc = FieldElement::zero(K);
    const auto& c = x.coords();
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * a.image + FieldElement::from_rational(K, c[i]);
    return acc;
}

Matrix apply_automorphism(const FieldAutomorphism& a, const Matrix& m) {
    Matrix out(m.field(), m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = apply_automorphism(a, m.at(i, j));
    return out;
}

namespace {

GroupSpec apply_automorphism_group(const FieldAutomorphism& a, const GroupSpec& g) {
    switch (g.kind()) {
        case GroupKind::GL:
        case GroupKind::SL:
            return g;
        case GroupKind::Sp:
            return GroupSpec::sp(apply_automorphism(a, g.form()));
        case GroupKind::SO:
            return GroupSpec::so(apply_automorphism(a, g.form()));
        case GroupKind::O:
            return GroupSpec::orthogonal(apply_automorphism(a, g.form()));
        case GroupKind::Product: {
            std::vector<GroupSpec> fs;
            for (const auto& f : g.factors()) fs.push_back(apply_automorphism_group(a, f));
            return GroupSpec::product(std::move(fs));
        }
        case GroupKind::TensorStabilizer: {
            std::vector<TensorDatum> ts;
            for (const auto& t : g.tensors()) {
                std::vector<FieldElement> e;
                for (const auto& x : t.entries) e.push_back(apply_automorphism(a, x));
                ts.push_back({t.shape, std::move(e)});
            }
            return GroupSpec::tensor_stabilizer(g.field(), g.dim(), std::move(ts));
        }
    }
    throw Error("unreachable group kind");
}

}  // namespace

WDPair apply_automorphism(const FieldAutomorphism& a, const WDPair& p) {
    const FieldPtr& K = p.s.field();
    if (!a.image.field()->same(*K)) throw InvalidField("automorphism lives elsewhere");
    if (!K->is_rationals()) {
        PolyK f = lift_poly(K, K->minpoly_poly());
        if (!f.eval(a.image).is_zero())
            throw InvalidField("generator image is not a root of the defining polynomial");
    }
    return WDPair{apply_automorphism_group(a, p.group), apply_automorphism(a, p.s),
                  apply_automorphism(a, p.N), p.q};
}

std::optional<bool> class_defined_over(const WDPair& p,
                                       const std::vector<FieldAutomorphism>& auts,
                                       const Budget& budget) {
    bool inconclusive = false;
    for (const auto& a : auts) {
        WDPair pa = apply_automorphism(a, p);
        if (!pa.group.same(p.group))
            throw InvalidGroup("group is not stable under the automorphism");
        if (p.group.kind() == GroupKind::GL) {
            if (!gl_equivalent(p, pa).equivalent()) return false;
            continue;
        }
        Verdict v = g_equivalent(p, pa, budget);
        if (v.inequivalent()) return false;
        if (v.unknown()) inconclusive = true;
    }
    if (inconclusive) return std::nullopt;
    return true;
}

}
