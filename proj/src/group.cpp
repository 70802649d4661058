#include "wd/group.hpp"

#include "wd/error.hpp"
#include "wd/rep.hpp"

#include <sstream>

namespace wd {

namespace {

Matrix aligned(const Matrix& m, const FieldPtr& K) {
    return m.field()->same(*K) ? m : m.lift(K);
}

std::vector<FieldElement> mat_apply(const Matrix& M, const std::vector<FieldElement>& v) {
    if (M.cols() != static_cast<int>(v.size()))
        throw DimensionMismatch("tensor entry length");
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(M.rows()));
    for (int i = 0; i < M.rows(); ++i) {
        FieldElement acc = FieldElement::zero(M.field());
        for (int j = 0; j < M.cols(); ++j)
            acc = acc + M.at(i, j) * v[static_cast<std::size_t>(j)];
        out.push_back(acc);
    }
    return out;
}

std::vector<FieldElement> lift_vector(const std::vector<FieldElement>& v, const FieldPtr& K) {
    std::vector<FieldElement> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(lift_to(K, x));
    return out;
}

bool all_zero(const std::vector<FieldElement>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

void check_size(const GroupSpec& g, const Matrix& m) {
    if (!m.square() || m.rows() != g.dim())
        throw DimensionMismatch("matrix size " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + " for " + g.str());
}

bool is_invertible(const Matrix& m) { return !m.det().is_zero(); }

}  // namespace

GroupSpec GroupSpec::gl(const FieldPtr& K, int n) {
    if (n < 1) throw InvalidGroup("GL rank must be positive");
    GroupSpec g(GroupKind::GL);
    g.n_ = n;
    g.K_ = K;
    return g;
}

GroupSpec GroupSpec::sl(const FieldPtr& K, int n) {
    if (n < 1) throw InvalidGroup("SL rank must be positive");
    GroupSpec g(GroupKind::SL);
    g.n_ = n;
    g.K_ = K;
    return g;
}

GroupSpec GroupSpec::sp(Matrix J) {
    if (!J.square()) throw InvalidGroup("symplectic form must be square");
    if (J.rows() % 2 != 0) throw InvalidGroup("symplectic form must have even size");
    if (J.transpose() != -J) throw InvalidGroup("symplectic form must be antisymmetric");
    if (J.det().is_zero()) throw InvalidGroup("symplectic form must be invertible");
    GroupSpec g(GroupKind::Sp);
    g.n_ = J.rows();
    g.K_ = J.field();
    g.form_ = std::move(J);
    return g;
}

GroupSpec GroupSpec::so(Matrix B) {
    GroupSpec g = orthogonal(std::move(B));
    g.kind_ = GroupKind::SO;
    return g;
}

GroupSpec GroupSpec::orthogonal(Matrix B) {
    if (!B.square()) throw InvalidGroup("orthogonal form must be square");
    if (B.transpose() != B) throw InvalidGroup("orthogonal form must be symmetric");
    if (B.det().is_zero()) throw InvalidGroup("orthogonal form must be invertible");
    GroupSpec g(GroupKind::O);
    g.n_ = B.rows();
    g.K_ = B.field();
    g.form_ = std::move(B);
    return g;
}

GroupSpec GroupSpec::sp_standard(const FieldPtr& K, int n) {
    if (n < 2 || n % 2 != 0) throw InvalidGroup("Sp size must be even and positive");
    Matrix J = Matrix::zero(K, n, n);
    for (int i = 0; i < n; ++i)
        J.at(i, n - 1 - i) = i < n / 2 ? FieldElement::one(K) : -FieldElement::one(K);
    return sp(std::move(J));
}

GroupSpec GroupSpec::so_standard(const FieldPtr& K, int n) {
    if (n < 1) throw InvalidGroup("SO size must be positive");
    return so(Matrix::identity(K, n));
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
    if (factors.empty()) throw InvalidGroup("empty product");
    GroupSpec g(GroupKind::Product);
    g.K_ = factors.front().field();
    for (const auto& f : factors) {
        if (!f.field()->same(*g.K_)) throw InvalidGroup("product factors over different fields");
        g.n_ += f.dim();
    }
    g.factors_ = std::move(factors);
    return g;
}

GroupSpec GroupSpec::tensor_stabilizer(const FieldPtr& K, int n,
                                       std::vector<TensorDatum> tensors) {
    if (n < 1) throw InvalidGroup("tensor stabilizer rank must be positive");
    for (const auto& t : tensors) {
        int d = word_dim(parse_word(t.shape), n);
        if (d != static_cast<int>(t.entries.size()))
            throw InvalidGroup("tensor '" + t.shape + "' expects " + std::to_string(d) +
                               " entries, got " + std::to_string(t.entries.size()));
    }
    GroupSpec g(GroupKind::TensorStabilizer);
    g.n_ = n;
    g.K_ = K;
    g.tensors_ = std::move(tensors);
    return g;
}

const Matrix& GroupSpec::form() const {
    if (!form_) throw InvalidGroup("group " + str() + " carries no form");
    return *form_;
}

bool GroupSpec::same(const GroupSpec& o) const {
    if (kind_ != o.kind_ || n_ != o.n_) return false;
    if (!K_->same(*o.K_)) return false;
    if (form_.has_value() != o.form_.has_value()) return false;
    if (form_ && *form_ != *o.form_) return false;
    if (factors_.size() != o.factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i].same(o.factors_[i])) return false;
    if (tensors_.size() != o.tensors_.size()) return false;
    for (std::size_t i = 0; i < tensors_.size(); ++i) {
        if (tensors_[i].shape != o.tensors_[i].shape) return false;
        if (tensors_[i].entries != o.tensors_[i].entries) return false;
    }
    return true;
}

GroupSpec GroupSpec::lift(const FieldPtr& K2) const {
    GroupSpec g(kind_);
    g.n_ = n_;
    g.K_ = K2;
    if (form_) g.form_ = form_->lift(K2);
    for (const auto& f : factors_) g.factors_.push_back(f.lift(K2));
    for (const auto& t : tensors_)
        g.tensors_.push_back({t.shape, lift_vector(t.entries, K2)});
    return g;
}

std::string GroupSpec::str() const {
    std::ostringstream os;
    switch (kind_) {
        case GroupKind::GL: os << "GL(" << n_ << ")"; break;
        case GroupKind::SL: os << "SL(" << n_ << ")"; break;
        case GroupKind::Sp: os << "Sp(" << n_ << ")"; break;
        case GroupKind::SO: os << "SO(" << n_ << ")"; break;
        case GroupKind::O: os << "O(" << n_ << ")"; break;
        case GroupKind::Product: {
            os << "Product(";
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                if (i) os << ",";
                os << factors_[i].str();
            }
            os << ")";
            break;
        }
        case GroupKind::TensorStabilizer:
            os << "TensorStab(" << n_ << ";" << tensors_.size() << ")";
            break;
    }
    return os.str();
}

bool contains(const GroupSpec& g, const Matrix& m) {
    check_size(g, m);
    const FieldPtr& K = m.field();
    switch (g.kind()) {
        case GroupKind::GL:
            return is_invertible(m);
        case GroupKind::SL:
            return m.det().is_one();
        case GroupKind::Sp: {
            Matrix J = aligned(g.form(), K);
            return m.transpose() * J * m == J;
        }
        case GroupKind::SO: {
            Matrix B = aligned(g.form(), K);
            return m.transpose() * B * m == B && m.det().is_one();
        }
        case GroupKind::O: {
            Matrix B = aligned(g.form(), K);
            return m.transpose() * B * m == B;
        }
        case GroupKind::Product: {
            int off = 0;
            for (const auto& f : g.factors()) {
                int d = f.dim();
                Matrix block(K, d, d);
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j) block.at(i, j) = m.at(off + i, off + j);
                for (int i = 0; i < g.dim(); ++i)
                    for (int j = 0; j < g.dim(); ++j) {
                        bool in_block = i >= off && i < off + d && j >= off && j < off + d;
                        bool in_row_band = (i >= off && i < off + d) || (j >= off && j < off + d);
                        if (!in_block && in_row_band && !m.at(i, j).is_zero()) return false;
                    }
                if (!contains(f, block)) return false;
                off += d;
            }
            return true;
        }
        case GroupKind::TensorStabilizer: {
            if (!is_invertible(m)) return false;
            for (const auto& t : g.tensors()) {
                Matrix act = word_group_eval(parse_word(t.shape), m);
                if (mat_apply(act, lift_vector(t.entries, K)) != lift_vector(t.entries, K))
                    return false;
            }
            return true;
        }
    }
    throw Error("unreachable group kind");
}

bool lie_contains(const GroupSpec& g, const Matrix& x) {
    check_size(g, x);
    const FieldPtr& K = x.field();
    switch (g.kind()) {
        case GroupKind::GL:
            return true;
        case GroupKind::SL:
            return x.trace().is_zero();
        case GroupKind::Sp:
        case GroupKind::SO:
        case GroupKind::O: {
            Matrix F = aligned(g.form(), K);
            return (x.transpose() * F + F * x).is_zero();
        }
        case GroupKind::Product: {
            int off = 0;
            for (const auto& f : g.factors()) {
                int d = f.dim();
                Matrix block(K, d, d);
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j) block.at(i, j) = x.at(off + i, off + j);
                for (int i = 0; i < g.dim(); ++i)
                    for (int j = 0; j < g.dim(); ++j) {
                        bool in_block = i >= off && i < off + d && j >= off && j < off + d;
                        bool in_row_band = (i >= off && i < off + d) || (j >= off && j < off + d);
                        if (!in_block && in_row_band && !x.at(i, j).is_zero()) return false;
                    }
                if (!lie_contains(f, block)) return false;
                off += d;
            }
            return true;
        }
        case GroupKind::TensorStabilizer: {
            for (const auto& t : g.tensors()) {
                Matrix act = word_lie_eval(parse_word(t.shape), x);
                if (!all_zero(mat_apply(act, lift_vector(t.entries, K)))) return false;
            }
            return true;
        }
    }
    throw Error("unreachable group kind");
}

std::vector<Matrix> lie_basis(const GroupSpec& g, const FieldPtr& K) {
    int n = g.dim();
    if (g.kind() == GroupKind::GL) {
        std::vector<Matrix> basis;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) basis.push_back(Matrix::unit(K, n, i, j));
        return basis;
    }
    if (g.kind() == GroupKind::Product) {
        std::vector<Matrix> basis;
        int off = 0;
        for (const auto& f : g.factors()) {
            for (const auto& b : lie_basis(f, K)) {
                Matrix m = Matrix::zero(K, n, n);
                for (int i = 0; i < f.dim(); ++i)
                    for (int j = 0; j < f.dim(); ++j) m.at(off + i, off + j) = b.at(i, j);
                basis.push_back(std::move(m));
            }
            off += f.dim();
        }
        return basis;
    }
    /* rows of the constraint system, one group of rows per linearized equation */
    std::vector<std::vector<FieldElement>> rows;
    auto coeff_row = [&]() {
        return std::vector<FieldElement>(static_cast<std::size_t>(n) * n,
                                         FieldElement::zero(K));
    };
    if (g.kind() == GroupKind::SL) {
        auto r = coeff_row();
        for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i) * n + i] = FieldElement::one(K);
        rows.push_back(std::move(r));
    } else if (g.kind() == GroupKind::Sp || g.kind() == GroupKind::SO ||
               g.kind() == GroupKind::O) {
        Matrix F = aligned(g.form(), K);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                auto r = coeff_row();
                for (int k = 0; k < n; ++k) {
                    r[static_cast<std::size_t>(k) * n + a] =
                        r[static_cast<std::size_t>(k) * n + a] + F.at(k, b);
                    r[static_cast<std::size_t>(k) * n + b] =
                        r[static_cast<std::size_t>(k) * n + b] + F.at(a, k);
                }
                rows.push_back(std::move(r));
            }
    } else if (g.kind() == GroupKind::TensorStabilizer) {
        for (const auto& t : g.tensors()) {
            RepWordPtr w = parse_word(t.shape);
            std::vector<FieldElement> v = lift_vector(t.entries, K);
            int d = word_dim(w, n);
            std::vector<std::vector<FieldElement>> block(
                static_cast<std::size_t>(d), coeff_row());
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    auto img = mat_apply(word_lie_eval(w, Matrix::unit(K, n, i, j)), v);
                    for (int r = 0; r < d; ++r)
                        block[static_cast<std::size_t>(r)][static_cast<std::size_t>(i) * n + j] =
                            img[static_cast<std::size_t>(r)];
                }
            for (auto& r : block) rows.push_back(std::move(r));
        }
    }
    if (rows.empty()) return lie_basis(GroupSpec::gl(K, n), K);
    Matrix C = Matrix::from_rows(K, rows);
    std::vector<Matrix> basis;
    for (const auto& v : C.kernel()) basis.push_back(unvec(K, v, n, n));
    return basis;
}

}
