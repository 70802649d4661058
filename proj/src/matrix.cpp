#include "wd/matrix.hpp"

#include "wd/error.hpp"

#include <sstream>

namespace wd {

Matrix::Matrix(FieldPtr K, int rows, int cols)
    : K_(std::move(K)), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), FieldElement::zero(K_)) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
}

Matrix Matrix::identity(const FieldPtr& K, int n) {
    Matrix m(K, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(K);
    return m;
}

Matrix Matrix::zero(const FieldPtr& K, int rows, int cols) { return Matrix(K, rows, cols); }

Matrix Matrix::unit(const FieldPtr& K, int n, int i, int j) {
    Matrix m(K, n, n);
    m.at(i, j) = FieldElement::one(K);
    return m;
}

Matrix Matrix::diagonal(const FieldPtr& K, const std::vector<FieldElement>& d) {
    Matrix m(K, static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

Matrix Matrix::from_rows(const FieldPtr& K, const std::vector<std::vector<FieldElement>>& rows) {
    if (rows.empty()) throw DimensionMismatch("matrix needs at least one row");
    Matrix m(K, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw DimensionMismatch("ragged rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
    return m;
}

FieldElement& Matrix::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw DimensionMismatch("index out of range");
    return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)];
}

const FieldElement& Matrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw DimensionMismatch("index out of range");
    return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)];
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_field(K_, o.K_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix addition shape");
    Matrix m(K_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_field(K_, o.K_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix subtraction shape");
    Matrix m(K_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(K_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_same_field(K_, o.K_);
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
    Matrix m(K_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldElement& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const FieldElement& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                m.at(i, j) = m.at(i, j) + aik * bkj;
            }
        }
    return m;
}

Matrix Matrix::operator*(const FieldElement& s) const {
    Matrix m(K_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
}

Matrix Matrix::operator*(const Rational& s) const {
    Matrix m(K_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(K_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    require_same_field(K_, o.K_);
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (!square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

bool Matrix::is_diagonal() const {
    if (!square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

bool Matrix::is_triangular() const {
    if (!square()) return false;
    bool upper = true, lower = true;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i > j && !at(i, j).is_zero()) upper = false;
            if (i < j && !at(i, j).is_zero()) lower = false;
        }
    return upper || lower;
}

FieldElement Matrix::trace() const {
    if (!square()) throw DimensionMismatch("trace of non-square matrix");
    FieldElement t = FieldElement::zero(K_);
    for (int i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
}

namespace {

/* in-place reduced row echelon form; returns pivot columns */
std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        FieldElement inv = m.at(r, c).inverse();
        for (int j = 0; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            FieldElement f = m.at(i, c);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - m.at(r, j) * f;
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}

FieldElement Matrix::det() const {
    if (!square()) throw DimensionMismatch("det of non-square matrix");
    Matrix m = *this;
    FieldElement d = FieldElement::one(K_);
    for (int c = 0; c < cols_; ++c) {
        int p = -1;
        for (int i = c; i < rows_; ++i)
            if (!m.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) return FieldElement::zero(K_);
        if (p != c) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d = d * m.at(c, c);
        FieldElement inv = m.at(c, c).inverse();
        for (int i = c + 1; i < rows_; ++i) {
            if (m.at(i, c).is_zero()) continue;
            FieldElement f = m.at(i, c) * inv;
            for (int j = c; j < cols_; ++j) m.at(i, j) = m.at(i, j) - m.at(c, j) * f;
        }
    }
    return d;
}

int Matrix::rank() const {
    Matrix m = *this;
    return static_cast<int>(rref(m).size());
}

Matrix Matrix::inverse() const {
    if (!square()) throw DimensionMismatch("inverse of non-square matrix");
    Matrix aug(K_, rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = FieldElement::one(K_);
    }
    auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_)
        throw SingularMatrix("matrix is not invertible");
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
        if (pivots[static_cast<std::size_t>(i)] != i) throw SingularMatrix("matrix is not invertible");
    Matrix inv(K_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

Matrix Matrix::pow(long e) const {
    if (!square()) throw DimensionMismatch("power of non-square matrix");
    if (e < 0) return inverse().pow(-e);
    Matrix acc = identity(K_, rows_), b = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * b;
        b = b * b;
        k >>= 1;
    }
    return acc;
}

std::vector<std::vector<FieldElement>> Matrix::kernel() const {
    Matrix m = *this;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (int c = 0; c < cols_; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        std::vector<FieldElement> v(static_cast<std::size_t>(cols_), FieldElement::zero(K_));
        v[static_cast<std::size_t>(c)] = FieldElement::one(K_);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

PolyK Matrix::charpoly() const {
    if (!square()) throw DimensionMismatch("charpoly of non-square matrix");
    int n = rows_;
    FieldElement one = FieldElement::one(K_);
    if (n == 0) return PolyK(one);
    if (is_triangular()) {
        PolyK p(one);
        for (int i = 0; i < n; ++i) {
            PolyK lin(std::vector<FieldElement>{-at(i, i), one});
            p = p * lin;
        }
        return p;
    }
    /* Faddeev-LeVerrier */
    std::vector<FieldElement> c(static_cast<std::size_t>(n) + 1, FieldElement::zero(K_));
    c[static_cast<std::size_t>(n)] = one;
    Matrix M = *this;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            Matrix shift = Matrix::identity(K_, n) * c[static_cast<std::size_t>(n - k + 1)];
            M = *this * (M + shift);
        }
        c[static_cast<std::size_t>(n - k)] = -(M.trace() * Rational(1, k));
    }
    return PolyK(std::move(c));
}

PolyK Matrix::minpoly() const {
    if (!square()) throw DimensionMismatch("minpoly of non-square matrix");
    int n = rows_;
    FieldElement z = FieldElement::zero(K_), one = FieldElement::one(K_);
    /* echelon rows over vec(A^k) with bookkeeping of combinations */
    std::vector<std::vector<FieldElement>> rows;   /* reduced vectors */
    std::vector<std::vector<FieldElement>> combos; /* coefficients over powers */
    std::vector<int> lead_of_row;
    Matrix p = identity(K_, n);
    for (int k = 0;; ++k) {
        std::vector<FieldElement> v = vec(p);
        std::vector<FieldElement> u(static_cast<std::size_t>(k) + 1, z);
        u[static_cast<std::size_t>(k)] = one;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            int lead = lead_of_row[r];
            if (v[static_cast<std::size_t>(lead)].is_zero()) continue;
            FieldElement f = v[static_cast<std::size_t>(lead)];
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] - rows[r][i] * f;
            for (std::size_t i = 0; i < combos[r].size() && i < u.size(); ++i)
                u[i] = u[i] - combos[r][i] * f;
        }
        int lead = -1;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) { lead = static_cast<int>(i); break; }
        if (lead < 0) {
            /* A^k = combination of lower powers: monic minimal polynomial */
            std::vector<FieldElement> mc(static_cast<std::size_t>(k) + 1, z);
            for (std::size_t i = 0; i < u.size(); ++i) mc[i] = u[i];
            return PolyK(std::move(mc));
        }
        FieldElement inv = v[static_cast<std::size_t>(lead)].inverse();
        for (auto& x : v) x = x * inv;
        for (auto& x : u) x = x * inv;
        rows.push_back(std::move(v));
        combos.push_back(std::move(u));
        lead_of_row.push_back(lead);
        p = p * *this;
        if (k > n) throw DimensionMismatch("minpoly iteration overran");
    }
}

std::optional<Matrix> Matrix::solve(const Matrix& A, const Matrix& B) {
    require_same_field(A.K_, B.K_);
    if (A.rows_ != B.rows_) throw DimensionMismatch("solve shape");
    Matrix aug(A.K_, A.rows_, A.cols_ + B.cols_);
    for (int i = 0; i < A.rows_; ++i) {
        for (int j = 0; j < A.cols_; ++j) aug.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols_; ++j) aug.at(i, A.cols_ + j) = B.at(i, j);
    }
    auto pivots = rref(aug);
    for (int c : pivots)
        if (c >= A.cols_) return std::nullopt;
    Matrix X(A.K_, A.cols_, B.cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (int j = 0; j < B.cols_; ++j)
            X.at(pivots[r], j) = aug.at(static_cast<int>(r), A.cols_ + j);
    return X;
}

Matrix Matrix::lift(const FieldPtr& K2) const {
    Matrix m(K2, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = lift_to(K2, at(i, j));
    return m;
}

std::vector<FieldElement> Matrix::column(int j) const {
    std::vector<FieldElement> v;
    v.reserve(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

std::vector<FieldElement> Matrix::row(int i) const {
    std::vector<FieldElement> v;
    v.reserve(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) v.push_back(at(i, j));
    return v;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

Matrix kron(const Matrix& A, const Matrix& B) {
    require_same_field(A.field(), B.field());
    Matrix m(A.field(), A.rows() * B.rows(), A.cols() * B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) {
            if (A.at(i, j).is_zero()) continue;
            for (int k = 0; k < B.rows(); ++k)
                for (int l = 0; l < B.cols(); ++l)
                    m.at(i * B.rows() + k, j * B.cols() + l) = A.at(i, j) * B.at(k, l);
        }
    return m;
}

Matrix comm(const Matrix& A, const Matrix& B) { return A * B - B * A; }

Matrix conjugate(const Matrix& g, const Matrix& A) { return g * A * g.inverse(); }

bool is_nilpotent(const Matrix& A) {
    if (!A.square()) return false;
    return A.pow(A.rows()).is_zero();
}

bool is_unipotent(const Matrix& A) {
    if (!A.square()) return false;
    return is_nilpotent(A - Matrix::identity(A.field(), A.rows()));
}

std::vector<FieldElement> vec(const Matrix& A) {
    std::vector<FieldElement> v;
    v.reserve(static_cast<std::size_t>(A.rows()) * static_cast<std::size_t>(A.cols()));
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) v.push_back(A.at(i, j));
    return v;
}

Matrix unvec(const FieldPtr& K, const std::vector<FieldElement>& v, int rows, int cols) {
    if (static_cast<int>(v.size()) != rows * cols) throw DimensionMismatch("unvec size");
    Matrix m(K, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = v[static_cast<std::size_t>(i * cols + j)];
    return m;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw DimensionMismatch("vstack of nothing");
    int cols = blocks[0].cols(), rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw DimensionMismatch("vstack column mismatch");
        rows += b.rows();
    }
    Matrix m(blocks[0].field(), rows, cols);
    int r = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < cols; ++j) m.at(r + i, j) = b.at(i, j);
        r += b.rows();
    }
    return m;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw DimensionMismatch("block_diagonal of nothing");
    int n = 0, c = 0;
    for (const auto& b : blocks) { n += b.rows(); c += b.cols(); }
    Matrix m(blocks[0].field(), n, c);
    int r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m.at(r0 + i, c0 + j) = b.at(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

}
