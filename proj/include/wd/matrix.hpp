#pragma once

#include "wd/numberfield.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wd {

class Matrix {
public:
    Matrix(FieldPtr K, int rows, int cols);

    static Matrix identity(const FieldPtr& K, int n);
    static Matrix zero(const FieldPtr& K, int rows, int cols);
    static Matrix unit(const FieldPtr& K, int n, int i, int j);
    static Matrix diagonal(const FieldPtr& K, const std::vector<FieldElement>& d);
    static Matrix from_rows(const FieldPtr& K, const std::vector<std::vector<FieldElement>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    const FieldPtr& field() const { return K_; }

    FieldElement& at(int i, int j);
    const FieldElement& at(int i, int j) const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const FieldElement& s) const;
    Matrix operator*(const Rational& s) const;
    Matrix transpose() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_identity() const;
    bool is_diagonal() const;
    bool is_triangular() const;  /* upper or lower */

    FieldElement trace() const;
    FieldElement det() const;
    int rank() const;
    Matrix inverse() const;              /* throws SingularMatrix */
    Matrix pow(long e) const;            /* negative e via inverse */

    /* basis of the right kernel, each entry a coordinate vector */
    std::vector<std::vector<FieldElement>> kernel() const;

    PolyK charpoly() const;  /* det(tI - A), monic */
    PolyK minpoly() const;

    /* particular solution of A X = B with free variables set to zero */
    static std::optional<Matrix> solve(const Matrix& A, const Matrix& B);

    Matrix lift(const FieldPtr& K2) const;

    std::vector<FieldElement> column(int j) const;
    std::vector<FieldElement> row(int i) const;

    std::string str() const;

private:
    FieldPtr K_;
    int rows_, cols_;
    std::vector<FieldElement> a_;
};

Matrix kron(const Matrix& A, const Matrix& B);
Matrix comm(const Matrix& A, const Matrix& B);
Matrix conjugate(const Matrix& g, const Matrix& A);

bool is_nilpotent(const Matrix& A);
bool is_unipotent(const Matrix& A);

/* row-major flattening of a matrix into a single column vector */
std::vector<FieldElement> vec(const Matrix& A);
Matrix unvec(const FieldPtr& K, const std::vector<FieldElement>& v, int rows, int cols);

/* stack matrices of equal column count on top of each other */
Matrix vstack(const std::vector<Matrix>& blocks);

Matrix block_diagonal(const std::vector<Matrix>& blocks);

}
