#pragma once

#include <vector>

#include "a4diff/gf.hpp"

namespace a4diff {

// Dense row-major matrix over GF(2^m); acts on column vectors.
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Elem> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}
    static Matrix identity(int n);

    Elem& operator()(int i, int j) { return a[std::size_t(i) * cols + j]; }
    Elem operator()(int i, int j) const { return a[std::size_t(i) * cols + j]; }
    Elem* row(int i) { return a.data() + std::size_t(i) * cols; }
    const Elem* row(int i) const { return a.data() + std::size_t(i) * cols; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
};

namespace mat {

Matrix mul(const Field& F, const Matrix& A, const Matrix& B);
Matrix add(const Matrix& A, const Matrix& B);
Matrix scale(const Field& F, const Matrix& A, Elem c);
Matrix transpose(const Matrix& A);
Matrix block(const Matrix& A, int r0, int c0, int nr, int nc);
void set_block(Matrix& A, int r0, int c0, const Matrix& B);
Matrix block_diag(const std::vector<Matrix>& blocks);
Matrix vstack(const Matrix& A, const Matrix& B);

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(const Field& F, Matrix& A);
int rank(const Field& F, Matrix A);
// Rows form a basis of {x : A x = 0}.
Matrix nullspace(const Field& F, const Matrix& A);
// Throws MathError if A is singular.
Matrix inverse(const Field& F, const Matrix& A);
Elem det(const Field& F, Matrix A);

}  // namespace mat
}  // namespace a4diff
