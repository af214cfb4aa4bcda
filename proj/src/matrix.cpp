#include "a4diff/matrix.hpp"

#include <algorithm>

namespace a4diff {

Matrix Matrix::identity(int n) {
    Matrix I(n, n);
    for (int i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

bool Matrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](Elem e) { return e == 0; });
}

namespace mat {

Matrix mul(const Field& F, const Matrix& A, const Matrix& B) {
    if (A.cols != B.rows) throw MathError("matrix shape mismatch in product");
    Matrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            Elem c = A(i, k);
            if (c) F.axpy(C.row(i), B.row(k), c, B.cols);
        }
    return C;
}

Matrix add(const Matrix& A, const Matrix& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw MathError("matrix shape mismatch in sum");
    Matrix C = A;
    for (std::size_t k = 0; k < C.a.size(); ++k) C.a[k] ^= B.a[k];
    return C;
}

Matrix scale(const Field& F, const Matrix& A, Elem c) {
    Matrix C = A;
    F.scale(C.a.data(), c, C.a.size());
    return C;
}

Matrix transpose(const Matrix& A) {
    Matrix T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
    return T;
}

Matrix block(const Matrix& A, int r0, int c0, int nr, int nc) {
    Matrix B(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) B(i, j) = A(r0 + i, c0 + j);
    return B;
}

void set_block(Matrix& A, int r0, int c0, const Matrix& B) {
    for (int i = 0; i < B.rows; ++i)
        for (int j = 0; j < B.cols; ++j) A(r0 + i, c0 + j) = B(i, j);
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
    int r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows;
        c += b.cols;
    }
    Matrix out(r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        set_block(out, r, c, b);
        r += b.rows;
        c += b.cols;
    }
    return out;
}

Matrix vstack(const Matrix& A, const Matrix& B) {
    if (A.cols != B.cols && A.rows && B.rows) throw MathError("matrix shape mismatch in vstack");
    Matrix out(A.rows + B.rows, A.rows ? A.cols : B.cols);
    std::copy(A.a.begin(), A.a.end(), out.a.begin());
    std::copy(B.a.begin(), B.a.end(), out.a.begin() + A.a.size());
    return out;
}

std::vector<int> rref(const Field& F, Matrix& A) {
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < A.cols && r < A.rows; ++c) {
        int p = -1;
        for (int i = r; i < A.rows; ++i)
            if (A(i, c)) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r) std::swap_ranges(A.row(p), A.row(p) + A.cols, A.row(r));
        Elem inv = F.inv(A(r, c));
        F.scale(A.row(r) + c, inv, A.cols - c);
        for (int i = 0; i < A.rows; ++i)
            if (i != r && A(i, c)) F.axpy(A.row(i) + c, A.row(r) + c, A(i, c), A.cols - c);
        piv.push_back(c);
        ++r;
    }
    A.a.resize(std::size_t(r) * A.cols);
    A.rows = r;
    return piv;
}

int rank(const Field& F, Matrix A) { return int(rref(F, A).size()); }

Matrix nullspace(const Field& F, const Matrix& A) {
    Matrix R = A;
    auto piv = rref(F, R);
    std::vector<char> is_piv(A.cols, 0);
    for (int c : piv) is_piv[c] = 1;
    Matrix N(A.cols - int(piv.size()), A.cols);
    int k = 0;
    for (int f = 0; f < A.cols; ++f) {
        if (is_piv[f]) continue;
        N(k, f) = 1;
        for (int i = 0; i < int(piv.size()); ++i) N(k, piv[i]) = R(i, f);
        ++k;
    }
    return N;
}

Matrix inverse(const Field& F, const Matrix& A) {
    if (A.rows != A.cols) throw MathError("inverse of a non-square matrix");
    int n = A.rows;
    Matrix W(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        std::copy(A.row(i), A.row(i) + n, W.row(i));
        W(i, n + i) = 1;
    }
    auto piv = rref(F, W);
    if (int(piv.size()) < n || (n > 0 && piv[n - 1] != n - 1)) throw MathError("singular matrix");
    return block(W, 0, n, n, n);
}

Elem det(const Field& F, Matrix A) {
    int n = A.rows;
    Elem d = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (A(i, c)) {
                p = i;
                break;
            }
        if (p < 0) return 0;
        if (p != c) std::swap_ranges(A.row(p), A.row(p) + n, A.row(c));
        d = F.mul(d, A(c, c));
        Elem inv = F.inv(A(c, c));
        for (int i = c + 1; i < n; ++i)
            if (A(i, c)) F.axpy(A.row(i) + c, A.row(c) + c, F.mul(A(i, c), inv), n - c);
    }
    return d;
}

}  // namespace mat
}  // namespace a4diff
