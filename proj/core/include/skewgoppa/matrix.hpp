#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "skewgoppa/field.hpp"

namespace skewgoppa {

/// Dense matrix over F_{q^t}.  Desk-scale only: both dimensions are capped at
/// 4096.  Zero-row and zero-column matrices are legal and show up routinely
/// (zero codes, full-space parity checks).
class Matrix {
  public:
    Matrix(const Field& f, size_t rows, size_t cols);
    static Matrix identity(const Field& f, size_t n);
    /// Square matrix with the given diagonal.
    static Matrix diagonal(const Field& f, const std::vector<Elem>& d);
    static Matrix from_rows(const Field& f, const std::vector<std::vector<Elem>>& rows,
                            size_t cols);

    const Field& field() const { return *f_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Elem& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Elem& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    Elem& operator()(size_t i, size_t j) { return at(i, j); }
    const Elem& operator()(size_t i, size_t j) const { return at(i, j); }

    std::vector<Elem> row(size_t i) const;
    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// M * v^T for a length-cols vector.
    std::vector<Elem> apply(const std::vector<Elem>& v) const;

  private:
    const Field* f_;
    size_t rows_, cols_;
    std::vector<Elem> a_;
};

struct Rref {
    Matrix mat;
    std::vector<size_t> pivots;
};

/// Canonical reduced row echelon form: unit pivots on strictly increasing
/// columns, zero rows last; first-nonzero pivot scan for determinism.
Rref rref(const Matrix& m);
size_t rank(const Matrix& m);
/// Rows form a basis of the right null space { c : M c^T = 0 }; row count is
/// cols - rank, with free columns taken in ascending order.
Matrix kernel_basis(const Matrix& m);
/// Standard Kronecker product; block (i,j) is A(i,j)*B, and the column index
/// of (jA, jB) is jA*cols(B) + jB.
Matrix kronecker(const Matrix& a, const Matrix& b);
/// theta^i applied entrywise; rank is preserved.
Matrix frobenius_entrywise(const Matrix& m, int64_t i);
/// Row spaces compared via canonical RREF with zero rows dropped.
bool row_space_equal(const Matrix& a, const Matrix& b);
/// Vertical stack.
Matrix stack(const Matrix& top, const Matrix& bottom);

/// Entry (i,j) = N_i(s_j), the theta-twisted Vandermonde matrix.
Matrix skew_vandermonde(const Field& f, const std::vector<Elem>& s, size_t rows);
/// Entry (i,j) = s_j^i, the classical Vandermonde matrix.
Matrix vandermonde(const Field& f, const std::vector<Elem>& s, size_t rows);

/// Text format: first line "rows cols", then one line per row of
/// space-separated element integers.
std::string to_text(const Matrix& m);
Matrix matrix_from_text(const Field& f, const std::string& text);

} // namespace skewgoppa
