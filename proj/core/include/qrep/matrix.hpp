#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "qrep/scalar.hpp"

namespace qrep {

// Dense exact matrix over a single field. Column-vector convention: matrices
// act on the left, so composing g after f multiplies G*F. Zero-dimensional
// shapes (0 x n, n x 0) are first-class values.
class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_rows(const Field& f,
                            std::initializer_list<std::initializer_list<long long>> rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_identity() const;

    Matrix transpose() const;
    Matrix operator-() const;

    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& m);

// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);
// Side-by-side / stacked augmentation.
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank;
};

// Reduced row echelon form with first-nonzero pivoting (exact, deterministic).
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Columns form a basis of ker(m); rows() == m.cols().
Matrix kernel_basis(const Matrix& m);

// Columns form a basis of im(m): the pivot columns of m.
Matrix image_basis(const Matrix& m);

struct CokernelProjection {
    // projection: target -> coordinates of target/im(m); projection * m == 0.
    Matrix projection;
    std::size_t codim;
    // section of the projection (pivot-complement standard vectors):
    // projection * section == identity(codim).
    Matrix section;
};

CokernelProjection cokernel_projection(const Matrix& m);

// For sub with independent columns inside K^ambient_dim: the projection onto
// span(sub) along the pivot-chosen coordinate complement, in sub-coordinates;
// result * sub == identity(sub.cols()).
Matrix complement_projection(const Matrix& sub, std::size_t ambient_dim);

// Exact inverse; throws RankDeficientError when singular.
Matrix inverse(const Matrix& m);

}  // namespace qrep
