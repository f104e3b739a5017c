#include "qrep/matrix.hpp"

#include <sstream>
#include <utility>

namespace qrep {

namespace {

void check_same_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) {
        throw FieldMismatchError("mixed-field matrices: " + a.field().to_string() + " vs " +
                                 b.field().to_string());
    }
}

}  // namespace

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const Field& f,
                         std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(f, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionMismatchError("ragged row list");
        std::size_t j = 0;
        for (long long v : row) m.at(i, j++) = Scalar::from_int(f, v);
        ++i;
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    }
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    }
    return t;
}

Matrix Matrix::operator-() const {
    Matrix m(*this);
    for (auto& e : m.entries_) e = -e;
    return m;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
           entries_ == rhs.entries_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).to_string();
    }
    os << "]";
    return os.str();
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatchError("add: shapes differ");
    }
    Matrix c(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    }
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatchError("subtract: shapes differ");
    }
    Matrix c(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    }
    return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.cols() != b.rows()) throw DimensionMismatchError("matmul: inner dimensions differ");
    Matrix c(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                c.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return c;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
    if (s.field() != m.field()) throw FieldMismatchError("scalar/matrix field mismatch");
    Matrix c(m);
    for (std::size_t i = 0; i < c.rows(); ++i) {
        for (std::size_t j = 0; j < c.cols(); ++j) c.at(i, j) = s * c.at(i, j);
    }
    return c;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    Matrix c(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) c.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    }
    return c;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows()) throw DimensionMismatchError("hstack: row counts differ");
    Matrix c(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
    }
    return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    if (a.cols() != b.cols()) throw DimensionMismatchError("vstack: column counts differ");
    Matrix c(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(a.rows() + i, j) = b.at(i, j);
    }
    return c;
}

RrefResult rref(const Matrix& m) {
    Matrix r(m);
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
        // first nonzero entry at or below pivot_row
        std::size_t sel = pivot_row;
        while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
        if (sel == r.rows()) continue;
        if (sel != pivot_row) {
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(pivot_row, j));
        }
        Scalar inv = r.at(pivot_row, col).inverse();
        for (std::size_t j = col; j < r.cols(); ++j) r.at(pivot_row, j) = inv * r.at(pivot_row, j);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == pivot_row || r.at(i, col).is_zero()) continue;
            Scalar factor = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j) {
                r.at(i, j) -= factor * r.at(pivot_row, j);
            }
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    std::size_t rk = pivots.size();
    return RrefResult{std::move(r), std::move(pivots), rk};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_columns) is_pivot[c] = true;
    std::size_t nullity = m.cols() - r.rank;
    Matrix k(m.field(), m.cols(), nullity);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        k.at(free_col, out) = Scalar::one(m.field());
        for (std::size_t pr = 0; pr < r.pivot_columns.size(); ++pr) {
            k.at(r.pivot_columns[pr], out) = -r.reduced.at(pr, free_col);
        }
        ++out;
    }
    return k;
}

Matrix image_basis(const Matrix& m) {
    RrefResult r = rref(m);
    Matrix b(m.field(), m.rows(), r.rank);
    for (std::size_t j = 0; j < r.rank; ++j) {
        for (std::size_t i = 0; i < m.rows(); ++i) b.at(i, j) = m.at(i, r.pivot_columns[j]);
    }
    return b;
}

namespace {

// For B with independent columns: T = [B | e_S̄] where S = pivot rows of B
// (pivot columns of Bᵀ) and S̄ its complement. Returns T⁻¹ split after the
// first B.cols() rows, plus S̄ itself.
struct BasisExtension {
    Matrix onto_sub;        // r x m,       onto_sub * B == I_r
    Matrix onto_quotient;   // (m-r) x m,   onto_quotient * B == 0
    std::vector<std::size_t> complement_coords;
};

BasisExtension basis_extension(const Matrix& b, std::size_t ambient) {
    if (b.rows() != ambient) throw DimensionMismatchError("subspace basis has wrong ambient dimension");
    std::size_t r = b.cols();
    RrefResult rt = rref(b.transpose());
    if (rt.rank != r) throw RankDeficientError("columns are not linearly independent");
    std::vector<bool> used(ambient, false);
    for (std::size_t c : rt.pivot_columns) used[c] = true;
    std::vector<std::size_t> complement;
    for (std::size_t i = 0; i < ambient; ++i) {
        if (!used[i]) complement.push_back(i);
    }
    Matrix t(b.field(), ambient, ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        for (std::size_t j = 0; j < r; ++j) t.at(i, j) = b.at(i, j);
    }
    for (std::size_t j = 0; j < complement.size(); ++j) {
        t.at(complement[j], r + j) = Scalar::one(b.field());
    }
    Matrix tinv = inverse(t);
    Matrix onto_sub(b.field(), r, ambient);
    Matrix onto_quot(b.field(), ambient - r, ambient);
    for (std::size_t j = 0; j < ambient; ++j) {
        for (std::size_t i = 0; i < r; ++i) onto_sub.at(i, j) = tinv.at(i, j);
        for (std::size_t i = r; i < ambient; ++i) onto_quot.at(i - r, j) = tinv.at(i, j);
    }
    return BasisExtension{std::move(onto_sub), std::move(onto_quot), std::move(complement)};
}

}  // namespace

CokernelProjection cokernel_projection(const Matrix& m) {
    Matrix b = image_basis(m);
    BasisExtension ext = basis_extension(b, m.rows());
    std::size_t codim = m.rows() - b.cols();
    Matrix section(m.field(), m.rows(), codim);
    for (std::size_t j = 0; j < codim; ++j) {
        section.at(ext.complement_coords[j], j) = Scalar::one(m.field());
    }
    return CokernelProjection{std::move(ext.onto_quotient), codim, std::move(section)};
}

Matrix complement_projection(const Matrix& sub, std::size_t ambient_dim) {
    return basis_extension(sub, ambient_dim).onto_sub;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatchError("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug = hstack(m, Matrix::identity(m.field(), n));
    RrefResult r = rref(aug);
    // left half must reduce to the identity
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= r.pivot_columns.size() || r.pivot_columns[i] != i) {
            throw RankDeficientError("matrix is singular");
        }
    }
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.reduced.at(i, n + j);
    }
    return inv;
}

}  // namespace qrep
