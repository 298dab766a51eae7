#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mjack/exact.hpp"
#include "mjack/partitions.hpp"

namespace mjack {

/// Dense row-major matrix over a ring T (BigInt or Rational).
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using QMatrix = Matrix<Rational>;

/// Fraction-free (Bareiss) determinant of a square integer matrix.
BigInt det_bareiss(const IntMatrix& m);

/// Integer inverse of a unimodular matrix via fraction-free Gauss–Jordan
/// (the adjugate divided by the determinant). Throws TheoremViolation if
/// the determinant is not ±1.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Exact inverse over ℚ; throws std::domain_error if singular.
QMatrix inverse(const QMatrix& m);

/// Converts a rational matrix with integral entries; throws otherwise.
IntMatrix to_integer(const QMatrix& m);
QMatrix to_rational(const IntMatrix& m);

bool is_upper_unitriangular(const IntMatrix& m);
bool is_lower_unitriangular(const IntMatrix& m);

/// An integer matrix whose rows and columns are labelled by partitions.
struct LabeledMatrix {
    std::string name;
    std::string row_header;
    std::string col_header;
    std::vector<Partition> rows;
    std::vector<Partition> cols;
    IntMatrix entries;

    BigInt at(const Partition& row, const Partition& col) const;
    /// Keeps the rows/columns satisfying the predicates, in order.
    template <typename RowPred, typename ColPred>
    LabeledMatrix sub(RowPred keep_row, ColPred keep_col) const {
        LabeledMatrix out{name, row_header, col_header, {}, {}, {}};
        std::vector<std::size_t> ri, ci;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (keep_row(rows[i])) {
                ri.push_back(i);
                out.rows.push_back(rows[i]);
            }
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (keep_col(cols[j])) {
                ci.push_back(j);
                out.cols.push_back(cols[j]);
            }
        out.entries = IntMatrix(ri.size(), ci.size());
        for (std::size_t i = 0; i < ri.size(); ++i)
            for (std::size_t j = 0; j < ci.size(); ++j)
                out.entries(i, j) = entries(ri[i], ci[j]);
        return out;
    }
};

} // namespace mjack
