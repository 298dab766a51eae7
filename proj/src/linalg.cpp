#include "mjack/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace mjack {

BigInt det_bareiss(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0)
        return 1;
    IntMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols())
        throw std::invalid_argument("inverse of a non-square matrix");
    // Fraction-free Gauss–Jordan on [A | I]; at the end every diagonal entry
    // of the left block equals det(A) and the right block is adj(A).
    IntMatrix a(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = m(i, j);
        a(i, n + i) = 1;
    }
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                throw TheoremViolation("matrix is singular, expected unimodular");
            for (std::size_t j = 0; j < 2 * n; ++j)
                std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k)
                continue;
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k)
                    continue;
                BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    // prev = sign * det(A); the rows were permuted, but [A|I] row operations
    // keep A^{-1} = right block / prev regardless of the permutation.
    const BigInt det = sign * prev;
    if (det != 1 && det != -1)
        throw TheoremViolation("matrix determinant is " + det.get_str() + ", expected ±1");
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            BigInt v = a(i, n + j);
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            inv(i, j) = v;
        }
    return inv;
}

QMatrix inverse(const QMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols())
        throw std::invalid_argument("inverse of a non-square matrix");
    QMatrix a = m;
    QMatrix inv = QMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0)
            ++p;
        if (p == n)
            throw std::domain_error("singular rational matrix");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        const Rational piv = 1 / a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) *= piv;
            inv(k, j) *= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0)
                continue;
            const Rational f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

IntMatrix to_integer(const QMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1)
                throw TheoremViolation("non-integral matrix entry " + m(i, j).get_str());
            out(i, j) = m(i, j).get_num();
        }
    return out;
}

QMatrix to_rational(const IntMatrix& m) {
    QMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j);
    return out;
}

bool is_upper_unitriangular(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i == j && m(i, j) != 1)
                return false;
            if (i > j && m(i, j) != 0)
                return false;
        }
    return m.rows() == m.cols();
}

bool is_lower_unitriangular(const IntMatrix& m) { return is_upper_unitriangular(m.transpose()); }

BigInt LabeledMatrix::at(const Partition& row, const Partition& col) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i] == row)
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (cols[j] == col)
                    return entries(i, j);
    throw std::out_of_range("no entry (" + row.to_string() + ", " + col.to_string() + ") in " +
                            name);
}

} // namespace mjack
