/**
 * Exact dense linear algebra over the rationals.
 *
 * Every homology rank in the library goes through `rank()` or
 * `kernel_basis()` below, so Betti numbers come out as exact integers.
 */
#ifndef IHSPACE_RATIONAL_MATRIX_HPP
#define IHSPACE_RATIONAL_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace ihs {

/// Canonical fraction: positive denominator, coprime parts, 0 == 0/1.
using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;

class RationalMatrix
{
  public:
    RationalMatrix() = default;

    /// Zero matrix of the given shape.
    RationalMatrix(std::size_t rows, std::size_t cols);

    /// Row-major integer literal, e.g. `{{1, 0}, {0, 1}}`. All rows must have
    /// the same length.
    RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);
    static RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    RationalMatrix transpose() const;
    RationalVector column(std::size_t c) const;

    /// Columns `indices` of this matrix, in the given order.
    RationalMatrix select_columns(std::span<const std::size_t> indices) const;

    /// `[this | other]`; row counts must agree.
    RationalMatrix hconcat(const RationalMatrix& other) const;

    RationalVector apply(std::span<const Rational> v) const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);
    friend std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form together with the pivot column of each
/// nonzero row, in increasing order.
struct RowEchelon
{
    RationalMatrix reduced;
    std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination. The pivot of each column is the first row
/// (at or below the current one) with a nonzero entry in that column.
RowEchelon row_echelon(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of the null space; one vector per non-pivot column of the echelon
/// form, with a 1 in that free coordinate.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Indices of the first maximal linearly independent set of columns,
/// scanning left to right.
std::vector<std::size_t> independent_columns(const RationalMatrix& m);

}  // namespace ihs

#endif
