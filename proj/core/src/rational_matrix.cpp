#include "ihspace/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace ihs {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows)
    {
        if (row.size() != cols_)
            throw std::invalid_argument("RationalMatrix: ragged row literal");
        for (long v : row)
            data_.emplace_back(v);
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols)
{
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
    {
        if (rows[r].size() != cols)
            throw std::invalid_argument("RationalMatrix::from_rows: row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns, std::size_t rows)
{
    RationalMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
    {
        if (columns[c].size() != rows)
            throw std::invalid_argument("RationalMatrix::from_columns: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

bool RationalMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

RationalVector RationalMatrix::column(std::size_t c) const
{
    RationalVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

RationalMatrix RationalMatrix::select_columns(std::span<const std::size_t> indices) const
{
    RationalMatrix m(rows_, indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j)
    {
        if (indices[j] >= cols_)
            throw std::out_of_range("RationalMatrix::select_columns: index out of range");
        for (std::size_t r = 0; r < rows_; ++r)
            m(r, j) = (*this)(r, indices[j]);
    }
    return m;
}

RationalMatrix RationalMatrix::hconcat(const RationalMatrix& other) const
{
    if (rows_ != other.rows_)
        throw std::invalid_argument("RationalMatrix::hconcat: row count mismatch");
    RationalMatrix m(rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
    {
        for (std::size_t c = 0; c < cols_; ++c)
            m(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < other.cols_; ++c)
            m(r, cols_ + c) = other(r, c);
    }
    return m;
}

RationalVector RationalMatrix::apply(std::span<const Rational> v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("RationalMatrix::apply: dimension mismatch");
    RationalVector out(rows_);
    for (std::size_t c = 0; c < cols_; ++c)
    {
        if (v[c].is_zero())
            continue;
        for (std::size_t r = 0; r < rows_; ++r)
            if (!(*this)(r, c).is_zero())
                out[r] += (*this)(r, c) * v[c];
    }
    return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("RationalMatrix: product shape mismatch");
    RationalMatrix m(a.rows_, b.cols_);
    // Boundary matrices are mostly zeros; skip them rather than multiply.
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
        {
            const Rational& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    m(i, j) += aik * b(k, j);
        }
    return m;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("RationalMatrix: sum shape mismatch");
    RationalMatrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i)
        m.data_[i] += b.data_[i];
    return m;
}

RationalMatrix operator-(const RationalMatrix& a)
{
    RationalMatrix m = a;
    for (auto& x : m.data_)
        x = -x;
    return m;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m)
{
    os << "[" << m.rows_ << "x" << m.cols_ << "]";
    for (std::size_t r = 0; r < m.rows_; ++r)
    {
        os << "\n ";
        for (std::size_t c = 0; c < m.cols_; ++c)
            os << ' ' << m(r, c);
    }
    return os;
}

RowEchelon row_echelon(RationalMatrix m)
{
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> support;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col)
    {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero())
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != row)
            for (std::size_t c = col; c < m.cols(); ++c)
                std::swap(m(pivot, c), m(row, c));

        const Rational inv = 1 / m(row, col);
        support.clear();
        for (std::size_t c = col; c < m.cols(); ++c)
            if (!m(row, c).is_zero())
            {
                m(row, c) *= inv;
                support.push_back(c);
            }

        for (std::size_t r = 0; r < m.rows(); ++r)
        {
            if (r == row || m(r, col).is_zero())
                continue;
            const Rational factor = m(r, col);
            for (std::size_t c : support)
                m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m)
{
    if (m.empty())
        return 0;
    return row_echelon(m).pivot_columns.size();
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m)
{
    const RowEchelon e = row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_columns)
        is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free)
    {
        if (is_pivot[free])
            continue;
        RationalVector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivot_columns.size(); ++i)
            v[e.pivot_columns[i]] = -e.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::size_t> independent_columns(const RationalMatrix& m)
{
    if (m.empty())
        return {};
    return row_echelon(m).pivot_columns;
}

}  // namespace ihs
