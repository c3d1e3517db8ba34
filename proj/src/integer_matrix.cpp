#include "fermat/integer_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace fermat {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols)
{
}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows * cols)
        throw std::invalid_argument("IntegerMatrix: entry count does not match rows * cols");
}

IntegerMatrix IntegerMatrix::identity(std::size_t n)
{
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
    {
        if (rows[i].size() != c)
            throw std::invalid_argument("IntegerMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

bool IntegerMatrix::is_zero() const
{
    for (const auto& e : entries_)
        if (sgn(e) != 0)
            return false;
    return true;
}

IntegerMatrix IntegerMatrix::transposed() const
{
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor)
{
    if (sgn(factor) == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
    {
        const BigInt& s = (*this)(src, j);
        if (sgn(s) != 0)
            (*this)(dst, j) += factor * s;
    }
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor)
{
    if (sgn(factor) == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
    {
        const BigInt& s = (*this)(i, src);
        if (sgn(s) != 0)
            (*this)(i, dst) += factor * s;
    }
}

void IntegerMatrix::negate_row(std::size_t r)
{
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(r, j) = -(*this)(r, j);
}

std::string IntegerMatrix::to_string() const
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i)
    {
        out << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            out << (j ? ", " : "") << (*this)(i, j).get_str();
        out << ']';
    }
    out << ']';
    return out.str();
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("IntegerMatrix product: inner dimensions differ");
    IntegerMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
        {
            const BigInt& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
            {
                const BigInt& bkj = b(k, j);
                if (sgn(bkj) != 0)
                    c(i, j) += aik * bkj;
            }
        }
    return c;
}

} // namespace fermat
