#include "olab/f2.hpp"

#include "olab/errors.hpp"

#include <utility>

namespace olab {

F2Matrix F2Matrix::identity(std::size_t n)
{
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

F2Matrix F2Matrix::from_columns(std::size_t rows, const std::vector<F2Vector>& cols)
{
    F2Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw InvalidArgument("F2 column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            m.at(i, j) = cols[j][i] & 1;
    }
    return m;
}

F2Vector F2Matrix::column(std::size_t j) const
{
    F2Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = at(i, j);
    return v;
}

std::vector<F2Vector> F2Matrix::column_list() const
{
    std::vector<F2Vector> out;
    for (std::size_t j = 0; j < cols_; ++j)
        out.push_back(column(j));
    return out;
}

F2Matrix F2Matrix::transposed() const
{
    F2Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

bool F2Matrix::is_zero() const
{
    for (auto v : data_)
        if (v)
            return false;
    return true;
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw InvalidArgument("F2 matrix dimension mismatch");
    F2Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (a.at(i, k))
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c.at(i, j) ^= b.at(k, j);
    return c;
}

F2Vector operator*(const F2Matrix& a, const F2Vector& v)
{
    if (a.cols_ != v.size())
        throw InvalidArgument("F2 matrix-vector dimension mismatch");
    F2Vector out(a.rows_, 0);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            out[i] ^= a.at(i, k) & v[k];
    return out;
}

namespace {

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> rref(F2Matrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !m.at(p, c))
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(p, j), m.at(r, j));
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.at(i, c))
                for (std::size_t j = 0; j < m.cols(); ++j)
                    m.at(i, j) ^= m.at(r, j);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t f2_rank(const F2Matrix& m)
{
    F2Matrix t = m;
    return rref(t).size();
}

std::vector<F2Vector> f2_span_basis(const std::vector<F2Vector>& vectors, std::size_t dim)
{
    F2Matrix rows(vectors.size(), dim);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j)
            rows.at(i, j) = vectors[i][j] & 1;
    auto pivots = rref(rows);
    std::vector<F2Vector> out;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        F2Vector v(dim);
        for (std::size_t j = 0; j < dim; ++j)
            v[j] = rows.at(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<F2Vector> f2_kernel(const F2Matrix& m)
{
    F2Matrix t = m;
    auto pivots = rref(t);
    std::vector<std::uint8_t> is_pivot(m.cols(), 0);
    for (auto p : pivots)
        is_pivot[p] = 1;
    std::vector<F2Vector> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        F2Vector v(m.cols(), 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (t.at(r, f))
                v[pivots[r]] = 1;
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<F2Vector> f2_solve(const F2Matrix& m, const F2Vector& b)
{
    if (b.size() != m.rows())
        throw InvalidArgument("f2_solve: right-hand side has wrong length");
    F2Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i] & 1;
    }
    auto pivots = rref(aug);
    F2Vector x(m.cols(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == m.cols())
            return std::nullopt;
        x[pivots[r]] = aug.at(r, m.cols());
    }
    return x;
}

bool f2_in_span(const std::vector<F2Vector>& vectors, const F2Vector& v, std::size_t dim)
{
    return f2_solve(F2Matrix::from_columns(dim, vectors), v).has_value();
}

bool f2_same_span(const std::vector<F2Vector>& a, const std::vector<F2Vector>& b, std::size_t dim)
{
    return f2_span_basis(a, dim) == f2_span_basis(b, dim);
}

F2Vector f2_add(const F2Vector& a, const F2Vector& b)
{
    if (a.size() != b.size())
        throw InvalidArgument("f2_add: length mismatch");
    F2Vector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = (a[i] ^ b[i]) & 1;
    return c;
}

bool f2_is_zero(const F2Vector& v)
{
    for (auto x : v)
        if (x & 1)
            return false;
    return true;
}

F2Vector f2_from_bits(std::uint64_t k, std::size_t dim)
{
    F2Vector v(dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
        v[i] = (k >> i) & 1;
    return v;
}

} // namespace olab
