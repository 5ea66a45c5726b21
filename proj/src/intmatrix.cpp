#include "olab/intmatrix.hpp"

#include "olab/errors.hpp"

#include <sstream>

namespace olab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw InvalidArgument("ragged matrix literal");
        for (long v : r)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& cols)
{
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw InvalidArgument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            m.at(i, j) = cols[j][i];
    }
    return m;
}

std::vector<Integer> IntMatrix::column(std::size_t j) const
{
    std::vector<Integer> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = at(i, j);
    return v;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const
{
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

IntMatrix IntMatrix::columns(const std::vector<std::size_t>& idx) const
{
    IntMatrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < idx.size(); ++k)
            m.at(i, k) = at(i, idx[k]);
    return m;
}

bool IntMatrix::is_zero() const
{
    for (const auto& v : data_)
        if (v != 0)
            return false;
    return true;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw InvalidArgument("integer matrix dimension mismatch in product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& x = a.at(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Integer& y = b.at(k, j);
                if (y != 0)
                    mpz_addmul(c.at(i, j).get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            }
        }
    return c;
}

std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v)
{
    if (a.cols_ != v.size())
        throw InvalidArgument("integer matrix-vector dimension mismatch");
    std::vector<Integer> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (v[k] != 0 && a.at(i, k) != 0)
                mpz_addmul(out[i].get_mpz_t(), a.at(i, k).get_mpz_t(), v[k].get_mpz_t());
    return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw InvalidArgument("integer matrix dimension mismatch in sum");
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k)
        c.data_[k] += b.data_[k];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw InvalidArgument("integer matrix dimension mismatch in difference");
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k)
        c.data_[k] -= b.data_[k];
    return c;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        mpz_swap(at(a, j).get_mpz_t(), at(b, j).get_mpz_t());
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        mpz_swap(at(i, a).get_mpz_t(), at(i, b).get_mpz_t());
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& q)
{
    if (q == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j) {
        const Integer& s = at(src, j);
        if (s != 0)
            mpz_addmul(at(dst, j).get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
    }
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& q)
{
    if (q == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i) {
        const Integer& s = at(i, src);
        if (s != 0)
            mpz_addmul(at(i, dst).get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
    }
}

void IntMatrix::negate_row(std::size_t i)
{
    for (std::size_t j = 0; j < cols_; ++j)
        mpz_neg(at(i, j).get_mpz_t(), at(i, j).get_mpz_t());
}

void IntMatrix::negate_col(std::size_t j)
{
    for (std::size_t i = 0; i < rows_; ++i)
        mpz_neg(at(i, j).get_mpz_t(), at(i, j).get_mpz_t());
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows())
        throw InvalidArgument("hstack: row count mismatch");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            m.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.cols())
        throw InvalidArgument("vstack: column count mismatch");
    IntMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m.at(a.rows() + i, j) = b.at(i, j);
    return m;
}

Integer mod_floor(const Integer& a, const Integer& m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

IntMatrix reduce_mod(const IntMatrix& a, const Integer& m)
{
    IntMatrix r = a;
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j)
            r.at(i, j) = mod_floor(r.at(i, j), m);
    return r;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

class SNFWorker {
public:
    SNFWorker(const IntMatrix& m, SNFOptions opts) : a_(m), opts_(opts)
    {
        if (opts_.transforms) {
            u_ = IntMatrix::identity(m.rows());
            v_ = IntMatrix::identity(m.cols());
        }
        if (opts_.inverses) {
            uinv_ = IntMatrix::identity(m.rows());
            vinv_ = IntMatrix::identity(m.cols());
        }
    }

    SNFResult run()
    {
        const std::size_t n = std::min(a_.rows(), a_.cols());
        std::size_t t = 0;
        for (; t < n; ++t) {
            if (!move_smallest_to(t, t, t))
                break;
            reduce_pivot(t);
        }
        SNFResult r;
        r.rank = t;
        r.diagonal.resize(n);
        for (std::size_t i = 0; i < t; ++i)
            r.diagonal[i] = a_.at(i, i);
        if (opts_.transforms) {
            r.U = std::move(u_);
            r.V = std::move(v_);
        }
        if (opts_.inverses) {
            r.Uinv = std::move(uinv_);
            r.Vinv = std::move(vinv_);
        }
        return r;
    }

private:
    // Moves the smallest nonzero entry of the block [r0.., c0..] to (t, t).
    bool move_smallest_to(std::size_t t, std::size_t r0, std::size_t c0)
    {
        std::size_t bi = 0, bj = 0;
        bool found = false;
        for (std::size_t i = r0; i < a_.rows(); ++i)
            for (std::size_t j = c0; j < a_.cols(); ++j) {
                const Integer& x = a_.at(i, j);
                if (x == 0)
                    continue;
                if (!found || cmpabs(x, a_.at(bi, bj)) < 0) {
                    bi = i;
                    bj = j;
                    found = true;
                    if (cmpabs(x, 1) == 0)
                        goto done;
                }
            }
    done:
        if (!found)
            return false;
        row_swap(t, bi);
        col_swap(t, bj);
        return true;
    }

    static int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }
    static int cmpabs(const Integer& a, unsigned long b) { return mpz_cmpabs_ui(a.get_mpz_t(), b); }

    void reduce_pivot(std::size_t t)
    {
        Integer q;
        while (true) {
            bool dirty = false;
            // column below the pivot
            for (std::size_t i = t + 1; i < a_.rows(); ++i) {
                if (a_.at(i, t) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a_.at(i, t).get_mpz_t(), a_.at(t, t).get_mpz_t());
                row_add(i, t, -q);
                if (a_.at(i, t) != 0)
                    dirty = true;
            }
            // row right of the pivot
            for (std::size_t j = t + 1; j < a_.cols(); ++j) {
                if (a_.at(t, j) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a_.at(t, j).get_mpz_t(), a_.at(t, t).get_mpz_t());
                col_add(j, t, -q);
                if (a_.at(t, j) != 0)
                    dirty = true;
            }
            if (dirty) {
                move_smallest_in_cross(t);
                continue;
            }
            // divisibility of the remaining block
            bool fixed = false;
            for (std::size_t i = t + 1; i < a_.rows() && !fixed; ++i)
                for (std::size_t j = t + 1; j < a_.cols(); ++j) {
                    const Integer& x = a_.at(i, j);
                    if (x != 0 && !mpz_divisible_p(x.get_mpz_t(), a_.at(t, t).get_mpz_t())) {
                        row_add(t, i, 1);
                        fixed = true;
                        break;
                    }
                }
            if (!fixed)
                break;
        }
        if (a_.at(t, t) < 0)
            row_negate(t);
    }

    // After a partial elimination pass: bring the smallest nonzero entry of
    // row t / column t onto the diagonal.
    void move_smallest_in_cross(std::size_t t)
    {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
            if (a_.at(i, t) != 0 && cmpabs(a_.at(i, t), a_.at(bi, bj)) < 0) {
                bi = i;
                bj = t;
            }
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
            if (a_.at(t, j) != 0 && cmpabs(a_.at(t, j), a_.at(bi, bj)) < 0) {
                bi = t;
                bj = j;
            }
        row_swap(t, bi);
        col_swap(t, bj);
    }

    void row_swap(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        a_.swap_rows(a, b);
        if (opts_.transforms)
            u_.swap_rows(a, b);
        if (opts_.inverses)
            uinv_.swap_cols(a, b);
    }

    void col_swap(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        a_.swap_cols(a, b);
        if (opts_.transforms)
            v_.swap_cols(a, b);
        if (opts_.inverses)
            vinv_.swap_rows(a, b);
    }

    // row[dst] += q * row[src]
    void row_add(std::size_t dst, std::size_t src, const Integer& q)
    {
        if (q == 0)
            return;
        a_.add_row(dst, src, q);
        if (opts_.transforms)
            u_.add_row(dst, src, q);
        if (opts_.inverses)
            uinv_.add_col(src, dst, -q);
    }

    // col[dst] += q * col[src]
    void col_add(std::size_t dst, std::size_t src, const Integer& q)
    {
        if (q == 0)
            return;
        a_.add_col(dst, src, q);
        if (opts_.transforms)
            v_.add_col(dst, src, q);
        if (opts_.inverses)
            vinv_.add_row(src, dst, -q);
    }

    void row_negate(std::size_t i)
    {
        a_.negate_row(i);
        if (opts_.transforms)
            u_.negate_row(i);
        if (opts_.inverses)
            uinv_.negate_col(i);
    }

    IntMatrix a_;
    SNFOptions opts_;
    IntMatrix u_, v_, uinv_, vinv_;
};

} // namespace

SNFResult smith_normal_form(const IntMatrix& m, SNFOptions opts)
{
    return SNFWorker(m, opts).run();
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, const std::vector<Integer>& b)
{
    if (b.size() != a.rows())
        throw InvalidArgument("solve_integer: right-hand side has wrong length");
    auto snf = smith_normal_form(a, {true, false});
    auto ub = snf.U * b;
    std::vector<Integer> y(a.cols());
    for (std::size_t i = 0; i < ub.size(); ++i) {
        if (i < snf.rank) {
            if (!mpz_divisible_p(ub[i].get_mpz_t(), snf.diagonal[i].get_mpz_t()))
                return std::nullopt;
            mpz_divexact(y[i].get_mpz_t(), ub[i].get_mpz_t(), snf.diagonal[i].get_mpz_t());
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.V * y;
}

IntMatrix solve_exact(const IntMatrix& a, const IntMatrix& b)
{
    if (b.rows() != a.rows())
        throw InvalidArgument("solve_exact: row count mismatch");
    auto snf = smith_normal_form(a, {true, false});
    IntMatrix ub = snf.U * b;
    IntMatrix y(a.cols(), b.cols());
    for (std::size_t i = 0; i < ub.rows(); ++i)
        for (std::size_t j = 0; j < ub.cols(); ++j) {
            if (i < snf.rank) {
                check_consistency(mpz_divisible_p(ub.at(i, j).get_mpz_t(), snf.diagonal[i].get_mpz_t()) != 0,
                                  "solve_exact: system has no integer solution");
                mpz_divexact(y.at(i, j).get_mpz_t(), ub.at(i, j).get_mpz_t(), snf.diagonal[i].get_mpz_t());
            } else {
                check_consistency(ub.at(i, j) == 0, "solve_exact: system is inconsistent");
            }
        }
    return snf.V * y;
}

IntMatrix kernel_basis(const IntMatrix& a)
{
    auto snf = smith_normal_form(a, {true, false});
    std::vector<std::size_t> idx;
    for (std::size_t j = snf.rank; j < a.cols(); ++j)
        idx.push_back(j);
    return snf.V.columns(idx);
}

IntMatrix lattice_basis(const IntMatrix& gens)
{
    auto snf = smith_normal_form(gens, {false, true});
    IntMatrix basis(gens.rows(), snf.rank);
    for (std::size_t k = 0; k < snf.rank; ++k)
        for (std::size_t i = 0; i < gens.rows(); ++i)
            basis.at(i, k) = snf.Uinv.at(i, k) * snf.diagonal[k];
    return basis;
}

std::size_t integer_rank(const IntMatrix& a)
{
    return smith_normal_form(a, {false, false}).rank;
}

} // namespace olab
