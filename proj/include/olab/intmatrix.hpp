#pragma once

#include "olab/groupring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace olab {

/// Dense row-major integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Integer> column(std::size_t j) const;
    std::vector<Integer> row(std::size_t i) const;
    IntMatrix columns(const std::vector<std::size_t>& idx) const;

    bool is_zero() const;
    IntMatrix transposed() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    bool operator==(const IntMatrix& other) const = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += q * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& q);
    /// col[dst] += q * col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& q);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
/// Entrywise reduction into [0, m).
IntMatrix reduce_mod(const IntMatrix& a, const Integer& m);
Integer mod_floor(const Integer& a, const Integer& m);

/// U * M * V = D with D diagonal, d_1 | d_2 | ..., all d_i >= 0.
struct SNFResult {
    std::vector<Integer> diagonal; // length min(rows, cols), zeros after `rank`
    std::size_t rank = 0;
    IntMatrix U, V;       // present when transforms were requested
    IntMatrix Uinv, Vinv; // present when inverses were requested
};

struct SNFOptions {
    bool transforms = true;
    bool inverses = true;
};

SNFResult smith_normal_form(const IntMatrix& m, SNFOptions opts = {});

/// Integer solution x of A x = b, if any.
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, const std::vector<Integer>& b);
/// Solves A X = B column by column; throws ConsistencyError if some column has no solution.
IntMatrix solve_exact(const IntMatrix& a, const IntMatrix& b);
/// Columns form a Z-basis of {x : A x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);
/// Columns form a Z-basis of the lattice spanned by the columns of `gens`.
IntMatrix lattice_basis(const IntMatrix& gens);
std::size_t integer_rank(const IntMatrix& a);

} // namespace olab
