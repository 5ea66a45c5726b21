#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace olab {

using F2Vector = std::vector<std::uint8_t>;

/// Dense matrix over Z/2.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static F2Matrix identity(std::size_t n);
    static F2Matrix from_columns(std::size_t rows, const std::vector<F2Vector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint8_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::uint8_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    F2Vector column(std::size_t j) const;
    std::vector<F2Vector> column_list() const;
    F2Matrix transposed() const;
    bool is_zero() const;

    friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);
    friend F2Vector operator*(const F2Matrix& a, const F2Vector& v);
    bool operator==(const F2Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> data_;
};

std::size_t f2_rank(const F2Matrix& m);
/// Reduced basis (as columns) of the column span.
std::vector<F2Vector> f2_span_basis(const std::vector<F2Vector>& vectors, std::size_t dim);
/// Basis of {x : M x = 0}.
std::vector<F2Vector> f2_kernel(const F2Matrix& m);
std::optional<F2Vector> f2_solve(const F2Matrix& m, const F2Vector& b);
bool f2_in_span(const std::vector<F2Vector>& vectors, const F2Vector& v, std::size_t dim);
/// Equality of the spans of two families in (Z/2)^dim.
bool f2_same_span(const std::vector<F2Vector>& a, const std::vector<F2Vector>& b, std::size_t dim);

F2Vector f2_add(const F2Vector& a, const F2Vector& b);
bool f2_is_zero(const F2Vector& v);
/// Vector whose bits are those of `k` (bit i -> coordinate i).
F2Vector f2_from_bits(std::uint64_t k, std::size_t dim);

} // namespace olab
