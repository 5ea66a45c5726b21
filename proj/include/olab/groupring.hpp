#pragma once

#include "olab/groups.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace olab {

using Integer = mpz_class;

/// Finitely supported element of Z[G]. Zero coefficients are never stored.
class RingElement {
public:
    using Terms = std::map<GroupElement, Integer>;

    RingElement() = default; // zero with no group attached; adopts a group on first use
    explicit RingElement(GroupPtr group) : group_(std::move(group)) {}

    static RingElement zero(GroupPtr group) { return RingElement(std::move(group)); }
    static RingElement one(GroupPtr group);
    static RingElement scalar(GroupPtr group, const Integer& c);
    static RingElement monomial(GroupPtr group, const GroupElement& g, const Integer& c = 1);

    const GroupPtr& group() const { return group_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(const GroupElement& g) const;
    std::size_t support_size() const { return terms_.size(); }

    void add_term(const GroupElement& g, const Integer& c);

    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    RingElement& operator*=(const Integer& c);

    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(RingElement a, const Integer& c) { return a *= c; }
    friend RingElement operator*(const Integer& c, RingElement a) { return a *= c; }
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    RingElement operator-() const;

    bool operator==(const RingElement& other) const;

private:
    const GroupPtr& common_group(const RingElement& other) const;

    GroupPtr group_;
    Terms terms_;
};

RingElement multiply(const RingElement& a, const RingElement& b);
RingElement involute(const RingElement& a);
/// Sum of coefficients; reduced into [0, modulus) when modulus > 0.
Integer augment(const RingElement& a, std::int64_t modulus = 0);
RingElement pushforward(const RingElement& a, const GroupHom& phi);

/// Sum of all group elements (finite groups).
RingElement norm_element(const GroupPtr& g);
/// 1 + s + ... + s^{n-1} for the generator s of cyclic factor `factor`.
RingElement factor_norm(const GroupPtr& g, std::size_t factor);
/// Sum_{i < k} s^i for generator index `gen`.
RingElement geometric_sum(const GroupPtr& g, std::size_t gen, std::int64_t k);
/// 1 - s for generator index `gen`.
RingElement one_minus(const GroupPtr& g, std::size_t gen);

/// "2 + 3*T^3", "1 - T", "-x^3*y", "t^-2"; "0" for zero.
std::string render(const RingElement& a);
/// Inverse of render; also accepts whitespace instead of '*'.
RingElement parse_ring_element(const GroupPtr& g, std::string_view text);

/// Dense matrix over Z[G].
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(GroupPtr group, std::size_t rows, std::size_t cols);

    static RingMatrix identity(GroupPtr group, std::size_t n);

    const GroupPtr& group() const { return group_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    RingElement& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const RingElement& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    RingMatrix row(std::size_t i) const;
    bool is_zero() const;

    RingMatrix& operator+=(const RingMatrix& other);
    RingMatrix& operator-=(const RingMatrix& other);
    friend RingMatrix operator+(RingMatrix a, const RingMatrix& b) { return a += b; }
    friend RingMatrix operator-(RingMatrix a, const RingMatrix& b) { return a -= b; }
    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
    RingMatrix operator-() const;
    bool operator==(const RingMatrix& other) const;

private:
    GroupPtr group_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<RingElement> entries_;
};

/// Involuted transpose: (M†)_{ij} = involute(M_{ji}).
RingMatrix conj_transpose(const RingMatrix& m);
RingMatrix transpose(const RingMatrix& m);
RingMatrix pushforward(const RingMatrix& m, const GroupHom& phi);
/// Row vector [v_0 ... v_{n-1}] as a 1 x n matrix.
RingMatrix row_vector(const GroupPtr& g, const std::vector<RingElement>& v);

std::vector<std::vector<std::string>> render(const RingMatrix& m);

} // namespace olab
