#pragma once

// Exact integer linear algebra: dense matrices over arbitrary-precision
// integers, Smith normal form with unimodular transforms, a sparse
// invariant-factor routine for boundary matrices, and rank.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace znx {

using BigInt = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<BigInt>;

class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);

    static IntegerMatrix identity(std::size_t n);
    /// Builds from nested rows; all rows must have equal length.
    static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);
    static IntegerMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntVector column(std::size_t c) const;
    IntegerMatrix transposed() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    bool is_zero() const;
    bool operator==(const IntegerMatrix&) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

/// Determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntegerMatrix& m);

/// Rank over the rationals, by fraction-free elimination.
std::size_t rank(const IntegerMatrix& m);
std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols);

struct SnfResult {
    /// min(rows, cols) entries; nonzero entries first, each dividing the next.
    std::vector<BigInt> diagonal;
    std::size_t rank = 0;
    /// left * input * right == diag(diagonal)
    IntegerMatrix left;
    IntegerMatrix right;
    /// Inverses of the transforms, maintained alongside them.
    IntegerMatrix left_inverse;
    IntegerMatrix right_inverse;
};

SnfResult smith_normal_form(const IntegerMatrix& m);

/// Nonzero invariant factors only, without transforms. Works on a sparse
/// copy and eliminates unit pivots first; intended for boundary matrices.
std::vector<BigInt> invariant_factors(const IntegerMatrix& m);

/// Sparse entry list for large boundary matrices: (row, col, value).
struct SparseEntry {
    std::size_t row;
    std::size_t col;
    long value;
};
std::vector<BigInt> invariant_factors_sparse(std::size_t rows, std::size_t cols,
                                             std::span<const SparseEntry> entries);

/// Row-style Hermite reduction with a tracked unimodular transform:
/// transform * m == reduced, the first `rank` rows of `reduced` form a basis of
/// the integer row lattice of m, and the remaining rows are zero.
struct RowReduction {
    IntegerMatrix reduced;
    IntegerMatrix transform;
    IntegerMatrix transform_inverse;
    std::size_t rank = 0;
};
RowReduction row_reduce(const IntegerMatrix& m);

/// Reduced row echelon form over Q with integer-primitive rows; a canonical
/// key for the rational row space.
std::vector<IntVector> canonical_row_space(const std::vector<IntVector>& rows, std::size_t cols);

BigInt gcd(const BigInt& a, const BigInt& b);
/// Returns (g, x, y) with a*x + b*y == g == gcd(a, b) >= 0.
struct Bezout {
    BigInt g, x, y;
};
Bezout extended_gcd(const BigInt& a, const BigInt& b);

bool is_zero(const IntVector& v);
std::string to_string(const IntVector& v);

}  // namespace znx
