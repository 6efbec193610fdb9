#pragma once

#include "ptrans/numeric.hpp"

#include <cstddef>
#include <vector>

namespace ptrans {

/// Dense row-major matrix over exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix constant(std::size_t rows, std::size_t cols, const Rational& value);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Rational>& data() const { return data_; }

    RationalMatrix& operator+=(const RationalMatrix& other);
    RationalMatrix& operator*=(const Rational& scalar);

    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }

    /// Ordinary product. Both operands are scaled to integer matrices over a
    /// common denominator and multiplied in 64-bit arithmetic when the
    /// entries are provably small enough, else in big integers.
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

    /// Entrywise (Schur) product.
    RationalMatrix hadamard(const RationalMatrix& other) const;

    Rational trace() const;

    /// Σ_ij A_ij B_ji = trace(A·B), without forming the product.
    static Rational trace_of_product(const RationalMatrix& a, const RationalMatrix& b);

    bool is_symmetric() const;
    bool is_zero() const;

    bool operator==(const RationalMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Rank of the given vectors (all of one length), by exact elimination.
std::size_t rank_of(std::vector<std::vector<Rational>> rows);

} // namespace ptrans
