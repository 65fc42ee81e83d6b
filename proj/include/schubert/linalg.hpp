#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "schubert/rational.hpp"

namespace schubert {

using RatVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

// Dense matrix over the rationals, dimensions fixed at construction.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatVector row(std::size_t i) const;
    RatVector col(std::size_t j) const;

    RatMatrix operator*(const RatMatrix& o) const;
    RatVector apply(const RatVector& v) const;  // matrix * column vector
    RatMatrix transposed() const;

    bool operator==(const RatMatrix& o) const = default;

    // In-place reduced row echelon form; returns the pivot columns.
    // Row elimination is parallelized across rows.
    std::vector<std::size_t> rref();

    RatMatrix inverse() const;  // throws MathError if singular

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Dense matrix over the integers.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;

    RatMatrix to_rational() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

private:
    std::size_t rows_, cols_;
    std::vector<Integer> data_;
};

// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

std::size_t rank(RatMatrix a);

// Basis of {x : A x = 0}, reduced-row-echelon normalized for deterministic
// output. A 0 x n matrix yields the full standard basis.
std::vector<RatVector> rational_kernel(const RatMatrix& a);

// Least structural: solves A x = b exactly; nullopt when inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

// Is v in the rational span of the given vectors?
bool in_span(const std::vector<RatVector>& span, const RatVector& v);

}  // namespace schubert
