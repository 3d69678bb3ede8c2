#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liealc/rational.hpp"

namespace liealc {

/// Dense row-major matrix over Q.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    /// Matrix whose rows are the given vectors (all of equal dimension).
    static Matrix from_rows(std::span<const RationalVector> rows);
    /// Matrix whose columns are the given vectors.
    static Matrix from_columns(std::span<const RationalVector> cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    RationalVector row(std::size_t r) const;
    RationalVector column(std::size_t c) const;

    Matrix transpose() const;
    RationalVector apply(const RationalVector& v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix&, const Matrix&) = default;

    std::string str() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

// Exact elimination helpers. None of these use pivot heuristics: any nonzero
// pivot is fine over Q.

std::size_t rank(Matrix m);
Rational determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

/// Basis of {x : m x = 0}.
std::vector<RationalVector> nullspace(const Matrix& m);

/**
 * Solves m x = b. Returns the unique solution if the system is consistent and
 * m has full column rank; std::nullopt if inconsistent or underdetermined.
 */
std::optional<RationalVector> solve_unique(const Matrix& m, const RationalVector& b);

/// True iff the system m x = b has at least one solution.
bool is_consistent(const Matrix& m, const RationalVector& b);

}  // namespace liealc
