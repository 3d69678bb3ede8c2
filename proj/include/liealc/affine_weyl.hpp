#pragma once

#include <optional>
#include <vector>

#include "liealc/alcove.hpp"
#include "liealc/linalg.hpp"

namespace liealc {

/// Exact reflection s_alpha(v) = v - 2<alpha,v>/<alpha,alpha> alpha.
RationalVector reflect_in(const RationalVector& alpha, const RationalVector& v);
Matrix reflection_matrix(const RationalVector& alpha);

/**
 * Linear part of an affine Weyl element. The matrix is authoritative; the word
 * (root indices, 0 meaning alpha_0, composed right to left) is metadata and
 * may be absent.
 */
class WeylElement {
  public:
    explicit WeylElement(Matrix matrix, std::optional<std::vector<int>> word = std::nullopt)
        : matrix_(std::move(matrix)), word_(std::move(word)) {}

    static WeylElement identity(std::size_t ambient_dim) {
        return WeylElement(Matrix::identity(ambient_dim), std::vector<int>{});
    }

    const Matrix& matrix() const { return matrix_; }
    const std::optional<std::vector<int>>& word() const { return word_; }

    RationalVector apply(const RationalVector& v) const { return matrix_.apply(v); }
    bool is_identity() const { return matrix_ == Matrix::identity(matrix_.rows()); }

    /// Orthogonal matrices: the inverse is the transpose.
    WeylElement inverse() const;

    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    /// Equality of group elements; words are ignored.
    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }

  private:
    Matrix matrix_;
    std::optional<std::vector<int>> word_;
};

/// xi -> linear(xi) + translation, with translation in the coroot lattice.
class AffineWeylElement {
  public:
    AffineWeylElement(WeylElement linear, RationalVector translation)
        : linear_(std::move(linear)), translation_(std::move(translation)) {}

    static AffineWeylElement identity(std::size_t ambient_dim) {
        return {WeylElement::identity(ambient_dim), RationalVector(ambient_dim)};
    }

    const WeylElement& linear() const { return linear_; }
    const RationalVector& translation() const { return translation_; }

    RationalVector apply(const RationalVector& xi) const { return linear_.apply(xi) + translation_; }
    bool is_identity() const { return linear_.is_identity() && translation_.is_zero(); }

    /// (a * b)(xi) = a(b(xi)).
    friend AffineWeylElement operator*(const AffineWeylElement& a, const AffineWeylElement& b);
    friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
        return a.linear_ == b.linear_ && a.translation_ == b.translation_;
    }

  private:
    WeylElement linear_;
    RationalVector translation_;
};

/// Reflection in the hyperplane orthogonal to root i (0 = alpha_0).
RationalVector reflect(const RootSystem& rs, int i, const RationalVector& xi);

/// Composition s_{w[0]} s_{w[1]} ... of reflections; indices 0..l.
WeylElement evaluate_word(const RootSystem& rs, const std::vector<int>& word);

/// The affine reflection across the wall <xi, highest_root> = 1.
AffineWeylElement affine_wall_reflection(const RootSystem& rs);

struct FoldResult {
    AlcovePoint point;
    AffineWeylElement witness;  // witness.apply(input) == point.cartesian
    /// Wall crossings in the order applied (0 = affine wall, j = alpha_j wall).
    std::vector<int> walls;
};

/**
 * Maps xi to the unique alcove point of its affine Weyl orbit, reflecting in
 * the lowest-index violated wall at each step (alpha_1..alpha_l, then the
 * affine wall).
 */
FoldResult fold_to_alcove(const Alcove& alc, const RationalVector& xi);

/// Same folded point as fold_to_alcove, without building the witness.
AlcovePoint fold_point(const Alcove& alc, const RationalVector& xi);

bool permutes_extended_roots(const RootSystem& rs, const WeylElement& w);

}  // namespace liealc
