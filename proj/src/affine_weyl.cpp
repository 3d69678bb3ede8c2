#include "liealc/affine_weyl.hpp"

#include <algorithm>

#include "liealc/errors.hpp"

namespace liealc {

RationalVector reflect_in(const RationalVector& alpha, const RationalVector& v) {
    return v - (Rational(2) * alpha.dot(v) / alpha.norm2()) * alpha;
}

Matrix reflection_matrix(const RationalVector& alpha) {
    const std::size_t n = alpha.dim();
    Matrix m = Matrix::identity(n);
    const Rational f = Rational(2) / alpha.norm2();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) -= f * alpha[r] * alpha[c];
    return m;
}

WeylElement WeylElement::inverse() const {
    std::optional<std::vector<int>> w;
    if (word_) w = std::vector<int>(word_->rbegin(), word_->rend());
    return WeylElement(matrix_.transpose(), std::move(w));
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    std::optional<std::vector<int>> w;
    if (a.word_ && b.word_) {
        w = *a.word_;
        w->insert(w->end(), b.word_->begin(), b.word_->end());
    }
    return WeylElement(a.matrix_ * b.matrix_, std::move(w));
}

AffineWeylElement operator*(const AffineWeylElement& a, const AffineWeylElement& b) {
    return {a.linear_ * b.linear_, a.linear_.apply(b.translation_) + a.translation_};
}

namespace {

void check_root_index(const RootSystem& rs, int i) {
    if (i < 0 || i > rs.rank())
        throw InputError("root index " + std::to_string(i) + " out of range 0.." + std::to_string(rs.rank()) +
                         " for " + rs.type().name());
}

}  // namespace

RationalVector reflect(const RootSystem& rs, int i, const RationalVector& xi) {
    check_root_index(rs, i);
    if (xi.dim() != rs.ambient_dim()) throw InputError("point has wrong ambient dimension");
    return reflect_in(rs.extended_root(i), xi);
}

WeylElement evaluate_word(const RootSystem& rs, const std::vector<int>& word) {
    Matrix m = Matrix::identity(rs.ambient_dim());
    for (int i : word) {
        check_root_index(rs, i);
        m = m * reflection_matrix(rs.extended_root(i));
    }
    return WeylElement(std::move(m), word);
}

AffineWeylElement affine_wall_reflection(const RootSystem& rs) {
    return {WeylElement(reflection_matrix(rs.highest_root()), std::vector<int>{0}), rs.highest_coroot()};
}

namespace {

// Applies wall reflections until no facet is violated; returns the walls crossed.
std::vector<int> fold_walls(const Alcove& alc, RationalVector& x) {
    const auto& rs = alc.root_system();
    rs.require_root_space(x);
    const RationalVector theta_coroot = rs.highest_coroot();
    std::vector<int> walls;
    for (int j = alc.first_violated_facet(x); j >= 0; j = alc.first_violated_facet(x)) {
        x = j == 0 ? reflect_in(rs.highest_root(), x) + theta_coroot : reflect_in(rs.simple_root(j), x);
        walls.push_back(j);
    }
    return walls;
}

}  // namespace

FoldResult fold_to_alcove(const Alcove& alc, const RationalVector& xi) {
    const auto& rs = alc.root_system();
    RationalVector x = xi;
    std::vector<int> walls = fold_walls(alc, x);

    // Linear part s_{j_m} ... s_{j_1}, built by reflecting columns; the
    // translation is whatever carries the linear image of xi onto x.
    std::vector<RationalVector> cols;
    for (std::size_t c = 0; c < rs.ambient_dim(); ++c) cols.push_back(RationalVector::unit(rs.ambient_dim(), c));
    for (int j : walls)
        for (auto& col : cols) col = reflect_in(rs.extended_root(j), col);
    const Matrix linear = Matrix::from_columns(cols);
    std::vector<int> word(walls.rbegin(), walls.rend());
    AffineWeylElement g(WeylElement(linear, std::move(word)), x - linear.apply(xi));
    return {to_barycentric(alc, x), std::move(g), std::move(walls)};
}

AlcovePoint fold_point(const Alcove& alc, const RationalVector& xi) {
    RationalVector x = xi;
    fold_walls(alc, x);
    return to_barycentric(alc, x);
}

bool permutes_extended_roots(const RootSystem& rs, const WeylElement& w) {
    std::vector<RationalVector> roots;
    for (int j = 0; j <= rs.rank(); ++j) roots.push_back(rs.extended_root(j));
    std::vector<RationalVector> images;
    for (const auto& a : roots) images.push_back(w.apply(a));
    std::sort(roots.begin(), roots.end());
    std::sort(images.begin(), images.end());
    return roots == images;
}

}  // namespace liealc
