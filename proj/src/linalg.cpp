#include "liealc/linalg.hpp"

#include <sstream>
#include <utility>

#include "liealc/errors.hpp"

namespace liealc {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(std::span<const RationalVector> rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows[0].dim());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].dim() != m.cols_) throw InputError("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(std::span<const RationalVector> cols) {
    return from_rows(cols).transpose();
}

RationalVector Matrix::row(std::size_t r) const {
    RationalVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
}

RationalVector Matrix::column(std::size_t c) const {
    RationalVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RationalVector Matrix::apply(const RationalVector& v) const {
    if (v.dim() != cols_) throw InputError("dimension mismatch in matrix-vector product");
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        mpq_class acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c).raw() * v[c].raw();
        out[r] = Rational(acc);
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("dimension mismatch in matrix product");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t c = 0; c < b.cols_; ++c) {
            mpq_class acc = 0;
            for (std::size_t k = 0; k < a.cols_; ++k) acc += a(r, k).raw() * b(k, c).raw();
            m(r, c) = Rational(acc);
        }
    return m;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
        os << "]\n";
    }
    return os.str();
}

namespace {

// Reduces m in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        const Rational inv = Rational(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

Matrix augment(const Matrix& m, const RationalVector& b) {
    if (b.dim() != m.rows()) throw InputError("right-hand side has wrong dimension");
    Matrix a(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) a(r, c) = m(r, c);
        a(r, m.cols()) = b[r];
    }
    return a;
}

}  // namespace

std::size_t rank(Matrix m) { return rref(m).size(); }

Rational determinant(Matrix m) {
    if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
    Rational det = 1;
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col).is_zero()) ++p;
        if (p == n) return 0;
        if (p != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            const Rational f = m(r, col) / m(col, col);
            for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    Matrix a(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a(r, c) = m(r, c);
        a(r, n + r) = 1;
    }
    const auto piv = rref(a);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = a(r, n + c);
    return inv;
}

std::vector<RationalVector> nullspace(const Matrix& m) {
    Matrix a = m;
    const auto piv = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool is_consistent(const Matrix& m, const RationalVector& b) {
    Matrix a = augment(m, b);
    const auto piv = rref(a);
    return piv.empty() || piv.back() != m.cols();
}

std::optional<RationalVector> solve_unique(const Matrix& m, const RationalVector& b) {
    Matrix a = augment(m, b);
    const auto piv = rref(a);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    if (piv.size() != m.cols()) return std::nullopt;
    RationalVector x(m.cols());
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = a(r, m.cols());
    return x;
}

}  // namespace liealc
