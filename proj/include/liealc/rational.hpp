#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace liealc {

/**
 * Exact rational number, always held in lowest terms with a positive
 * denominator. Thin value wrapper around GMP's mpq_class so that the rest of
 * the code never sees expression templates.
 */
class Rational {
  public:
    Rational() = default;
    Rational(long n) : q_(n) {}  // NOLINT(implicit)
    Rational(int n) : q_(n) {}   // NOLINT(implicit)
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rational(const mpz_class& z) : q_(z) {}

    /// Parses "a", "-a", "a/b"; throws InputError on anything else or b == 0.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// "a/b", with "/b" omitted when b == 1.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  private:
    mpq_class q_{0};
};

mpz_class lcm(const mpz_class& a, const mpz_class& b);

/**
 * A point of an ambient Euclidean space Q^n with the standard inner product.
 * Roots, coweights, alcove points all live here.
 */
class RationalVector {
  public:
    RationalVector() = default;
    explicit RationalVector(std::size_t dim) : coords_(dim) {}
    explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}

    /// Parses a comma-separated list of rationals, e.g. "1/2,-1/2".
    static RationalVector parse(std::string_view text);
    static RationalVector unit(std::size_t dim, std::size_t i);

    std::size_t dim() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }

    bool is_zero() const;
    Rational dot(const RationalVector& o) const;
    Rational norm2() const { return dot(*this); }

    RationalVector& operator+=(const RationalVector& o);
    RationalVector& operator-=(const RationalVector& o);
    RationalVector& operator*=(const Rational& s);
    RationalVector operator-() const;

    friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
    friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
    friend RationalVector operator*(RationalVector a, const Rational& s) { return a *= s; }
    friend RationalVector operator*(const Rational& s, RationalVector a) { return a *= s; }
    friend RationalVector operator/(RationalVector a, const Rational& s) { return a *= Rational(1) / s; }

    friend bool operator==(const RationalVector&, const RationalVector&) = default;
    friend auto operator<=>(const RationalVector& a, const RationalVector& b) {
        return a.coords_ <=> b.coords_;
    }

    /// "(a, b, c)" for humans.
    std::string str() const;

  private:
    std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const RationalVector& v);

}  // namespace liealc
