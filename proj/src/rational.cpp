#include "liealc/rational.hpp"

#include <cctype>
#include <sstream>

#include "liealc/errors.hpp"

namespace liealc {

namespace {

bool is_integer_literal(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(s)) throw InputError("malformed rational '" + std::string(text) + "'");
        return Rational(parse_integer(s));
    }
    const std::string_view num = trim(s.substr(0, slash));
    const std::string_view den = trim(s.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
        throw InputError("malformed rational '" + std::string(text) + "'");
    mpz_class d = parse_integer(den);
    if (d == 0) throw InputError("rational with zero denominator '" + std::string(text) + "'");
    return Rational(mpq_class(parse_integer(num), d));
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

RationalVector RationalVector::parse(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    if (trim(text).empty()) throw InputError("empty vector");
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(Rational::parse(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return RationalVector(std::move(out));
}

RationalVector RationalVector::unit(std::size_t dim, std::size_t i) {
    RationalVector v(dim);
    v[i] = 1;
    return v;
}

bool RationalVector::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

Rational RationalVector::dot(const RationalVector& o) const {
    if (o.dim() != dim()) throw InputError("dimension mismatch in inner product");
    mpq_class acc = 0;
    for (std::size_t i = 0; i < coords_.size(); ++i) acc += coords_[i].raw() * o.coords_[i].raw();
    return Rational(acc);
}

RationalVector& RationalVector::operator+=(const RationalVector& o) {
    if (o.dim() != dim()) throw InputError("dimension mismatch in vector sum");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& o) {
    if (o.dim() != dim()) throw InputError("dimension mismatch in vector difference");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

RationalVector& RationalVector::operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
}

RationalVector RationalVector::operator-() const {
    RationalVector r(*this);
    for (auto& c : r.coords_) c = -c;
    return r;
}

std::string RationalVector::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ", " : "") << coords_[i];
    os << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalVector& v) { return os << v.str(); }

}  // namespace liealc
