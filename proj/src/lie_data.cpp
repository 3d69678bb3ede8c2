#include "liealc/lie_data.hpp"

#include <cctype>
#include <charconv>

#include "liealc/errors.hpp"

namespace liealc {

namespace {

RationalVector e(std::size_t dim, std::size_t i) { return RationalVector::unit(dim, i - 1); }

// Half-integer vector from twice its coordinates.
RationalVector halves(std::initializer_list<long> twice) {
    RationalVector v(twice.size());
    std::size_t i = 0;
    for (long t : twice) v[i++] = Rational(t, 2);
    return v;
}

char series_letter(Series s) { return "ABCDEFG"[static_cast<int>(s)]; }

// alpha_1..alpha_8 of E8; E6 and E7 use a prefix.
std::vector<RationalVector> e8_simple_roots() {
    std::vector<RationalVector> r;
    r.push_back(halves({1, -1, -1, -1, -1, -1, -1, 1}));
    r.push_back(e(8, 1) + e(8, 2));
    for (std::size_t i = 1; i <= 6; ++i) r.push_back(e(8, i + 1) - e(8, i));
    return r;
}

Matrix gram(const std::vector<RationalVector>& vs) {
    Matrix g(vs.size(), vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j) g(i, j) = vs[i].dot(vs[j]);
    return g;
}

// Rows of inv(gram(basis)) applied to basis: the dual basis inside span(basis).
std::vector<RationalVector> dual_basis(const std::vector<RationalVector>& basis) {
    const auto inv = inverse(gram(basis));
    if (!inv) throw std::logic_error("degenerate root basis");
    std::vector<RationalVector> out;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        RationalVector v(basis[0].dim());
        for (std::size_t k = 0; k < basis.size(); ++k) v += (*inv)(j, k) * basis[k];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

SimpleType::SimpleType(Series series, int rank) : series_(series), rank_(rank) {
    bool ok = false;
    switch (series) {
        case Series::A: ok = rank >= 1; break;
        case Series::B: ok = rank >= 2; break;
        case Series::C: ok = rank >= 3; break;
        case Series::D: ok = rank >= 4; break;
        case Series::E: ok = rank >= 6 && rank <= 8; break;
        case Series::F: ok = rank == 4; break;
        case Series::G: ok = rank == 2; break;
    }
    if (!ok) {
        std::string hint;
        switch (series) {
            case Series::A: hint = "A_n needs n >= 1"; break;
            case Series::B: hint = "B_n needs n >= 2"; break;
            case Series::C: hint = "C_n needs n >= 3 (C_2 is B_2)"; break;
            case Series::D: hint = "D_n needs n >= 4 (D_3 is A_3)"; break;
            case Series::E: hint = "only E6, E7, E8 exist"; break;
            case Series::F: hint = "only F4 exists"; break;
            case Series::G: hint = "only G2 exists"; break;
        }
        throw InputError(std::string("invalid simple type ") + series_letter(series) +
                         std::to_string(rank) + ": " + hint);
    }
}

SimpleType SimpleType::parse(std::string_view name) {
    if (name.size() < 2) throw InputError("malformed simple type '" + std::string(name) + "'");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    if (letter < 'A' || letter > 'G')
        throw InputError("unknown series in simple type '" + std::string(name) + "'");
    std::string_view digits = name.substr(1);
    if (!digits.empty() && digits.front() == '_') digits.remove_prefix(1);
    int rank = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
        throw InputError("malformed rank in simple type '" + std::string(name) + "'");
    return SimpleType(static_cast<Series>(letter - 'A'), rank);
}

bool SimpleType::simply_laced() const {
    return series_ == Series::A || series_ == Series::D || series_ == Series::E;
}

std::string SimpleType::name() const { return series_letter(series_) + std::to_string(rank_); }

RootSystem::RootSystem(SimpleType type) : type_(type) {
    const int n = type.rank();
    const auto un = static_cast<std::size_t>(n);
    switch (type.series()) {
        case Series::A:
            ambient_dim_ = un + 1;
            for (std::size_t i = 1; i <= un; ++i)
                simple_roots_.push_back(e(ambient_dim_, i) - e(ambient_dim_, i + 1));
            highest_root_ = e(ambient_dim_, 1) - e(ambient_dim_, un + 1);
            marks_.assign(un, 1);
            break;
        case Series::B:
        case Series::C:
        case Series::D:
            ambient_dim_ = un;
            for (std::size_t i = 1; i < un; ++i)
                simple_roots_.push_back(e(un, i) - e(un, i + 1));
            if (type.series() == Series::B) {
                simple_roots_.push_back(e(un, un));
                highest_root_ = e(un, 1) + e(un, 2);
                marks_.assign(un, 2);
                marks_[0] = 1;
            } else if (type.series() == Series::C) {
                simple_roots_.push_back(Rational(2) * e(un, un));
                highest_root_ = Rational(2) * e(un, 1);
                marks_.assign(un, 2);
                marks_[un - 1] = 1;
            } else {
                simple_roots_.push_back(e(un, un - 1) + e(un, un));
                highest_root_ = e(un, 1) + e(un, 2);
                marks_.assign(un, 2);
                marks_[0] = marks_[un - 2] = marks_[un - 1] = 1;
            }
            break;
        case Series::E: {
            ambient_dim_ = 8;
            auto all = e8_simple_roots();
            simple_roots_.assign(all.begin(), all.begin() + n);
            if (n == 6) {
                highest_root_ = halves({1, 1, 1, 1, 1, -1, -1, 1});
                marks_ = {1, 2, 2, 3, 2, 1};
            } else if (n == 7) {
                highest_root_ = e(8, 8) - e(8, 7);
                marks_ = {2, 2, 3, 4, 3, 2, 1};
            } else {
                highest_root_ = e(8, 7) + e(8, 8);
                marks_ = {2, 3, 4, 6, 5, 4, 3, 2};
            }
            break;
        }
        case Series::F:
            ambient_dim_ = 4;
            simple_roots_ = {e(4, 2) - e(4, 3), e(4, 3) - e(4, 4), e(4, 4), halves({1, -1, -1, -1})};
            highest_root_ = e(4, 1) + e(4, 2);
            marks_ = {2, 3, 4, 2};
            break;
        case Series::G:
            ambient_dim_ = 3;
            simple_roots_ = {e(3, 1) - e(3, 2), Rational(-2) * e(3, 1) + e(3, 2) + e(3, 3)};
            highest_root_ = -e(3, 1) - e(3, 2) + Rational(2) * e(3, 3);
            marks_ = {3, 2};
            break;
    }

    for (const auto& a : simple_roots_) coroots_.push_back(coroot_of(a));
    coweights_ = dual_basis(simple_roots_);
    weights_ = dual_basis(coroots_);
    complement_ = nullspace(Matrix::from_rows(simple_roots_));

    Rational shortest = coroots_[0].norm2();
    for (const auto& c : coroots_) shortest = std::min(shortest, c.norm2());
    basic_scale_ = Rational(2) / shortest;

    for (int i = 0; i < n; ++i)
        if (marks_[static_cast<std::size_t>(i)] == 1) special_.push_back(i + 1);

    const auto comarks = solve_unique(Matrix::from_columns(coroots_), highest_coroot());
    if (!comarks) throw std::logic_error("highest coroot outside coroot span");
    Rational h = 1;
    for (const auto& c : *comarks) h += c;
    dual_coxeter_ = static_cast<int>(h.numerator().get_si());

    center_order_ = static_cast<int>(coweight_index(*this).get_si());
}

RationalVector RootSystem::extended_root(int i) const {
    if (i == 0) return -highest_root_;
    return simple_root(i);
}

RationalVector RootSystem::highest_coroot() const { return coroot_of(highest_root_); }

Rational RootSystem::basic_inner(const RationalVector& x, const RationalVector& y) const {
    return basic_scale_ * x.dot(y);
}

bool RootSystem::in_root_space(const RationalVector& v) const {
    if (v.dim() != ambient_dim_) return false;
    for (const auto& c : complement_)
        if (!c.dot(v).is_zero()) return false;
    return true;
}

void RootSystem::require_root_space(const RationalVector& v) const {
    if (v.dim() != ambient_dim_)
        throw InputError("point has " + std::to_string(v.dim()) + " coordinates but " +
                         type_.name() + " lives in R^" + std::to_string(ambient_dim_));
    if (!in_root_space(v))
        throw InputError("point " + v.str() + " is not in the root-space subspace of " + type_.name());
}

RootSystem build_root_system(SimpleType type) { return RootSystem(type); }

RationalVector coroot_of(const RationalVector& alpha) {
    return (Rational(2) / alpha.norm2()) * alpha;
}

std::string_view lattice_label(LatticeName name) {
    switch (name) {
        case LatticeName::CorootQ: return "Q^v";
        case LatticeName::CoweightP: return "P^v";
        case LatticeName::RootQ: return "Q";
        case LatticeName::WeightP: return "P";
    }
    return "?";
}

LatticeBasis::LatticeBasis(LatticeName name, std::vector<RationalVector> generators)
    : name_(name), generators_(std::move(generators)), columns_(Matrix::from_columns(generators_)) {
    if (generators_.empty() || rank(columns_) != generators_.size())
        throw InputError("lattice generators must be nonempty and linearly independent");
}

std::optional<RationalVector> LatticeBasis::coordinates(const RationalVector& v) const {
    if (v.dim() != columns_.rows()) return std::nullopt;
    return solve_unique(columns_, v);
}

bool LatticeBasis::contains(const RationalVector& v) const {
    const auto c = coordinates(v);
    if (!c) return false;
    for (const auto& x : *c)
        if (!x.is_integer()) return false;
    return true;
}

LatticeBasis lattice(const RootSystem& rs, LatticeName name) {
    switch (name) {
        case LatticeName::CorootQ: return LatticeBasis(name, rs.coroots());
        case LatticeName::CoweightP: return LatticeBasis(name, rs.fundamental_coweights());
        case LatticeName::RootQ: return LatticeBasis(name, rs.simple_roots());
        case LatticeName::WeightP: return LatticeBasis(name, rs.fundamental_weights());
    }
    throw InputError("unknown lattice");
}

bool lattice_contains(const LatticeBasis& basis, const RationalVector& v) { return basis.contains(v); }

RationalVector flat_map(const RootSystem& rs, const RationalVector& xi) {
    rs.require_root_space(xi);
    return rs.basic_scale() * xi;
}

mpz_class coweight_index(const RootSystem& rs) {
    const auto l = static_cast<std::size_t>(rs.rank());
    Matrix cartan(l, l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) cartan(i, j) = rs.simple_roots()[i].dot(rs.coroots()[j]);
    mpz_class d = determinant(cartan).numerator();
    return mpz_class(abs(d));
}

std::vector<SimpleType> catalog_types() {
    std::vector<SimpleType> out;
    for (int n = 1; n <= 8; ++n) out.emplace_back(Series::A, n);
    for (int n = 2; n <= 4; ++n) out.emplace_back(Series::B, n);
    for (int n = 3; n <= 4; ++n) out.emplace_back(Series::C, n);
    for (int n = 4; n <= 6; ++n) out.emplace_back(Series::D, n);
    for (int n = 6; n <= 8; ++n) out.emplace_back(Series::E, n);
    out.emplace_back(Series::F, 4);
    out.emplace_back(Series::G, 2);
    return out;
}

}  // namespace liealc
