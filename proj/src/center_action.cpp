#include "liealc/center_action.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "liealc/errors.hpp"

namespace liealc {

Permutation Permutation::identity(int size) {
    Permutation p;
    p.mapping.resize(static_cast<std::size_t>(size));
    std::iota(p.mapping.begin(), p.mapping.end(), 0);
    return p;
}

bool Permutation::is_identity() const { return *this == identity(size()); }

int Permutation::order() const {
    int k = 1;
    for (Permutation p = *this; !p.is_identity(); p = p * *this) ++k;
    return k;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    Permutation c;
    for (int j : b.mapping) c.mapping.push_back(a(j));
    return c;
}

std::string Permutation::cycles() const {
    std::ostringstream os;
    std::vector<bool> seen(mapping.size(), false);
    for (int start = 0; start < size(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        os << '(';
        int j = start;
        bool first = true;
        do {
            seen[static_cast<std::size_t>(j)] = true;
            os << (first ? "" : " ") << j;
            first = false;
            j = (*this)(j);
        } while (j != start);
        os << ')';
    }
    return os.str();
}

namespace {

int vertex_index(const Alcove& alc, const RationalVector& x) {
    const auto& vs = alc.vertices();
    const auto it = std::find(vs.begin(), vs.end(), x);
    if (it == vs.end()) throw std::logic_error("center action sent a vertex to a non-vertex " + x.str());
    return static_cast<int>(it - vs.begin());
}

int root_index(const RootSystem& rs, const RationalVector& a) {
    for (int k = 0; k <= rs.rank(); ++k)
        if (rs.extended_root(k) == a) return k;
    return -1;
}

}  // namespace

CenterAction::CenterAction(Alcove alc) : alc_(std::move(alc)) {
    elements_.push_back({0});
    for (int i : root_system().special_indices()) elements_.push_back({i});
    for (const auto& z : elements_) {
        Permutation p;
        for (const auto& v : alc_.vertices()) p.mapping.push_back(vertex_index(alc_, act(z, v).cartesian));
        perms_.push_back(std::move(p));
    }
}

CenterElement CenterAction::element(int index) const {
    for (const auto& z : elements_)
        if (z.index == index) return z;
    throw InputError("index " + std::to_string(index) + " is not 0 or a special root of " +
                     root_system().type().name());
}

AlcovePoint CenterAction::act(CenterElement z, const RationalVector& xi) const {
    AlcovePoint start = to_barycentric(alc_, xi);
    if (z.index == 0) return start;
    return fold_point(alc_, xi + root_system().fundamental_coweight(element(z.index).index));
}

AffineWeylElement CenterAction::affine_element(CenterElement z) const {
    const auto& rs = root_system();
    if (element(z.index).index == 0) return AffineWeylElement::identity(rs.ambient_dim());
    // The centroid is interior, so its affine Weyl stabilizer is trivial and the
    // folding witness is the unique element carrying the translated alcove back.
    const auto& lambda = rs.fundamental_coweight(z.index);
    return fold_to_alcove(alc_, alc_.centroid() + lambda).witness;
}

const Permutation& CenterAction::vertex_permutation(CenterElement z) const {
    for (std::size_t k = 0; k < elements_.size(); ++k)
        if (elements_[k] == z) return perms_[k];
    throw InputError("not a center element of " + root_system().type().name());
}

CenterElement CenterAction::multiply(CenterElement a, CenterElement b) const {
    // z v_0 = v_i for z = exp(lambda_i^v), and the action is faithful on v_0.
    const int image = vertex_permutation(a)(vertex_permutation(b)(0));
    return element(image);
}

CenterElement CenterAction::inverse(CenterElement z) const {
    for (const auto& w : elements_)
        if (multiply(z, w).index == 0) return w;
    throw std::logic_error("center element without inverse");
}

int CenterAction::element_order(CenterElement z) const {
    int k = 1;
    for (CenterElement p = z; p.index != 0; p = multiply(p, z)) ++k;
    return k;
}

std::vector<CenterElement> CenterAction::generated_subgroup(const std::vector<CenterElement>& gens) const {
    std::set<CenterElement> group{{0}};
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<CenterElement> current(group.begin(), group.end());
        for (const auto& a : current)
            for (const auto& g : gens)
                if (group.insert(multiply(a, g)).second) grew = true;
    }
    return {group.begin(), group.end()};
}

bool CenterAction::is_cyclic() const {
    return std::any_of(elements_.begin(), elements_.end(),
                       [&](CenterElement z) { return element_order(z) == order(); });
}

AlcovePoint act_on_point(const CenterAction& center, CenterElement z, const AlcovePoint& xi) {
    return center.act(z, xi);
}

WeylElement weyl_element_for_center(const CenterAction& center, CenterElement z) {
    const auto& rs = center.root_system();
    if (center.element(z.index).index == 0) return WeylElement::identity(rs.ambient_dim());
    const auto& lambda = rs.fundamental_coweight(z.index);
    const AffineWeylElement translate(WeylElement::identity(rs.ambient_dim()), lambda);
    const AffineWeylElement total = center.affine_element(z) * translate;
    const WeylElement& w = total.linear();
    if (total.translation() != lambda)
        throw std::logic_error("center action is not of the form w xi + lambda");
    if (w.apply(rs.extended_root(0)) != rs.extended_root(z.index))
        throw std::logic_error("recovered Weyl element does not send alpha_0 to alpha_i");
    if (!permutes_extended_roots(rs, w))
        throw std::logic_error("recovered Weyl element does not permute the extended simple roots");
    return w;
}

Permutation vertex_permutation(const CenterAction& center, CenterElement z) {
    return center.vertex_permutation(z);
}

Permutation dynkin_automorphism(const CenterAction& center, CenterElement z) {
    const auto& rs = center.root_system();
    const WeylElement w = weyl_element_for_center(center, z);
    Permutation p;
    for (int j = 0; j <= rs.rank(); ++j) {
        const int k = root_index(rs, w.apply(rs.extended_root(j)));
        if (k < 0) throw std::logic_error("Weyl element moved an extended root off the diagram");
        p.mapping.push_back(k);
    }
    return p;
}

std::vector<std::vector<Rational>> extended_cartan(const RootSystem& rs) {
    const auto n = static_cast<std::size_t>(rs.rank()) + 1;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const auto aj = rs.extended_root(static_cast<int>(j));
            const auto ak = rs.extended_root(static_cast<int>(k));
            a[j][k] = Rational(2) * aj.dot(ak) / ak.norm2();
        }
    return a;
}

bool preserves_extended_diagram(const RootSystem& rs, const Permutation& p) {
    const auto a = extended_cartan(rs);
    for (int j = 0; j < p.size(); ++j)
        for (int k = 0; k < p.size(); ++k)
            if (a[static_cast<std::size_t>(p(j))][static_cast<std::size_t>(p(k))] !=
                a[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)])
                return false;
    return true;
}

Stabilizer stabilizer(const CenterAction& center, const AlcovePoint& xi,
                      const std::vector<CenterElement>& subgroup) {
    Stabilizer s;
    for (const auto& z : subgroup)
        if (center.act(z, xi).cartesian == xi.cartesian) s.elements.push_back(z);
    return s;
}

FixedLocus fixed_locus(const CenterAction& center, const std::vector<CenterElement>& subgroup) {
    const int n = center.alcove().rank() + 1;
    FixedLocus locus;
    const auto group = center.generated_subgroup(subgroup);
    locus.subgroup_order = static_cast<int>(group.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::set<int> orbit;
        for (const auto& z : group) orbit.insert(center.vertex_permutation(z)(start));
        std::vector<Rational> t(static_cast<std::size_t>(n));
        for (int j : orbit) {
            seen[static_cast<std::size_t>(j)] = true;
            t[static_cast<std::size_t>(j)] = Rational(1, static_cast<long>(orbit.size()));
        }
        locus.generators_barycentric.push_back(std::move(t));
    }
    return locus;
}

bool in_fixed_locus(const CenterAction& center, const std::vector<CenterElement>& subgroup,
                    const AlcovePoint& xi) {
    for (const auto& z : subgroup) {
        const auto& p = center.vertex_permutation(z);
        for (int j = 0; j < p.size(); ++j)
            if (xi.barycentric[static_cast<std::size_t>(p(j))] != xi.barycentric[static_cast<std::size_t>(j)])
                return false;
    }
    return true;
}

std::vector<CenterElement> su_n_subgroup(const CenterAction& center, int nu) {
    const auto& type = center.root_system().type();
    if (type.series() != Series::A) throw InputError("su_n_subgroup needs an A-series root system");
    const int n = type.rank() + 1;
    if (nu < 1 || n % nu != 0)
        throw InputError("nu = " + std::to_string(nu) + " does not divide n = " + std::to_string(n));
    const int m = n / nu;
    if (m == n) return {CenterElement{0}};
    return center.generated_subgroup({center.element(m)});
}

FixedLocus fixed_locus_su_n(int n, int nu) {
    if (n < 2) throw InputError("SU(n) fixed locus needs n >= 2");
    if (nu < 1 || n % nu != 0)
        throw InputError("nu = " + std::to_string(nu) + " does not divide n = " + std::to_string(n));
    const int m = n / nu;
    FixedLocus locus;
    locus.subgroup_order = nu;
    for (int i = 0; i < m; ++i) {
        std::vector<Rational> t(static_cast<std::size_t>(n));
        for (int j = 0; j < nu; ++j) t[static_cast<std::size_t>(i + j * m)] = Rational(1, nu);
        locus.generators_barycentric.push_back(std::move(t));
    }
    return locus;
}

bool in_fixed_locus_su_n(int n, int nu, const std::vector<Rational>& t) {
    if (nu < 1 || n % nu != 0) throw InputError("nu does not divide n");
    if (t.size() != static_cast<std::size_t>(n)) throw InputError("expected n barycentric coordinates");
    const int m = n / nu;
    for (int i = 0; i < n; ++i)
        if (t[static_cast<std::size_t>(i)] != t[static_cast<std::size_t>(((i - m) % n + n) % n)]) return false;
    return true;
}

std::optional<std::vector<int>> reference_word(const SimpleType& type, int special_index) {
    if (type == SimpleType(Series::E, 6) && special_index == 1)
        return std::vector<int>{1, 3, 4, 2, 5, 4, 3, 1, 6, 5, 4, 2, 3, 4, 5, 6};
    if (type == SimpleType(Series::E, 6) && special_index == 6)
        return std::vector<int>{6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1};
    if (type == SimpleType(Series::E, 7) && special_index == 7)
        return std::vector<int>{7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1,
                                7, 6, 5, 4, 2, 3, 4, 5, 6, 7};
    return std::nullopt;
}

}  // namespace liealc
