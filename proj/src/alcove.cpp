#include "liealc/alcove.hpp"

#include <algorithm>

#include "liealc/errors.hpp"

namespace liealc {

namespace {

std::string facet_label(int j) {
    return j == 0 ? "<xi, highest_root> <= 1" : "<xi, alpha_" + std::to_string(j) + "> >= 0";
}

// Calls f(selected) for every size-k subset of {0..n-1}, indices ascending.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    std::vector<std::size_t> chosen;
    do {
        chosen.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i]) chosen.push_back(i);
        f(chosen);
    } while (std::prev_permutation(mask.begin(), mask.end()));
}

bool satisfies_all(const std::vector<Facet>& facets, const RationalVector& x) {
    return std::all_of(facets.begin(), facets.end(), [&](const Facet& f) { return f.satisfied_by(x); });
}

bool is_recession_direction(const std::vector<Facet>& facets, const RationalVector& d) {
    return std::all_of(facets.begin(), facets.end(),
                       [&](const Facet& f) { return f.normal.dot(d).sign() >= 0; });
}

}  // namespace

Alcove::Alcove(RootSystem rs) : rs_(std::move(rs)) {
    const int l = rs_.rank();
    facets_.push_back({rs_.extended_root(0), Rational(-1)});
    for (int j = 1; j <= l; ++j) facets_.push_back({rs_.simple_root(j), Rational(0)});
    vertices_.push_back(RationalVector(rs_.ambient_dim()));
    for (int j = 1; j <= l; ++j)
        vertices_.push_back(rs_.fundamental_coweight(j) / Rational(rs_.mark(j)));
}

RationalVector Alcove::centroid() const {
    RationalVector c(rs_.ambient_dim());
    for (const auto& v : vertices_) c += v;
    return c / Rational(static_cast<long>(vertices_.size()));
}

int Alcove::first_violated_facet(const RationalVector& xi) const {
    // Simple walls first, then the affine wall; matches the folding order.
    for (int j = 1; j <= rank(); ++j)
        if (!facets_[static_cast<std::size_t>(j)].satisfied_by(xi)) return j;
    if (!facets_[0].satisfied_by(xi)) return 0;
    return -1;
}

Alcove build_alcove(const RootSystem& rs) { return Alcove(rs); }

bool contains(const Alcove& alc, const RationalVector& xi) {
    alc.root_system().require_root_space(xi);
    return alc.first_violated_facet(xi) < 0;
}

AlcovePoint to_barycentric(const Alcove& alc, const RationalVector& xi) {
    const auto& rs = alc.root_system();
    rs.require_root_space(xi);
    if (const int bad = alc.first_violated_facet(xi); bad >= 0)
        throw InputError("point " + xi.str() + " is outside the alcove: violates " + facet_label(bad));
    // <alpha_j, v_i> = delta_ij / m_j for j >= 1, so t_j = m_j <alpha_j, xi>.
    std::vector<Rational> t(static_cast<std::size_t>(alc.rank()) + 1);
    Rational rest = 1;
    for (int j = 1; j <= alc.rank(); ++j) {
        t[static_cast<std::size_t>(j)] = Rational(rs.mark(j)) * rs.simple_root(j).dot(xi);
        rest -= t[static_cast<std::size_t>(j)];
    }
    t[0] = rest;
    return {xi, std::move(t)};
}

AlcovePoint from_barycentric(const Alcove& alc, const std::vector<Rational>& t) {
    if (t.size() != alc.vertices().size())
        throw InputError("expected " + std::to_string(alc.vertices().size()) + " barycentric coordinates");
    Rational sum = 0;
    RationalVector x(alc.root_system().ambient_dim());
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i].sign() < 0) throw InputError("negative barycentric coordinate");
        sum += t[i];
        x += t[i] * alc.vertices()[i];
    }
    if (sum != Rational(1)) throw InputError("barycentric coordinates must sum to 1");
    return {std::move(x), t};
}

VertexEnumeration vertex_enumeration_oracle(const std::vector<Facet>& facets,
                                            const std::vector<RationalVector>& complement,
                                            std::size_t ambient_dim) {
    VertexEnumeration out;
    const std::size_t dim = ambient_dim - complement.size();

    auto system_rows = [&](const std::vector<std::size_t>& chosen) {
        std::vector<RationalVector> rows;
        for (auto i : chosen) rows.push_back(facets[i].normal);
        for (const auto& c : complement) rows.push_back(c);
        return rows;
    };

    for_each_subset(facets.size(), dim, [&](const std::vector<std::size_t>& chosen) {
        const auto rows = system_rows(chosen);
        RationalVector rhs(rows.size());
        for (std::size_t r = 0; r < chosen.size(); ++r) rhs[r] = facets[chosen[r]].offset;
        const auto x = solve_unique(Matrix::from_rows(rows), rhs);
        if (x && satisfies_all(facets, *x)) out.vertices.push_back(*x);
    });
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());

    // Recession cone is nonzero iff it has an extreme ray, cut out by dim-1
    // tight facets (or the whole span has a lineality direction).
    bool unbounded = false;
    std::vector<std::size_t> all(facets.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    if (dim > 0 && rank(Matrix::from_rows(system_rows(all))) < ambient_dim) unbounded = true;
    if (!unbounded && dim > 0) {
        for_each_subset(facets.size(), dim - 1, [&](const std::vector<std::size_t>& chosen) {
            if (unbounded) return;
            const auto rows = system_rows(chosen);
            const auto ns = rows.empty() ? std::vector<RationalVector>{RationalVector::unit(ambient_dim, 0)}
                                         : nullspace(Matrix::from_rows(rows));
            if (ns.size() != 1) return;
            if (is_recession_direction(facets, ns[0]) || is_recession_direction(facets, -ns[0]))
                unbounded = true;
        });
    }

    if (unbounded)
        out.status = PolytopeStatus::Unbounded;
    else
        out.status = out.vertices.empty() ? PolytopeStatus::Empty : PolytopeStatus::Bounded;
    return out;
}

VertexEnumeration vertex_enumeration_oracle(const Alcove& alc) {
    const auto& rs = alc.root_system();
    return vertex_enumeration_oracle(alc.facets(), rs.complement(), rs.ambient_dim());
}

RationalVector su_n_barycenter(int n) {
    if (n < 2) throw InputError("SU(n) barycenter needs n >= 2");
    RationalVector z(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) z[static_cast<std::size_t>(i - 1)] = Rational(n + 1 - 2 * i, 2L * n);
    return z;
}

}  // namespace liealc
