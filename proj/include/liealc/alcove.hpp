#pragma once

#include <vector>

#include "liealc/lie_data.hpp"

namespace liealc {

/// Half-space <normal, xi> >= offset, restricted to the root-space subspace.
struct Facet {
    RationalVector normal;
    Rational offset;

    bool satisfied_by(const RationalVector& xi) const { return normal.dot(xi) >= offset; }
    bool tight_at(const RationalVector& xi) const { return normal.dot(xi) == offset; }
};

struct AlcovePoint {
    RationalVector cartesian;
    std::vector<Rational> barycentric;  // t_0..t_l

    friend bool operator==(const AlcovePoint&, const AlcovePoint&) = default;
};

/**
 * Fundamental alcove {xi : <xi, alpha_j> >= 0, <xi, highest_root> <= 1}.
 *
 * Facet j (j = 0..l) is the wall <alpha_j, xi> >= -delta_{j0}, i.e. facet 0 is
 * the affine wall of alpha_0 = -highest_root. Vertex v_j is the vertex off
 * facet j, so v_0 = 0 and v_j = coweight_j / m_j.
 */
class Alcove {
  public:
    explicit Alcove(RootSystem rs);

    const RootSystem& root_system() const { return rs_; }
    int rank() const { return rs_.rank(); }
    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<RationalVector>& vertices() const { return vertices_; }
    const RationalVector& vertex(int j) const { return vertices_.at(static_cast<std::size_t>(j)); }

    /// Average of all l+1 vertices; an interior point.
    RationalVector centroid() const;

    /// Index of the first violated facet (0 = highest-root wall), or -1.
    int first_violated_facet(const RationalVector& xi) const;

  private:
    RootSystem rs_;
    std::vector<Facet> facets_;
    std::vector<RationalVector> vertices_;
};

Alcove build_alcove(const RootSystem& rs);

/// Closed-alcove membership. Throws InputError if xi is not in the root space.
bool contains(const Alcove& alc, const RationalVector& xi);

/// Throws InputError naming the violated facet when xi is outside the alcove.
AlcovePoint to_barycentric(const Alcove& alc, const RationalVector& xi);

/// Cartesian point sum t_i v_i. Requires t_i >= 0 and sum t_i = 1.
AlcovePoint from_barycentric(const Alcove& alc, const std::vector<Rational>& t);

enum class PolytopeStatus { Bounded, Empty, Unbounded };

struct VertexEnumeration {
    PolytopeStatus status = PolytopeStatus::Empty;
    std::vector<RationalVector> vertices;  // sorted, deduplicated
};

/**
 * Brute-force vertex enumeration of {x in span : every facet satisfied}, where
 * `span` is the orthogonal complement of `complement`. Tries every subset of
 * facets of size dim(span), solves the equality system exactly and keeps the
 * feasible solutions. Does not use any root-system knowledge.
 */
VertexEnumeration vertex_enumeration_oracle(const std::vector<Facet>& facets,
                                            const std::vector<RationalVector>& complement,
                                            std::size_t ambient_dim);

VertexEnumeration vertex_enumeration_oracle(const Alcove& alc);

/// Closed form of the SU(n) barycenter ((n-1)/2n, (n-3)/2n, ..., (1-n)/2n).
RationalVector su_n_barycenter(int n);

}  // namespace liealc
