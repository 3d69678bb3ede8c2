#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liealc/affine_weyl.hpp"
#include "liealc/alcove.hpp"

namespace liealc {

/// Permutation of {0..l}; mapping[j] is the image of j.
struct Permutation {
    std::vector<int> mapping;

    static Permutation identity(int size);
    int size() const { return static_cast<int>(mapping.size()); }
    int operator()(int j) const { return mapping.at(static_cast<std::size_t>(j)); }
    bool is_identity() const;
    int order() const;
    /// (a * b)(j) = a(b(j)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    /// Cycle notation including fixed points, e.g. "(0 1 6)(2 3 5)(4)".
    std::string cycles() const;
};

/// exp of lambda_i^v for a special index i, or the identity for index 0.
struct CenterElement {
    int index = 0;
    friend bool operator==(const CenterElement&, const CenterElement&) = default;
    friend auto operator<=>(const CenterElement&, const CenterElement&) = default;
};

/**
 * The center Z(G) acting on the alcove. The action of exp(lambda_i^v) is
 * computed by folding xi + lambda_i^v back into the alcove; everything else
 * (Weyl elements, permutations, group law) is derived from that.
 */
class CenterAction {
  public:
    explicit CenterAction(Alcove alc);

    const Alcove& alcove() const { return alc_; }
    const RootSystem& root_system() const { return alc_.root_system(); }

    /// Identity first, then exp(lambda_i^v) for each special index in order.
    const std::vector<CenterElement>& elements() const { return elements_; }
    int order() const { return static_cast<int>(elements_.size()); }
    CenterElement element(int index) const;

    AlcovePoint act(CenterElement z, const RationalVector& xi) const;
    AlcovePoint act(CenterElement z, const AlcovePoint& xi) const { return act(z, xi.cartesian); }

    /// The unique affine Weyl element u with z.xi = u(xi + lambda_i^v) on the alcove.
    AffineWeylElement affine_element(CenterElement z) const;

    const Permutation& vertex_permutation(CenterElement z) const;

    CenterElement multiply(CenterElement a, CenterElement b) const;
    CenterElement inverse(CenterElement z) const;
    int element_order(CenterElement z) const;
    /// Closure of the given elements under the group law (always contains identity).
    std::vector<CenterElement> generated_subgroup(const std::vector<CenterElement>& gens) const;
    /// True iff some element generates the whole center.
    bool is_cyclic() const;

  private:
    Alcove alc_;
    std::vector<CenterElement> elements_;
    std::vector<Permutation> perms_;
};

/// z . xi, computed by folding. xi must lie in the alcove.
AlcovePoint act_on_point(const CenterAction& center, CenterElement z, const AlcovePoint& xi);

/// The Weyl element w_i with z.xi = w_i xi + lambda_i^v. Verifies
/// w_i(alpha_0) = alpha_i and that w_i permutes the extended simple roots.
WeylElement weyl_element_for_center(const CenterAction& center, CenterElement z);

Permutation vertex_permutation(const CenterAction& center, CenterElement z);

/// Node permutation of the extended Dynkin diagram induced by w_i.
Permutation dynkin_automorphism(const CenterAction& center, CenterElement z);

/// Cartan integers 2<a_j, a_k>/<a_k, a_k> of alpha_0..alpha_l.
std::vector<std::vector<Rational>> extended_cartan(const RootSystem& rs);
bool preserves_extended_diagram(const RootSystem& rs, const Permutation& p);

struct Stabilizer {
    std::vector<CenterElement> elements;
    int order() const { return static_cast<int>(elements.size()); }
};

Stabilizer stabilizer(const CenterAction& center, const AlcovePoint& xi,
                      const std::vector<CenterElement>& subgroup);

/**
 * Fixed points of a subgroup of the center in the alcove: the convex hull of
 * `generators`, given in barycentric coordinates.
 */
struct FixedLocus {
    int subgroup_order = 1;
    std::vector<std::vector<Rational>> generators_barycentric;
};

/// Orbit barycenters of the subgroup's vertex permutation action. Any type.
FixedLocus fixed_locus(const CenterAction& center, const std::vector<CenterElement>& subgroup);

/// Membership test for `fixed_locus`: barycentric coordinates constant on orbits.
bool in_fixed_locus(const CenterAction& center, const std::vector<CenterElement>& subgroup,
                    const AlcovePoint& xi);

/// Z/nu inside Z(SU(n)), generated by exp(lambda_m^v) with m = n / nu.
std::vector<CenterElement> su_n_subgroup(const CenterAction& center, int nu);

/// Closed form for SU(n): generators (1/nu) sum_j v_{i + j m}, i = 0..m-1.
FixedLocus fixed_locus_su_n(int n, int nu);

/// t_i == t_{(i - m) mod n} for all i, m = n / nu.
bool in_fixed_locus_su_n(int n, int nu, const std::vector<Rational>& barycentric);

/// Stored reflection words for the exceptional groups (w_1, w_6 of E6; w_7 of E7).
std::optional<std::vector<int>> reference_word(const SimpleType& type, int special_index);

}  // namespace liealc
