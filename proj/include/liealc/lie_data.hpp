#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "liealc/linalg.hpp"
#include "liealc/rational.hpp"

namespace liealc {

enum class Series { A, B, C, D, E, F, G };

/// A simple type X_n. Construction validates the (series, rank) pair.
class SimpleType {
  public:
    SimpleType(Series series, int rank);

    /// Parses "A3", "E6", "g2", ...
    static SimpleType parse(std::string_view name);

    Series series() const { return series_; }
    int rank() const { return rank_; }
    bool simply_laced() const;
    std::string name() const;

    friend bool operator==(const SimpleType&, const SimpleType&) = default;

  private:
    Series series_;
    int rank_;
};

/**
 * Root datum of a compact simply connected simple group, in the Bourbaki
 * ambient coordinates. The pairing between t and t* is the standard dot
 * product on the ambient space; the basic inner product on t is
 * `basic_scale() * dot`.
 *
 * Index conventions: simple roots, coroots, coweights and marks are 0-based
 * vectors holding alpha_1..alpha_l; "root index" arguments elsewhere use 0 for
 * alpha_0 = -highest_root and 1..l for simple roots.
 */
class RootSystem {
  public:
    explicit RootSystem(SimpleType type);

    const SimpleType& type() const { return type_; }
    int rank() const { return type_.rank(); }
    std::size_t ambient_dim() const { return ambient_dim_; }

    const std::vector<RationalVector>& simple_roots() const { return simple_roots_; }
    const RationalVector& simple_root(int i) const { return simple_roots_.at(i - 1); }
    const RationalVector& highest_root() const { return highest_root_; }
    /// alpha_0 for i == 0, else alpha_i.
    RationalVector extended_root(int i) const;
    const std::vector<int>& marks() const { return marks_; }
    int mark(int i) const { return marks_.at(i - 1); }

    const std::vector<RationalVector>& coroots() const { return coroots_; }
    const std::vector<RationalVector>& fundamental_coweights() const { return coweights_; }
    const RationalVector& fundamental_coweight(int i) const { return coweights_.at(i - 1); }
    const std::vector<RationalVector>& fundamental_weights() const { return weights_; }

    /// Coroot of the highest root, 2 theta / <theta, theta>.
    RationalVector highest_coroot() const;

    int dual_coxeter() const { return dual_coxeter_; }
    int center_order() const { return center_order_; }
    /// 1-based indices i with m_i = 1.
    const std::vector<int>& special_indices() const { return special_; }

    /// Factor c with basic inner product = c * dot on t.
    const Rational& basic_scale() const { return basic_scale_; }
    Rational basic_inner(const RationalVector& x, const RationalVector& y) const;

    /// Basis of the orthogonal complement of the root span in the ambient space.
    const std::vector<RationalVector>& complement() const { return complement_; }
    bool in_root_space(const RationalVector& v) const;
    /// Throws InputError unless v has the ambient dimension and lies in the root span.
    void require_root_space(const RationalVector& v) const;

  private:
    SimpleType type_;
    std::size_t ambient_dim_ = 0;
    std::vector<RationalVector> simple_roots_;
    RationalVector highest_root_;
    std::vector<int> marks_;
    std::vector<RationalVector> coroots_;
    std::vector<RationalVector> coweights_;
    std::vector<RationalVector> weights_;
    std::vector<RationalVector> complement_;
    std::vector<int> special_;
    Rational basic_scale_ = 1;
    int dual_coxeter_ = 0;
    int center_order_ = 0;
};

RootSystem build_root_system(SimpleType type);

/// Coroot 2 alpha / <alpha, alpha>.
RationalVector coroot_of(const RationalVector& alpha);

enum class LatticeName { CorootQ, CoweightP, RootQ, WeightP };

std::string_view lattice_label(LatticeName name);

class LatticeBasis {
  public:
    LatticeBasis(LatticeName name, std::vector<RationalVector> generators);

    LatticeName name() const { return name_; }
    const std::vector<RationalVector>& generators() const { return generators_; }

    /// Coefficients of v in the generators, or nullopt when v is outside the span.
    std::optional<RationalVector> coordinates(const RationalVector& v) const;
    bool contains(const RationalVector& v) const;

  private:
    LatticeName name_;
    std::vector<RationalVector> generators_;
    Matrix columns_;
};

LatticeBasis lattice(const RootSystem& rs, LatticeName name);
bool lattice_contains(const LatticeBasis& basis, const RationalVector& v);

/// Image of xi under the basic-inner-product identification t -> t*, expressed
/// in ambient coordinates (so that pairing with t is again the dot product).
RationalVector flat_map(const RootSystem& rs, const RationalVector& xi);

/// Index [P^v : Q^v], computed as |det| of the Cartan matrix.
mpz_class coweight_index(const RootSystem& rs);

/// The types exercised by the catalog-wide checks: A1..A8, B2..B4, C3..C4,
/// D4..D6, E6..E8, F4, G2.
std::vector<SimpleType> catalog_types();

}  // namespace liealc
