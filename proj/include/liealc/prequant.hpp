#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liealc/center_action.hpp"

namespace liealc {

/// Reports only decide the arithmetic conditions; descent to the moduli space
/// additionally needs 1 to be a regular value, which is not checked.
inline constexpr const char* kRegularValueCaveat = "assumes 1 is a regular value of the moment map";

/// A conjugacy class G.exp(xi), labelled by its alcove point.
struct ClassLabel {
    AlcovePoint xi;

    /// Folds an arbitrary rational point of t into the alcove first.
    static ClassLabel ingest(const Alcove& alc, const RationalVector& point);
};

/**
 * Smallest k >= 1 with (k xi)^flat in the weight lattice P. The levels that
 * admit a prequantization of the class are exactly the multiples of it.
 */
long class_min_level(const RootSystem& rs, const AlcovePoint& xi);

/// Direct lattice check (k xi)^flat in P, independent of class_min_level.
bool class_admits_level(const RootSystem& rs, const AlcovePoint& xi, long k);

enum class GroupForm { SimplyConnected, ProjectiveUnitary, Other };

struct QuotientGroup {
    GroupForm form = GroupForm::SimplyConnected;
    int n = 0;  // SU(n) / PU(n)
};

/// Minimal level l_0 of the double D(G/Z). Throws ScopeError for GroupForm::Other.
long double_min_level(const QuotientGroup& group);

bool is_prime(long n);

/// Flat PU(p)-bundles on a genus-h surface with boundary classes given by SU(p)
/// lifts (arbitrary rational points of t, folded on ingestion).
struct ModuliQuery {
    int p = 3;
    int genus = 0;
    std::vector<RationalVector> classes;
    std::optional<long> level;
};

struct ClassVerdict {
    AlcovePoint xi;
    long min_level = 1;
    int stabilizer_order = 1;
    std::optional<bool> admits;  // set when the query has a level
};

struct PrequantReport {
    int p = 0;
    int genus = 0;
    std::optional<long> level;

    long required_multiple = 1;  // from the double factors (condition i)
    std::optional<bool> condition_i;
    std::optional<bool> condition_ii;
    std::optional<bool> prequantizable;

    long k_min = 1;
    std::vector<ClassVerdict> classes;
    long components = 1;
    long gamma_order = 1;
    std::string caveat = kRegularValueCaveat;
};

/// Throws ScopeError unless p is an odd prime; InputError on negative genus
/// or malformed class points.
void validate_query(const ModuliQuery& q);

/// Full report; verdict fields are filled only when q.level is set.
PrequantReport prequant_report(const ModuliQuery& q);

/**
 * Decides both obstruction conditions at level k = q.level:
 * (i) h >= 1 implies p | k; (ii) k xi_j in P^v for every boundary class.
 * Throws InputError when q.level is absent or not positive.
 */
PrequantReport theorem_obs_check(const ModuliQuery& q);

/// lcm of (p if h >= 1 else 1) and every class_min_level.
long minimal_level(const ModuliQuery& q);

/// |Gamma| = prod |Z_D_j| / |Z_D_1 ... Z_D_s| inside an abelian center.
long gamma_order(const CenterAction& center, const std::vector<Stabilizer>& stabilizers);

/// |Z| / |Z_D_1 ... Z_D_s|; the empty product gives |Z| components.
long component_count(const CenterAction& center, const std::vector<CenterElement>& subgroup,
                     const std::vector<Stabilizer>& stabilizers);

/// Stabilizers of each class in `subgroup`, then component_count.
long component_count(const CenterAction& center, const std::vector<CenterElement>& subgroup,
                     const std::vector<AlcovePoint>& classes);

}  // namespace liealc
