#include "liealc/prequant.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "liealc/errors.hpp"

namespace liealc {

ClassLabel ClassLabel::ingest(const Alcove& alc, const RationalVector& point) {
    return {fold_point(alc, point)};
}

long class_min_level(const RootSystem& rs, const AlcovePoint& xi) {
    // Coordinates of xi^flat in the fundamental weights are <xi^flat, alpha_i^v>.
    const RationalVector flat = flat_map(rs, xi.cartesian);
    mpz_class k = 1;
    for (const auto& c : rs.coroots()) k = lcm(k, flat.dot(c).denominator());
    return k.get_si();
}

bool class_admits_level(const RootSystem& rs, const AlcovePoint& xi, long k) {
    if (k < 1) throw InputError("level must be a positive integer");
    return lattice_contains(lattice(rs, LatticeName::WeightP), flat_map(rs, Rational(k) * xi.cartesian));
}

long double_min_level(const QuotientGroup& group) {
    switch (group.form) {
        case GroupForm::SimplyConnected: return 1;
        case GroupForm::ProjectiveUnitary:
            if (group.n < 2) throw InputError("PU(n) needs n >= 2");
            return group.n;
        case GroupForm::Other: break;
    }
    throw ScopeError("minimal level of the double is only known here for simply connected groups and PU(n)");
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void validate_query(const ModuliQuery& q) {
    if (q.p == 2)
        throw ScopeError("p = 2 (PU(2) = SO(3)) is outside the obstruction criterion, which needs an odd prime");
    if (!is_prime(q.p))
        throw ScopeError("p = " + std::to_string(q.p) + " is not prime; the obstruction criterion covers PU(p) for odd primes p only");
    if (q.genus < 0) throw InputError("genus must be non-negative");
    if (q.level && *q.level < 1) throw InputError("level k must be a positive integer");
    for (const auto& c : q.classes)
        if (c.dim() != static_cast<std::size_t>(q.p))
            throw InputError("class point " + c.str() + " must have p = " + std::to_string(q.p) + " coordinates");
}

long gamma_order(const CenterAction& center, const std::vector<Stabilizer>& stabilizers) {
    long product = 1;
    std::vector<CenterElement> gens;
    for (const auto& s : stabilizers) {
        product *= s.order();
        gens.insert(gens.end(), s.elements.begin(), s.elements.end());
    }
    const long generated = static_cast<long>(center.generated_subgroup(gens).size());
    return product / generated;
}

long component_count(const CenterAction& center, const std::vector<CenterElement>& subgroup,
                     const std::vector<Stabilizer>& stabilizers) {
    std::vector<CenterElement> gens;
    for (const auto& s : stabilizers) gens.insert(gens.end(), s.elements.begin(), s.elements.end());
    const long z = static_cast<long>(center.generated_subgroup(subgroup).size());
    return z / static_cast<long>(center.generated_subgroup(gens).size());
}

long component_count(const CenterAction& center, const std::vector<CenterElement>& subgroup,
                     const std::vector<AlcovePoint>& classes) {
    std::vector<Stabilizer> stabs;
    for (const auto& xi : classes) stabs.push_back(stabilizer(center, xi, subgroup));
    return component_count(center, subgroup, stabs);
}

namespace {

// CenterAction is immutable, so one instance per p is shared between queries.
const CenterAction& su_center(int p) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const CenterAction>> cache;
    const std::lock_guard lock(mutex);
    auto& slot = cache[p];
    if (!slot) slot = std::make_unique<const CenterAction>(build_alcove(build_root_system(SimpleType(Series::A, p - 1))));
    return *slot;
}

}  // namespace

PrequantReport prequant_report(const ModuliQuery& q) {
    validate_query(q);
    const CenterAction& center = su_center(q.p);
    const auto& rs = center.root_system();
    const auto& z = center.elements();
    const LatticeBasis coweights = lattice(rs, LatticeName::CoweightP);

    PrequantReport r;
    r.p = q.p;
    r.genus = q.genus;
    r.level = q.level;
    r.required_multiple = q.genus >= 1 ? double_min_level({GroupForm::ProjectiveUnitary, q.p}) : 1;
    r.k_min = r.required_multiple;

    std::vector<Stabilizer> stabs;
    bool all_classes = true;
    for (const auto& point : q.classes) {
        ClassVerdict v;
        v.xi = ClassLabel::ingest(center.alcove(), point).xi;
        v.min_level = class_min_level(rs, v.xi);
        stabs.push_back(stabilizer(center, v.xi, z));
        v.stabilizer_order = stabs.back().order();
        if (q.level) {
            v.admits = lattice_contains(coweights, Rational(*q.level) * v.xi.cartesian);
            all_classes = all_classes && *v.admits;
        }
        r.k_min = std::lcm(r.k_min, v.min_level);
        r.classes.push_back(std::move(v));
    }
    r.components = component_count(center, z, stabs);
    r.gamma_order = gamma_order(center, stabs);

    if (q.level) {
        r.condition_i = q.genus == 0 || *q.level % q.p == 0;
        r.condition_ii = all_classes;
        r.prequantizable = *r.condition_i && *r.condition_ii;
    }
    return r;
}

PrequantReport theorem_obs_check(const ModuliQuery& q) {
    if (!q.level) throw InputError("theorem_obs_check needs a level k");
    return prequant_report(q);
}

long minimal_level(const ModuliQuery& q) {
    ModuliQuery unleveled = q;
    unleveled.level.reset();
    return prequant_report(unleveled).k_min;
}

}  // namespace liealc
