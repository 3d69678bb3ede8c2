#include <doctest.h>

#include <numeric>

#include "liealc/errors.hpp"
#include "liealc/prequant.hpp"
#include "support.hpp"

using namespace liealc;

namespace {

RationalVector parse(const char* s) { return RationalVector::parse(s); }

CenterAction su(int n) { return CenterAction(build_alcove(build_root_system(SimpleType(Series::A, n - 1)))); }

ModuliQuery query(int p, int genus, std::vector<RationalVector> classes, std::optional<long> k = std::nullopt) {
    ModuliQuery q;
    q.p = p;
    q.genus = genus;
    q.classes = std::move(classes);
    q.level = k;
    return q;
}

// Independent minimal level: smallest k with every coordinate pairing
// <k xi, alpha_i> integral, i.e. k xi in P^v for simply-laced SU(p).
long oracle_min_level(const RootSystem& rs, const RationalVector& xi) {
    for (long k = 1;; ++k) {
        bool ok = true;
        for (const auto& a : rs.simple_roots()) ok = ok && (Rational(k) * a.dot(xi)).is_integer();
        if (ok) return k;
    }
}

}  // namespace

TEST_CASE("class minimal levels") {
    for (int p : {3, 5, 7}) {
        const auto c = su(p);
        CHECK(class_min_level(c.root_system(), to_barycentric(c.alcove(), su_n_barycenter(p))) == p);
        for (const auto& v : c.alcove().vertices())
            CHECK(class_min_level(c.root_system(), to_barycentric(c.alcove(), v)) == 1);
    }
    const auto c3 = su(3);
    CHECK(class_min_level(c3.root_system(), to_barycentric(c3.alcove(), RationalVector(3))) == 1);
    const auto half = ClassLabel::ingest(c3.alcove(), c3.root_system().fundamental_coweight(1) / Rational(2));
    CHECK(class_min_level(c3.root_system(), half.xi) == 2);
}

TEST_CASE("double minimal levels") {
    CHECK(double_min_level({GroupForm::ProjectiveUnitary, 5}) == 5);
    CHECK(double_min_level({GroupForm::ProjectiveUnitary, 3}) == 3);
    CHECK(double_min_level({GroupForm::SimplyConnected, 4}) == 1);
    CHECK_THROWS_AS(double_min_level({GroupForm::Other, 4}), ScopeError);
}

TEST_CASE("obstruction checks") {
    CHECK(theorem_obs_check(query(5, 2, {}, 5)).prequantizable == true);
    const auto r4 = theorem_obs_check(query(5, 2, {}, 4));
    CHECK(r4.condition_i == false);
    CHECK(r4.prequantizable == false);

    const auto zeta = su_n_barycenter(3);
    CHECK(theorem_obs_check(query(3, 0, {zeta, zeta}, 3)).prequantizable == true);
    const auto r1 = theorem_obs_check(query(3, 0, {zeta, zeta}, 1));
    CHECK(r1.condition_i == true);
    CHECK(r1.condition_ii == false);

    const auto lambda = build_root_system(SimpleType(Series::A, 2)).fundamental_coweight(1);
    CHECK(theorem_obs_check(query(3, 1, {lambda}, 3)).prequantizable == true);
    for (long k = 1; k <= 9; ++k) CHECK(theorem_obs_check(query(3, 1, {lambda}, k)).condition_ii == true);

    CHECK_THROWS_AS(theorem_obs_check(query(3, 1, {})), InputError);
    CHECK_THROWS_AS(theorem_obs_check(query(3, 1, {}, 0)), InputError);
}

TEST_CASE("minimal level examples") {
    CHECK(minimal_level(query(5, 2, {})) == 5);
    CHECK(minimal_level(query(3, 0, {su_n_barycenter(3)})) == 3);
    const auto lambda = build_root_system(SimpleType(Series::A, 2)).fundamental_coweight(1);
    CHECK(minimal_level(query(3, 0, {lambda / Rational(2)})) == 2);
    CHECK(minimal_level(query(3, 0, {})) == 1);
}

TEST_CASE("scope and input validation") {
    CHECK_THROWS_AS(prequant_report(query(2, 1, {})), ScopeError);
    CHECK_THROWS_AS(prequant_report(query(4, 1, {})), ScopeError);
    CHECK_THROWS_AS(prequant_report(query(9, 1, {})), ScopeError);
    CHECK_THROWS_AS(prequant_report(query(3, -1, {})), InputError);
    CHECK_THROWS_AS(prequant_report(query(3, 1, {parse("1,0")})), InputError);
    CHECK_THROWS_AS(prequant_report(query(3, 1, {parse("1,0,0")})), InputError);
    CHECK(prequant_report(query(3, 1, {})).caveat == kRegularValueCaveat);
}

TEST_CASE("gamma order and component counts") {
    for (int p : {3, 5, 7}) {
        const auto c = su(p);
        const auto zeta = to_barycentric(c.alcove(), su_n_barycenter(p));
        const auto generic = to_barycentric(c.alcove(), c.alcove().vertex(1));
        for (int r = 1; r <= 3; ++r) {
            std::vector<Stabilizer> stabs(static_cast<std::size_t>(r), stabilizer(c, zeta, c.elements()));
            long expected = 1;
            for (int i = 1; i < r; ++i) expected *= p;
            CHECK(gamma_order(c, stabs) == expected);
        }
        CHECK(gamma_order(c, {stabilizer(c, generic, c.elements())}) == 1);
        CHECK(gamma_order(c, {}) == 1);
        CHECK(component_count(c, c.elements(), std::vector<AlcovePoint>{zeta, generic}) == 1);
        CHECK(component_count(c, c.elements(), std::vector<AlcovePoint>{generic}) == p);
        CHECK(component_count(c, c.elements(), std::vector<AlcovePoint>{}) == p);
    }
    // SU(4) with Z/2: a class on the fixed segment is stabilized by all of Z/2.
    const auto c4 = su(4);
    const auto on_segment = to_barycentric(c4.alcove(), parse("3/8,1/8,-1/8,-3/8"));
    CHECK(component_count(c4, su_n_subgroup(c4, 2), std::vector<AlcovePoint>{on_segment}) == 1);
    CHECK(component_count(c4, su_n_subgroup(c4, 2), std::vector<AlcovePoint>{}) == 2);
}

TEST_CASE("property: admissible levels are the multiples of the minimal level") {
    testing::Gen g(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int p = std::vector<int>{3, 5, 7}[static_cast<std::size_t>(g.integer(0, 2))];
        const auto rs = build_root_system(SimpleType(Series::A, p - 1));
        std::vector<RationalVector> classes;
        const int s = g.integer(0, 3);
        for (int j = 0; j < s; ++j) classes.push_back(g.root_space_point(rs, 6, 6));
        const auto q = query(p, g.integer(0, 3), classes);
        const long kmin = minimal_level(q);
        long oracle = q.genus >= 1 ? p : 1;
        for (const auto& xi : classes) oracle = std::lcm(oracle, oracle_min_level(rs, xi));
        CHECK(kmin == oracle);
        for (long k = 1; k <= 30; ++k) {
            auto qk = q;
            qk.level = k;
            CHECK(theorem_obs_check(qk).prequantizable == (k % kmin == 0));
        }
    }
}

TEST_CASE("property: class minimal level is constant on center orbits") {
    testing::Gen g(29);
    for (int n = 2; n <= 8; ++n) {
        const auto c = su(n);
        for (int i = 0; i < 20; ++i) {
            const auto xi = g.alcove_point(c.alcove());
            const long base = class_min_level(c.root_system(), xi);
            for (const auto& z : c.elements()) CHECK(class_min_level(c.root_system(), act_on_point(c, z, xi)) == base);
        }
    }
}

TEST_CASE("property: component answers do not depend on the chosen lift") {
    testing::Gen g(31);
    for (int p : {3, 5, 7}) {
        const auto c = su(p);
        const auto& rs = c.root_system();
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<RationalVector> classes;
            const int s = g.integer(0, 3);
            for (int j = 0; j < s; ++j) {
                // Mix in the barycenter sometimes so both branches are exercised.
                classes.push_back(g.integer(0, 2) == 0 ? su_n_barycenter(p) : g.alcove_point(c.alcove()).cartesian);
            }
            const auto base = prequant_report(query(p, 1, classes));
            auto lifted = classes;
            for (auto& xi : lifted) {
                // Another lift: shift by a central coweight and an affine Weyl move.
                const int i = g.integer(1, p - 1);
                xi = reflect(rs, g.integer(1, p - 1), xi + rs.fundamental_coweight(i)) + rs.coroots()[0] * Rational(g.integer(-2, 2));
            }
            const auto other = prequant_report(query(p, 1, lifted));
            CHECK(other.components == base.components);
            CHECK(other.gamma_order == base.gamma_order);
            CHECK((base.components == 1 || base.components == p));
        }
    }
}

TEST_CASE("property: fusion queries are prequantizable iff every factor is") {
    testing::Gen g(37);
    for (int trial = 0; trial < 40; ++trial) {
        const int p = std::vector<int>{3, 5, 7}[static_cast<std::size_t>(g.integer(0, 2))];
        const auto rs = build_root_system(SimpleType(Series::A, p - 1));
        // Two factors: a genus part and some boundary classes, fused into one query.
        const int h1 = g.integer(0, 2), h2 = g.integer(0, 2);
        std::vector<RationalVector> c1, c2;
        for (int j = g.integer(0, 2); j > 0; --j) c1.push_back(g.root_space_point(rs, 4, 6));
        for (int j = g.integer(0, 2); j > 0; --j) c2.push_back(g.root_space_point(rs, 4, 6));
        auto all = c1;
        all.insert(all.end(), c2.begin(), c2.end());
        for (long k = 1; k <= 12; ++k) {
            const bool a = *theorem_obs_check(query(p, h1, c1, k)).prequantizable;
            const bool b = *theorem_obs_check(query(p, h2, c2, k)).prequantizable;
            CHECK(*theorem_obs_check(query(p, h1 + h2, all, k)).prequantizable == (a && b));
        }
    }
}

TEST_CASE("property: gamma identity") {
    testing::Gen g(41);
    for (const auto& type : testing::types_with_center()) {
        CAPTURE(type.name());
        const CenterAction c(build_alcove(build_root_system(type)));
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Stabilizer> stabs;
            std::vector<CenterElement> gens;
            long product = 1;
            for (int j = g.integer(0, 3); j > 0; --j) {
                // Random points from random fixed loci so stabilizers are nontrivial.
                const auto& z = c.elements()[static_cast<std::size_t>(g.integer(0, c.order() - 1))];
                const auto sub = c.generated_subgroup({z});
                const auto locus = fixed_locus(c, sub);
                const auto& t = locus.generators_barycentric[static_cast<std::size_t>(g.integer(0, static_cast<int>(locus.generators_barycentric.size()) - 1))];
                const auto st = stabilizer(c, from_barycentric(c.alcove(), t), c.elements());
                stabs.push_back(st);
                gens.insert(gens.end(), st.elements.begin(), st.elements.end());
                product *= st.order();
            }
            const long generated = static_cast<long>(c.generated_subgroup(gens).size());
            CHECK(gamma_order(c, stabs) * generated == product);
        }
    }
}
