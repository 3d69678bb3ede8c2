#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "liealc/affine_weyl.hpp"
#include "liealc/errors.hpp"
#include "support.hpp"

using namespace liealc;

namespace {

RationalVector parse(const char* s) { return RationalVector::parse(s); }

Alcove alcove_of(Series s, int r) { return build_alcove(build_root_system(SimpleType(s, r))); }

// Brute-force orbit search for SU(n): the affine Weyl group is coordinate
// permutations followed by integer translations with zero sum. Alcove points
// have every coordinate in [-1, 1], which bounds the translations tried.
std::vector<RationalVector> su_n_orbit_in_alcove(const Alcove& alc, const RationalVector& xi) {
    const std::size_t n = xi.dim();
    std::vector<RationalVector> hits;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        RationalVector w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = xi[perm[i]];
        std::vector<std::vector<long>> choices(n);
        for (std::size_t i = 0; i < n; ++i)
            for (long t = -40; t <= 40; ++t) {
                const Rational c = w[i] + Rational(t);
                if (Rational(-1) <= c && c <= Rational(1)) choices[i].push_back(t);
            }
        std::vector<std::size_t> pick(n, 0);
        while (true) {
            RationalVector p = w;
            long s = 0;
            for (std::size_t i = 0; i < n; ++i) {
                p[i] += Rational(choices[i][pick[i]]);
                s += choices[i][pick[i]];
            }
            if (s == 0 && contains(alc, p) && std::find(hits.begin(), hits.end(), p) == hits.end())
                hits.push_back(p);
            std::size_t k = 0;
            while (k < n && pick[k] + 1 == choices[k].size()) pick[k++] = 0;
            if (k == n) break;
            ++pick[k];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return hits;
}

}  // namespace

TEST_CASE("reflections") {
    const auto a1 = build_root_system(SimpleType(Series::A, 1));
    CHECK(reflect(a1, 1, parse("1/2,-1/2")) == parse("-1/2,1/2"));
    CHECK(reflect(a1, 0, parse("1/2,-1/2")) == parse("-1/2,1/2"));
    CHECK_THROWS_AS(reflect(a1, 2, parse("0,0")), InputError);

    const auto e6 = build_root_system(SimpleType(Series::E, 6));
    const auto alc = build_alcove(e6);
    // <alpha_2, v_2> = 1/2 by the table, so s_2(v_2) = v_2 - (1/2) alpha_2.
    CHECK(reflect(e6, 2, alc.vertex(2)) == alc.vertex(2) - Rational(1, 2) * e6.simple_root(2));
    CHECK(reflect(e6, 2, alc.vertex(2)) == parse("-1/4,-1/4,1/4,1/4,1/4,-1/4,-1/4,1/4"));
    // Points orthogonal to alpha_i are fixed.
    for (int i = 1; i <= 6; ++i)
        for (int j = 0; j <= 6; ++j)
            if (i != j) CHECK(reflect(e6, i, alc.vertex(j)) == alc.vertex(j));
}

TEST_CASE("word evaluation") {
    const auto e6 = build_root_system(SimpleType(Series::E, 6));
    CHECK(evaluate_word(e6, {}).is_identity());
    CHECK(evaluate_word(e6, {3, 3}).is_identity());
    const auto w = evaluate_word(e6, {1, 3});
    CHECK(w.word() == std::vector<int>{1, 3});
    CHECK(w.matrix() == reflection_matrix(e6.simple_root(1)) * reflection_matrix(e6.simple_root(3)));
    // Right-to-left composition: s_1 s_3 applied to x is s_1(s_3(x)).
    const auto x = build_alcove(e6).vertex(4);
    CHECK(w.apply(x) == reflect(e6, 1, reflect(e6, 3, x)));
    CHECK((w * w.inverse()).is_identity());
}

TEST_CASE("folding examples") {
    const auto a2 = alcove_of(Series::A, 2);
    const auto& rs = a2.root_system();
    const auto inside = fold_to_alcove(a2, a2.vertex(1));
    CHECK(inside.point.cartesian == a2.vertex(1));
    CHECK(inside.witness.is_identity());
    CHECK(inside.walls.empty());
    CHECK(fold_to_alcove(a2, a2.vertex(1) + rs.fundamental_coweight(1)).point.cartesian == a2.vertex(2));

    const auto a1 = alcove_of(Series::A, 1);
    CHECK(fold_to_alcove(a1, parse("3/2,-3/2")).point.cartesian == parse("1/2,-1/2"));
    CHECK_THROWS_AS(fold_to_alcove(a1, parse("1,0")), InputError);
    CHECK_THROWS_AS(fold_to_alcove(a1, parse("1,0,-1")), InputError);
}

TEST_CASE("property: fold is idempotent and the witness is correct") {
    testing::Gen g(21);
    for (const auto& type : catalog_types()) {
        CAPTURE(type.name());
        const auto alc = build_alcove(build_root_system(type));
        for (int trial = 0; trial < 25; ++trial) {
            const auto xi = g.root_space_point(alc.root_system());
            const auto r = fold_to_alcove(alc, xi);
            CHECK(contains(alc, r.point.cartesian));
            CHECK(r.witness.apply(xi) == r.point.cartesian);
            CHECK(lattice_contains(lattice(alc.root_system(), LatticeName::CorootQ), r.witness.translation()));
            const auto again = fold_to_alcove(alc, r.point.cartesian);
            CHECK(again.point == r.point);
            CHECK(again.witness.is_identity());
        }
    }
}

TEST_CASE("property: fold matches a brute-force orbit search for A1..A3") {
    testing::Gen g(5);
    for (int n = 2; n <= 4; ++n) {
        const auto alc = alcove_of(Series::A, n - 1);
        for (int trial = 0; trial < 15; ++trial) {
            const auto xi = g.root_space_point(alc.root_system(), 5, 4);
            const auto hits = su_n_orbit_in_alcove(alc, xi);
            REQUIRE(hits.size() == 1);
            CHECK(fold_to_alcove(alc, xi).point.cartesian == hits.front());
        }
    }
}

TEST_CASE("property: points in one affine Weyl orbit fold together") {
    testing::Gen g(9);
    for (const auto& type : catalog_types()) {
        CAPTURE(type.name());
        const auto alc = build_alcove(build_root_system(type));
        const auto& rs = alc.root_system();
        const auto affine = affine_wall_reflection(rs);
        for (int trial = 0; trial < 10; ++trial) {
            const auto xi = g.root_space_point(rs, 6, 5);
            RationalVector moved = xi;
            const int length = g.integer(1, 12);
            for (int s = 0; s < length; ++s) {
                const int i = g.integer(0, rs.rank());
                moved = i == 0 ? affine.apply(moved) : reflect(rs, i, moved);
            }
            // Also translate by a random coroot.
            moved += rs.coroots()[static_cast<std::size_t>(g.integer(0, rs.rank() - 1))] * Rational(g.integer(-3, 3));
            CHECK(fold_to_alcove(alc, moved).point == fold_to_alcove(alc, xi).point);
        }
    }
}

TEST_CASE("exceptional reference words permute the extended roots") {
    const auto e6 = build_root_system(SimpleType(Series::E, 6));
    const auto e7 = build_root_system(SimpleType(Series::E, 7));
    const std::vector<int> w1 = {1, 3, 4, 2, 5, 4, 3, 1, 6, 5, 4, 2, 3, 4, 5, 6};
    const std::vector<int> w6 = {6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1};
    const std::vector<int> w7 = {7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7};
    CHECK(w7.size() == 27);
    CHECK(permutes_extended_roots(e6, evaluate_word(e6, w1)));
    CHECK(permutes_extended_roots(e6, evaluate_word(e6, w6)));
    CHECK(permutes_extended_roots(e7, evaluate_word(e7, w7)));
    CHECK(evaluate_word(e6, w1).apply(e6.extended_root(0)) == e6.extended_root(1));
    CHECK(evaluate_word(e6, w6).apply(e6.extended_root(0)) == e6.extended_root(6));
    CHECK(evaluate_word(e7, w7).apply(e7.extended_root(0)) == e7.extended_root(7));
    CHECK(!permutes_extended_roots(e6, evaluate_word(e6, {1})));
}
