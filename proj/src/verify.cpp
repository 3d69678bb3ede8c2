#include "liealc/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>

#include "liealc/center_action.hpp"

namespace liealc {

namespace {

// Expected opposite vertices v_0..v_l for E6 and E7.
const std::vector<std::vector<std::string>> kE6Vertices = {
    {"0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "-2/3", "-2/3", "2/3"},
    {"1/4", "1/4", "1/4", "1/4", "1/4", "-1/4", "-1/4", "1/4"},
    {"-1/4", "1/4", "1/4", "1/4", "1/4", "-5/12", "-5/12", "5/12"},
    {"0", "0", "1/3", "1/3", "1/3", "-1/3", "-1/3", "1/3"},
    {"0", "0", "0", "1/2", "1/2", "-1/3", "-1/3", "1/3"},
    {"0", "0", "0", "0", "1", "-1/3", "-1/3", "1/3"},
};

const std::vector<std::vector<std::string>> kE7Vertices = {
    {"0", "0", "0", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "-1/2", "1/2"},
    {"1/4", "1/4", "1/4", "1/4", "1/4", "1/4", "-1/2", "1/2"},
    {"-1/6", "1/6", "1/6", "1/6", "1/6", "1/6", "-1/2", "1/2"},
    {"0", "0", "1/4", "1/4", "1/4", "1/4", "-1/2", "1/2"},
    {"0", "0", "0", "1/3", "1/3", "1/3", "-1/2", "1/2"},
    {"0", "0", "0", "0", "1/2", "1/2", "-1/2", "1/2"},
    {"0", "0", "0", "0", "0", "1", "-1/2", "1/2"},
};

std::vector<std::string> strings(const RationalVector& v) {
    std::vector<std::string> s;
    for (const auto& c : v) s.push_back(c.str());
    return s;
}

CheckResult check_table(const std::string& name, SimpleType type,
                        const std::vector<std::vector<std::string>>& expected) {
    const Alcove alc = build_alcove(build_root_system(type));
    for (std::size_t j = 0; j < expected.size(); ++j)
        if (strings(alc.vertices()[j]) != expected[j])
            return {name, false, "v" + std::to_string(j) + " = " + alc.vertices()[j].str()};
    return {name, true, std::to_string(expected.size()) + " vertices match"};
}

CheckResult check_word(SimpleType type, int i) {
    const std::string name = type.name() + " word w_" + std::to_string(i);
    const CenterAction center(build_alcove(build_root_system(type)));
    const auto& rs = center.root_system();
    const WeylElement from_word = evaluate_word(rs, *reference_word(type, i));
    const WeylElement computed = weyl_element_for_center(center, center.element(i));
    if (!(from_word == computed)) return {name, false, "stored word differs from computed element"};
    if (from_word.apply(rs.extended_root(0)) != rs.extended_root(i))
        return {name, false, "w(alpha_0) != alpha_" + std::to_string(i)};
    if (!permutes_extended_roots(rs, from_word)) return {name, false, "does not permute alpha_0..alpha_l"};
    return {name, true, std::to_string(reference_word(type, i)->size()) + " reflections"};
}

CheckResult check_su_n_cycles() {
    for (int n = 2; n <= 12; ++n) {
        const CenterAction center(build_alcove(build_root_system(SimpleType(Series::A, n - 1))));
        const Permutation& p = center.vertex_permutation(center.element(1));
        for (int j = 0; j < n; ++j)
            if (p(j) != (j + 1) % n)
                return {"SU(n) generator is the n-cycle", false, "n = " + std::to_string(n) + ": " + p.cycles()};
    }
    return {"SU(n) generator is the n-cycle", true, "n = 2..12"};
}

CheckResult check_su4_segment() {
    const std::string name = "SU(4) Z/2 fixed segment";
    const CenterAction center(build_alcove(build_root_system(SimpleType(Series::A, 3))));
    const auto& alc = center.alcove();
    const auto locus = fixed_locus(center, su_n_subgroup(center, 2));
    const RationalVector zeta0{Rational(1, 4), Rational(1, 4), Rational(-1, 4), Rational(-1, 4)};
    const RationalVector zeta1 = (alc.vertex(1) + alc.vertex(3)) / Rational(2);
    if (locus.generators_barycentric.size() != 2) return {name, false, "expected two endpoints"};
    const auto a = from_barycentric(alc, locus.generators_barycentric[0]).cartesian;
    const auto b = from_barycentric(alc, locus.generators_barycentric[1]).cartesian;
    if (a != zeta0 || b != zeta1) return {name, false, "endpoints " + a.str() + ", " + b.str()};
    return {name, true, "endpoints " + a.str() + ", " + b.str()};
}

CheckResult check_coherence() {
    std::string covered;
    for (const auto& type : catalog_types()) {
        const CenterAction center(build_alcove(build_root_system(type)));
        if (center.order() == 1) continue;
        for (const auto& z : center.elements()) {
            const Permutation vp = vertex_permutation(center, z);
            const Permutation dp = dynkin_automorphism(center, z);
            if (!(vp == dp))
                return {"vertex/Dynkin permutation coherence", false,
                        type.name() + " element " + std::to_string(z.index) + ": " + vp.cycles() + " vs " +
                            dp.cycles()};
            if (!preserves_extended_diagram(center.root_system(), dp))
                return {"vertex/Dynkin permutation coherence", false, type.name() + " breaks adjacency"};
        }
        covered += (covered.empty() ? "" : " ") + type.name();
    }
    return {"vertex/Dynkin permutation coherence", true, covered};
}

CheckResult check_oracle() {
    for (const auto& type : catalog_types()) {
        const Alcove alc = build_alcove(build_root_system(type));
        auto formula = alc.vertices();
        std::sort(formula.begin(), formula.end());
        const auto oracle = vertex_enumeration_oracle(alc);
        if (oracle.status != PolytopeStatus::Bounded || oracle.vertices != formula)
            return {"half-space oracle = vertex formula", false, type.name()};
    }
    return {"half-space oracle = vertex formula", true, "all catalog types"};
}

}  // namespace

std::vector<CheckResult> run_verification() {
    const std::vector<std::function<CheckResult()>> checks = {
        [] { return check_table("E6 alcove table", SimpleType(Series::E, 6), kE6Vertices); },
        [] { return check_table("E7 alcove table", SimpleType(Series::E, 7), kE7Vertices); },
        [] { return check_word(SimpleType(Series::E, 6), 1); },
        [] { return check_word(SimpleType(Series::E, 6), 6); },
        [] { return check_word(SimpleType(Series::E, 7), 7); },
        check_su_n_cycles,
        check_su4_segment,
        check_coherence,
        check_oracle,
    };
    std::vector<CheckResult> out;
    for (const auto& c : checks) {
        try {
            out.push_back(c());
        } catch (const std::exception& e) {
            out.push_back({"(check raised)", false, e.what()});
        }
    }
    return out;
}

}  // namespace liealc
