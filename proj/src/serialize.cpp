#include "liealc/serialize.hpp"

#include "liealc/errors.hpp"

namespace liealc {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const RationalVector& v) {
    Json a = Json::array();
    for (const auto& c : v) a.push_back(c.str());
    return a;
}

Json to_json(const std::vector<Rational>& v) { return to_json(RationalVector(v)); }

Json to_json(const Matrix& m) {
    Json a = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
    return a;
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw InputError("rational must be encoded as a string");
    return Rational::parse(j.get<std::string>());
}

RationalVector vector_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("vector must be a JSON array");
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return RationalVector(std::move(out));
}

namespace {

Json vector_list(const std::vector<RationalVector>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

Json word_json(const std::optional<std::vector<int>>& w) {
    if (!w) return nullptr;
    return *w;
}

}  // namespace

Json root_system_json(const RootSystem& rs) {
    Json j;
    j["type"] = rs.type().name();
    j["simple_roots"] = vector_list(rs.simple_roots());
    j["highest_root"] = to_json(rs.highest_root());
    j["marks"] = rs.marks();
    j["fundamental_coweights"] = vector_list(rs.fundamental_coweights());
    j["dual_coxeter"] = rs.dual_coxeter();
    j["center_order"] = rs.center_order();
    return j;
}

Json alcove_json(const Alcove& alc) {
    Json j;
    j["type"] = alc.root_system().type().name();
    Json vs = Json::object();
    for (std::size_t k = 0; k < alc.vertices().size(); ++k)
        vs["v" + std::to_string(k)] = to_json(alc.vertices()[k]);
    j["vertices"] = vs;
    return j;
}

Json fold_json(const FoldResult& r) {
    Json j;
    j["point"] = to_json(r.point.cartesian);
    j["barycentric"] = to_json(r.point.barycentric);
    j["walls"] = r.walls;
    j["witness_word"] = word_json(r.witness.linear().word());
    j["witness_matrix"] = to_json(r.witness.linear().matrix());
    j["witness_translation"] = to_json(r.witness.translation());
    return j;
}

Json center_element_json(const CenterAction& center, CenterElement z) {
    const auto& rs = center.root_system();
    Json j;
    j["element"] = z.index;
    j["order"] = center.element_order(z);
    j["coweight"] = z.index == 0 ? to_json(RationalVector(rs.ambient_dim()))
                                 : to_json(rs.fundamental_coweight(z.index));
    j["vertex_permutation"] = center.vertex_permutation(z).cycles();
    j["dynkin_permutation"] = dynkin_automorphism(center, z).cycles();
    const WeylElement w = weyl_element_for_center(center, z);
    j["weyl_matrix"] = to_json(w.matrix());
    const auto ref = reference_word(rs.type(), z.index);
    j["weyl_word"] = (ref && evaluate_word(rs, *ref) == w) ? Json(*ref) : Json(nullptr);
    return j;
}

Json fixed_locus_json(const Alcove& alc, const FixedLocus& locus) {
    Json j;
    j["subgroup_order"] = locus.subgroup_order;
    Json gens = Json::array();
    for (const auto& t : locus.generators_barycentric) {
        Json g;
        g["barycentric"] = to_json(t);
        g["point"] = to_json(from_barycentric(alc, t).cartesian);
        gens.push_back(g);
    }
    j["generators"] = gens;
    return j;
}

Json report_json(const PrequantReport& r) {
    Json j;
    j["p"] = r.p;
    j["genus"] = r.genus;
    if (r.level) j["k"] = *r.level;
    j["k_min"] = r.k_min;
    Json ci;
    ci["required_multiple"] = r.required_multiple;
    if (r.condition_i) ci["pass"] = *r.condition_i;
    j["condition_i"] = ci;
    if (r.condition_ii) {
        Json cii;
        cii["pass"] = *r.condition_ii;
        j["condition_ii"] = cii;
    }
    if (r.prequantizable) j["prequantizable"] = *r.prequantizable;
    Json cls = Json::array();
    for (const auto& c : r.classes) {
        Json x;
        x["xi"] = to_json(c.xi.cartesian);
        x["min_level"] = c.min_level;
        x["stabilizer_order"] = c.stabilizer_order;
        if (c.admits) x["admits_level"] = *c.admits;
        cls.push_back(x);
    }
    j["classes"] = cls;
    j["components"] = r.components;
    j["gamma_order"] = r.gamma_order;
    j["caveat"] = r.caveat;
    return j;
}

}  // namespace liealc
