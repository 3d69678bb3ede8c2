#include "liealc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "liealc/errors.hpp"
#include "liealc/serialize.hpp"
#include "liealc/verify.hpp"

namespace liealc {

namespace {

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string word_string(const std::vector<int>& word) {
    if (word.empty()) return "1";
    std::string s;
    for (int i : word) s += (s.empty() ? "" : " ") + std::string("s_") + std::to_string(i);
    return s;
}

void print_matrix(std::ostream& out, const Matrix& m, const std::string& indent) {
    std::istringstream rows(m.str());
    for (std::string line; std::getline(rows, line);) out << indent << line << '\n';
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void cmd_roots(std::ostream& out, const std::string& type, bool json) {
    const RootSystem rs = build_root_system(SimpleType::parse(type));
    if (json) return emit(out, root_system_json(rs));
    out << rs.type().name() << " in R^" << rs.ambient_dim() << '\n';
    for (int i = 1; i <= rs.rank(); ++i)
        out << "  alpha_" << i << " = " << rs.simple_root(i) << "   mark " << rs.mark(i) << "   lambda_" << i
            << "^v = " << rs.fundamental_coweight(i) << '\n';
    out << "  highest root = " << rs.highest_root() << '\n';
    out << "  dual Coxeter number = " << rs.dual_coxeter() << '\n';
    out << "  center order = " << rs.center_order() << '\n';
}

void cmd_alcove(std::ostream& out, const std::string& type, bool json) {
    const Alcove alc = build_alcove(build_root_system(SimpleType::parse(type)));
    if (json) return emit(out, alcove_json(alc));
    const auto& rs = alc.root_system();
    std::vector<std::pair<std::string, std::string>> rows;
    for (int j = 1; j <= rs.rank(); ++j)
        rows.emplace_back("alpha_" + std::to_string(j) + " = " + rs.simple_root(j).str(),
                          "v_" + std::to_string(j) + " = " + alc.vertex(j).str());
    rows.emplace_back("highest root = " + rs.highest_root().str(), "v_0 = " + alc.vertex(0).str());
    std::size_t width = std::string("Simple or dominant root").size();
    for (const auto& r : rows) width = std::max(width, r.first.size());
    out << "Alcove data for " << rs.type().name() << '\n';
    out << pad("Simple or dominant root", width) << " | Opposite vertex\n";
    for (const auto& r : rows) out << pad(r.first, width) << " | " << r.second << '\n';
}

void cmd_fold(std::ostream& out, const std::string& type, const std::string& point, bool json) {
    const Alcove alc = build_alcove(build_root_system(SimpleType::parse(type)));
    const auto r = fold_to_alcove(alc, RationalVector::parse(point));
    if (json) return emit(out, fold_json(r));
    out << "folded point: " << r.point.cartesian << '\n';
    out << "barycentric:  " << RationalVector(r.point.barycentric) << '\n';
    out << "walls crossed: " << r.walls.size() << '\n';
    out << "witness word: " << word_string(*r.witness.linear().word()) << '\n';
    out << "witness translation: " << r.witness.translation() << '\n';
    out << "witness matrix:\n";
    print_matrix(out, r.witness.linear().matrix(), "  ");
}

void print_center_element(std::ostream& out, const CenterAction& center, CenterElement z) {
    const auto& rs = center.root_system();
    const WeylElement w = weyl_element_for_center(center, z);
    out << "exp(lambda_" << z.index << "^v), order " << center.element_order(z) << '\n';
    out << "  coweight: " << rs.fundamental_coweight(z.index) << '\n';
    out << "  vertex permutation: " << center.vertex_permutation(z).cycles() << '\n';
    out << "  Dynkin permutation: " << dynkin_automorphism(center, z).cycles() << '\n';
    const auto ref = reference_word(rs.type(), z.index);
    if (ref && evaluate_word(rs, *ref) == w)
        out << "  Weyl element word: " << word_string(*ref) << '\n';
    out << "  Weyl element matrix:\n";
    print_matrix(out, w.matrix(), "    ");
}

void cmd_center(std::ostream& out, const std::string& type, std::optional<int> element, bool json) {
    const CenterAction center(build_alcove(build_root_system(SimpleType::parse(type))));
    std::vector<CenterElement> selected;
    if (element) {
        selected.push_back(center.element(*element));
    } else {
        for (const auto& z : center.elements())
            if (z.index != 0) selected.push_back(z);
    }
    if (json) {
        Json j;
        j["type"] = center.root_system().type().name();
        j["center_order"] = center.order();
        Json els = Json::array();
        for (const auto& z : selected) els.push_back(center_element_json(center, z));
        j["elements"] = els;
        return emit(out, j);
    }
    out << "Z(" << center.root_system().type().name() << ") has order " << center.order() << '\n';
    for (const auto& z : selected)
        if (z.index != 0) print_center_element(out, center, z);
}

std::vector<CenterElement> subgroup_of_order(const CenterAction& center, int nu, std::optional<int> element) {
    if (element) {
        auto g = center.generated_subgroup({center.element(*element)});
        if (static_cast<int>(g.size()) != nu)
            throw InputError("element " + std::to_string(*element) + " generates a subgroup of order " +
                             std::to_string(g.size()) + ", not " + std::to_string(nu));
        return g;
    }
    std::vector<std::vector<CenterElement>> found;
    for (const auto& z : center.elements()) {
        auto g = center.generated_subgroup({z});
        if (static_cast<int>(g.size()) == nu && std::find(found.begin(), found.end(), g) == found.end())
            found.push_back(std::move(g));
    }
    if (found.empty())
        throw InputError("no cyclic subgroup of order " + std::to_string(nu) + " in a center of order " +
                         std::to_string(center.order()));
    if (found.size() > 1) throw InputError("several subgroups of that order; choose one with --element");
    return found.front();
}

void cmd_fixed(std::ostream& out, const std::string& type, int nu, std::optional<int> element, bool json) {
    const SimpleType st = SimpleType::parse(type);
    const CenterAction center(build_alcove(build_root_system(st)));
    const auto& alc = center.alcove();
    FixedLocus locus;
    std::string method;
    if (st.series() == Series::A && !element) {
        const int n = st.rank() + 1;
        locus = fixed_locus_su_n(n, nu);
        method = "closed form";
        const auto generic = fixed_locus(center, su_n_subgroup(center, nu));
        if (generic.generators_barycentric != locus.generators_barycentric)
            throw std::logic_error("closed-form and generic fixed loci disagree");
    } else {
        locus = fixed_locus(center, subgroup_of_order(center, nu, element));
        method = "orbit barycenters";
    }
    if (json) {
        Json j;
        j["type"] = st.name();
        j["nu"] = nu;
        j["method"] = method;
        j["locus"] = fixed_locus_json(alc, locus);
        return emit(out, j);
    }
    out << "Fixed points of Z/" << nu << " in the " << st.name() << " alcove (" << method
        << "): convex hull of\n";
    for (const auto& t : locus.generators_barycentric)
        out << "  " << from_barycentric(alc, t).cartesian << "   barycentric " << RationalVector(t) << '\n';
}

ModuliQuery make_query(int p, int genus, std::optional<long> k, const std::vector<std::string>& classes) {
    ModuliQuery q;
    q.p = p;
    q.genus = genus;
    q.level = k;
    for (const auto& c : classes) q.classes.push_back(RationalVector::parse(c));
    return q;
}

void cmd_prequant(std::ostream& out, const ModuliQuery& q, bool json) {
    const auto r = prequant_report(q);
    if (json) return emit(out, report_json(r));
    out << "PU(" << r.p << "), genus " << r.genus << ", " << r.classes.size() << " boundary class"
        << (r.classes.size() == 1 ? "" : "es") << '\n';
    out << "condition (i): k must be a multiple of " << r.required_multiple;
    if (r.condition_i) out << "  [" << (*r.condition_i ? "pass" : "FAIL") << " at k = " << *r.level << "]";
    out << '\n';
    for (std::size_t j = 0; j < r.classes.size(); ++j) {
        const auto& c = r.classes[j];
        out << "class " << j + 1 << ": xi = " << c.xi.cartesian << ", minimal level " << c.min_level
            << ", stabilizer order " << c.stabilizer_order;
        if (c.admits) out << "  [" << (*c.admits ? "pass" : "FAIL") << "]";
        out << '\n';
    }
    if (r.condition_ii) out << "condition (ii): " << (*r.condition_ii ? "pass" : "FAIL") << '\n';
    out << "minimal level k_min = " << r.k_min << '\n';
    if (r.prequantizable)
        out << "level " << *r.level << ": " << (*r.prequantizable ? "prequantizable" : "NOT prequantizable")
            << '\n';
    out << "components = " << r.components << ", |Gamma| = " << r.gamma_order << '\n';
    out << "note: " << r.caveat << '\n';
}

void cmd_components(std::ostream& out, const ModuliQuery& q, bool json) {
    const auto r = prequant_report(q);
    if (json) {
        Json j;
        j["components"] = r.components;
        j["gamma_order"] = r.gamma_order;
        return emit(out, j);
    }
    out << "components: " << r.components << '\n';
    out << "|Gamma|: " << r.gamma_order << '\n';
}

int cmd_verify(std::ostream& out, bool json) {
    const auto results = run_verification();
    const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.passed; });
    if (json) {
        Json j = Json::array();
        for (const auto& c : results) {
            Json x;
            x["check"] = c.name;
            x["passed"] = c.passed;
            x["detail"] = c.detail;
            j.push_back(x);
        }
        emit(out, j);
    } else {
        std::size_t width = 0;
        for (const auto& c : results) width = std::max(width, c.name.size());
        for (const auto& c : results)
            out << (c.passed ? "PASS  " : "FAIL  ") << pad(c.name, width) << "  " << c.detail << '\n';
        out << (ok ? "all checks passed" : "some checks FAILED") << '\n';
    }
    return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact alcove, center-action and prequantization toolkit", "liealc"};
    app.require_subcommand(1);

    bool json = false;
    std::string type;
    std::string point;
    std::optional<int> element;
    int nu = 0;
    int p = 0;
    int genus = 0;
    std::optional<long> k;
    std::vector<std::string> classes;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Emit JSON"); };
    auto add_type = [&](CLI::App* sub) {
        sub->add_option("type", type, "Simple type, e.g. A3, E6")->required();
    };

    auto* roots = app.add_subcommand("roots", "Root-system catalog entry");
    add_type(roots);
    add_json(roots);

    auto* alcove = app.add_subcommand("alcove", "Alcove vertices keyed by opposite root");
    add_type(alcove);
    add_json(alcove);

    auto* fold = app.add_subcommand("fold", "Fold a rational point into the alcove");
    add_type(fold);
    fold->add_option("--point", point, "Comma-separated rationals, e.g. \"1/2,-1/2\"")->required();
    add_json(fold);

    auto* center = app.add_subcommand("center", "Action of the center on the alcove");
    add_type(center);
    center->add_option("--element", element, "Special root index i of exp(lambda_i^v)");
    add_json(center);

    auto* fixed = app.add_subcommand("fixed", "Fixed points of a cyclic subgroup of the center");
    add_type(fixed);
    fixed->add_option("--nu", nu, "Subgroup order")->required();
    fixed->add_option("--element", element, "Generator index (needed when the order is ambiguous)");
    add_json(fixed);

    auto* prequant = app.add_subcommand("prequant", "Prequantization levels for flat PU(p)-bundles");
    auto* components = app.add_subcommand("components", "Connected components for flat PU(p)-bundles");
    for (auto* sub : {prequant, components}) {
        sub->add_option("--p", p, "Odd prime p (structure group PU(p))")->required();
        sub->add_option("--genus", genus, "Genus of the surface")->required();
        sub->add_option("--class", classes, "SU(p) lift of a boundary class, as a point of t (repeatable)");
        add_json(sub);
    }
    prequant->add_option("--k", k, "Level to test");

    auto* verify = app.add_subcommand("verify", "Run the reproduction checks");
    add_json(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*roots) cmd_roots(out, type, json);
        else if (*alcove) cmd_alcove(out, type, json);
        else if (*fold) cmd_fold(out, type, point, json);
        else if (*center) cmd_center(out, type, element, json);
        else if (*fixed) cmd_fixed(out, type, nu, element, json);
        else if (*prequant) cmd_prequant(out, make_query(p, genus, k, classes), json);
        else if (*components) cmd_components(out, make_query(p, genus, std::nullopt, classes), json);
        else if (*verify) return cmd_verify(out, json);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ScopeError& e) {
        err << "scope error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace liealc
