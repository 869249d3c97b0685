#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "poltan/determinantal.hpp"
#include "poltan/json_io.hpp"
#include "poltan/polarize.hpp"
#include "poltan/tangent.hpp"
#include "poltan/trees.hpp"
#include "poltan/verify.hpp"

namespace {

using nlohmann::json;
using namespace poltan;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw UsageError("not an integer: '" + item + "'");
        }
    }
    return out;
}

// An ideal selected on the command line, together with whatever structure
// the selector implies (split parameters, depolarization, tree).
struct SelectedIdeal {
    std::string kind;
    MonomialIdeal ideal;
    std::optional<std::pair<int, int>> nd;
    std::optional<DepolarizationSpec> spec;
    std::optional<LabeledTree> tree;
    std::optional<MonomialIdeal> base;
};

LabeledTree tree_from_selector(const std::string& body) {
    if (body.rfind("path:", 0) == 0) return path_tree(std::stoi(body.substr(5)));
    if (body.rfind("star:", 0) == 0) return star_tree(std::stoi(body.substr(5)));
    if (body.rfind("spider:", 0) == 0) {
        if (std::stoi(body.substr(7)) != 7) throw UsageError("the spider tree is defined for n=7");
        return spider_tree_7();
    }
    return prufer_decode(parse_int_list(body));
}

// Selectors: box:N,D  standard:N,D  power:N,D  sqfree:N,D  trivial:N,D
//            tree:<prufer csv>  tree:path:N  tree:star:N  tree:spider:7
//            @file.json
SelectedIdeal select_ideal(const std::string& selector) {
    SelectedIdeal out;
    if (!selector.empty() && selector.front() == '@') {
        std::ifstream in(selector.substr(1));
        if (!in) throw UsageError("cannot open " + selector.substr(1));
        json j;
        in >> j;
        out.kind = "json";
        out.ideal = ideal_from_json(j);
        return out;
    }
    const auto colon = selector.find(':');
    if (colon == std::string::npos) throw UsageError("bad ideal selector: '" + selector + "'");
    const std::string kind = selector.substr(0, colon);
    const std::string body = selector.substr(colon + 1);
    out.kind = kind;

    if (kind == "tree") {
        const LabeledTree tree = tree_from_selector(body);
        TreeIdeal t = tree_ideal(tree);
        out.ideal = std::move(t.ideal);
        out.spec = std::move(t.spec);
        out.tree = tree;
        out.base = sqfree_power_ideal(tree.vertex_count - 1, 2);
        return out;
    }

    const auto args = parse_int_list(body);
    if (args.size() != 2) throw UsageError("selector '" + kind + "' expects N,D");
    const int n = args[0], d = args[1];
    if (kind == "power") {
        out.ideal = power_ideal(n, d);
    } else if (kind == "sqfree") {
        out.ideal = sqfree_power_ideal(n, d);
    } else if (kind == "box" || kind == "standard" || kind == "trivial") {
        out.ideal = kind == "box"        ? box_polarization(n, d)
                    : kind == "standard" ? standard_polarization(n, d)
                                         : trivial_polarization(n, d);
        out.nd = {{n, d}};
        out.spec = split_depolarization(n, d);
        out.base = power_ideal(n, d);
    } else {
        throw UsageError("unknown ideal kind '" + kind + "'");
    }
    return out;
}

void print_ideal_text(const MonomialIdeal& ideal, std::ostream& os) {
    os << ideal.universe.size() << " variables:";
    for (const auto& name : ideal.universe.names) os << " " << name;
    os << "\n" << ideal.generators.size() << " generators:\n";
    for (const auto& g : ideal.generators) os << "  " << g.str(ideal.universe) << "\n";
}

json monomial_to_json(const Monomial& m) {
    json out = json::array();
    for (const auto& [v, e] : m.entries()) out.push_back({v, e});
    return out;
}

json report_to_json(const RunReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back({{"name", row.name},
                        {"expected", row.expected},
                        {"computed", row.computed},
                        {"match", row.match},
                        {"millis", row.millis}});
    return json{{"command", report.command}, {"profile", report.profile}, {"seed", report.seed},
                {"jobs", report.jobs},       {"checks", rows},            {"pass", report.pass}};
}

void print_report_text(const RunReport& report, std::ostream& os) {
    os << "profile=" << report.profile << " seed=" << report.seed << " jobs=" << report.jobs << "\n";
    for (const auto& row : report.rows) {
        os << (row.match ? "  pass  " : "  FAIL  ") << row.name << "\n";
        os << "          expected: " << row.expected << "\n";
        os << "          computed: " << row.computed << "  (" << row.millis << " ms)\n";
    }
    os << (report.pass ? "PASS" : "FAIL") << " (" << report.rows.size() << " checks)\n";
}

int run_ideal(const std::string& selector, bool as_json) {
    const SelectedIdeal sel = select_ideal(selector);
    if (as_json)
        std::cout << ideal_to_json(sel.ideal).dump(2) << "\n";
    else
        print_ideal_text(sel.ideal, std::cout);
    return kExitPass;
}

int run_tangent(const std::string& selector, bool basis, bool variable_subspace,
                const std::string& formula, bool as_json) {
    const SelectedIdeal sel = select_ideal(selector);
    json out;
    out["ideal"] = selector;
    const long long dim = tangent_dimension(sel.ideal);
    out["dimension"] = dim;

    if (sel.nd && sel.spec && sel.base) {
        const auto [n, d] = *sel.nd;
        out["hilbertSchemeInterpretation"] =
            n >= 2 && d >= 2 && is_polarization(sel.ideal, *sel.base, *sel.spec).ok;
    }

    if (variable_subspace) out["variableSubspaceDim"] = variable_deformation_dim(sel.ideal);

    bool match = true;
    if (!formula.empty()) {
        long long predicted = 0;
        if (formula == "box") {
            if (!sel.nd) throw UsageError("--verify-formula box needs a box:N,D selector");
            predicted = determinantal_component_dim(sel.nd->first, sel.nd->second);
        } else if (formula == "tree") {
            if (!sel.tree) throw UsageError("--verify-formula tree needs a tree selector");
            predicted = predicted_tangent_dim(*sel.tree);
        } else {
            throw UsageError("--verify-formula takes 'box' or 'tree'");
        }
        match = dim == predicted;
        out["formulaValue"] = predicted;
        out["match"] = match;
    }

    if (basis) {
        json basis_json = json::array();
        for (const auto& v : deformation_basis(sel.ideal)) {
            json vec = json::array();
            for (const auto& pert : v.perturbations) {
                json component = json::array();
                for (const auto& [m, c] : pert)
                    component.push_back({{"monomial", monomial_to_json(m)}, {"coeff", to_string(c)}});
                vec.push_back(std::move(component));
            }
            basis_json.push_back(std::move(vec));
        }
        out["basis"] = std::move(basis_json);
    }

    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "dimension: " << dim << "\n";
        if (out.contains("variableSubspaceDim"))
            std::cout << "variable subspace: " << out["variableSubspaceDim"] << "\n";
        if (out.contains("formulaValue"))
            std::cout << "formula: " << out["formulaValue"] << "  match: " << (match ? "yes" : "no")
                      << "\n";
        if (out.contains("hilbertSchemeInterpretation"))
            std::cout << "tangent-space interpretation applies: "
                      << (out["hilbertSchemeInterpretation"].get<bool>() ? "yes" : "no") << "\n";
        if (basis) std::cout << "basis vectors: " << out["basis"].size() << "\n";
    }
    return match ? kExitPass : kExitCheckFailed;
}

int run_component(int n, int d, bool as_json) {
    const long long value = determinantal_component_dim(n, d);
    if (as_json)
        std::cout << json{{"n", n}, {"d", d}, {"dimension", value}}.dump(2) << "\n";
    else
        std::cout << value << "\n";
    return kExitPass;
}

int run_trees(int n, bool enumerate, int sample, std::uint64_t seed, bool index, bool verify,
              int jobs, bool as_json) {
    if (n < 3) throw UsageError("--n must be at least 3");
    std::vector<std::vector<int>> seqs;
    if (enumerate) {
        seqs = all_prufer_sequences(n);
    } else if (sample > 0) {
        std::mt19937_64 rng(seed);
        seqs.resize(sample);
        for (auto& seq : seqs) {
            seq.resize(n - 2);
            for (auto& s : seq) s = 1 + static_cast<int>(rng() % n);
        }
    } else {
        throw UsageError("choose --enumerate or --sample <k>");
    }

    struct Row {
        std::vector<int> prufer;
        TreeIndexReport index;
        long long predicted = 0;
        long long computed = -1;
        bool match = true;
    };
    std::vector<Row> rows(seqs.size());
    parallel_for(seqs.size(), default_jobs(jobs), [&](std::size_t i) {
        const LabeledTree tree = prufer_decode(seqs[i]);
        rows[i].prufer = seqs[i];
        rows[i].index = tree_index(tree);
        rows[i].predicted = predicted_tangent_dim(tree);
        if (verify) {
            rows[i].computed = tangent_dimension(tree_ideal(tree).ideal);
            rows[i].match = rows[i].computed == rows[i].predicted;
        }
    });

    bool all_match = true;
    if (as_json) {
        json out = json::array();
        for (const auto& row : rows) {
            json r{{"prufer", row.prufer}, {"index", row.index.index}, {"predicted", row.predicted}};
            if (index) {
                r["nu1"] = row.index.nu1;
                r["nu2"] = row.index.nu2;
                r["lineGraphDegrees"] = row.index.line_graph_degrees;
            }
            if (verify) {
                r["computed"] = row.computed;
                r["match"] = row.match;
            }
            all_match = all_match && row.match;
            out.push_back(std::move(r));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& row : rows) {
            std::cout << "(";
            for (std::size_t k = 0; k < row.prufer.size(); ++k)
                std::cout << (k ? "," : "") << row.prufer[k];
            std::cout << ")  index=" << row.index.index;
            if (index) std::cout << " nu1=" << row.index.nu1 << " nu2=" << row.index.nu2;
            std::cout << "  predicted=" << row.predicted;
            if (verify)
                std::cout << "  computed=" << row.computed << "  " << (row.match ? "ok" : "MISMATCH");
            std::cout << "\n";
            all_match = all_match && row.match;
        }
    }
    return all_match ? kExitPass : kExitCheckFailed;
}

int run_groebner(int n, int d, int max_degree, bool as_json) {
    const auto report = verify_initial_ideal(n, d, max_degree < 0 ? d + 3 : max_degree);
    if (as_json) {
        json degrees = json::array();
        for (const auto& deg : report.degrees)
            degrees.push_back({{"degree", deg.degree},
                               {"idealRank", deg.computed},
                               {"expected", deg.expected},
                               {"match", deg.match}});
        std::cout << json{{"n", n},
                          {"d", d},
                          {"leadingTermsMatch", report.leading_terms_match},
                          {"degrees", degrees},
                          {"pass", report.ok}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "leading terms match: " << (report.leading_terms_match ? "yes" : "no") << "\n";
        for (const auto& deg : report.degrees)
            std::cout << "  degree " << deg.degree << ": rank " << deg.computed << " expected "
                      << deg.expected << (deg.match ? "" : "  MISMATCH") << "\n";
        std::cout << (report.ok ? "PASS" : "FAIL") << "\n";
    }
    return report.ok ? kExitPass : kExitCheckFailed;
}

int run_flat(int d, const std::string& t_csv, int max_degree, bool as_json) {
    std::array<Rational, 3> t{Rational(0), Rational(0), Rational(0)};
    std::stringstream ss(t_csv);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 3) throw UsageError("--t takes exactly three rationals");
        try {
            t[i++] = parse_rational(item);
        } catch (const std::exception&) {
            throw UsageError("not a rational: '" + item + "'");
        }
    }
    if (i != 3) throw UsageError("--t takes exactly three rationals");

    const auto report = verify_flat_family(d, t, max_degree);
    if (as_json) {
        json degrees = json::array();
        for (const auto& deg : report.degrees)
            degrees.push_back({{"degree", deg.degree},
                               {"deformedRank", deg.computed},
                               {"referenceRank", deg.expected},
                               {"match", deg.match}});
        std::cout << json{{"d", d},
                          {"t", {to_string(t[0]), to_string(t[1]), to_string(t[2])}},
                          {"degrees", degrees},
                          {"pass", report.ok}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& deg : report.degrees)
            std::cout << "degree " << deg.degree << ": " << deg.computed << " vs " << deg.expected
                      << (deg.match ? "" : "  MISMATCH") << "\n";
        std::cout << (report.ok ? "PASS" : "FAIL") << "\n";
    }
    return report.ok ? kExitPass : kExitCheckFailed;
}

int run_verify_all(const std::string& profile, std::uint64_t seed, int jobs, bool exhaustive7,
                   bool as_json, const std::string& command) {
    if (profile != "quick" && profile != "full") throw UsageError("--profile takes quick or full");
    RunReport report =
        verify_all(profile == "full" ? Profile::Full : Profile::Quick, seed, jobs, exhaustive7);
    report.command = command;
    if (as_json)
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        print_report_text(report, std::cout);
    return report.pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for split power ideals and their deformation spaces"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    std::uint64_t seed = 0;
    int jobs = 0;
    app.add_flag("--json", as_json, "emit JSON instead of text");
    app.add_option("--seed", seed, "seed for sampled checks");
    app.add_option("--jobs", jobs, "worker threads (default: POLTAN_JOBS or hardware)");

    auto* ideal_cmd = app.add_subcommand("ideal", "construct an ideal and print it");
    std::string ideal_kind = "box";
    int n = 2, d = 2;
    std::string prufer;
    ideal_cmd->add_option("--kind", ideal_kind, "power|sqfree|standard|box|trivial|tree");
    ideal_cmd->add_option("--n", n, "first parameter");
    ideal_cmd->add_option("--d", d, "second parameter");
    ideal_cmd->add_option("--prufer", prufer, "Pruefer sequence for --kind tree");

    auto* tangent_cmd = app.add_subcommand("tangent", "deformation-space dimension of an ideal");
    std::string selector;
    bool basis = false, variable_subspace = false;
    std::string formula;
    tangent_cmd->add_option("ideal", selector, "e.g. box:3,2 | tree:path:7 | @file.json")->required();
    tangent_cmd->add_flag("--basis", basis, "emit a basis of the deformation space");
    tangent_cmd->add_flag("--variable-subspace", variable_subspace,
                          "also compute the variable-substitution subspace dimension");
    tangent_cmd->add_option("--verify-formula", formula, "compare against a formula: box|tree");

    auto* component_cmd = app.add_subcommand("component", "determinantal component dimension");
    int cn = 2, cd = 2;
    component_cmd->add_option("--n", cn)->required();
    component_cmd->add_option("--d", cd)->required();

    auto* trees_cmd = app.add_subcommand("trees", "labeled spanning trees and their predictions");
    int tn = 5;
    bool enumerate = false, tindex = false, tverify = false;
    int sample = 0;
    trees_cmd->add_option("--n", tn, "number of vertices")->required();
    trees_cmd->add_flag("--enumerate", enumerate, "all n^(n-2) labeled trees");
    trees_cmd->add_flag("--index", tindex, "include line-graph degree details");
    trees_cmd->add_flag("--verify", tverify, "solve for the dimension and compare");
    trees_cmd->add_option("--sample", sample, "number of seeded random trees");

    auto* groebner_cmd = app.add_subcommand("groebner-check", "initial-ideal certification");
    int gn = 2, gd = 2, gmax = -1;
    groebner_cmd->add_option("--n", gn)->required();
    groebner_cmd->add_option("--d", gd)->required();
    groebner_cmd->add_option("--max-degree", gmax, "default d+3");

    auto* flat_cmd = app.add_subcommand("flat-check", "graded-rank flatness evidence");
    int fd = 2, fmax = 6;
    std::string t_csv = "0,0,0";
    flat_cmd->add_option("--d", fd)->required();
    flat_cmd->add_option("--t", t_csv, "three rationals, e.g. 1,1/2,-2")->required();
    flat_cmd->add_option("--max-degree", fmax);

    auto* verify_cmd = app.add_subcommand("verify-all", "run the whole verification suite");
    std::string profile = "quick";
    bool exhaustive7 = false;
    verify_cmd->add_option("--profile", profile, "quick|full");
    verify_cmd->add_flag("--exhaustive-7", exhaustive7, "sweep all 16807 trees on 7 vertices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*ideal_cmd) {
            std::string sel = ideal_kind == "tree" ? "tree:" + prufer
                                                   : ideal_kind + ":" + std::to_string(n) + "," +
                                                         std::to_string(d);
            return run_ideal(sel, as_json);
        }
        if (*tangent_cmd) return run_tangent(selector, basis, variable_subspace, formula, as_json);
        if (*component_cmd) return run_component(cn, cd, as_json);
        if (*trees_cmd) return run_trees(tn, enumerate, sample, seed, tindex, tverify, jobs, as_json);
        if (*groebner_cmd) return run_groebner(gn, gd, gmax, as_json);
        if (*flat_cmd) return run_flat(fd, t_csv, fmax, as_json);
        if (*verify_cmd) {
            std::string command = "poltan verify-all --profile " + profile;
            return run_verify_all(profile, seed, jobs, exhaustive7, as_json, command);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
