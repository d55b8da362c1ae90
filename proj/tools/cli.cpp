// Command-line front end: parse matroid descriptions, dispatch the
// verification routines, emit JSON/text reports and DOT exports.
//
// Exit codes: 0 all requested checks passed, 1 a check failed (witness in
// the report), 2 a result was Unknown or a budget was exceeded, 64 usage
// or input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cobase/bcgraph.hpp"
#include "cobase/json_io.hpp"
#include "cobase/lpm.hpp"
#include "cobase/polytope.hpp"
#include "cobase/r10.hpp"
#include "cobase/wheels.hpp"
#include "json.hpp"

using namespace cobase;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

struct Output {
    std::string format = "json";
    std::string path;

    void emit(const json& j, const std::string& text_form) const {
        std::string payload = format == "json" ? j.dump(2) + "\n" : text_form;
        if (path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream out(path);
            out << payload;
        }
    }
};

std::string load_matroid_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw std::invalid_argument("cannot open matroid file " + arg.substr(1));
        return std::string(std::istreambuf_iterator<char>(in), {});
    }
    return arg;
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Holds: return kExitPass;
        case Verdict::Fails: return kExitFail;
        case Verdict::Unknown: return kExitUnknown;
    }
    return kExitUsage;
}

int combine_exit(int a, int b) {
    if (a == kExitFail || b == kExitFail) return kExitFail;
    if (a == kExitUnknown || b == kExitUnknown) return kExitUnknown;
    return std::max(a, b);
}

std::string report_text(const PropertyReport& rep) {
    std::string line = property_name(rep.property) + ": " + verdict_name(rep.verdict);
    if (rep.witness.contains("diameter"))
        line += " (diameter " + rep.witness.at("diameter").dump() + ")";
    if (rep.witness.contains("pair"))
        line += " witness pair " + rep.witness.at("pair").dump();
    return line + "\n";
}

PropertyReport run_property(const std::string& name, const Matroid& m, const BCGraph& g,
                            const HamCheckOptions& ham_opt) {
    if (name == "con") return check_con(g);
    if (name == "circ") return check_circ(m, g);
    if (name == "scirc") return check_scirc(m, g);
    if (name == "diam") return check_diam(m, g);
    if (name == "poly") return check_poly(g);
    if (name == "ham") return check_ham(g, ham_opt);
    if (name == "mat") {
        BaseFamily fam{g.ground_size, m.rank(), g.vertices};
        return check_mat(fam);
    }
    throw CLI::ValidationError("--property", "unknown property '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact base-cobase graph toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    std::uint64_t budget = kDefaultEnumBudget;
    std::uint64_t node_budget = 10'000'000;
    std::uint32_t seed = 0;
    int threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--budget", budget, "subset enumeration budget")
        ->envname("COBASE_BUDGET")
        ->check(CLI::PositiveNumber);
    app.add_option("--node-budget", node_budget, "search node budget")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "search seed (default 0, deterministic)");
    app.add_option("--threads", threads, "worker threads for all-pairs sweeps")
        ->check(CLI::PositiveNumber);

    Output output;
    app.add_option("--format", output.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", output.path, "write the report to a file");

    // check
    auto* check = app.add_subcommand("check", "evaluate properties of a matroid's graph");
    std::string check_matroid;
    std::vector<std::string> check_props;
    std::string check_graph = "bc";
    std::size_t ham_cap = 100;
    check->add_option("--matroid", check_matroid, "matroid JSON (inline or @file)")->required();
    check->add_option("--property", check_props,
                      "properties: con circ scirc diam poly ham mat (default: diam)");
    check->add_option("--graph", check_graph, "graph kind")->check(CLI::IsMember({"bc", "base"}));
    check->add_option("--cap", ham_cap, "all-pairs cap for ham search");

    // verify
    auto* verify = app.add_subcommand("verify", "run a structural verification");
    verify->require_subcommand(1);
    std::string ww_kind = "wheel";
    int ww_n = 4;
    auto* v_structure = verify->add_subcommand("structure", "stitched model vs computed graph");
    v_structure->add_option("--kind", ww_kind)->check(CLI::IsMember({"wheel", "whirl"}));
    v_structure->add_option("--n", ww_n)->required();
    auto* v_lower = verify->add_subcommand("lower-bound", "distance of the four-block pair");
    v_lower->add_option("--kind", ww_kind)->check(CLI::IsMember({"wheel", "whirl"}));
    v_lower->add_option("--n", ww_n)->required();
    auto* v_necklace = verify->add_subcommand("necklace", "whirl/necklace base families");
    v_necklace->add_option("--n", ww_n)->required();
    std::string verify_matroid;
    auto* v_codim = verify->add_subcommand("codim", "tight set / dimension / split equivalence");
    v_codim->add_option("--matroid", verify_matroid)->required();
    auto* v_spex = verify->add_subcommand("spex", "factor the base-cobases through 2-(co)circuits");
    v_spex->add_option("--matroid", verify_matroid)->required();

    // ham
    auto* ham = app.add_subcommand("ham", "construct a verified Hamiltonian path");
    std::string ham_kind = "whirl", ham_from, ham_to;
    int ham_n = 4;
    ham->add_option("--kind", ham_kind)->check(CLI::IsMember({"wheel", "whirl"}));
    ham->add_option("--n", ham_n)->required();
    ham->add_option("--from", ham_from, "model vertex, e.g. +0110")->required();
    ham->add_option("--to", ham_to)->required();

    // r10
    auto* r10 = app.add_subcommand("r10", "checks specific to the 10-element regular matroid");
    bool r10_desc = false, r10_lace = false, r10_long = false;
    r10->add_flag("--verify-description", r10_desc, "compare against the class description");
    r10->add_flag("--laceable", r10_lace, "Hamiltonian laceability by orbit representatives");
    r10->add_flag("--long", r10_long, "sweep all 1296 cross pairs");

    // export-dot
    auto* dot = app.add_subcommand("export-dot", "DOT export of a graph or stitched model");
    std::string dot_matroid, dot_model, dot_graph = "bc";
    dot->add_option("--matroid", dot_matroid, "matroid JSON (inline or @file)");
    dot->add_option("--graph", dot_graph)->check(CLI::IsMember({"bc", "base"}));
    dot->add_option("--model", dot_model)->check(CLI::IsMember({"wheel", "whirl"}));
    dot->add_option("--n", ww_n);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run properties over a family range");
    std::string sweep_family = "wheel";
    int sweep_from = 3, sweep_to = 6;
    std::vector<std::string> sweep_props;
    sweep->add_option("--family", sweep_family)->check(CLI::IsMember({"wheel", "whirl"}));
    sweep->add_option("--n-from", sweep_from)->required();
    sweep->add_option("--n-to", sweep_to)->required();
    sweep->add_option("--property", sweep_props, "properties (default: diam)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    HamCheckOptions ham_opt;
    ham_opt.all_pairs_cap = ham_cap;
    ham_opt.node_budget = node_budget;
    ham_opt.seed = seed;
    ham_opt.threads = threads;
    SearchOptions search_opt{node_budget, seed};

    try {
        if (*check) {
            Matroid m = matroid_from_string(load_matroid_arg(check_matroid));
            BCGraph g = check_graph == "bc" ? build_bc_graph(m, budget)
                                            : build_base_graph(m, budget);
            if (check_props.empty()) check_props = {"diam"};
            json reports = json::array();
            std::string text;
            int rc = kExitPass;
            for (const auto& p : check_props) {
                PropertyReport rep = run_property(p, m, g, ham_opt);
                reports.push_back(report_to_json(rep));
                text += report_text(rep);
                rc = combine_exit(rc, verdict_exit(rep.verdict));
            }
            output.emit(reports, text);
            return rc;
        }
        if (*v_structure) {
            bool ok = verify_structure(ww_n, ww_kind == "wheel" ? WWKind::Wheel : WWKind::Whirl,
                                       budget);
            output.emit(json{{"check", "structure"}, {"kind", ww_kind}, {"n", ww_n}, {"pass", ok}},
                        std::string("structure ") + (ok ? "pass" : "FAIL") + "\n");
            return ok ? kExitPass : kExitFail;
        }
        if (*v_lower) {
            auto rep = verify_lower_bound(
                ww_n, ww_kind == "wheel" ? WWKind::Wheel : WWKind::Whirl, budget);
            output.emit(json{{"check", "lower-bound"},
                             {"kind", ww_kind},
                             {"n", ww_n},
                             {"distance", rep.distance},
                             {"expected", rep.expected},
                             {"exchange_lower_bound", rep.exchange_lower_bound},
                             {"pass", rep.matches}},
                        "distance " + std::to_string(rep.distance) + " expected " +
                            std::to_string(rep.expected) + (rep.matches ? " pass" : " FAIL") +
                            "\n");
            return rep.matches ? kExitPass : kExitFail;
        }
        if (*v_necklace) {
            bool ok = verify_necklace_iso(ww_n, budget);
            output.emit(json{{"check", "necklace"}, {"n", ww_n}, {"pass", ok}},
                        std::string("necklace ") + (ok ? "pass" : "FAIL") + "\n");
            return ok ? kExitPass : kExitFail;
        }
        if (*v_codim) {
            Matroid m = matroid_from_string(load_matroid_arg(verify_matroid));
            auto rep = verify_codim_equivalence(m);
            json out{{"check", "codim"},
                     {"tight_exists", rep.tight_exists},
                     {"dim", rep.dim},
                     {"dim_deficient", rep.dim_deficient},
                     {"flacet_split_exists", rep.flacet_split_exists},
                     {"agree", rep.agree}};
            if (rep.tight_exists)
                out["tight_witness"] = mask_to_string(rep.tight_witness, m.size());
            if (rep.flacet_split_exists)
                out["flacet_witness"] = mask_to_string(rep.flacet_witness, m.size());
            output.emit(out, std::string("codim agree=") + (rep.agree ? "yes" : "NO") + "\n");
            return rep.agree ? kExitPass : kExitFail;
        }
        if (*v_spex) {
            Matroid m = matroid_from_string(load_matroid_arg(verify_matroid));
            auto rep = verify_spex_preservation(m, budget);
            output.emit(json{{"check", "spex"},
                             {"block", rep.block},
                             {"vacuous", rep.vacuous},
                             {"peel_agrees", rep.peel_agrees},
                             {"mat_holds", rep.mat_holds},
                             {"peeled_steps", rep.peeled_steps}},
                        std::string("spex ") +
                            (rep.vacuous ? "vacuous"
                                         : (rep.peel_agrees && rep.mat_holds ? "pass" : "FAIL")) +
                            "\n");
            if (rep.vacuous) return kExitUnknown;
            return rep.peel_agrees && rep.mat_holds ? kExitPass : kExitFail;
        }
        if (*ham) {
            WWKind kind = ham_kind == "wheel" ? WWKind::Wheel : WWKind::Whirl;
            ModelVertex from = model_vertex_from_string(ham_from);
            ModelVertex to = model_vertex_from_string(ham_to);
            HamCertificate cert = kind == WWKind::Wheel
                                      ? ham_path_wheel(ham_n, from, to, search_opt)
                                      : ham_path_whirl(ham_n, from, to, search_opt);
            output.emit(certificate_to_json(ham_n, kind, cert),
                        "case " + cert.case_label + ", " +
                            std::to_string(cert.cover.paths[0].size()) + " vertices\n");
            return kExitPass;
        }
        if (*r10) {
            if (!r10_desc && !r10_lace)
                throw CLI::ValidationError("r10", "choose --verify-description or --laceable");
            int rc = kExitPass;
            json out = json::object();
            std::string text;
            if (r10_desc) {
                auto rep = verify_r10_description();
                json classes = json::array();
                for (Mask b : base_cobases(r10_matroid()).masks)
                    classes.push_back(classify_bc(b).to_string());
                out["description"] = json{{"s2_classes", rep.s2_count},
                                          {"d5_classes", rep.d5_count},
                                          {"edges_match", rep.edges_match},
                                          {"bipartition", {rep.part_x, rep.part_y}},
                                          {"ham_fails", rep.ham_fails},
                                          {"classes", classes},
                                          {"pass", rep.ok()}};
                text += std::string("description ") + (rep.ok() ? "pass" : "FAIL") + "\n";
                rc = combine_exit(rc, rep.ok() ? kExitPass : kExitFail);
            }
            if (r10_lace) {
                auto rep = verify_laceability(r10_long, search_opt, threads);
                out["laceability"] = json{{"verified", rep.verified},
                                          {"full_sweep", rep.full_sweep},
                                          {"orbits", rep.orbit_count},
                                          {"pairs_checked", rep.pairs_checked},
                                          {"pairs_total", rep.pairs_total},
                                          {"nodes_expanded", rep.nodes}};
                text += std::string("laceability ") + (rep.verified ? "verified" : "UNKNOWN") +
                        " (" + std::to_string(rep.pairs_checked) + " pairs)\n";
                rc = combine_exit(rc, rep.verified ? kExitPass : kExitUnknown);
            }
            output.emit(out, text);
            return rc;
        }
        if (*dot) {
            std::string payload;
            if (!dot_model.empty()) {
                StitchedModel model = build_model(
                    ww_n, dot_model == "wheel" ? WWKind::Wheel : WWKind::Whirl);
                payload = model_to_dot(model);
            } else if (!dot_matroid.empty()) {
                Matroid m = matroid_from_string(load_matroid_arg(dot_matroid));
                BCGraph g = dot_graph == "bc" ? build_bc_graph(m, budget)
                                              : build_base_graph(m, budget);
                payload = graph_to_dot(g);
            } else {
                throw CLI::ValidationError("export-dot", "need --matroid or --model");
            }
            if (output.path.empty()) {
                std::cout << payload;
            } else {
                std::ofstream f(output.path);
                f << payload;
            }
            return kExitPass;
        }
        if (*sweep) {
            if (sweep_props.empty()) sweep_props = {"diam"};
            json rows = json::array();
            std::string text;
            int rc = kExitPass;
            for (int n = sweep_from; n <= sweep_to; ++n) {
                Matroid m = sweep_family == "wheel" ? wheel_matroid(n) : whirl_matroid(n);
                BCGraph g = build_bc_graph(m, budget);
                json row{{"n", n}, {"vertices", g.num_vertices()}};
                text += sweep_family + " n=" + std::to_string(n) + ": ";
                for (const auto& p : sweep_props) {
                    PropertyReport rep = run_property(p, m, g, ham_opt);
                    row[property_name(rep.property)] = report_to_json(rep);
                    text += property_name(rep.property) + "=" + verdict_name(rep.verdict) + " ";
                    rc = combine_exit(rc, verdict_exit(rep.verdict));
                }
                rows.push_back(row);
                text += "\n";
            }
            output.emit(rows, text);
            return rc;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "matroid description error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetError& e) {
        std::cerr << e.what() << "\n";
        return kExitUnknown;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
