// Command-line front end: generate fixtures, run validators and detectors,
// drive the extraction procedures and the treewidth solver. Exit codes:
//   0 ok / property holds     1 property refuted
//   2 indeterminate (budget)  3 usage, parse or precondition error
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "occult/asterism.hpp"
#include "occult/detectors.hpp"
#include "occult/extraction.hpp"
#include "occult/generators.hpp"
#include "occult/graph.hpp"
#include "occult/io.hpp"
#include "occult/treewidth.hpp"

namespace {

using occult::json;

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kIndeterminate = 2;
constexpr int kUsage = 3;

std::uint64_t parse_seed(const std::string& text) {
    return std::stoull(text, nullptr, 0);  // accepts decimal and 0x... hex
}

void emit(const json& report) { std::cout << occult::dump_json(report); }

int report_check(const occult::CheckResult& result, const std::string& name) {
    json j;
    j["check"] = name;
    j["holds"] = !result.has_value();
    if (result) {
        j["violation"] = {{"clause", result->clause}, {"detail", result->detail}};
        emit(j);
        std::cerr << name << ": violated (" << result->clause << ")\n";
        return kRefuted;
    }
    emit(j);
    std::cerr << name << ": ok\n";
    return kOk;
}

int report_bool(bool holds, const std::string& name, const std::string& detail = "") {
    json j;
    j["check"] = name;
    j["holds"] = holds;
    if (!detail.empty()) j["detail"] = detail;
    emit(j);
    std::cerr << name << ": " << (holds ? "ok" : "violated") << "\n";
    return holds ? kOk : kRefuted;
}

struct GenerateArgs {
    std::string family;
    std::string out;
    std::string seed_text = "0";
    int s = 1, o = 1, t = 1, a = 1, b = 1, g = 1, l = 1, d = 0, min_gap = 2;
    std::vector<int> gaps{2};
    std::vector<int> lengths{3};
    std::vector<int> subdivision{1};
    std::vector<std::string> extras;  // "i:piece:count"
};

int run_generate(const GenerateArgs& args) {
    std::uint64_t seed = parse_seed(args.seed_text);
    occult::Graph graph;
    json witness;
    std::string witness_kind;
    if (args.family == "occultation") {
        auto gen = occult::occultation(args.s);
        graph = gen.graph;
        witness = occult::asterism_to_json(gen.asterism);
        witness_kind = "asterism";
    } else if (args.family == "full-occultation") {
        occult::FullOccultationParams params;
        params.s = args.s;
        params.o = args.o;
        params.subdivision = args.subdivision;
        params.min_gap = args.min_gap;
        params.seed = seed;
        for (const std::string& spec : args.extras) {
            auto c1 = spec.find(':');
            auto c2 = spec.find(':', c1 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos)
                throw occult::PreconditionError("extra", "expected i:piece:count");
            params.extra[{std::stoi(spec.substr(0, c1)),
                          std::stoi(spec.substr(c1 + 1, c2 - c1 - 1))}] =
                std::stoi(spec.substr(c2 + 1));
        }
        auto gen = occult::full_occultation(params);
        graph = gen.graph;
        witness = occult::asterism_to_json(gen.asterism);
        witness_kind = "asterism";
    } else if (args.family == "ample-interrupted") {
        auto gen = occult::ample_interrupted_asterism(args.s, args.d, seed);
        graph = gen.graph;
        witness = occult::asterism_to_json(gen.asterism);
        witness_kind = "asterism";
    } else if (args.family == "syzygy") {
        auto gen = occult::syzygy(args.a, args.gaps, seed);
        graph = gen.graph;
        witness = occult::asterism_to_json(gen.asterism);
        witness_kind = "asterism";
    } else if (args.family == "gemini") {
        auto gen = occult::gemini(args.g, args.o, seed);
        graph = gen.graph;
        witness = occult::gemini_to_json(gen.gemini);
        witness_kind = "gemini";
    } else if (args.family == "constellation") {
        auto gen = occult::constellation(args.s, args.l, args.lengths, seed);
        graph = gen.graph;
        witness = occult::constellation_to_json(gen.constellation);
        witness_kind = "constellation";
    } else if (args.family == "wall") {
        graph = occult::wall(args.t);
    } else if (args.family == "complete") {
        graph = occult::complete(args.t);
    } else if (args.family == "complete-bipartite") {
        graph = occult::complete_bipartite(args.a, args.b);
    } else if (args.family == "sample-asterism") {
        auto gen = occult::sample_asterism();
        graph = gen.graph;
        witness = occult::asterism_to_json(gen.asterism);
        witness_kind = "asterism";
    } else {
        throw occult::PreconditionError("family", "unknown family " + args.family);
    }

    json report;
    report["family"] = args.family;
    report["n"] = graph.vertex_count();
    report["m"] = graph.edge_count();
    std::string graph_path = args.out + ".graph.json";
    occult::write_text_file(graph_path, occult::dump_json(occult::graph_to_json(graph)));
    report["graph"] = graph_path;
    occult::write_text_file(args.out + ".dot", occult::graph_to_dot(graph));
    if (!witness.is_null()) {
        std::string witness_path = args.out + ".witness.json";
        occult::write_text_file(witness_path, occult::dump_json(witness));
        report["witness"] = witness_path;
        report["witness_kind"] = witness_kind;
    }
    emit(report);
    std::cerr << args.family << ": " << graph.vertex_count() << " vertices, "
              << graph.edge_count() << " edges -> " << graph_path << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"occult: occultations, asterisms and treewidth obstructions"};
    app.set_config("--config", "", "read options from a TOML-style config file");
    app.require_subcommand(1);

    // generate ------------------------------------------------------------
    GenerateArgs gen;
    auto* cmd_gen = app.add_subcommand("generate", "generate a structure family");
    cmd_gen->configurable();
    cmd_gen->add_option("family", gen.family,
                        "occultation | full-occultation | ample-interrupted | syzygy | "
                        "gemini | constellation | wall | complete | complete-bipartite | "
                        "sample-asterism")
        ->required();
    cmd_gen->add_option("--out", gen.out, "output path prefix")->required();
    cmd_gen->add_option("--seed", gen.seed_text, "seed (decimal or 0x-hex)");
    cmd_gen->add_option("--s", gen.s);
    cmd_gen->add_option("--o", gen.o);
    cmd_gen->add_option("--t", gen.t);
    cmd_gen->add_option("--a", gen.a);
    cmd_gen->add_option("--b", gen.b);
    cmd_gen->add_option("--g", gen.g);
    cmd_gen->add_option("--l", gen.l);
    cmd_gen->add_option("--d", gen.d);
    cmd_gen->add_option("--min-gap", gen.min_gap);
    cmd_gen->add_option("--gaps", gen.gaps)->delimiter(',');
    cmd_gen->add_option("--lengths", gen.lengths)->delimiter(',');
    cmd_gen->add_option("--subdivision", gen.subdivision)->delimiter(',');
    cmd_gen->add_option("--extra", gen.extras, "extra edges as i:piece:count");

    // check ----------------------------------------------------------------
    std::string check_name, check_graph, check_witness;
    int check_o = 1, check_d = 1, check_t = 3, check_c = 2, check_k = 2;
    bool check_plain = false;
    std::uint64_t check_budget = 1'000'000;
    std::vector<int> check_set;
    auto* cmd_check = app.add_subcommand("check", "validate a property or witness");
    cmd_check->configurable();
    cmd_check->add_option("name", check_name,
                          "asterism | full-occultation | ample | meager | interrupted | "
                          "invaded | syzygy | gemini | constellation | clique | biclique | "
                          "perforated | stable-set | patch | match | strong-block | "
                          "cycle-packing | tree-decomposition")
        ->required();
    cmd_check->add_option("--graph", check_graph)->required();
    cmd_check->add_option("--witness", check_witness);
    cmd_check->add_option("--o", check_o);
    cmd_check->add_option("--d", check_d);
    cmd_check->add_option("--t", check_t);
    cmd_check->add_option("--c", check_c);
    cmd_check->add_option("--k", check_k);
    cmd_check->add_option("--set", check_set)->delimiter(',');
    cmd_check->add_flag("--plain", check_plain);
    cmd_check->add_option("--budget", check_budget)->envname("OCCULT_BUDGET");

    // extract ----------------------------------------------------------------
    std::string ex_name, ex_graph, ex_witness, ex_out;
    int ex_a = 2, ex_b = 2, ex_l = 2, ex_s = 1, ex_d = 1, ex_c = 1, ex_o = 1;
    auto* cmd_extract = app.add_subcommand("extract", "run an extraction procedure");
    cmd_extract->configurable();
    cmd_extract->add_option("procedure", ex_name,
                            "occultation | syzygy-or-constellation | gemini-cycles | "
                            "interval-split | matching-or-cover")
        ->required();
    cmd_extract->add_option("--graph", ex_graph);
    cmd_extract->add_option("--witness", ex_witness);
    cmd_extract->add_option("--out", ex_out);
    cmd_extract->add_option("--a", ex_a);
    cmd_extract->add_option("--b", ex_b);
    cmd_extract->add_option("--l", ex_l);
    cmd_extract->add_option("--s", ex_s);
    cmd_extract->add_option("--d", ex_d);
    cmd_extract->add_option("--c", ex_c);
    cmd_extract->add_option("--o", ex_o);

    // treewidth -----------------------------------------------------------------
    std::string tw_graph, tw_decomposition, tw_verify;
    std::uint64_t tw_nodes = 20'000'000;
    int tw_threads = 1;
    auto* cmd_tw = app.add_subcommand("treewidth", "exact treewidth and decompositions");
    cmd_tw->configurable();
    cmd_tw->add_option("--graph", tw_graph)->required();
    cmd_tw->add_option("--out-decomposition", tw_decomposition,
                       "write the decomposition (.json or PACE text)");
    cmd_tw->add_option("--verify", tw_verify, "verify this decomposition instead");
    cmd_tw->add_option("--node-limit", tw_nodes);
    cmd_tw->add_option("--threads", tw_threads,
                       "accepted for interface compatibility; the solver is "
                       "deterministic and reports the same width for every value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (cmd_gen->parsed()) return run_generate(gen);

        if (cmd_check->parsed()) {
            occult::Graph g = occult::graph_from_json(occult::read_json_file(check_graph));
            auto witness_json = [&]() { return occult::read_json_file(check_witness); };
            if (check_name == "asterism")
                return report_check(
                    occult::check_asterism(g, occult::asterism_from_json(witness_json())),
                    check_name);
            if (check_name == "full-occultation")
                return report_bool(
                    occult::is_full_occultation(
                        g, occult::asterism_from_json(witness_json()), check_o),
                    check_name);
            if (check_name == "ample")
                return report_bool(
                    occult::is_d_ample(g, occult::asterism_from_json(witness_json()), check_d),
                    check_name);
            if (check_name == "meager")
                return report_bool(
                    occult::is_d_meager(g, occult::asterism_from_json(witness_json()),
                                        check_d),
                    check_name);
            if (check_name == "interrupted")
                return report_bool(
                    occult::is_interrupted(g, occult::asterism_from_json(witness_json())),
                    check_name);
            if (check_name == "invaded")
                return report_bool(
                    occult::is_o_invaded(g, occult::asterism_from_json(witness_json()),
                                         check_o),
                    check_name);
            if (check_name == "syzygy")
                return report_bool(
                    occult::is_syzygy(g, occult::asterism_from_json(witness_json())),
                    check_name);
            if (check_name == "gemini")
                return report_check(
                    occult::validate_gemini(g, occult::gemini_from_json(witness_json())),
                    check_name);
            if (check_name == "constellation")
                return report_check(
                    occult::validate_constellation(
                        g, occult::constellation_from_json(witness_json()), check_plain),
                    check_name);
            if (check_name == "clique") {
                auto found = occult::contains_clique(g, check_t);
                json j;
                j["check"] = check_name;
                j["holds"] = found.has_value();
                if (found) j["witness"] = *found;
                emit(j);
                return found ? kOk : kRefuted;
            }
            if (check_name == "biclique") {
                auto found = occult::contains_biclique(g, check_t);
                json j;
                j["check"] = check_name;
                j["holds"] = found.has_value();
                if (found) j["witness"] = {{"left", found->first}, {"right", found->second}};
                emit(j);
                return found ? kOk : kRefuted;
            }
            if (check_name == "perforated") {
                auto verdict = occult::is_perforated(g, check_c, check_o, check_budget);
                emit(occult::perforation_verdict_to_json(verdict));
                switch (verdict.kind) {
                    case occult::PerforationVerdict::Kind::Perforated:
                        std::cerr << "perforated\n";
                        return kOk;
                    case occult::PerforationVerdict::Kind::NotPerforated:
                        std::cerr << "not perforated: " << verdict.witness.size()
                                  << "-cycle witness\n";
                        return kRefuted;
                    default:
                        std::cerr << "budget exhausted\n";
                        return kIndeterminate;
                }
            }
            if (check_name == "stable-set")
                return report_bool(occult::is_d_stable(g, check_set, check_d), check_name);
            if (check_name == "patch")
                return report_check(
                    occult::validate_patch(g, check_set,
                                           occult::patch_from_json(witness_json()), check_d,
                                           check_plain),
                    check_name);
            if (check_name == "match")
                return report_check(
                    occult::validate_match(g, check_set,
                                           occult::match_from_json(witness_json()), check_d,
                                           check_plain),
                    check_name);
            if (check_name == "strong-block")
                return report_check(
                    occult::verify_strong_block(
                        g, check_k, occult::strong_block_witness_from_json(witness_json())),
                    check_name);
            if (check_name == "cycle-packing")
                return report_check(
                    occult::check_cycle_packing(
                        g, occult::cycles_from_json(witness_json()), check_c, check_o),
                    check_name);
            if (check_name == "tree-decomposition") {
                auto td = occult::decomposition_from_json(witness_json());
                auto res = occult::verify_decomposition(g, td);
                json j;
                j["check"] = check_name;
                if (std::holds_alternative<int>(res)) {
                    j["holds"] = true;
                    j["width"] = std::get<int>(res);
                    emit(j);
                    return kOk;
                }
                const auto& bad = std::get<occult::Violation>(res);
                j["holds"] = false;
                j["violation"] = {{"clause", bad.clause}, {"detail", bad.detail}};
                emit(j);
                return kRefuted;
            }
            throw occult::PreconditionError("check", "unknown check " + check_name);
        }

        if (cmd_extract->parsed()) {
            json result;
            if (ex_name == "occultation") {
                occult::Graph g = occult::graph_from_json(occult::read_json_file(ex_graph));
                auto a = occult::asterism_from_json(occult::read_json_file(ex_witness));
                auto outcome = occult::interrupted_to_occultation(g, a, ex_c, ex_o, ex_s);
                result = occult::extraction_outcome_to_json(outcome);
            } else if (ex_name == "syzygy-or-constellation") {
                occult::Graph g = occult::graph_from_json(occult::read_json_file(ex_graph));
                auto a = occult::asterism_from_json(occult::read_json_file(ex_witness));
                auto outcome = occult::asterism_to_syzygy_or_constellation(g, a, ex_a, ex_l,
                                                                           ex_s, ex_d);
                result = occult::extraction_outcome_to_json(outcome);
            } else if (ex_name == "gemini-cycles") {
                occult::Graph g = occult::graph_from_json(occult::read_json_file(ex_graph));
                auto gem = occult::gemini_from_json(occult::read_json_file(ex_witness));
                auto cycles = occult::gemini_to_cycles(g, gem, ex_c, ex_o);
                result = occult::cycles_to_json(cycles);
                result["outcome"] = "cycle-packing";
            } else if (ex_name == "interval-split") {
                auto fam = occult::intervals_from_json(occult::read_json_file(ex_witness));
                auto split = occult::interval_split(fam, ex_a, ex_b);
                result["outcome"] = split.kind == occult::IntervalSplit::Kind::StableSet
                                        ? "stable-set"
                                        : split.kind == occult::IntervalSplit::Kind::Clique
                                              ? "clique"
                                              : "insufficient";
                result["ids"] = split.ids;
                if (split.point) result["point"] = *split.point;
            } else if (ex_name == "matching-or-cover") {
                occult::Graph g = occult::graph_from_json(occult::read_json_file(ex_graph));
                auto mc = occult::matching_or_cover(g, ex_c);
                result["outcome"] = mc.is_matching ? "matching" : "vertex-cover";
                if (mc.is_matching) {
                    json edges = json::array();
                    for (const auto& [u, v] : mc.matching) edges.push_back({u, v});
                    result["matching"] = std::move(edges);
                } else {
                    result["cover"] = mc.cover;
                }
            } else {
                throw occult::PreconditionError("extract", "unknown procedure " + ex_name);
            }
            if (!ex_out.empty()) occult::write_text_file(ex_out, occult::dump_json(result));
            emit(result);
            bool insufficient = result.contains("outcome") &&
                                result["outcome"].get<std::string>() == "insufficient";
            std::cerr << ex_name << ": " << result.value("outcome", "done") << "\n";
            return insufficient ? kIndeterminate : kOk;
        }

        if (cmd_tw->parsed()) {
            occult::Graph g = occult::graph_from_json(occult::read_json_file(tw_graph));
            if (!tw_verify.empty()) {
                auto td = occult::decomposition_from_json(occult::read_json_file(tw_verify));
                auto res = occult::verify_decomposition(g, td);
                json j;
                if (std::holds_alternative<int>(res)) {
                    j["width"] = std::get<int>(res);
                    emit(j);
                    return kOk;
                }
                const auto& bad = std::get<occult::Violation>(res);
                j["violation"] = {{"clause", bad.clause}, {"detail", bad.detail}};
                emit(j);
                return kRefuted;
            }
            auto res = occult::exact_treewidth(g, tw_nodes);
            json j;
            j["lower_bound"] = res.lower_bound;
            j["upper_bound"] = res.upper_bound;
            j["nodes"] = res.nodes_used;
            if (res.width) j["width"] = *res.width;
            if (!tw_decomposition.empty()) {
                if (tw_decomposition.size() > 5 &&
                    tw_decomposition.substr(tw_decomposition.size() - 5) == ".json")
                    occult::write_text_file(
                        tw_decomposition,
                        occult::dump_json(occult::decomposition_to_json(res.decomposition)));
                else
                    occult::write_text_file(
                        tw_decomposition,
                        occult::decomposition_to_pace(res.decomposition, g));
                j["decomposition"] = tw_decomposition;
            }
            emit(j);
            if (!res.width) {
                std::cerr << "treewidth in [" << res.lower_bound << ", " << res.upper_bound
                          << "], node limit exhausted\n";
                return kIndeterminate;
            }
            std::cerr << "treewidth " << *res.width << "\n";
            return kOk;
        }
    } catch (const occult::PreconditionError& e) {
        json j;
        j["error"] = {{"clause", e.clause}, {"detail", e.what()}};
        emit(j);
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        json j;
        j["error"] = {{"clause", "internal"}, {"detail", e.what()}};
        emit(j);
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
