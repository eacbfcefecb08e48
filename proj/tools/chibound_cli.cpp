// chibound command line: classify graphs, detect catalog patterns, run the
// exact solvers, the divisibility oracle, the certified colorers, the lemma
// scans and batch campaigns over graph6 streams.
//
// Exit codes: 0 success, 1 a check failed (bound violated, divisibility or a
// claim falsified), 2 usage or input error. JSON reports go to stdout, human
// summaries to stderr.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chibound/harness.hpp"

namespace {

using namespace chibound;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        long a, b;
        return static_cast<bool>(ls >> a >> b) || (ls.clear(), ls.str(line), false);
    }
    return false;
}

struct NamedGraph {
    std::string graph6;
    Graph graph;
};

// graph6 streams carry one graph per line; an edge-list file is one graph.
std::vector<NamedGraph> load_graphs(const std::string& path, const std::string& format) {
    std::string text = read_all(path);
    bool edges = format == "edges" || (format == "auto" && looks_like_edge_list(text));
    std::vector<NamedGraph> out;
    if (edges) {
        Graph g = parse_edge_list(text);
        out.push_back({encode_graph6(g), std::move(g)});
        return out;
    }
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        Graph g = parse_graph6(line);
        out.push_back({line, std::move(g)});
    }
    return out;
}

void emit(const json& report, const std::string& summary) {
    std::cout << report.dump(2) << "\n";
    if (!summary.empty()) std::cerr << summary << "\n";
}

int cmd_classify(const std::string& path, const std::string& format) {
    json results = json::array();
    std::string summary;
    for (const NamedGraph& ng : load_graphs(path, format)) {
        ClassRecord rec = classify_theorem_classes(ng.graph);
        json j = to_json(rec);
        j["graph6"] = ng.graph6;
        j["n"] = ng.graph.order();
        j["edges"] = ng.graph.edge_count();
        results.push_back(j);
        summary += ng.graph6 + ": odd-hole-free=" + (rec.odd_hole_free ? "yes" : "no") +
                   " short-holed=" + (rec.short_holed ? "yes" : "no") +
                   " chordal=" + (rec.chordal ? "yes" : "no") + "\n";
    }
    emit(json{{"schema", 1}, {"command", "classify"}, {"results", results}},
         summary.empty() ? "" : summary.substr(0, summary.size() - 1));
    return kExitOk;
}

int cmd_detect(const std::string& name, const std::string& path, const std::string& format) {
    json results = json::array();
    std::string summary;
    for (const NamedGraph& ng : load_graphs(path, format)) {
        std::optional<Embedding> emb;
        if (name == "oddballoon")
            emb = find_odd_balloon(ng.graph);
        else
            emb = find_induced_pattern(ng.graph, name);
        json j{{"graph6", ng.graph6}, {"pattern", name}, {"found", emb.has_value()}};
        if (emb) j["embedding"] = to_json(*emb);
        results.push_back(j);
        summary += ng.graph6 + ": " + name + (emb ? " found" : " absent") + "\n";
    }
    emit(json{{"schema", 1}, {"command", "detect"}, {"results", results}},
         summary.empty() ? "" : summary.substr(0, summary.size() - 1));
    return kExitOk;
}

int cmd_chi_omega(bool chi_mode, const std::string& path, const std::string& format) {
    json results = json::array();
    std::string summary;
    for (const NamedGraph& ng : load_graphs(path, format)) {
        Budget budget;
        json j{{"graph6", ng.graph6}, {"n", ng.graph.order()}};
        if (chi_mode) {
            ChiResult res = chromatic_number(ng.graph, &budget);
            j["chi"] = res.chi;
            j["coloring"] = to_json(res.coloring);
            summary += ng.graph6 + ": chi=" + std::to_string(res.chi) + "\n";
        } else {
            CliqueResult res = clique_number(ng.graph, &budget);
            j["omega"] = res.omega;
            j["clique"] = set_to_vector(res.witness);
            summary += ng.graph6 + ": omega=" + std::to_string(res.omega) + "\n";
        }
        results.push_back(j);
    }
    emit(json{{"schema", 1}, {"command", chi_mode ? "chi" : "omega"}, {"results", results}},
         summary.empty() ? "" : summary.substr(0, summary.size() - 1));
    return kExitOk;
}

int cmd_color(const std::string& method, const std::string& path, const std::string& format,
              bool text_output) {
    std::vector<NamedGraph> graphs = load_graphs(path, format);
    json results = json::array();
    std::string summary;
    int exit_code = kExitOk;
    std::string text;
    for (const NamedGraph& ng : graphs) {
        Budget budget;
        json j{{"graph6", ng.graph6}, {"method", method}};
        std::optional<Coloring> coloring;
        std::optional<Violation> violation;
        int bound = 0;
        if (method == "thm3" || method == "thm4" || method == "thm5") {
            ColorerOutcome out = method == "thm3"   ? color_thm3(ng.graph, &budget)
                                 : method == "thm4" ? color_thm4(ng.graph, &budget)
                                                    : color_thm5(ng.graph, &budget);
            bound = out.bound;
            coloring = out.coloring;
            violation = out.violation;
        } else if (method == "chordal") {
            ChordalColoringResult out = chordal_peo_coloring(ng.graph);
            if (out.coloring) {
                coloring = out.coloring;
                bound = out.coloring->palette_size;
            } else {
                violation = Violation{"class_violation", "chordal", "input has a hole",
                                      std::nullopt, out.hole, false, std::nullopt, {}};
            }
        } else if (method == "exact") {
            ChiResult out = chromatic_number(ng.graph, &budget);
            coloring = out.coloring;
            bound = out.chi;
        } else {
            throw UsageError("unknown coloring method: " + method);
        }
        j["bound"] = bound;
        if (violation) {
            j["violation"] = to_json(*violation);
            exit_code = violation->kind == "internal_assertion" ? kExitCheckFailed : kExitUsage;
            summary += ng.graph6 + ": " + violation->check + " — " + violation->message + "\n";
        } else {
            j["coloring"] = to_json(*coloring);
            summary += ng.graph6 + ": used=" + std::to_string(coloring->used) + " bound=" +
                       std::to_string(bound) + "\n";
            if (text_output) text += export_coloring_text(*coloring, method);
        }
        results.push_back(j);
    }
    if (text_output)
        std::cout << text;
    else
        emit(json{{"schema", 1}, {"command", "color"}, {"results", results}}, "");
    std::cerr << (summary.empty() ? "" : summary.substr(0, summary.size() - 1)) << "\n";
    return exit_code;
}

int cmd_pd_check(const std::string& path, const std::string& format, bool export_witness) {
    json results = json::array();
    std::string summary;
    int exit_code = kExitOk;
    for (const NamedGraph& ng : load_graphs(path, format)) {
        Budget budget;
        if (ng.graph.order() > 13) throw UsageError("pd-check needs n <= 13");
        PdAudit audit = pd_bound_audit(ng.graph, &budget);
        json j{{"graph6", ng.graph6},
               {"pd", audit.perfectly_divisible},
               {"chi", audit.chi},
               {"omega", audit.omega},
               {"bound", audit.bound},
               {"bound_ok", audit.bound_ok}};
        if (!audit.perfectly_divisible) {
            j["failing_mask"] = set_to_vector(*audit.failing_mask);
            exit_code = kExitCheckFailed;
        } else if (!audit.bound_ok) {
            exit_code = kExitCheckFailed;
        }
        if (export_witness && audit.perfectly_divisible) {
            auto verdict = is_perfectly_divisible(ng.graph);
            j["witness_table"] = export_witness_text(std::get<DivisionWitness>(verdict));
        }
        results.push_back(j);
        summary += ng.graph6 + ": pd=" + (audit.perfectly_divisible ? "yes" : "no") + " chi=" +
                   std::to_string(audit.chi) + " bound=" + std::to_string(audit.bound) + "\n";
    }
    emit(json{{"schema", 1}, {"command", "pd-check"}, {"results", results}},
         summary.empty() ? "" : summary.substr(0, summary.size() - 1));
    return exit_code;
}

int cmd_lemma_scan(const std::string& path, const std::string& format) {
    json results = json::array();
    std::string summary;
    int exit_code = kExitOk;
    for (const NamedGraph& ng : load_graphs(path, format)) {
        auto scan = scan_antihole_configs(ng.graph);
        json j{{"graph6", ng.graph6}};
        if (std::holds_alternative<Violation>(scan)) {
            j["violation"] = to_json(std::get<Violation>(scan));
            results.push_back(j);
            emit(json{{"schema", 1}, {"command", "lemma-scan"}, {"results", results}},
                 ng.graph6 + ": outside the scan class");
            return kExitUsage;
        }
        const auto& configs = std::get<std::vector<std::pair<AnticenterConfig, ClaimReport>>>(scan);
        json entries = json::array();
        bool falsified = false;
        for (const auto& [cfg, report] : configs) {
            entries.push_back(json{{"config", to_json(cfg)}, {"report", to_json(report)}});
            if (!report.all_hold()) falsified = true;
        }
        j["configs"] = entries;
        j["vacuous"] = configs.empty();
        j["all_hold"] = !falsified;
        if (falsified) exit_code = kExitCheckFailed;
        results.push_back(j);
        summary += ng.graph6 + ": configs=" + std::to_string(configs.size()) +
                   (configs.empty() ? " (vacuous)" : falsified ? " FALSIFIED" : " all hold") + "\n";
    }
    emit(json{{"schema", 1}, {"command", "lemma-scan"}, {"results", results}},
         summary.empty() ? "" : summary.substr(0, summary.size() - 1));
    return exit_code;
}

int cmd_campaign(const std::string& path, const std::string& filter_spec,
                 const std::string& checks_spec, int jobs, const std::string& csv_path,
                 bool no_records) {
    ClassFilter filter = parse_class_filter(filter_spec);
    std::vector<CheckKind> checks = parse_check_list(checks_spec);
    CampaignLimits limits;
    limits.jobs = jobs;
    limits.keep_records = !no_records;
    std::string text = read_all(path);
    std::istringstream stream(text);
    CampaignReport report = run_campaign(stream, filter, checks, limits);
    json j = to_json(report, filter.spec, checks);
    std::cout << j.dump(2) << "\n";
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw UsageError("cannot open csv output: " + csv_path);
        csv << "index,graph6,status\n";
        for (const GraphRecord& rec : report.records)
            csv << rec.index << "," << rec.graph6 << "," << rec.status << "\n";
    }
    std::cerr << "processed=" << report.processed << " passed=" << report.passed
              << " failed=" << report.failed << " skipped=" << report.skipped
              << " errored=" << report.errored << " wall_ms=" << report.wall_ms << "\n";
    if (report.failed > 0) return kExitCheckFailed;
    if (report.errored > 0) return kExitUsage;
    return kExitOk;
}

int cmd_gen(int n, double p, const std::string& filter_spec, std::uint64_t seed,
            std::size_t count, std::uint64_t budget) {
    ClassFilter filter = parse_class_filter(filter_spec);
    GenResult res = gen_random_class(n, p, filter, seed, count, budget);
    for (const std::string& line : res.lines) std::cout << line << "\n";
    std::cerr << "emitted=" << res.lines.size() << "/" << count << " attempts=" << res.attempts
              << "\n";
    if (res.budget_exhausted)
        std::cerr << "warning: attempt budget exhausted before reaching the requested count\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact laboratory for hole-constrained graph classes"};
    app.require_subcommand(1);
    std::string format = "auto";
    app.add_option("--format", format, "input format: auto|g6|edges")
        ->check(CLI::IsMember({"auto", "g6", "edges"}));

    std::string path, pattern, method = "exact", filter_spec = "all", checks_spec, csv_path;
    int jobs = 1, gen_n = 8;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 1, gen_budget = 0;
    std::size_t gen_count = 10;
    bool text_output = false, export_witness = false, no_records = false;

    auto* classify = app.add_subcommand("classify", "class flags and witnesses per graph");
    classify->add_option("file", path, "graph6 stream, edge list, or - for stdin")->required();

    auto* detect = app.add_subcommand("detect", "search one catalog pattern");
    detect->add_option("pattern", pattern, "pattern name (p3, c5, k23, hammer, oddballoon, ...)")
        ->required();
    detect->add_option("file", path)->required();

    auto* chi = app.add_subcommand("chi", "exact chromatic number");
    chi->add_option("file", path)->required();
    auto* omega = app.add_subcommand("omega", "exact clique number");
    omega->add_option("file", path)->required();

    auto* color = app.add_subcommand("color", "run a certified colorer");
    color->add_option("--method", method, "thm3|thm4|thm5|chordal|exact")
        ->check(CLI::IsMember({"thm3", "thm4", "thm5", "chordal", "exact"}))
        ->required();
    color->add_flag("--text", text_output, "emit the plain text colouring instead of JSON");
    color->add_option("file", path)->required();

    auto* pd = app.add_subcommand("pd-check", "perfect divisibility audit");
    pd->add_flag("--witness", export_witness, "include the per-mask witness table");
    pd->add_option("file", path)->required();

    auto* lemma = app.add_subcommand("lemma-scan", "anticenter claim scan");
    lemma->add_option("file", path)->required();

    auto* campaign = app.add_subcommand("campaign", "batch checks over a graph6 stream");
    campaign->add_option("--filter", filter_spec, "class filter (thm1class, short-holed, ...)");
    campaign->add_option("--checks", checks_spec, "comma list: thm3,thm4,thm5,pd,lemma,conjecture")
        ->required();
    campaign->add_option("--jobs", jobs, "parallel workers (per-graph)");
    campaign->add_option("--csv", csv_path, "also write per-graph rows as CSV");
    campaign->add_flag("--no-records", no_records, "keep only counts and failures in the JSON");
    campaign->add_option("file", path, "graph6 stream or - for stdin")->required();

    auto* gen = app.add_subcommand("gen", "seeded random class members as a graph6 stream");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--p", gen_p, "edge probability")->required();
    gen->add_option("--filter", filter_spec, "acceptance class");
    gen->add_option("--seed", gen_seed, "RNG seed")->required();
    gen->add_option("--count", gen_count, "graphs to emit")->required();
    gen->add_option("--budget", gen_budget, "attempt budget (default 1000 + 2000*count)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify->parsed()) return cmd_classify(path, format);
        if (detect->parsed()) return cmd_detect(pattern, path, format);
        if (chi->parsed()) return cmd_chi_omega(true, path, format);
        if (omega->parsed()) return cmd_chi_omega(false, path, format);
        if (color->parsed()) return cmd_color(method, path, format, text_output);
        if (pd->parsed()) return cmd_pd_check(path, format, export_witness);
        if (lemma->parsed()) return cmd_lemma_scan(path, format);
        if (campaign->parsed())
            return cmd_campaign(path, filter_spec, checks_spec, jobs, csv_path, no_records);
        if (gen->parsed()) return cmd_gen(gen_n, gen_p, filter_spec, gen_seed, gen_count, gen_budget);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const chibound::GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const chibound::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
