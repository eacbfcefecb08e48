// Batch campaigns over graph6 streams, seeded random class-member generation
// and the JSON report vocabulary shared with the CLI. Campaigns are
// deterministic given stream order and seed: workers process lines by index
// and the aggregator merges records in input order, so --jobs N output is
// byte-identical to a serial run. Wall time stays out of the canonical JSON
// (stderr summary only) so repeated runs compare equal.
#pragma once

#include <atomic>
#include <cctype>
#include <chrono>
#include <istream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <json.hpp>

#include "chibound/constructive_colorers.hpp"
#include "chibound/divisibility.hpp"
#include "chibound/exact_solvers.hpp"
#include "chibound/graph_core.hpp"
#include "chibound/lemma_lab.hpp"
#include "chibound/pattern_detect.hpp"

namespace chibound {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// JSON views of the certificate types.
// ---------------------------------------------------------------------------

inline json to_json(const Embedding& e) {
    return json{{"pattern", e.pattern}, {"map", e.map}};
}

inline json to_json(const Violation& v) {
    json j{{"kind", v.kind}, {"check", v.check}, {"message", v.message}};
    if (v.embedding) j["embedding"] = to_json(*v.embedding);
    if (v.cycle) {
        j["cycle"] = *v.cycle;
        j["cycle_is_antihole"] = v.cycle_is_antihole;
    }
    if (v.subset) j["subset"] = set_to_vector(*v.subset);
    if (!v.vertices.empty()) j["vertices"] = v.vertices;
    return j;
}

inline json to_json(const Coloring& c) {
    json colors = json::array();
    for (std::size_t v = 0; v < c.color.size(); ++v)
        if (c.color[v] >= 0) colors.push_back(json{{"vertex", v}, {"color", c.color[v]}});
    return json{{"palette", c.palette_size}, {"used", c.used}, {"colors", colors}};
}

inline json to_json(const ClassRecord& r) {
    json flags{{"odd_hole_free", r.odd_hole_free}, {"short_holed", r.short_holed},
               {"chordal", r.chordal},             {"hammer_free", r.hammer_free},
               {"k23_free", r.k23_free},           {"wheel4_free", r.wheel4_free},
               {"k1uk3_free", r.k1uk3_free},       {"apexk1uk3_free", r.apexk1uk3_free},
               {"perfect", r.perfect}};
    json witnesses = json::object();
    if (r.odd_hole) witnesses["odd_hole"] = *r.odd_hole;
    if (r.long_hole) witnesses["long_hole"] = *r.long_hole;
    if (r.any_hole) witnesses["hole"] = *r.any_hole;
    if (r.hammer) witnesses["hammer"] = to_json(*r.hammer);
    if (r.k23) witnesses["k23"] = to_json(*r.k23);
    if (r.wheel4) witnesses["wheel4"] = to_json(*r.wheel4);
    if (r.k1uk3) witnesses["k1uk3"] = to_json(*r.k1uk3);
    if (r.apexk1uk3) witnesses["apexk1uk3"] = to_json(*r.apexk1uk3);
    if (r.berge_witness) {
        witnesses["berge"] = *r.berge_witness;
        witnesses["berge_is_antihole"] = r.berge_witness_is_antihole;
    }
    return json{{"flags", flags}, {"witnesses", witnesses}};
}

inline json to_json(const ClaimReport& r) {
    auto claim = [](const ClaimVerdict& v) {
        json j{{"holds", v.holds}};
        if (!v.holds) {
            j["witness"] = v.witness;
            j["note"] = v.note;
        }
        return j;
    };
    return json{{"vacuous", r.vacuous},
                {"nonneighbors", claim(r.nonneighbors)},
                {"boundary_cliques", claim(r.boundary_cliques)},
                {"component_complete", claim(r.component_complete)}};
}

inline json to_json(const AnticenterConfig& cfg) {
    return json{{"v", cfg.v},
                {"x0", cfg.x0},
                {"anticenters", set_to_vector(cfg.anticenters)},
                {"boundary", set_to_vector(cfg.boundary)}};
}

// ---------------------------------------------------------------------------
// Class filters: conjunctions of flag tokens, plus aliases for the theorem
// classes. Token matching ignores case, '-', '_' and spaces.
// ---------------------------------------------------------------------------

enum class ClassFlag {
    OddHoleFree,
    ShortHoled,
    Chordal,
    HammerFree,
    K23Free,
    Wheel4Free,
    K1uK3Free,
    ApexK1uK3Free,
    Perfect,
};

struct ClassFilter {
    std::string spec;
    std::vector<ClassFlag> flags;

    bool matches(const ClassRecord& r) const {
        for (ClassFlag f : flags) {
            switch (f) {
                case ClassFlag::OddHoleFree: if (!r.odd_hole_free) return false; break;
                case ClassFlag::ShortHoled: if (!r.short_holed) return false; break;
                case ClassFlag::Chordal: if (!r.chordal) return false; break;
                case ClassFlag::HammerFree: if (!r.hammer_free) return false; break;
                case ClassFlag::K23Free: if (!r.k23_free) return false; break;
                case ClassFlag::Wheel4Free: if (!r.wheel4_free) return false; break;
                case ClassFlag::K1uK3Free: if (!r.k1uk3_free) return false; break;
                case ClassFlag::ApexK1uK3Free: if (!r.apexk1uk3_free) return false; break;
                case ClassFlag::Perfect: if (!r.perfect) return false; break;
            }
        }
        return true;
    }
};

inline ClassFilter parse_class_filter(const std::string& spec) {
    auto canon = [](std::string_view s) {
        std::string out;
        for (char c : s)
            if (c != '-' && c != '_' && c != ' ')
                out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        return out;
    };
    ClassFilter filter;
    filter.spec = spec;
    std::string token;
    std::istringstream in(spec);
    auto add = [&](const std::string& raw) {
        std::string t = canon(raw);
        if (t.empty() || t == "all" || t == "any") return;
        if (t == "oddholefree") filter.flags.push_back(ClassFlag::OddHoleFree);
        else if (t == "shortholed") filter.flags.push_back(ClassFlag::ShortHoled);
        else if (t == "chordal") filter.flags.push_back(ClassFlag::Chordal);
        else if (t == "hammerfree") filter.flags.push_back(ClassFlag::HammerFree);
        else if (t == "k23free") filter.flags.push_back(ClassFlag::K23Free);
        else if (t == "wheel4free" || t == "k1pc4free") filter.flags.push_back(ClassFlag::Wheel4Free);
        else if (t == "k1uk3free") filter.flags.push_back(ClassFlag::K1uK3Free);
        else if (t == "apexk1uk3free" || t == "k1pk1uk3free")
            filter.flags.push_back(ClassFlag::ApexK1uK3Free);
        else if (t == "perfect") filter.flags.push_back(ClassFlag::Perfect);
        else if (t == "thm1class") {
            filter.flags.insert(filter.flags.end(),
                                {ClassFlag::OddHoleFree, ClassFlag::HammerFree, ClassFlag::K23Free});
        } else if (t == "thm3class") {
            filter.flags.insert(filter.flags.end(), {ClassFlag::ShortHoled, ClassFlag::Wheel4Free});
        } else if (t == "thm4class") {
            filter.flags.insert(filter.flags.end(), {ClassFlag::ShortHoled, ClassFlag::K1uK3Free});
        } else if (t == "thm5class") {
            filter.flags.insert(filter.flags.end(),
                                {ClassFlag::ShortHoled, ClassFlag::ApexK1uK3Free});
        } else {
            throw GraphError("unknown class filter token: " + raw);
        }
    };
    std::string piece;
    while (std::getline(in, piece, ',')) {
        std::istringstream ws(piece);
        while (ws >> token) add(token);
    }
    return filter;
}

// ---------------------------------------------------------------------------
// Campaign checks.
// ---------------------------------------------------------------------------

enum class CheckKind { Thm3, Thm4, Thm5, Pd, Lemma, Conjecture };

inline CheckKind parse_check_name(const std::string& name) {
    if (name == "thm3") return CheckKind::Thm3;
    if (name == "thm4") return CheckKind::Thm4;
    if (name == "thm5") return CheckKind::Thm5;
    if (name == "pd") return CheckKind::Pd;
    if (name == "lemma") return CheckKind::Lemma;
    if (name == "conjecture") return CheckKind::Conjecture;
    throw GraphError("unknown check name: " + name);
}

inline std::vector<CheckKind> parse_check_list(const std::string& spec) {
    std::vector<CheckKind> out;
    std::istringstream in(spec);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        std::istringstream ws(piece);
        std::string token;
        while (ws >> token) out.push_back(parse_check_name(token));
    }
    if (out.empty()) throw GraphError("no checks requested");
    return out;
}

inline std::string check_name(CheckKind k) {
    switch (k) {
        case CheckKind::Thm3: return "thm3";
        case CheckKind::Thm4: return "thm4";
        case CheckKind::Thm5: return "thm5";
        case CheckKind::Pd: return "pd";
        case CheckKind::Lemma: return "lemma";
        case CheckKind::Conjecture: return "conjecture";
    }
    return "?";
}

struct CheckOutcome {
    std::string check;
    std::string status;  // "pass" | "fail" | "skip" | "error"
    json detail;
};

namespace detail {

inline CheckOutcome run_colorer_check(const Graph& g, const ClassRecord& rec, CheckKind kind,
                                      Budget budget) {
    CheckOutcome out{check_name(kind), "pass", json::object()};
    bool in_class = false;
    ColorerOutcome res;
    int omega = clique_number(g, &budget).omega;
    int bound = 1;
    switch (kind) {
        case CheckKind::Thm3:
            in_class = rec.short_holed && rec.wheel4_free;
            if (in_class) res = color_thm3(g, &budget);
            bound = omega <= 1 ? 1 : 4 * omega * (omega - 1);
            break;
        case CheckKind::Thm4:
            in_class = rec.short_holed && rec.k1uk3_free;
            if (in_class) res = color_thm4(g, &budget);
            bound = std::max(1, 2 * omega - 1);
            break;
        case CheckKind::Thm5:
            in_class = rec.short_holed && rec.apexk1uk3_free;
            if (in_class) res = color_thm5(g, &budget);
            bound = omega <= 1 ? 1 : 16 * omega - 24;
            break;
        default: throw std::logic_error("not a colorer check");
    }
    if (!in_class) {
        out.status = "skip";
        out.detail["reason"] = "outside class";
        return out;
    }
    out.detail["omega"] = omega;
    out.detail["bound"] = bound;
    if (!res.ok()) {
        out.status = "fail";
        out.detail["violation"] = to_json(*res.violation);
        return out;
    }
    int chi = chromatic_number(g, &budget).chi;
    out.detail["used"] = res.coloring->used;
    out.detail["chi"] = chi;
    bool proper = g.order() == 0 || coloring_proper_on(g, *res.coloring, g.vertices());
    bool used_ok = omega <= 1 ? res.coloring->used == std::min(1, g.order())
                              : res.coloring->used <= bound;
    bool chi_ok = omega <= 1 ? chi == std::min(1, g.order()) : chi <= bound;
    if (!proper || !used_ok || !chi_ok) {
        out.status = "fail";
        out.detail["proper"] = proper;
        out.detail["used_ok"] = used_ok;
        out.detail["chi_ok"] = chi_ok;
    }
    return out;
}

inline CheckOutcome run_pd_check(const Graph& g, Budget budget) {
    CheckOutcome out{"pd", "pass", json::object()};
    if (g.order() > 13) {
        out.status = "error";
        out.detail["reason"] = "pd check needs n <= 13";
        return out;
    }
    PdAudit audit = pd_bound_audit(g, &budget);
    out.detail["pd"] = audit.perfectly_divisible;
    out.detail["chi"] = audit.chi;
    out.detail["omega"] = audit.omega;
    out.detail["bound"] = audit.bound;
    if (!audit.perfectly_divisible) {
        out.status = "fail";
        out.detail["failing_mask"] = set_to_vector(*audit.failing_mask);
    } else if (!audit.bound_ok) {
        out.status = "fail";
        out.detail["bound_violated"] = true;
    }
    return out;
}

inline CheckOutcome run_lemma_check(const Graph& g, const ClassRecord& rec) {
    CheckOutcome out{"lemma", "pass", json::object()};
    if (!(rec.odd_hole_free && rec.hammer_free && rec.k23_free)) {
        out.status = "skip";
        out.detail["reason"] = "outside class";
        return out;
    }
    auto scan = scan_antihole_configs(g);
    if (std::holds_alternative<Violation>(scan)) {
        out.status = "error";
        out.detail["violation"] = to_json(std::get<Violation>(scan));
        return out;
    }
    const auto& configs = std::get<std::vector<std::pair<AnticenterConfig, ClaimReport>>>(scan);
    out.detail["configs"] = configs.size();
    out.detail["vacuous"] = configs.empty();
    json falsified = json::array();
    for (const auto& [cfg, report] : configs) {
        if (!report.all_hold())
            falsified.push_back(json{{"config", to_json(cfg)}, {"report", to_json(report)}});
    }
    if (!falsified.empty()) {
        out.status = "fail";
        out.detail["falsified"] = falsified;
    }
    return out;
}

inline CheckOutcome run_conjecture_check(const Graph& g, const ClassRecord& rec, Budget budget) {
    CheckOutcome out{"conjecture", "pass", json::object()};
    if (!rec.odd_hole_free) {
        out.status = "skip";
        out.detail["reason"] = "has an odd hole";
        return out;
    }
    if (g.order() > 13) {
        out.status = "error";
        out.detail["reason"] = "divisibility oracle needs n <= 13";
        return out;
    }
    PdAudit audit = pd_bound_audit(g, &budget);
    out.detail["pd"] = audit.perfectly_divisible;
    if (!audit.perfectly_divisible) {
        out.status = "fail";
        out.detail["failing_mask"] = set_to_vector(*audit.failing_mask);
        out.detail["counterexample"] = true;
    }
    return out;
}

}  // namespace detail

inline CheckOutcome run_check(const Graph& g, const ClassRecord& rec, CheckKind kind,
                              std::uint64_t node_budget) {
    Budget budget;
    budget.limit = node_budget;
    try {
        switch (kind) {
            case CheckKind::Thm3:
            case CheckKind::Thm4:
            case CheckKind::Thm5: return detail::run_colorer_check(g, rec, kind, budget);
            case CheckKind::Pd: return detail::run_pd_check(g, budget);
            case CheckKind::Lemma: return detail::run_lemma_check(g, rec);
            case CheckKind::Conjecture: return detail::run_conjecture_check(g, rec, budget);
        }
    } catch (const BudgetExceeded& e) {
        return CheckOutcome{check_name(kind), "error", json{{"reason", e.what()}}};
    }
    throw std::logic_error("unhandled check kind");
}

// ---------------------------------------------------------------------------
// Campaigns.
// ---------------------------------------------------------------------------

struct CampaignLimits {
    std::uint64_t node_budget = default_node_budget();
    int jobs = 1;
    bool keep_records = true;  // per-graph verdict records in the report
};

struct GraphRecord {
    std::size_t index = 0;
    std::string graph6;
    std::string status;  // "passed" | "failed" | "skipped" | "errored"
    json detail;
};

struct CampaignReport {
    std::size_t processed = 0, passed = 0, failed = 0, skipped = 0, errored = 0;
    std::map<std::string, std::size_t> class_counts;
    std::vector<GraphRecord> records;
    json failures = json::array();
    double wall_ms = 0.0;  // stderr summary only, never serialized

    bool counts_consistent() const {
        return processed == passed + failed + skipped + errored;
    }
};

inline json to_json(const CampaignReport& r, const std::string& filter,
                    const std::vector<CheckKind>& checks) {
    json checks_json = json::array();
    for (CheckKind k : checks) checks_json.push_back(check_name(k));
    json records = json::array();
    for (const GraphRecord& rec : r.records) {
        json j{{"index", rec.index}, {"graph6", rec.graph6}, {"status", rec.status}};
        if (!rec.detail.is_null()) j["detail"] = rec.detail;
        records.push_back(j);
    }
    return json{{"schema", 1},
                {"command", "campaign"},
                {"filter", filter},
                {"checks", checks_json},
                {"counts",
                 {{"processed", r.processed},
                  {"passed", r.passed},
                  {"failed", r.failed},
                  {"skipped", r.skipped},
                  {"errored", r.errored}}},
                {"class_counts", r.class_counts},
                {"records", records},
                {"failures", r.failures}};
}

namespace detail {

struct LineResult {
    std::string status;
    json detail;
    json failures = json::array();
    std::vector<std::string> classes;
};

inline LineResult process_campaign_line(const std::string& line, const ClassFilter& filter,
                                        const std::vector<CheckKind>& checks,
                                        const CampaignLimits& limits) {
    LineResult res;
    Graph g;
    try {
        g = parse_graph6(line);
    } catch (const GraphError& e) {
        res.status = "errored";
        res.detail = json{{"error", e.what()}};
        return res;
    }
    ClassRecord rec;
    try {
        rec = classify_theorem_classes(g);
    } catch (const std::exception& e) {
        res.status = "errored";
        res.detail = json{{"error", e.what()}};
        return res;
    }
    if (rec.odd_hole_free) res.classes.push_back("odd_hole_free");
    if (rec.short_holed) res.classes.push_back("short_holed");
    if (rec.chordal) res.classes.push_back("chordal");
    if (rec.hammer_free) res.classes.push_back("hammer_free");
    if (rec.k23_free) res.classes.push_back("k23_free");
    if (rec.wheel4_free) res.classes.push_back("wheel4_free");
    if (rec.k1uk3_free) res.classes.push_back("k1uk3_free");
    if (rec.apexk1uk3_free) res.classes.push_back("apexk1uk3_free");
    if (rec.perfect) res.classes.push_back("perfect");
    if (!filter.matches(rec)) {
        res.status = "skipped";
        res.detail = json{{"reason", "filtered"}};
        return res;
    }
    json outcomes = json::array();
    bool any_fail = false, any_error = false, any_run = false;
    for (CheckKind kind : checks) {
        CheckOutcome out = run_check(g, rec, kind, limits.node_budget);
        outcomes.push_back(json{{"check", out.check}, {"status", out.status}, {"detail", out.detail}});
        if (out.status == "fail") {
            any_fail = true;
            res.failures.push_back(json{{"graph6", line}, {"check", out.check}, {"detail", out.detail}});
        } else if (out.status == "error") {
            any_error = true;
        } else if (out.status == "pass") {
            any_run = true;
        }
    }
    res.detail = json{{"checks", outcomes}};
    if (any_fail) res.status = "failed";
    else if (any_error) res.status = "errored";
    else if (any_run) res.status = "passed";
    else res.status = "skipped";
    return res;
}

}  // namespace detail

inline CampaignReport run_campaign(std::istream& stream, const ClassFilter& filter,
                                   const std::vector<CheckKind>& checks,
                                   const CampaignLimits& limits = {}) {
    auto start = std::chrono::steady_clock::now();
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(stream, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        lines.push_back(line);
    }
    std::vector<detail::LineResult> results(lines.size());
    int jobs = std::max(1, limits.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < lines.size(); ++i)
            results[i] = detail::process_campaign_line(lines[i], filter, checks, limits);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < lines.size(); i = next.fetch_add(1))
                    results[i] = detail::process_campaign_line(lines[i], filter, checks, limits);
            });
        for (auto& th : pool) th.join();
    }
    CampaignReport report;
    report.processed = lines.size();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const detail::LineResult& res = results[i];
        for (const std::string& c : res.classes) ++report.class_counts[c];
        if (res.status == "passed") ++report.passed;
        else if (res.status == "failed") ++report.failed;
        else if (res.status == "skipped") ++report.skipped;
        else ++report.errored;
        for (const json& f : res.failures) report.failures.push_back(f);
        bool keep = limits.keep_records && res.status != "skipped";
        if (keep || res.status == "failed" || res.status == "errored")
            report.records.push_back(GraphRecord{i, lines[i], res.status, res.detail});
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (!report.counts_consistent()) throw std::logic_error("campaign counts do not add up");
    return report;
}

// ---------------------------------------------------------------------------
// Seeded random class members: rejection-sampled G(n,p). Edges are drawn from
// raw mt19937_64 output (no std distributions), so identical seeds give
// byte-identical streams on every platform.
// ---------------------------------------------------------------------------

struct GenResult {
    std::vector<std::string> lines;
    std::uint64_t attempts = 0;
    bool budget_exhausted = false;
};

inline GenResult gen_random_class(int n, double p, const ClassFilter& filter, std::uint64_t seed,
                                  std::size_t count, std::uint64_t attempt_budget = 0) {
    if (n < 1 || n > kMaxVertices) throw GraphError("gen: n out of range (1..64)");
    if (!(p >= 0.0 && p <= 1.0)) throw GraphError("gen: edge probability out of range [0,1]");
    if (attempt_budget == 0)
        attempt_budget = 1000 + 2000 * static_cast<std::uint64_t>(count);
    std::mt19937_64 rng(seed);
    const std::uint64_t threshold =
        static_cast<std::uint64_t>(p * 9007199254740992.0);  // p * 2^53
    GenResult out;
    while (out.lines.size() < count && out.attempts < attempt_budget) {
        ++out.attempts;
        std::vector<std::pair<int, int>> edge_list;
        for (int col = 1; col < n; ++col)
            for (int row = 0; row < col; ++row)
                if ((rng() >> 11) < threshold) edge_list.emplace_back(row, col);
        Graph g = build_graph(n, edge_list);
        if (filter.matches(classify_theorem_classes(g))) out.lines.push_back(encode_graph6(g));
    }
    out.budget_exhausted = out.lines.size() < count;
    return out;
}

}  // namespace chibound
