#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "acfg/enumerate.hpp"
#include "acfg/instances.hpp"
#include "acfg/properties.hpp"
#include "acfg/search.hpp"
#include "acfg/stability.hpp"
#include "acfg/valuation.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace acfg;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr const char* kReportSchema = "acfg-report-v1";

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

FriendGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

CoalitionStructure load_partition(const std::string& path, int n) {
    auto parts = parse_partition_file(read_file(path), n);
    if (parts.size() != 1)
        throw std::runtime_error(path + ": expected exactly one coalition structure, found " +
                                 std::to_string(parts.size()));
    return parts[0];
}

Model require_model(const std::string& name) {
    if (auto m = parse_model(name)) return *m;
    throw std::runtime_error("unknown model: " + name +
                             " (expected sumSF, sumEQ, sumAL, minSF, minEQ or minAL)");
}

Notion require_notion(const std::string& name) {
    if (auto s = parse_notion(name)) return *s;
    throw std::runtime_error(
        "unknown notion: " + name +
        " (expected nash, ir, is, cis, tis, core, strictcore, popular, strictpopular or perfect)");
}

// Shared report skeleton; commands fill inputs/result, main prints one of the
// two renderings. Everything except elapsed_ms is deterministic.
struct Report {
    std::string command;
    json inputs = json::object();
    json result = json::object();
    std::vector<std::string> text;
    int exit_code = 0;

    void line(const std::string& s) { text.push_back(s); }
};

void emit(const Report& r, bool as_json, double elapsed_ms) {
    if (as_json) {
        json doc;
        doc["schema"] = kReportSchema;
        doc["version"] = kVersion;
        doc["command"] = r.command;
        doc["inputs"] = r.inputs;
        doc["result"] = r.result;
        doc["elapsed_ms"] = elapsed_ms;
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& s : r.text) std::cout << s << "\n";
    }
}

std::string pref_word(Pref p) {
    switch (p) {
        case Pref::FirstPreferred: return "first";
        case Pref::SecondPreferred: return "second";
        case Pref::Indifferent: return "indifferent";
    }
    return "?";
}

// ---- eval ----------------------------------------------------------------

Report cmd_eval(const std::string& graph_path, const std::string& part_path,
                const std::string& model_name, bool per_player) {
    Report r;
    r.command = "eval";
    FriendGraph g = load_graph(graph_path);
    CoalitionStructure gamma = load_partition(part_path, g.n());
    Model m = require_model(model_name);
    r.inputs = {{"graph", graph_path},
                {"partition", part_path},
                {"model", model_name},
                {"per_player", per_player}};
    r.line("graph: " + std::to_string(g.n()) + " players, " + std::to_string(g.edge_count()) +
           " friendships");
    r.line("model: " + std::string(model_name));
    r.line("structure: " + format_partition(gamma));
    json rows = json::array();
    std::ostringstream header;
    header << std::left << std::setw(8) << "player" << std::right << std::setw(8) << "v"
           << std::setw(8) << "sum^F" << std::setw(8) << "sum^F+" << std::setw(8) << "min^F"
           << std::setw(8) << "min^F+" << "  utility";
    if (per_player) r.line(header.str());
    for (int i = 0; i < g.n(); ++i) {
        int v = value(g, i, gamma);
        int sf = friend_sum(g, i, gamma), sfi = friend_sum_incl(g, i, gamma);
        int mf = friend_min(g, i, gamma), mfi = friend_min_incl(g, i, gamma);
        std::string u = utility(g, m, i, gamma).to_string();
        if (per_player) {
            std::ostringstream row;
            row << std::left << std::setw(8) << i + 1 << std::right << std::setw(8) << v
                << std::setw(8) << sf << std::setw(8) << sfi << std::setw(8) << mf << std::setw(8)
                << mfi << "  " << u;
            r.line(row.str());
        }
        rows.push_back({{"player", i + 1},
                        {"v", v},
                        {"sum_f", sf},
                        {"sum_f_incl", sfi},
                        {"min_f", mf},
                        {"min_f_incl", mfi},
                        {"utility", u}});
    }
    if (!per_player) r.line("players: " + std::to_string(g.n()) + " (use --per-player for rows)");
    r.result = {{"players", std::move(rows)}};
    return r;
}

// ---- compare ---------------------------------------------------------------

Report cmd_compare(const std::string& graph_path, const std::string& a_path,
                   const std::string& b_path, const std::string& model_name,
                   std::optional<int> player) {
    Report r;
    r.command = "compare";
    FriendGraph g = load_graph(graph_path);
    CoalitionStructure a = load_partition(a_path, g.n());
    CoalitionStructure b = load_partition(b_path, g.n());
    Model m = require_model(model_name);
    r.inputs = {{"graph", graph_path}, {"first", a_path}, {"second", b_path}, {"model", model_name}};
    if (player) r.inputs["player"] = *player;
    json rows = json::array();
    for (int i = 0; i < g.n(); ++i) {
        if (player && *player != i + 1) continue;
        Pref p = compare(g, m, i, a, b);
        r.line("player " + std::to_string(i + 1) + ": " +
               (p == Pref::Indifferent ? "indifferent" : "prefers the " + pref_word(p)));
        rows.push_back({{"player", i + 1}, {"preference", pref_word(p)}});
    }
    auto [first, second] = count_prefers(g, m, a, b);
    if (!player)
        r.line("counts: " + std::to_string(first) + " prefer the first, " +
               std::to_string(second) + " the second, " +
               std::to_string(g.n() - first - second) + " indifferent");
    r.result = {{"players", std::move(rows)},
                {"prefer_first", first},
                {"prefer_second", second},
                {"indifferent", g.n() - first - second}};
    return r;
}

// ---- verify ----------------------------------------------------------------

Report cmd_verify(const std::string& graph_path, const std::string& part_path,
                  const std::string& model_name, const std::string& notion_name,
                  bool show_witness, int threads) {
    Report r;
    r.command = "verify";
    FriendGraph g = load_graph(graph_path);
    CoalitionStructure gamma = load_partition(part_path, g.n());
    Model m = require_model(model_name);
    Notion s = require_notion(notion_name);
    r.inputs = {{"graph", graph_path},
                {"partition", part_path},
                {"model", model_name},
                {"notion", notion_name},
                {"threads", threads}};
    Verdict verdict = verify(g, m, s, gamma, threads);
    r.line("model: " + std::string(model_name));
    r.line("notion: " + std::string(notion_name));
    r.line(verdict.stable ? "verdict: stable" : "verdict: unstable");
    r.result["stable"] = verdict.stable;
    if (verdict.witness) {
        std::string w = format_witness(*verdict.witness);
        if (show_witness) r.line("witness: " + w);
        r.result["witness"] = w;
    } else {
        r.result["witness"] = nullptr;
    }
    r.exit_code = verdict.stable ? 0 : 1;
    return r;
}

// ---- exists ----------------------------------------------------------------

Report cmd_exists(const std::string& graph_path, const std::string& model_name,
                  const std::string& notion_name, std::optional<int> limit, int threads) {
    Report r;
    r.command = "exists";
    FriendGraph g = load_graph(graph_path);
    Model m = require_model(model_name);
    Notion s = require_notion(notion_name);
    r.inputs = {{"graph", graph_path},
                {"model", model_name},
                {"notion", notion_name},
                {"threads", threads}};
    if (limit) r.inputs["limit"] = *limit;
    ExistenceResult res = exists_stable(g, m, s, threads, limit);
    r.line("model: " + std::string(model_name));
    r.line("notion: " + std::string(notion_name));
    r.line(res.found ? "found: yes" : "found: no");
    if (res.structure) r.line("structure: " + format_partition(*res.structure));
    r.line("partitions examined: " + std::to_string(res.partitions_examined));
    r.result["found"] = res.found;
    r.result["structure"] = res.structure ? json(format_partition(*res.structure)) : json(nullptr);
    r.result["partitions_examined"] = res.partitions_examined;
    r.exit_code = res.found ? 0 : 1;
    return r;
}

// ---- gen -------------------------------------------------------------------

// Unique-prefix lookup so "fig9" finds fig9_no_popular. An underscore-aligned
// prefix wins outright so "fig1" is fig1_path4, not ambiguous with fig10.
std::optional<std::string> match_builtin(const std::string& kind) {
    const auto& names = builtin_names();
    if (std::find(names.begin(), names.end(), kind) != names.end()) return kind;
    std::vector<std::string> hits;
    for (const auto& n : names)
        if (n.rfind(kind + "_", 0) == 0) hits.push_back(n);
    if (hits.empty())
        for (const auto& n : names)
            if (n.rfind(kind, 0) == 0) hits.push_back(n);
    if (hits.size() == 1) return hits[0];
    if (hits.size() > 1) {
        std::string msg = "ambiguous fixture name " + kind + " (matches";
        for (const auto& h : hits) msg += " " + h;
        throw std::runtime_error(msg + ")");
    }
    return std::nullopt;
}

Report cmd_gen(const std::string& kind, const std::string& out_path, const std::string& variant,
               std::optional<int> k, const std::string& rx3c_path,
               std::optional<int> alpha_count, std::optional<int> n, std::optional<double> p,
               uint64_t seed) {
    Report r;
    r.command = "gen";
    r.inputs = {{"kind", kind}, {"out", out_path}};
    auto note_graph = [&](const FriendGraph& g) {
        r.line("wrote " + out_path + " (" + std::to_string(g.n()) + " players, " +
               std::to_string(g.edge_count()) + " friendships)");
        r.result["path"] = out_path;
        r.result["players"] = g.n();
        r.result["friendships"] = g.edge_count();
    };
    if (auto name = match_builtin(kind)) {
        BuiltinFixture f = builtin(*name);
        r.inputs["kind"] = *name;
        write_file(out_path, format_graph(f.graph));
        note_graph(f.graph);
        if (!f.structures.empty()) {
            json side;
            side["schema"] = "acfg-fixture-v1";
            side["name"] = f.name;
            json structures = json::object();
            for (const auto& [key, part] : f.structures) structures[key] = format_partition(part);
            side["structures"] = std::move(structures);
            write_file(out_path + ".json", side.dump(2) + "\n");
            r.line("wrote " + out_path + ".json (distinguished structures)");
            r.result["sidecar"] = out_path + ".json";
        }
        return r;
    }
    if (kind == "gadget") {
        auto v = parse_gadget_variant(variant);
        if (!v)
            throw std::runtime_error("--variant must be one of min-sf-core, sum-sf-core, "
                                     "min-sf-strictpop, sum-sf-strictpop");
        Rx3cInstance inst;
        if (!rx3c_path.empty()) {
            inst = parse_rx3c(read_file(rx3c_path));
            if (k && *k != inst.k)
                throw std::runtime_error("--k disagrees with the instance file");
            r.inputs["rx3c"] = rx3c_path;
        } else {
            if (!k) throw std::runtime_error("gadget generation needs --k or --rx3c");
            inst = planted_rx3c(*k);
        }
        r.inputs["variant"] = variant;
        r.inputs["k"] = inst.k;
        if (alpha_count) r.inputs["alpha_count"] = *alpha_count;
        GadgetGame game = make_gadget(inst, *v, alpha_count);
        write_file(out_path, format_graph(game.graph));
        write_file(out_path + ".json", gadget_sidecar_json(game));
        note_graph(game.graph);
        r.line("wrote " + out_path + ".json (labels, gamma, warnings)");
        r.result["sidecar"] = out_path + ".json";
        r.result["warnings"] = game.warnings;
        for (const auto& w : game.warnings) std::cerr << "warning: " << w << "\n";
        return r;
    }
    if (kind == "random") {
        if (!n || !p) throw std::runtime_error("random generation needs --n and --p");
        r.inputs["n"] = *n;
        r.inputs["p"] = *p;
        r.inputs["seed"] = seed;
        FriendGraph g = random_graph(*n, *p, seed);
        write_file(out_path, format_graph(g));
        note_graph(g);
        return r;
    }
    if (kind == "rx3c") {
        if (!k) throw std::runtime_error("rx3c generation needs --k");
        r.inputs["k"] = *k;
        Rx3cInstance inst = planted_rx3c(*k);
        write_file(out_path, format_rx3c(inst));
        r.line("wrote " + out_path + " (k=" + std::to_string(*k) + ", " +
               std::to_string(inst.triples.size()) + " triples)");
        r.result["path"] = out_path;
        r.result["k"] = *k;
        return r;
    }
    std::string known = "gadget, random, rx3c";
    for (const auto& b : builtin_names()) known += ", " + b;
    throw std::runtime_error("unknown kind " + kind + " (expected one of: " + known + ")");
}

// ---- props -----------------------------------------------------------------

json violation_json(const MonotonicityCase& c) {
    return {{"i", c.i + 1},
            {"j", c.j + 1},
            {"gamma", format_partition(c.gamma)},
            {"delta", format_partition(c.delta)}};
}

Report cmd_props(const std::string& graph_path, const std::string& model_name,
                 const std::string& check, int samples, uint64_t seed) {
    Report r;
    r.command = "props";
    FriendGraph g = load_graph(graph_path);
    Model m = require_model(model_name);
    r.inputs = {{"graph", graph_path},
                {"model", model_name},
                {"check", check},
                {"samples", samples},
                {"seed", seed}};
    r.line("check: " + check);
    r.line("model: " + std::string(model_name));
    if (check == "mono1" || check == "mono2") {
        MonotonicityType type =
            check == "mono1" ? MonotonicityType::TypeI : MonotonicityType::TypeII;
        MonotonicityReport rep = monotonicity_sweep_on(g, m, type, samples, seed);
        r.line("samples: " + std::to_string(rep.samples));
        r.line("premise hits: " + std::to_string(rep.premise_hits));
        r.line("violations: " + std::to_string(rep.violations));
        r.result = {{"samples", rep.samples},
                    {"premise_hits", rep.premise_hits},
                    {"violations", rep.violations}};
        if (rep.first_violation) {
            const auto& c = *rep.first_violation;
            r.line("first violation: i=" + std::to_string(c.i + 1) + " j=" +
                   std::to_string(c.j + 1) + "  gamma: " + format_partition(c.gamma) +
                   "  delta: " + format_partition(c.delta));
            r.result["first_violation"] = violation_json(c);
        } else {
            r.result["first_violation"] = nullptr;
        }
        r.exit_code = rep.violations == 0 ? 0 : 1;
        return r;
    }
    if (check == "unanimity") {
        UnanimityReport rep = check_unanimity_sample(g, m, samples, seed);
        r.line("samples: " + std::to_string(rep.samples));
        r.line("premise hits: " + std::to_string(rep.premise_hits));
        r.line("violations: " + std::to_string(rep.violations));
        r.result = {{"samples", rep.samples},
                    {"premise_hits", rep.premise_hits},
                    {"violations", rep.violations}};
        r.exit_code = rep.violations == 0 ? 0 : 1;
        return r;
    }
    if (check == "sovereignty") {
        int n = g.n();
        if (n > 8) throw std::runtime_error("sovereignty check enumerates all structure pairs; "
                                            "n is capped at 8");
        // For every player and every structure, the clique-on-own-block graph
        // must make that structure a favourite.
        long pairs = 0;
        int violations = 0;
        std::string first;
        for (int i = 0; i < n; ++i) {
            PartitionCursor outer(n);
            while (outer.next()) {
                CoalitionStructure gamma = outer.make();
                FriendGraph h = sovereignty_construct(n, i, gamma);
                PartitionCursor inner(n);
                while (inner.next()) {
                    CoalitionStructure delta = inner.make();
                    ++pairs;
                    if (compare(h, m, i, gamma, delta) == Pref::SecondPreferred) {
                        ++violations;
                        if (first.empty())
                            first = "player " + std::to_string(i + 1) + " gamma " +
                                    format_partition(gamma) + " delta " + format_partition(delta);
                    }
                }
            }
        }
        r.line("pairs checked: " + std::to_string(pairs));
        r.line("violations: " + std::to_string(violations));
        r.result = {{"pairs", pairs}, {"violations", violations}};
        if (!first.empty()) {
            r.line("first violation: " + first);
            r.result["first_violation"] = first;
        }
        r.exit_code = violations == 0 ? 0 : 1;
        return r;
    }
    throw std::runtime_error("unknown check " + check +
                             " (expected mono1, mono2, unanimity or sovereignty)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"altruistic coalition formation games: evaluation, stability, search"};
    app.set_version_flag("--version", std::string("acfg ") + kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    int threads = 1;
    uint64_t seed = 1;
    app.add_flag("--json", as_json, "emit a JSON report instead of text");
    app.add_option("--threads", threads, "worker threads for verify/exists")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for randomized commands (recorded in the report)");

    std::string graph_path, part_path, part_b_path, model_name, notion_name;
    bool per_player = false, show_witness = false;
    std::optional<int> player, limit;

    auto* eval = app.add_subcommand("eval", "per-player values, aggregates and utilities");
    eval->add_option("graph", graph_path)->required();
    eval->add_option("partition", part_path)->required();
    eval->add_option("--model", model_name)->required();
    eval->add_flag("--per-player", per_player, "print one row per player");

    auto* cmp = app.add_subcommand("compare", "who prefers which of two structures");
    cmp->add_option("graph", graph_path)->required();
    cmp->add_option("first", part_path)->required();
    cmp->add_option("second", part_b_path)->required();
    cmp->add_option("--model", model_name)->required();
    cmp->add_option("--player", player, "restrict to one player (1-based)");

    auto* ver = app.add_subcommand("verify", "is the structure stable under a notion?");
    ver->add_option("graph", graph_path)->required();
    ver->add_option("partition", part_path)->required();
    ver->add_option("--model", model_name)->required();
    ver->add_option("--notion", notion_name)->required();
    ver->add_flag("--witness", show_witness, "print the violating move/coalition/rival");

    auto* exs = app.add_subcommand("exists", "search for a stable structure");
    exs->add_option("graph", graph_path)->required();
    exs->add_option("--model", model_name)->required();
    exs->add_option("--notion", notion_name)->required();
    exs->add_option("--limit", limit, "override the enumeration player cap (costly)");

    std::string kind, out_path, variant, rx3c_path;
    std::optional<int> gadget_k, alpha_count, rand_n;
    std::optional<double> rand_p;
    auto* gen = app.add_subcommand("gen", "write fixture/random/gadget/rx3c files");
    gen->add_option("kind", kind, "builtin fixture name (prefixes ok), gadget, random or rx3c")
        ->required();
    gen->add_option("-o,--out", out_path)->required();
    gen->add_option("--variant", variant, "gadget variant (kebab-case)");
    gen->add_option("--k", gadget_k, "RX3C size parameter");
    gen->add_option("--rx3c", rx3c_path, "RX3C instance file for gadget generation");
    gen->add_option("--alpha-count", alpha_count, "override the strict-pop alpha count");
    gen->add_option("--n", rand_n, "random graph: players");
    gen->add_option("--p", rand_p, "random graph: edge probability");

    std::string check;
    int samples = 1000;
    auto* props = app.add_subcommand("props", "randomized/exhaustive axiom checks");
    props->add_option("graph", graph_path)->required();
    props->add_option("--model", model_name)->required();
    props->add_option("--check", check, "mono1, mono2, unanimity or sovereignty")->required();
    props->add_option("--samples", samples, "sample count for the randomized checks");

    CLI11_PARSE(app, argc, argv);

    auto start = std::chrono::steady_clock::now();
    try {
        Report r;
        if (*eval) r = cmd_eval(graph_path, part_path, model_name, per_player);
        else if (*cmp) r = cmd_compare(graph_path, part_path, part_b_path, model_name, player);
        else if (*ver)
            r = cmd_verify(graph_path, part_path, model_name, notion_name, show_witness, threads);
        else if (*exs) r = cmd_exists(graph_path, model_name, notion_name, limit, threads);
        else if (*gen)
            r = cmd_gen(kind, out_path, variant, gadget_k, rx3c_path, alpha_count, rand_n, rand_p,
                        seed);
        else r = cmd_props(graph_path, model_name, check, samples, seed);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                        .count();
        emit(r, as_json, ms);
        return r.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
