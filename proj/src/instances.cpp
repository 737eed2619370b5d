#include "acfg/instances.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace acfg {

namespace {

FriendGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges_1based) {
    FriendGraph g(n);
    for (auto [u, v] : edges_1based) g.add_edge(u - 1, v - 1);
    return g;
}

BuiltinFixture make_builtin(const std::string& name) {
    if (name == "fig1_path4") {
        BuiltinFixture f{name, graph_from_edges(4, {{1, 2}, {2, 3}, {3, 4}}), {}};
        f.structures["gamma"] = parse_partition("1 2 3 | 4", 4);
        f.structures["delta"] = parse_partition("1 2 4 | 3", 4);
        f.structures["gamma_prime"] = parse_partition("1 | 2 3 | 4", 4);
        f.structures["delta_prime"] = parse_partition("1 | 2 4 | 3", 4);
        return f;
    }
    if (name == "fig2_altruism") {
        BuiltinFixture f{
            name, graph_from_edges(10, {{1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {3, 4}}), {}};
        f.structures["gamma"] = parse_partition("1 2 | 3 | 4 | 5 | 6 | 7 | 8 | 9 | 10", 10);
        f.structures["delta"] = parse_partition("1 5 6 7 8 9 10 | 2 3 4", 10);
        return f;
    }
    if (name == "fig5_g1" || name == "fig5_g1p") {
        std::vector<std::pair<int, int>> e{{1, 3}, {1, 4}, {3, 4}, {3, 5}, {4, 5}};
        if (name == "fig5_g1p") e.push_back({1, 2});
        BuiltinFixture f{name, graph_from_edges(6, e), {}};
        f.structures["gamma"] = parse_partition("1 2 | 3 4 5 | 6", 6);
        f.structures["delta"] = parse_partition("1 2 | 3 4 5 6", 6);
        return f;
    }
    if (name == "fig5_g2" || name == "fig5_g2p") {
        std::vector<std::pair<int, int>> e{{1, 3}, {1, 4}, {3, 4}};
        if (name == "fig5_g2p") e.push_back({1, 2});
        BuiltinFixture f{name, graph_from_edges(5, e), {}};
        f.structures["gamma"] = parse_partition("1 2 3 4 | 5", 5);
        f.structures["delta"] = parse_partition("1 2 3 4 5", 5);
        return f;
    }
    if (name == "fig8_blocking") {
        BuiltinFixture f{name,
                         graph_from_edges(10, {{1, 2},
                                               {2, 3},
                                               {3, 4},
                                               {4, 5},
                                               {5, 6},
                                               {5, 7},
                                               {6, 7},
                                               {7, 8},
                                               {8, 9},
                                               {8, 10},
                                               {9, 10}}),
                         {}};
        f.structures["gamma"] = CoalitionStructure::grand(10);
        return f;
    }
    if (name == "fig9_no_popular") {
        return {name,
                graph_from_edges(10, {{1, 2},
                                      {2, 3},
                                      {3, 4},
                                      {4, 5},
                                      {4, 8},
                                      {5, 6},
                                      {6, 7},
                                      {8, 9},
                                      {9, 10}}),
                {}};
    }
    if (name == "fig10_eq_not_perfect") {
        BuiltinFixture f{name,
                         graph_from_edges(9, {{1, 2},
                                              {1, 3},
                                              {1, 4},
                                              {1, 5},
                                              {1, 9},
                                              {2, 6},
                                              {3, 6},
                                              {4, 6},
                                              {5, 6},
                                              {6, 7},
                                              {6, 8},
                                              {7, 9},
                                              {8, 9}}),
                         {}};
        f.structures["gamma"] = CoalitionStructure::grand(9);
        f.structures["delta"] = parse_partition("1 2 3 4 5 6 | 7 8 9", 9);
        return f;
    }
    throw std::invalid_argument("unknown builtin fixture: " + name);
}

}  // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{
        "fig1_path4",     "fig2_altruism", "fig5_g1",
        "fig5_g1p",       "fig5_g2",       "fig5_g2p",
        "fig8_blocking",  "fig9_no_popular", "fig10_eq_not_perfect",
    };
    return names;
}

BuiltinFixture builtin(const std::string& name) { return make_builtin(name); }

FriendGraph random_graph(int n, double edge_probability, uint64_t seed) {
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw std::invalid_argument("edge probability must be in [0, 1]");
    FriendGraph g(n);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_probability);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

CoalitionStructure random_structure(int n, std::mt19937_64& rng) {
    std::vector<uint8_t> rgs(static_cast<size_t>(n));
    uint8_t open = 0;
    for (int i = 0; i < n; ++i) {
        auto pick = static_cast<uint8_t>(std::uniform_int_distribution<int>(0, open)(rng));
        rgs[static_cast<size_t>(i)] = pick;
        if (pick == open) ++open;
    }
    return CoalitionStructure::from_rgs(n, rgs);
}

std::optional<std::string> validate_rx3c(const Rx3cInstance& inst) {
    if (inst.k < 1) return "k must be positive";
    int m = 3 * inst.k;
    if (static_cast<int>(inst.triples.size()) != m)
        return "expected " + std::to_string(m) + " triples, got " +
               std::to_string(inst.triples.size());
    std::vector<int> occurrences(static_cast<size_t>(m), 0);
    for (const auto& t : inst.triples) {
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            return "triple with repeated elements";
        for (int e : t) {
            if (e < 0 || e >= m) return "element out of range";
            ++occurrences[static_cast<size_t>(e)];
        }
    }
    for (int e = 0; e < m; ++e)
        if (occurrences[static_cast<size_t>(e)] != 3)
            return "element " + std::to_string(e + 1) + " occurs " +
                   std::to_string(occurrences[static_cast<size_t>(e)]) + " times, not 3";
    return std::nullopt;
}

Rx3cInstance planted_rx3c(int k) {
    Rx3cInstance inst;
    inst.k = k;
    for (int j = 0; j < k; ++j)
        for (int copy = 0; copy < 3; ++copy)
            inst.triples.push_back({3 * j, 3 * j + 1, 3 * j + 2});
    return inst;
}

std::vector<int> planted_cover(int k) {
    std::vector<int> cover;
    for (int j = 0; j < k; ++j) cover.push_back(3 * j);
    return cover;
}

bool is_exact_cover(const Rx3cInstance& inst, const std::vector<int>& triple_indices) {
    if (static_cast<int>(triple_indices.size()) != inst.k) return false;
    std::vector<bool> seen(static_cast<size_t>(3 * inst.k), false);
    for (int idx : triple_indices) {
        if (idx < 0 || idx >= static_cast<int>(inst.triples.size())) return false;
        for (int e : inst.triples[static_cast<size_t>(idx)]) {
            if (seen[static_cast<size_t>(e)]) return false;
            seen[static_cast<size_t>(e)] = true;
        }
    }
    return true;
}

Rx3cInstance parse_rx3c(const std::string& text) {
    std::istringstream in(text);
    Rx3cInstance inst;
    if (!(in >> inst.k) || inst.k < 1)
        throw std::runtime_error("expected a positive k on the first line");
    for (int t = 0; t < 3 * inst.k; ++t) {
        std::array<int, 3> triple{};
        for (int& e : triple) {
            if (!(in >> e))
                throw std::runtime_error("expected " + std::to_string(3 * inst.k) +
                                         " triples of three elements");
            if (e < 1 || e > 3 * inst.k)
                throw std::runtime_error("triple " + std::to_string(t + 1) + ": element " +
                                         std::to_string(e) + " out of range 1.." +
                                         std::to_string(3 * inst.k));
            --e;
        }
        std::sort(triple.begin(), triple.end());
        inst.triples.push_back(triple);
    }
    std::string rest;
    if (in >> rest) throw std::runtime_error("trailing content after the last triple");
    return inst;
}

std::string format_rx3c(const Rx3cInstance& inst) {
    std::ostringstream out;
    out << inst.k << "\n";
    for (const auto& t : inst.triples) out << t[0] + 1 << " " << t[1] + 1 << " " << t[2] + 1 << "\n";
    return out.str();
}

std::string gadget_variant_name(GadgetVariant v) {
    switch (v) {
        case GadgetVariant::MinSfCore: return "min-sf-core";
        case GadgetVariant::SumSfCore: return "sum-sf-core";
        case GadgetVariant::MinSfStrictPop: return "min-sf-strictpop";
        case GadgetVariant::SumSfStrictPop: return "sum-sf-strictpop";
    }
    throw std::logic_error("bad variant");
}

std::optional<GadgetVariant> parse_gadget_variant(const std::string& s) {
    for (GadgetVariant v : {GadgetVariant::MinSfCore, GadgetVariant::SumSfCore,
                            GadgetVariant::MinSfStrictPop, GadgetVariant::SumSfStrictPop})
        if (s == gadget_variant_name(v)) return v;
    return std::nullopt;
}

Model gadget_model(GadgetVariant v) {
    return (v == GadgetVariant::MinSfCore || v == GadgetVariant::MinSfStrictPop) ? Model::MinSF
                                                                                 : Model::SumSF;
}

namespace {

std::string class_word(PlayerClass c) {
    switch (c) {
        case PlayerClass::Alpha: return "alpha";
        case PlayerClass::Beta: return "beta";
        case PlayerClass::Zeta: return "zeta";
        case PlayerClass::Eta: return "eta";
        case PlayerClass::Delta: return "delta";
    }
    throw std::logic_error("bad class");
}

}  // namespace

std::string PlayerLabel::to_string() const {
    std::string out = class_word(cls);
    if (s >= 0) out += "_S" + std::to_string(s + 1);
    if (idx > 0) out += "_" + std::to_string(idx);
    return out;
}

std::string PlayerLabel::group(GadgetVariant v) const {
    if (cls == PlayerClass::Beta) return "Beta";
    if (cls == PlayerClass::Alpha && s < 0) return "Alpha";
    if (cls == PlayerClass::Zeta && v == GadgetVariant::SumSfCore) return "Zeta";
    return "Q_S" + std::to_string(s + 1);
}

namespace {

void add_clique(FriendGraph& g, const std::vector<int>& members) {
    for (size_t a = 0; a < members.size(); ++a)
        for (size_t b = a + 1; b < members.size(); ++b) g.add_edge(members[a], members[b]);
}

}  // namespace

GadgetGame make_gadget(const Rx3cInstance& inst, GadgetVariant variant,
                       std::optional<int> alpha_count_override) {
    if (auto err = validate_rx3c(inst)) throw std::invalid_argument("invalid instance: " + *err);
    bool core = variant == GadgetVariant::MinSfCore || variant == GadgetVariant::SumSfCore;
    if (alpha_count_override) {
        if (core)
            throw std::invalid_argument(
                "the alpha count can only be overridden in the strict-pop variants");
        if (*alpha_count_override < 0) throw std::invalid_argument("negative alpha count");
    }
    int k = inst.k;
    int m = 3 * k;  // betas, and also triples
    GadgetGame game;
    game.variant = variant;
    game.k = k;
    game.alpha_count_override = alpha_count_override;

    // Numbering: betas 0..3k-1, zetas 3k..6k-1, then the per-triple players
    // in triple order; the global alphas of the strict-pop variants go last.
    int per_s = 0, alphas = 0;
    switch (variant) {
        case GadgetVariant::MinSfCore:
        case GadgetVariant::SumSfCore: per_s = 4 * k; break;
        case GadgetVariant::MinSfStrictPop: per_s = 2, alphas = alpha_count_override.value_or(2 * k); break;
        case GadgetVariant::SumSfStrictPop: per_s = 1, alphas = alpha_count_override.value_or(5 * k); break;
    }
    int n = 2 * m + m * per_s + alphas;
    int per_s_base = 2 * m;
    int alpha_base = per_s_base + m * per_s;

    game.labels.resize(static_cast<size_t>(n));
    for (int b = 0; b < m; ++b) game.labels[static_cast<size_t>(b)] = {PlayerClass::Beta, -1, b + 1};
    for (int j = 0; j < m; ++j)
        game.labels[static_cast<size_t>(m + j)] = {PlayerClass::Zeta, j, 0};
    for (int a = 0; a < alphas; ++a)
        game.labels[static_cast<size_t>(alpha_base + a)] = {PlayerClass::Alpha, -1, a + 1};

    FriendGraph graph(n);
    std::vector<PlayerSet> blocks;
    std::vector<int> betas(static_cast<size_t>(m));
    for (int b = 0; b < m; ++b) betas[static_cast<size_t>(b)] = b;

    if (core) {
        add_clique(graph, betas);
        blocks.push_back(PlayerSet::of(n, betas));
        for (int j = 0; j < m; ++j) {
            int zeta = m + j;
            int base = per_s_base + j * per_s;  // alphas at base..base+2, deltas after
            for (int a = 0; a < 3; ++a)
                game.labels[static_cast<size_t>(base + a)] = {PlayerClass::Alpha, j, a + 1};
            for (int d = 0; d < 4 * k - 3; ++d)
                game.labels[static_cast<size_t>(base + 3 + d)] = {PlayerClass::Delta, j, d + 1};
            for (int e : inst.triples[static_cast<size_t>(j)]) graph.add_edge(zeta, e);
            for (int a = 0; a < 3; ++a) graph.add_edge(zeta, base + a);
            std::vector<int> rest(static_cast<size_t>(per_s));
            for (int p = 0; p < per_s; ++p) rest[static_cast<size_t>(p)] = base + p;
            if (variant == GadgetVariant::SumSfCore) {
                add_clique(graph, rest);  // alphas and deltas form one clique
            } else {
                add_clique(graph, {base, base + 1, base + 2, base + 3});
                std::vector<int> deltas(rest.begin() + 3, rest.end());
                add_clique(graph, deltas);
            }
            // The distinguished structure groups zeta with its triple's
            // private players in both core variants.
            std::vector<int> block = rest;
            block.push_back(zeta);
            blocks.push_back(PlayerSet::of(n, block));
        }
    } else {
        std::vector<int> ab = betas;
        for (int a = 0; a < alphas; ++a) ab.push_back(alpha_base + a);
        add_clique(graph, ab);
        blocks.push_back(PlayerSet::of(n, ab));
        for (int j = 0; j < m; ++j) {
            int zeta = m + j;
            int base = per_s_base + j * per_s;
            std::vector<int> q{zeta};
            for (int h = 0; h < per_s; ++h) {
                game.labels[static_cast<size_t>(base + h)] = {
                    PlayerClass::Eta, j, per_s == 1 ? 0 : h + 1};
                q.push_back(base + h);
            }
            add_clique(graph, q);
            for (int e : inst.triples[static_cast<size_t>(j)]) graph.add_edge(zeta, e);
            blocks.push_back(PlayerSet::of(n, q));
        }
    }

    if (variant == GadgetVariant::MinSfCore && k <= 4)
        game.warnings.push_back("k = " + std::to_string(k) +
                                " is below the size the hardness argument assumes (k > 4)");
    if (variant == GadgetVariant::SumSfCore && k <= 8)
        game.warnings.push_back("k = " + std::to_string(k) +
                                " is below the size the hardness argument assumes (k > 8)");

    game.graph = std::move(graph);
    game.gamma = CoalitionStructure(n, std::move(blocks));
    return game;
}

namespace {

// Recovers triple j from the gadget graph: zeta_j's neighbors among the
// betas. Checks the chosen triples partition the betas.
void check_cover(const GadgetGame& g, const std::vector<int>& cover) {
    int m = 3 * g.k;
    if (static_cast<int>(cover.size()) != g.k)
        throw std::invalid_argument("cover must pick exactly k triples");
    std::vector<bool> seen(static_cast<size_t>(m), false);
    for (int j : cover) {
        if (j < 0 || j >= m) throw std::invalid_argument("triple index out of range");
        for (int b : g.graph.neighbors(m + j)) {
            if (b >= m) continue;
            if (seen[static_cast<size_t>(b)])
                throw std::invalid_argument("cover is not exact: element covered twice");
            seen[static_cast<size_t>(b)] = true;
        }
    }
    for (int b = 0; b < m; ++b)
        if (!seen[static_cast<size_t>(b)])
            throw std::invalid_argument("cover is not exact: element left uncovered");
}

}  // namespace

PlayerSet cover_to_blocking(const GadgetGame& g, const std::vector<int>& cover) {
    if (g.variant != GadgetVariant::MinSfCore && g.variant != GadgetVariant::SumSfCore)
        throw std::invalid_argument("blocking coalitions come from the core variants");
    check_cover(g, cover);
    int m = 3 * g.k;
    PlayerSet c(g.graph.n());
    for (int b = 0; b < m; ++b) c.set(b);
    for (int j : cover) c.set(m + j);
    return c;
}

CoalitionStructure cover_to_rival(const GadgetGame& g, const std::vector<int>& cover) {
    if (g.variant != GadgetVariant::MinSfStrictPop && g.variant != GadgetVariant::SumSfStrictPop)
        throw std::invalid_argument("rival structures come from the strict-pop variants");
    check_cover(g, cover);
    std::vector<bool> covered(static_cast<size_t>(3 * g.k), false);
    for (int j : cover) covered[static_cast<size_t>(j)] = true;
    // gamma's blocks: Alpha+Beta first (contains player 0), then Q_S in
    // triple order; merge the covered Q_S into the first block.
    PlayerSet merged = g.gamma.coalition_of(0);
    std::vector<PlayerSet> blocks;
    for (int j = 0; j < 3 * g.k; ++j) {
        const PlayerSet& q = g.gamma.coalition_of(3 * g.k + j);
        if (covered[static_cast<size_t>(j)])
            merged |= q;
        else
            blocks.push_back(q);
    }
    blocks.push_back(std::move(merged));
    return CoalitionStructure(g.graph.n(), std::move(blocks));
}

std::string gadget_sidecar_json(const GadgetGame& g) {
    nlohmann::ordered_json doc;
    doc["schema"] = "acfg-gadget-v1";
    doc["variant"] = gadget_variant_name(g.variant);
    doc["k"] = g.k;
    doc["n"] = g.graph.n();
    if (g.alpha_count_override) doc["alpha_count_override"] = *g.alpha_count_override;
    nlohmann::ordered_json labels = nlohmann::ordered_json::object();
    for (int i = 0; i < g.graph.n(); ++i) {
        const PlayerLabel& l = g.labels[static_cast<size_t>(i)];
        labels[std::to_string(i + 1)] = {{"label", l.to_string()}, {"group", l.group(g.variant)}};
    }
    doc["labels"] = std::move(labels);
    doc["gamma"] = format_partition(g.gamma);
    doc["warnings"] = g.warnings;
    return doc.dump(2) + "\n";
}

}  // namespace acfg
