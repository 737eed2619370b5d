#include "acfg/properties.hpp"

#include <functional>
#include <random>
#include <stdexcept>

#include "acfg/instances.hpp"

namespace acfg {

FriendGraph add_friendship(const FriendGraph& g, int i, int j) {
    if (i == j) throw std::invalid_argument("add_friendship: i == j");
    if (i < 0 || j < 0 || i >= g.n() || j >= g.n())
        throw std::invalid_argument("add_friendship: player out of range");
    if (g.adjacent(i, j)) throw std::invalid_argument("add_friendship: already friends");
    FriendGraph out(g.n());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    out.add_edge(i, j);
    return out;
}

std::optional<std::string> monotonicity_case_error(const MonotonicityCase& c) {
    int n = c.graph.n();
    if (c.i < 0 || c.i >= n || c.j < 0 || c.j >= n) return "player out of range";
    if (c.i == c.j) return "i and j must be distinct";
    if (c.gamma.n() != n || c.delta.n() != n) return "structure size does not match the graph";
    if (c.graph.adjacent(c.i, c.j)) return "i and j are already friends";
    bool in_gamma = c.gamma.coalition_of(c.i).test(c.j);
    bool in_delta = c.delta.coalition_of(c.i).test(c.j);
    if (c.type == MonotonicityType::TypeI) {
        if (!in_gamma || !in_delta) return "type I needs j in i's coalition in both structures";
    } else {
        if (!in_gamma || in_delta)
            return "type II needs j in i's coalition in gamma and not in delta";
    }
    if (value(c.graph, c.j, c.gamma) < value(c.graph, c.j, c.delta))
        return "j must be weakly better off in gamma";
    return std::nullopt;
}

MonotonicityOutcome monotonicity_outcome(const MonotonicityCase& c, Model m) {
    Pref before = compare(c.graph, m, c.i, c.gamma, c.delta);
    FriendGraph bonded = add_friendship(c.graph, c.i, c.j);
    Pref after = compare(bonded, m, c.i, c.gamma, c.delta);
    bool holds = true;
    if (before == Pref::FirstPreferred) holds = after == Pref::FirstPreferred;
    if (before == Pref::Indifferent) holds = after != Pref::SecondPreferred;
    return {before, after, holds};
}

bool check_monotonicity(const MonotonicityCase& c, Model m) {
    if (auto err = monotonicity_case_error(c)) throw std::invalid_argument(*err);
    return monotonicity_outcome(c, m).holds;
}

namespace {

// One steered draw of (i, j, gamma, delta) on g; nullopt when the draw
// cannot be made valid (no enemies, or the value premise fails).
std::optional<MonotonicityCase> draw_case(const FriendGraph& g, MonotonicityType type,
                                          std::mt19937_64& rng) {
    int n = g.n();
    MonotonicityCase c;
    c.graph = g;
    c.type = type;
    c.i = std::uniform_int_distribution<int>(0, n - 1)(rng);
    std::vector<int> enemies;
    for (int j = 0; j < n; ++j)
        if (j != c.i && !g.adjacent(c.i, j)) enemies.push_back(j);
    if (enemies.empty()) return std::nullopt;
    c.j = enemies[static_cast<size_t>(
        std::uniform_int_distribution<int>(0, static_cast<int>(enemies.size()) - 1)(rng))];
    c.gamma = random_structure(n, rng);
    c.delta = random_structure(n, rng);
    // Steer the draw toward the type's shape, then let the validity check
    // arbitrate (the value premise still rejects roughly half the draws).
    if (!c.gamma.coalition_of(c.i).test(c.j))
        c.gamma = move_player(c.gamma, c.j, c.gamma.coalition_of(c.i));
    bool want_in_delta = type == MonotonicityType::TypeI;
    if (want_in_delta != c.delta.coalition_of(c.i).test(c.j)) {
        if (want_in_delta)
            c.delta = move_player(c.delta, c.j, c.delta.coalition_of(c.i));
        else
            c.delta = move_player(c.delta, c.j, PlayerSet(n));
    }
    if (monotonicity_case_error(c)) return std::nullopt;
    return c;
}

MonotonicityReport sweep(const std::function<const FriendGraph&(std::mt19937_64&)>& next_graph,
                         Model m, MonotonicityType type, int samples, uint64_t seed) {
    std::mt19937_64 rng(seed);
    MonotonicityReport report;
    long attempts = 0;
    long attempt_cap = 2000L * std::max(samples, 1);
    while (report.samples < samples) {
        if (++attempts > attempt_cap)
            throw std::runtime_error("monotonicity sweep could not draw enough valid cases");
        auto c = draw_case(next_graph(rng), type, rng);
        if (!c) continue;
        ++report.samples;
        MonotonicityOutcome outcome = monotonicity_outcome(*c, m);
        if (outcome.before != Pref::SecondPreferred) ++report.premise_hits;
        if (!outcome.holds) {
            ++report.violations;
            if (!report.first_violation) report.first_violation = std::move(*c);
        }
    }
    return report;
}

}  // namespace

MonotonicityReport monotonicity_sweep(Model m, MonotonicityType type, int samples,
                                      int max_n, uint64_t seed) {
    if (max_n < 3) throw std::invalid_argument("monotonicity_sweep: max_n must be at least 3");
    FriendGraph g(0);
    auto next_graph = [&](std::mt19937_64& rng) -> const FriendGraph& {
        int n = std::uniform_int_distribution<int>(3, max_n)(rng);
        double p = std::uniform_real_distribution<double>(0.15, 0.85)(rng);
        g = random_graph(n, p, rng());
        return g;
    };
    return sweep(next_graph, m, type, samples, seed);
}

MonotonicityReport monotonicity_sweep_on(const FriendGraph& g, Model m, MonotonicityType type,
                                         int samples, uint64_t seed) {
    bool has_enemies = false;
    for (int i = 0; i < g.n() && !has_enemies; ++i)
        for (int j = i + 1; j < g.n() && !has_enemies; ++j)
            if (!g.adjacent(i, j)) has_enemies = true;
    if (!has_enemies) throw std::invalid_argument("the graph has no enemy pair");
    auto next_graph = [&](std::mt19937_64&) -> const FriendGraph& { return g; };
    return sweep(next_graph, m, type, samples, seed);
}

FriendGraph sovereignty_construct(int n, int i, const CoalitionStructure& gamma) {
    if (gamma.n() != n) throw std::invalid_argument("structure size does not match n");
    if (i < 0 || i >= n) throw std::invalid_argument("player out of range");
    FriendGraph g(n);
    auto members = gamma.coalition_of(i).members();
    for (size_t a = 0; a < members.size(); ++a)
        for (size_t b = a + 1; b < members.size(); ++b)
            g.add_edge(members[a], members[b]);
    return g;
}

UnanimityReport check_unanimity_sample(const FriendGraph& g, Model m, int trials,
                                       uint64_t seed) {
    std::mt19937_64 rng(seed);
    int n = g.n();
    UnanimityReport report;
    for (int t = 0; t < trials; ++t) {
        int i = std::uniform_int_distribution<int>(0, n - 1)(rng);
        CoalitionStructure gamma = random_structure(n, rng);
        CoalitionStructure delta = random_structure(n, rng);
        ++report.samples;
        bool all_rise = value(g, i, delta) > value(g, i, gamma);
        for (int j : g.neighbors(i)) {
            if (!all_rise) break;
            all_rise = value(g, j, delta) > value(g, j, gamma);
        }
        if (!all_rise) continue;
        ++report.premise_hits;
        if (compare(g, m, i, delta, gamma) != Pref::FirstPreferred) ++report.violations;
    }
    return report;
}

}  // namespace acfg
