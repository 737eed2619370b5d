#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "acfg/graph.hpp"
#include "acfg/partition.hpp"
#include "acfg/valuation.hpp"

namespace acfg {

// g plus the edge {i, j}. Throws if they are already friends or i == j.
FriendGraph add_friendship(const FriendGraph& g, int i, int j);

enum class MonotonicityType {
    TypeI,   // j sits in i's block in both structures
    TypeII,  // j sits in i's block in gamma but not in delta
};

// A single friendship-monotonicity scenario: in `graph` the players i and j
// are enemies; the question is whether i's ranking of gamma vs delta survives
// adding the edge {i, j}.
struct MonotonicityCase {
    FriendGraph graph;
    int i = -1, j = -1;
    CoalitionStructure gamma;
    CoalitionStructure delta;
    MonotonicityType type = MonotonicityType::TypeI;
};

// nullopt if the case is well-formed, else a description of what is off:
// i == j, existing friendship, j's position not matching the type, or
// v_j(gamma) < v_j(delta).
std::optional<std::string> monotonicity_case_error(const MonotonicityCase& c);

struct MonotonicityOutcome {
    Pref before;  // i's ranking of (gamma, delta) in graph
    Pref after;   // same ranking after add_friendship(graph, i, j)
    bool holds;   // strict stays strict, indifference stays weak
};

MonotonicityOutcome monotonicity_outcome(const MonotonicityCase& c, Model m);

// True iff the monotonicity implication holds for this case. Throws
// std::invalid_argument (with the monotonicity_case_error text) on an
// ill-formed case, so broken inputs never masquerade as failures.
bool check_monotonicity(const MonotonicityCase& c, Model m);

struct MonotonicityReport {
    int samples = 0;       // valid cases tested (invalid draws are redrawn)
    int premise_hits = 0;  // cases where i did not already favour delta
    int violations = 0;
    std::optional<MonotonicityCase> first_violation;
};

// Random sweep: draws graphs up to max_n players, enemy pairs (i, j) and
// structure pairs, keeps draws satisfying the case invariants, and tests the
// implication. premise_hits counts the non-vacuous cases so an all-vacuous
// pass is visible in the report.
MonotonicityReport monotonicity_sweep(Model m, MonotonicityType type, int samples,
                                      int max_n, uint64_t seed);

// Same sweep on one fixed graph; throws if the graph has no enemy pair.
MonotonicityReport monotonicity_sweep_on(const FriendGraph& g, Model m,
                                         MonotonicityType type, int samples, uint64_t seed);

// The graph in which coalition structure gamma is (weakly) optimal for
// player i: a clique on i's block, no other edges.
FriendGraph sovereignty_construct(int n, int i, const CoalitionStructure& gamma);

struct UnanimityReport {
    int samples = 0;
    int premise_hits = 0;  // draws where all of i and i's friends strictly improved
    int violations = 0;
};

// Random sweep on a fixed graph: draws (i, gamma, delta); whenever every
// member of F_i and i itself has strictly higher value in delta than in
// gamma, i must strictly prefer delta.
UnanimityReport check_unanimity_sample(const FriendGraph& g, Model m, int trials,
                                       uint64_t seed);

}  // namespace acfg
