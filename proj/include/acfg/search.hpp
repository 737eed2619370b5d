#pragma once

#include <cstdint>
#include <optional>

#include "acfg/graph.hpp"
#include "acfg/partition.hpp"
#include "acfg/stability.hpp"
#include "acfg/valuation.hpp"

namespace acfg {

struct ExistenceResult {
    bool found = false;
    std::optional<CoalitionStructure> structure;
    uint64_t partitions_examined = 0;
};

// Caps for the existence sweeps. Core notions nest a 2^n subset scan and the
// (strictly) popular ones an inner partition pass per candidate, so both sit
// at the same ceiling; the popular one can be raised explicitly by callers
// who accept the cost.
inline constexpr int kExistsCap = 12;

// Exhaustive search for a structure satisfying the notion, in enumeration
// order; the first hit wins and partitions_examined counts the candidates
// checked. Shortcuts that skip enumeration entirely (partitions_examined = 0):
// always-existing notions above the cap use the guaranteed construction, a
// positive selfish-first perfect answer uses the clique-components
// characterization, and above the cap that characterization also settles the
// negative. A negative answer within the cap is always a completed scan.
// Throws when n exceeds the cap and no shortcut decides the notion.
ExistenceResult exists_stable(const FriendGraph& g, Model m, Notion s, int threads = 1,
                              std::optional<int> cap_override = std::nullopt);

// Nash-stable structure by construction: peel friendless players off as
// singletons (repeatedly, in the shrinking remainder); everyone left has a
// friend left and forms one block. Nash stable under all six models.
CoalitionStructure nash_construct(const FriendGraph& g);

// Partition into connected components. Strictly core stable under the two
// selfish-first models; no guarantee for the others.
CoalitionStructure components_structure(const FriendGraph& g);

// Closed-form individual rationality test, equivalent to verify_individual
// with the IR notion: every player has a friend in their block or is alone;
// under MinEQ a player also passes when some friend is doing at most as well.
bool check_ir_characterization(const FriendGraph& g, Model m, const CoalitionStructure& gamma);

// Perfect structures under the selfish-first models exist iff every connected
// component is a clique, in which case the components partition is the unique
// one. Exact in both directions, no enumeration.
ExistenceResult sf_perfect(const FriendGraph& g);

// Necessary condition for gamma to be perfect under SumEQ: gamma is the
// components partition and every component has diameter at most 2. A false
// result disproves perfectness; a true one proves nothing.
bool eq_perfect_necessary(const FriendGraph& g, const CoalitionStructure& gamma);

}  // namespace acfg
