#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "acfg/graph.hpp"
#include "acfg/partition.hpp"
#include "acfg/valuation.hpp"

namespace acfg {

enum class Notion {
    Nash,
    IndividuallyRational,
    IndividuallyStable,
    ContractuallyIndividuallyStable,
    TotallyIndividuallyStable,
    Core,
    StrictCore,
    Popular,
    StrictlyPopular,
    Perfect,
};

inline constexpr std::array<Notion, 10> kAllNotions = {
    Notion::Nash,
    Notion::IndividuallyRational,
    Notion::IndividuallyStable,
    Notion::ContractuallyIndividuallyStable,
    Notion::TotallyIndividuallyStable,
    Notion::Core,
    Notion::StrictCore,
    Notion::Popular,
    Notion::StrictlyPopular,
    Notion::Perfect,
};

std::string notion_name(Notion s);
// Accepts the CLI vocabulary: nash, ir, is, cis, tis, core, strictcore,
// popular, strictpopular, perfect (case-insensitive).
std::optional<Notion> parse_notion(const std::string& s);

// Witness types. Player indices are 0-based internally; formatting for
// output adds 1.

// Player i improves by moving to target (empty target = going alone).
struct PlayerMove {
    int player;
    std::vector<int> target;  // members of the destination block, sorted
};

// Coalition whose members all want to break off. weak means weakly blocking
// (everyone at least as happy, someone strictly).
struct BlockingCoalition {
    std::vector<int> members;
    bool weak;
};

// A rival partition preferred by more players (popularity) resp. at least as
// many (strict popularity).
struct RivalPartition {
    CoalitionStructure rival;
    int prefer_here;   // # players strictly preferring the checked structure
    int prefer_rival;  // # players strictly preferring the rival
};

// A player together with a partition they strictly prefer.
struct PlayerAndPartition {
    int player;
    CoalitionStructure rival;
};

using Witness = std::variant<PlayerMove, BlockingCoalition, RivalPartition, PlayerAndPartition>;

struct Verdict {
    bool stable;
    std::optional<Witness> witness;  // set iff !stable
};

std::string format_witness(const Witness& w);

// Single-player notions: Nash, IR, IS, CIS, TIS. Deterministic first witness
// in scan order: players ascending, then targets in block order of gamma,
// then the empty coalition.
Verdict verify_individual(const FriendGraph& g, Model m, Notion s,
                          const CoalitionStructure& gamma);

// Does nonempty C block gamma (all members strictly better off after carving
// C out)? Weak version: all at least as well off, someone strictly.
bool is_blocking(const FriendGraph& g, Model m, const CoalitionStructure& gamma,
                 const PlayerSet& c);
bool is_weakly_blocking(const FriendGraph& g, Model m, const CoalitionStructure& gamma,
                        const PlayerSet& c);

// Core / strict core via subset scan (n <= kMaxSubsetN). Witness: first
// blocking coalition in ascending bit-pattern order.
Verdict verify_core(const FriendGraph& g, Model m, const CoalitionStructure& gamma,
                    bool strict, int threads = 1);

// Popularity via full enumeration (n <= kMaxEnumerationN). Witness: first
// rival in enumeration order that defeats gamma (resp. ties or defeats).
Verdict verify_popular(const FriendGraph& g, Model m, const CoalitionStructure& gamma,
                       bool strict, int threads = 1);

// Perfectness via full enumeration. Witness: first (rival, player) with the
// rival outermost in enumeration order and players ascending inside.
Verdict verify_perfect(const FriendGraph& g, Model m, const CoalitionStructure& gamma,
                       int threads = 1);

// Dispatcher over all ten notions.
Verdict verify(const FriendGraph& g, Model m, Notion s, const CoalitionStructure& gamma,
               int threads = 1);

}  // namespace acfg
