#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "acfg/bigint.hpp"
#include "acfg/graph.hpp"
#include "acfg/partition.hpp"

namespace acfg {

// The six altruistic preference models: selfish-first, equal-treatment and
// altruistic-treatment, each in a sum-based and a min-based flavour.
enum class Model {
    SumSF,
    SumEQ,
    SumAL,
    MinSF,
    MinEQ,
    MinAL,
};

inline constexpr std::array<Model, 6> kAllModels = {
    Model::SumSF, Model::SumEQ, Model::SumAL,
    Model::MinSF, Model::MinEQ, Model::MinAL,
};

bool model_is_sum_based(Model m);
bool model_is_min_based(Model m);

std::string model_name(Model m);
// Case-insensitive: "sumsf", "SumSF", "SUMSF" all work. nullopt on junk.
std::optional<Model> parse_model(const std::string& s);

enum class Pref {
    FirstPreferred,
    Indifferent,
    SecondPreferred,
};

// Friend-oriented coalition value of player i for the coalition containing i:
// n * |friends of i in C| - |enemies of i in C|. C must contain i.
int value(const FriendGraph& g, int i, const PlayerSet& coalition);

// Same, for i's block in gamma.
int value(const FriendGraph& g, int i, const CoalitionStructure& gamma);

// Aggregates over i's friends, all evaluated at their own blocks in gamma.
// friend_sum/friend_min exclude i; the _incl variants include i. The min of
// nobody is 0 (only possible in the exclusive variant, when i is friendless).
int friend_sum(const FriendGraph& g, int i, const CoalitionStructure& gamma);
int friend_sum_incl(const FriendGraph& g, int i, const CoalitionStructure& gamma);
int friend_min(const FriendGraph& g, int i, const CoalitionStructure& gamma);
int friend_min_incl(const FriendGraph& g, int i, const CoalitionStructure& gamma);

// v_i(gamma) for every player at once; cheaper than n single calls.
std::vector<int> value_vector(const FriendGraph& g, const CoalitionStructure& gamma);

// The scalar utility with weight M = n^3. Exact, hence Bigint.
Bigint utility(const FriendGraph& g, Model m, int i, const CoalitionStructure& gamma);

// (primary, secondary) such that lexicographic comparison of the pair agrees
// with comparison of utility(). Secondary is 0 for the equal-treatment models.
std::pair<int64_t, int64_t> utility_key(const FriendGraph& g, Model m, int i,
                                        const CoalitionStructure& gamma);

// All players' keys at once, reusing one value vector.
std::vector<std::pair<int64_t, int64_t>> utility_keys(const FriendGraph& g, Model m,
                                                      const CoalitionStructure& gamma);

// How i ranks gamma against delta under m.
Pref compare(const FriendGraph& g, Model m, int i, const CoalitionStructure& gamma,
             const CoalitionStructure& delta);

// (|{i : gamma strictly preferred}|, |{i : delta strictly preferred}|)
std::pair<int, int> count_prefers(const FriendGraph& g, Model m,
                                  const CoalitionStructure& gamma,
                                  const CoalitionStructure& delta);

}  // namespace acfg
