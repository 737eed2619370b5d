#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "acfg/graph.hpp"
#include "acfg/partition.hpp"
#include "acfg/valuation.hpp"

namespace acfg {

// A named example graph, bundled with the distinguished coalition structures
// the example discusses (keys like "gamma", "delta").
struct BuiltinFixture {
    std::string name;
    FriendGraph graph;
    std::map<std::string, CoalitionStructure> structures;
};

const std::vector<std::string>& builtin_names();
// Throws std::invalid_argument on an unknown name.
BuiltinFixture builtin(const std::string& name);

// Seeded Erdos-Renyi graph: each pair independently an edge with probability p.
FriendGraph random_graph(int n, double edge_probability, uint64_t seed);

// Random coalition structure, drawn by assigning players to blocks one at a
// time (uniform over the open blocks plus a fresh one).
CoalitionStructure random_structure(int n, std::mt19937_64& rng);

// Restricted exact cover by 3-sets: ground set {0..3k-1}, a collection of 3k
// triples (repeats allowed) in which every element occurs in exactly three
// triples. An exact cover is a set of k pairwise disjoint triples.
struct Rx3cInstance {
    int k = 0;
    std::vector<std::array<int, 3>> triples;  // each sorted ascending
};

// nullopt when valid, else what is wrong.
std::optional<std::string> validate_rx3c(const Rx3cInstance& inst);

// Instance with an obvious planted cover: the k consecutive-triple blocks of
// {0..3k-1}, each listed three times. planted_cover() picks one copy of each.
Rx3cInstance planted_rx3c(int k);
std::vector<int> planted_cover(int k);

bool is_exact_cover(const Rx3cInstance& inst, const std::vector<int>& triple_indices);

// "k" on the first line, then 3k lines of three 1-based elements.
Rx3cInstance parse_rx3c(const std::string& text);
std::string format_rx3c(const Rx3cInstance& inst);

enum class GadgetVariant {
    MinSfCore,
    SumSfCore,
    MinSfStrictPop,
    SumSfStrictPop,
};

std::string gadget_variant_name(GadgetVariant v);  // "min-sf-core" etc.
std::optional<GadgetVariant> parse_gadget_variant(const std::string& s);
// The model whose hardness the variant targets: MinSF or SumSF.
Model gadget_model(GadgetVariant v);

enum class PlayerClass { Alpha, Beta, Zeta, Eta, Delta };

struct PlayerLabel {
    PlayerClass cls;
    // -1 for the global groups; otherwise the 0-based triple index S.
    int s = -1;
    // 1-based position within its class in the group (beta_4, alpha_S2_1, ...).
    int idx = 0;

    std::string to_string() const;  // e.g. "beta_4", "zeta_S2", "delta_S2_7"
    // Group tag: "Alpha", "Beta", "Zeta" (sum-core zeta players sit outside
    // their Q), or "Q_S3".
    std::string group(GadgetVariant v) const;
};

// A reduction gadget: the graph, the distinguished structure whose stability
// encodes the RX3C answer, and per-player labels for reports.
struct GadgetGame {
    GadgetVariant variant;
    int k = 0;
    FriendGraph graph;
    CoalitionStructure gamma;
    std::vector<PlayerLabel> labels;
    std::optional<int> alpha_count_override;
    std::vector<std::string> warnings;
};

// Builds the gadget for the instance. alpha_count_override replaces the
// default number of alpha players (2k for the min variant, 5k for the sum
// variant) and applies to the strict-pop variants only. Below the size the
// hardness argument needs (k > 4 min-core, k > 8 sum-core) the construction
// still works and a warning is recorded. Throws on an invalid instance.
GadgetGame make_gadget(const Rx3cInstance& inst, GadgetVariant variant,
                       std::optional<int> alpha_count_override = std::nullopt);

// For the core variants: the coalition Beta + {zeta_S : S in cover}, which
// blocks gamma when the cover is exact. Throws unless the variant matches and
// the indices form an exact cover.
PlayerSet cover_to_blocking(const GadgetGame& g, const std::vector<int>& cover);

// For the strict-pop variants: the rival structure that merges Alpha, Beta
// and the covering Q_S into one block and keeps the other Q_S intact. Ties
// gamma in the popularity count when the cover is exact.
CoalitionStructure cover_to_rival(const GadgetGame& g, const std::vector<int>& cover);

// Sidecar metadata for generated gadgets (labels, gamma, variant, k,
// warnings) as a JSON string.
std::string gadget_sidecar_json(const GadgetGame& g);

}  // namespace acfg
