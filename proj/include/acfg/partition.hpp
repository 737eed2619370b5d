#pragma once

#include <string>
#include <vector>

#include "acfg/sets.hpp"

namespace acfg {

// A partition of the player set into nonempty, pairwise disjoint coalitions.
// Canonical form: blocks ordered by minimum member. Two structures are equal
// iff their canonical forms are identical. The empty coalition is a legal
// deviation target but never a block.
class CoalitionStructure {
public:
    CoalitionStructure() = default;

    // Canonicalizes; throws std::invalid_argument unless the blocks are
    // nonempty, disjoint, and cover the universe.
    CoalitionStructure(int n, std::vector<PlayerSet> blocks);

    // From a restricted-growth string: digit rgs[i] is i's block id.
    static CoalitionStructure from_rgs(int n, const std::vector<uint8_t>& rgs);

    static CoalitionStructure singletons(int n);
    static CoalitionStructure grand(int n);

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<PlayerSet>& blocks() const { return blocks_; }
    const PlayerSet& block(int b) const { return blocks_[static_cast<size_t>(b)]; }

    // Index of the block containing player i.
    int block_index_of(int i) const { return block_of_[static_cast<size_t>(i)]; }
    const PlayerSet& coalition_of(int i) const {
        return blocks_[static_cast<size_t>(block_of_[static_cast<size_t>(i)])];
    }

    bool operator==(const CoalitionStructure&) const = default;

private:
    int n_ = 0;
    std::vector<PlayerSet> blocks_;
    std::vector<int> block_of_;
};

// The structure arising when player i moves to target coalition c, which must
// be a block of gamma or the empty set (and not i's own block). i's old block
// is dropped if the move empties it.
CoalitionStructure move_player(const CoalitionStructure& gamma, int i, const PlayerSet& c);

// The structure arising when the nonempty coalition c carves itself out: all
// members leave their blocks (emptied blocks dropped) and form c together.
// Equals gamma when c already is a block of gamma.
CoalitionStructure carve_out(const CoalitionStructure& gamma, const PlayerSet& c);

// Parses one structure from "1 2 | 3 4 | 5" (1-based members, "|" between
// blocks). Throws std::runtime_error unless the blocks partition 1..n.
CoalitionStructure parse_partition(const std::string& line, int n);

// Multi-line partition file: one structure per line, blank lines skipped.
std::vector<CoalitionStructure> parse_partition_file(const std::string& text, int n);

// Canonical serialization, inverse of parse_partition.
std::string format_partition(const CoalitionStructure& gamma);

// "{1, 2} {3}" style, for witnesses in human-readable reports.
std::string format_coalition(const PlayerSet& c);

}  // namespace acfg
