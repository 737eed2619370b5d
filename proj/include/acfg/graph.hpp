#pragma once

#include <string>
#include <vector>

#include "acfg/sets.hpp"

namespace acfg {

// Network of friends: a simple undirected graph on players 0..n-1.
// Adjacency means mutual friendship; non-adjacency means enmity.
class FriendGraph {
public:
    FriendGraph() = default;
    explicit FriendGraph(int n);

    int n() const { return n_; }
    int edge_count() const { return m_; }

    // Throws on self-loops or out-of-range endpoints; duplicates collapse.
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u)].test(v); }

    const PlayerSet& friends(int i) const { return adj_[static_cast<size_t>(i)]; }
    PlayerSet enemies(int i) const;
    const std::vector<int>& neighbors(int i) const { return nbr_[static_cast<size_t>(i)]; }
    int degree(int i) const { return static_cast<int>(nbr_[static_cast<size_t>(i)].size()); }

    // Sorted list of edges {u, v} with u < v.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const FriendGraph&) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<PlayerSet> adj_;
    std::vector<std::vector<int>> nbr_;
};

// Parses the graph file format: first line "n m", then m lines "u v" (1-based).
// Throws std::runtime_error naming the offending line on malformed input,
// out-of-range vertices, or self-loops. Duplicate edges collapse.
FriendGraph parse_graph(const std::string& text);

// Serializes to the same format, edges sorted, 1-based.
std::string format_graph(const FriendGraph& g);

// Maximal connected vertex sets, ordered by minimum member.
std::vector<PlayerSet> connected_components(const FriendGraph& g);

// True iff all pairs in the nonempty set s are adjacent.
bool is_clique(const FriendGraph& g, const PlayerSet& s);

// Greatest pairwise distance inside the subgraph induced by the nonempty set s.
// Returns -1 when that subgraph is disconnected ("infinite").
int diameter(const FriendGraph& g, const PlayerSet& s);

}  // namespace acfg
