#include "acfg/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace acfg {

FriendGraph::FriendGraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative player count");
    adj_.assign(static_cast<size_t>(n), PlayerSet(n));
    nbr_.assign(static_cast<size_t>(n), {});
}

void FriendGraph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (adj_[static_cast<size_t>(u)].test(v)) return;
    adj_[static_cast<size_t>(u)].set(v);
    adj_[static_cast<size_t>(v)].set(u);
    nbr_[static_cast<size_t>(u)].insert(
        std::lower_bound(nbr_[static_cast<size_t>(u)].begin(), nbr_[static_cast<size_t>(u)].end(), v), v);
    nbr_[static_cast<size_t>(v)].insert(
        std::lower_bound(nbr_[static_cast<size_t>(v)].begin(), nbr_[static_cast<size_t>(v)].end(), u), u);
    ++m_;
}

PlayerSet FriendGraph::enemies(int i) const {
    PlayerSet e = PlayerSet::full(n_).minus(adj_[static_cast<size_t>(i)]);
    e.reset(i);
    return e;
}

std::vector<std::pair<int, int>> FriendGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : nbr_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

// Splits into nonempty whitespace-trimmed lines, keeping 1-based numbers for
// error messages.
std::vector<std::pair<int, std::string>> nonblank_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        out.emplace_back(lineno, line.substr(a, b - a + 1));
    }
    return out;
}

[[noreturn]] void bad_line(int lineno, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

FriendGraph parse_graph(const std::string& text) {
    auto lines = nonblank_lines(text);
    if (lines.empty()) throw std::runtime_error("empty graph file");
    int n = 0, m = 0;
    {
        std::istringstream head(lines[0].second);
        std::string extra;
        if (!(head >> n >> m) || (head >> extra))
            bad_line(lines[0].first, "expected header \"n m\"");
        if (n < 0 || m < 0) bad_line(lines[0].first, "negative count in header");
    }
    if (static_cast<int>(lines.size()) - 1 != m)
        throw std::runtime_error("header announces " + std::to_string(m) + " edges but file has " +
                                 std::to_string(lines.size() - 1) + " edge lines");
    FriendGraph g(n);
    for (size_t k = 1; k < lines.size(); ++k) {
        std::istringstream es(lines[k].second);
        int u = 0, v = 0;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra)) bad_line(lines[k].first, "expected edge \"u v\"");
        if (u < 1 || u > n || v < 1 || v > n)
            bad_line(lines[k].first, "vertex out of range 1.." + std::to_string(n));
        if (u == v) bad_line(lines[k].first, "self-loop");
        g.add_edge(u - 1, v - 1);
    }
    return g;
}

std::string format_graph(const FriendGraph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.n() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

std::vector<PlayerSet> connected_components(const FriendGraph& g) {
    int n = g.n();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<PlayerSet> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        PlayerSet comp(n);
        std::deque<int> queue{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            comp.set(u);
            for (int v : g.neighbors(u)) {
                if (!seen[static_cast<size_t>(v)]) {
                    seen[static_cast<size_t>(v)] = 1;
                    queue.push_back(v);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_clique(const FriendGraph& g, const PlayerSet& s) {
    if (s.empty()) throw std::invalid_argument("is_clique of empty set");
    bool ok = true;
    s.for_each([&](int i) {
        if (!ok) return;
        // i must be adjacent to every other member.
        if (g.friends(i).intersection_count(s) != s.count() - 1) ok = false;
    });
    return ok;
}

int diameter(const FriendGraph& g, const PlayerSet& s) {
    if (s.empty()) throw std::invalid_argument("diameter of empty set");
    auto members = s.members();
    int best = 0;
    for (int src : members) {
        // BFS inside the induced subgraph.
        std::vector<int> dist(static_cast<size_t>(g.n()), -1);
        std::deque<int> queue{src};
        dist[static_cast<size_t>(src)] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (s.test(v) && dist[static_cast<size_t>(v)] < 0) {
                    dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (int t : members) {
            if (dist[static_cast<size_t>(t)] < 0) return -1;
            best = std::max(best, dist[static_cast<size_t>(t)]);
        }
    }
    return best;
}

}  // namespace acfg
