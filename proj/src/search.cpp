#include "acfg/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <stdexcept>
#include <thread>

#include "acfg/enumerate.hpp"

namespace acfg {

CoalitionStructure nash_construct(const FriendGraph& g) {
    int n = g.n();
    PlayerSet rest = PlayerSet::full(n);
    std::vector<PlayerSet> blocks;
    bool peeled = true;
    while (peeled) {
        peeled = false;
        for (int i = 0; i < n; ++i) {
            if (rest.test(i) && !g.friends(i).intersects(rest)) {
                rest.reset(i);
                blocks.push_back(PlayerSet::of(n, {i}));
                peeled = true;
            }
        }
    }
    if (rest.any()) blocks.push_back(rest);
    return CoalitionStructure(n, std::move(blocks));
}

CoalitionStructure components_structure(const FriendGraph& g) {
    return CoalitionStructure(g.n(), connected_components(g));
}

bool check_ir_characterization(const FriendGraph& g, Model m, const CoalitionStructure& gamma) {
    int n = g.n();
    std::vector<int> v;
    if (m == Model::MinEQ) v = value_vector(g, gamma);
    for (int i = 0; i < n; ++i) {
        const PlayerSet& block = gamma.coalition_of(i);
        if (g.friends(i).intersects(block)) continue;
        if (block.count() == 1) continue;
        if (m == Model::MinEQ) {
            bool covered = false;
            for (int j : g.neighbors(i))
                if (v[static_cast<size_t>(j)] <= v[static_cast<size_t>(i)]) covered = true;
            if (covered) continue;
        }
        return false;
    }
    return true;
}

ExistenceResult sf_perfect(const FriendGraph& g) {
    auto comps = connected_components(g);
    for (const auto& c : comps)
        if (!is_clique(g, c)) return {false, std::nullopt, 0};
    return {true, CoalitionStructure(g.n(), std::move(comps)), 0};
}

bool eq_perfect_necessary(const FriendGraph& g, const CoalitionStructure& gamma) {
    auto comps = connected_components(g);
    if (gamma != CoalitionStructure(g.n(), comps)) return false;
    for (const auto& c : comps)
        if (diameter(g, c) > 2) return false;
    return true;
}

namespace {

// Per-partition utility keys computed straight off a restricted growth
// string, packed order-preservingly into one int32 per player:
//     packed = primary * 2^16 + secondary + 2^15.
// Valid because |primary| and |secondary| are at most n(n-1)^2 < 32768 for
// n <= 20. Needs n <= 20 so block masks fit in uint32.
class RgsKeyEngine {
public:
    RgsKeyEngine(const FriendGraph& g, Model m) : g_(g), m_(m), n_(g.n()) {
        adj_.resize(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            uint32_t mask = 0;
            for (int j : g.neighbors(i)) mask |= uint32_t{1} << j;
            adj_[static_cast<size_t>(i)] = mask;
        }
    }

    void keys(const std::vector<uint8_t>& rgs, int32_t* out) const {
        uint32_t bm[kMaxEnumerationN] = {0};
        int v[kMaxEnumerationN];
        for (int i = 0; i < n_; ++i) bm[rgs[static_cast<size_t>(i)]] |= uint32_t{1} << i;
        for (int i = 0; i < n_; ++i) {
            uint32_t block = bm[rgs[static_cast<size_t>(i)]];
            int f = std::popcount(adj_[static_cast<size_t>(i)] & block);
            v[i] = n_ * f - (std::popcount(block) - 1 - f);
        }
        for (int i = 0; i < n_; ++i) {
            int primary, secondary;
            bool any = false;
            int sum = 0, mn = 0;
            for (int j : g_.neighbors(i)) {
                sum += v[j];
                mn = any ? std::min(mn, v[j]) : v[j];
                any = true;
            }
            switch (m_) {
                case Model::SumSF: primary = v[i]; secondary = sum; break;
                case Model::MinSF: primary = v[i]; secondary = any ? mn : 0; break;
                case Model::SumEQ: primary = sum + v[i]; secondary = 0; break;
                case Model::MinEQ: primary = any ? std::min(mn, v[i]) : v[i]; secondary = 0; break;
                case Model::SumAL: primary = sum; secondary = v[i]; break;
                case Model::MinAL: primary = any ? mn : 0; secondary = v[i]; break;
                default: throw std::logic_error("bad model");
            }
            out[i] = primary * 65536 + secondary + 32768;
        }
    }

private:
    const FriendGraph& g_;
    Model m_;
    int n_;
    std::vector<uint32_t> adj_;
};

struct FoundHit {
    uint64_t index = UINT64_MAX;
    CoalitionStructure structure;
};

// Runs fn(t) on `threads` workers.
void run_workers(int threads, const std::function<void(int)>& fn) {
    if (threads <= 1) {
        fn(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(fn, t);
    for (auto& th : pool) th.join();
}

// First partition (by enumeration index) satisfying `stable`, scanning with
// worker threads. Deterministic: the minimum-index hit wins no matter the
// thread count. Returns (index, structure) or nothing.
std::optional<FoundHit> first_stable(int n, int threads,
                                     const std::function<bool(const CoalitionStructure&)>& stable) {
    if (threads < 1) threads = 1;
    uint64_t total = bell_u64(n);
    std::atomic<uint64_t> best{UINT64_MAX};
    std::vector<FoundHit> hits(static_cast<size_t>(threads));
    run_workers(threads, [&](int t) {
        uint64_t chunk = (total + static_cast<uint64_t>(threads) - 1) / static_cast<uint64_t>(threads);
        uint64_t lo = static_cast<uint64_t>(t) * chunk;
        uint64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) return;
        PartitionCursor cur(n);
        cur.seek(lo);
        for (uint64_t idx = lo; idx < hi && cur.next(); ++idx) {
            if (best.load(std::memory_order_relaxed) < idx) return;
            CoalitionStructure part = cur.make();
            if (stable(part)) {
                hits[static_cast<size_t>(t)] = {idx, std::move(part)};
                uint64_t curbest = best.load(std::memory_order_relaxed);
                while (idx < curbest && !best.compare_exchange_weak(curbest, idx)) {
                }
                return;
            }
        }
    });
    uint64_t idx = best.load();
    if (idx == UINT64_MAX) return std::nullopt;
    for (auto& h : hits)
        if (h.index == idx) return std::move(h);
    return std::nullopt;
}

// Existence sweep for popularity: precomputes every partition's packed keys
// once (the sweep is quadratic in Bell(n), so per-pair work must be a few
// integer ops), then scans candidates in enumeration order. Each worker keeps
// a move-to-front cache of partitions that recently beat a candidate; a
// candidate surviving the cache gets the full quadratic check.
ExistenceResult exists_popular(const FriendGraph& g, Model m, bool strict, int threads) {
    int n = g.n();
    uint64_t total = bell_u64(n);
    RgsKeyEngine engine(g, m);
    std::vector<int32_t> table(total * static_cast<uint64_t>(n));
    {
        PartitionCursor cur(n);
        uint64_t idx = 0;
        while (cur.next()) {
            engine.keys(cur.rgs(), table.data() + idx * static_cast<uint64_t>(n));
            ++idx;
        }
    }
    // defeated(a, b): does b get strictly more votes than a (>= for strict)?
    auto defeated = [&](uint64_t a, uint64_t b) {
        const int32_t* ka = table.data() + a * static_cast<uint64_t>(n);
        const int32_t* kb = table.data() + b * static_cast<uint64_t>(n);
        int da = 0, db = 0;
        for (int i = 0; i < n; ++i) {
            da += ka[i] > kb[i];
            db += ka[i] < kb[i];
        }
        if (a == b) return false;
        return strict ? db >= da : db > da;
    };
    if (threads < 1) threads = 1;
    std::atomic<uint64_t> best{UINT64_MAX};
    run_workers(threads, [&](int t) {
        uint64_t chunk = (total + static_cast<uint64_t>(threads) - 1) / static_cast<uint64_t>(threads);
        uint64_t lo = static_cast<uint64_t>(t) * chunk;
        uint64_t hi = std::min(total, lo + chunk);
        std::vector<uint64_t> cache;  // recent beaters, front = hottest
        for (uint64_t cand = lo; cand < hi; ++cand) {
            if (best.load(std::memory_order_relaxed) < cand) return;
            bool dead = false;
            for (size_t ci = 0; ci < cache.size(); ++ci) {
                if (defeated(cand, cache[ci])) {
                    if (ci > 0) std::swap(cache[ci], cache[ci - 1]);
                    dead = true;
                    break;
                }
            }
            if (!dead) {
                for (uint64_t rival = 0; rival < total; ++rival) {
                    if (defeated(cand, rival)) {
                        cache.insert(cache.begin(), rival);
                        if (cache.size() > 512) cache.pop_back();
                        dead = true;
                        break;
                    }
                }
            }
            if (!dead) {
                uint64_t curbest = best.load(std::memory_order_relaxed);
                while (cand < curbest && !best.compare_exchange_weak(curbest, cand)) {
                }
                return;
            }
        }
    });
    uint64_t idx = best.load();
    if (idx == UINT64_MAX) return {false, std::nullopt, total};
    PartitionCursor cur(n);
    cur.seek(idx);
    cur.next();
    return {true, cur.make(), idx + 1};
}

// Perfectness existence: one pass records every player's best achievable key
// over all partitions; a second pass returns the first partition where every
// player attains their maximum (a structure is perfect iff it does).
ExistenceResult exists_perfect_scan(const FriendGraph& g, Model m, int threads) {
    int n = g.n();
    uint64_t total = bell_u64(n);
    RgsKeyEngine engine(g, m);
    std::vector<int32_t> maxima(static_cast<size_t>(n), INT32_MIN);
    {
        // The maxima pass splits cleanly too, but it is linear and cheap;
        // keep it sequential for simplicity.
        PartitionCursor cur(n);
        int32_t keys[kMaxEnumerationN];
        while (cur.next()) {
            engine.keys(cur.rgs(), keys);
            for (int i = 0; i < n; ++i)
                maxima[static_cast<size_t>(i)] = std::max(maxima[static_cast<size_t>(i)], keys[i]);
        }
    }
    if (threads < 1) threads = 1;
    std::atomic<uint64_t> best{UINT64_MAX};
    run_workers(threads, [&](int t) {
        uint64_t chunk = (total + static_cast<uint64_t>(threads) - 1) / static_cast<uint64_t>(threads);
        uint64_t lo = static_cast<uint64_t>(t) * chunk;
        uint64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) return;
        PartitionCursor cur(n);
        cur.seek(lo);
        int32_t keys[kMaxEnumerationN];
        for (uint64_t idx = lo; idx < hi && cur.next(); ++idx) {
            if (best.load(std::memory_order_relaxed) < idx) return;
            engine.keys(cur.rgs(), keys);
            bool all_max = true;
            for (int i = 0; i < n && all_max; ++i)
                if (keys[i] != maxima[static_cast<size_t>(i)]) all_max = false;
            if (all_max) {
                uint64_t curbest = best.load(std::memory_order_relaxed);
                while (idx < curbest && !best.compare_exchange_weak(curbest, idx)) {
                }
                return;
            }
        }
    });
    uint64_t idx = best.load();
    if (idx == UINT64_MAX) return {false, std::nullopt, total};
    PartitionCursor cur(n);
    cur.seek(idx);
    cur.next();
    return {true, cur.make(), idx + 1};
}

[[noreturn]] void refuse_cap(const std::string& what, int n, int cap) {
    throw std::invalid_argument(what + " existence search capped at n = " + std::to_string(cap) +
                                " (got n = " + std::to_string(n) + ")");
}

}  // namespace

ExistenceResult exists_stable(const FriendGraph& g, Model m, Notion s, int threads,
                              std::optional<int> cap_override) {
    int n = g.n();
    int cap = std::min(cap_override.value_or(kExistsCap), kMaxEnumerationN);
    switch (s) {
        case Notion::Nash:
        case Notion::IndividuallyStable:
        case Notion::ContractuallyIndividuallyStable:
        case Notion::TotallyIndividuallyStable:
            // The peel-and-pool structure is Nash stable, and Nash stability
            // implies the other three.
            return {true, nash_construct(g), 0};
        case Notion::IndividuallyRational:
            return {true, CoalitionStructure::singletons(n), 0};
        case Notion::Core:
        case Notion::StrictCore: {
            if (m == Model::SumSF || m == Model::MinSF)
                return {true, components_structure(g), 0};
            if (n > cap) refuse_cap("core", n, cap);
            bool strict = s == Notion::StrictCore;
            auto hit = first_stable(n, threads, [&](const CoalitionStructure& part) {
                return verify_core(g, m, part, strict, 1).stable;
            });
            if (!hit) return {false, std::nullopt, bell_u64(n)};
            return {true, std::move(hit->structure), hit->index + 1};
        }
        case Notion::Popular:
        case Notion::StrictlyPopular:
            if (n > cap) refuse_cap("popularity", n, cap);
            return exists_popular(g, m, s == Notion::StrictlyPopular, threads);
        case Notion::Perfect: {
            if (m == Model::SumSF || m == Model::MinSF) {
                ExistenceResult direct = sf_perfect(g);
                if (direct.found) return direct;
                if (n > cap) return direct;
                // Within the cap, confirm the characterization's negative
                // answer by the full scan (and report its count).
                ExistenceResult scanned = exists_perfect_scan(g, m, threads);
                if (scanned.found)
                    throw std::logic_error("perfect scan contradicts the clique characterization");
                return scanned;
            }
            if (n > cap) refuse_cap("perfectness", n, cap);
            return exists_perfect_scan(g, m, threads);
        }
    }
    throw std::logic_error("bad notion");
}

}  // namespace acfg
