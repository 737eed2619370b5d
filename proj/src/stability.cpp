#include "acfg/stability.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "acfg/enumerate.hpp"

namespace acfg {

std::string notion_name(Notion s) {
    switch (s) {
        case Notion::Nash: return "nash";
        case Notion::IndividuallyRational: return "ir";
        case Notion::IndividuallyStable: return "is";
        case Notion::ContractuallyIndividuallyStable: return "cis";
        case Notion::TotallyIndividuallyStable: return "tis";
        case Notion::Core: return "core";
        case Notion::StrictCore: return "strictcore";
        case Notion::Popular: return "popular";
        case Notion::StrictlyPopular: return "strictpopular";
        case Notion::Perfect: return "perfect";
    }
    throw std::logic_error("bad notion");
}

std::optional<Notion> parse_notion(const std::string& s) {
    std::string low;
    low.reserve(s.size());
    for (char c : s) low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    for (Notion x : kAllNotions)
        if (low == notion_name(x)) return x;
    return std::nullopt;
}

std::string format_witness(const Witness& w) {
    std::ostringstream out;
    if (const auto* mv = std::get_if<PlayerMove>(&w)) {
        out << "player " << mv->player + 1 << " moves to "
            << (mv->target.empty() ? std::string("{}")
                                   : [&] {
                                         std::ostringstream t;
                                         t << '{';
                                         for (size_t k = 0; k < mv->target.size(); ++k) {
                                             if (k) t << ", ";
                                             t << mv->target[k] + 1;
                                         }
                                         t << '}';
                                         return t.str();
                                     }());
    } else if (const auto* bc = std::get_if<BlockingCoalition>(&w)) {
        out << (bc->weak ? "weakly blocking coalition {" : "blocking coalition {");
        for (size_t k = 0; k < bc->members.size(); ++k) {
            if (k) out << ", ";
            out << bc->members[k] + 1;
        }
        out << '}';
    } else if (const auto* rp = std::get_if<RivalPartition>(&w)) {
        out << "rival [" << format_partition(rp->rival) << "] preferred by " << rp->prefer_rival
            << " against " << rp->prefer_here;
    } else if (const auto* pp = std::get_if<PlayerAndPartition>(&w)) {
        out << "player " << pp->player + 1 << " prefers [" << format_partition(pp->rival) << ']';
    }
    return out.str();
}

namespace {

// Does anyone in the veto set strictly prefer gamma to delta? The deviator
// never qualifies (they strictly improved), so callers may pass sets
// containing them.
bool someone_objects(const FriendGraph& g, Model m, const CoalitionStructure& gamma,
                     const CoalitionStructure& delta, const PlayerSet& vetoers) {
    bool veto = false;
    vetoers.for_each([&](int j) {
        if (!veto && compare(g, m, j, gamma, delta) == Pref::FirstPreferred) veto = true;
    });
    return veto;
}

}  // namespace

Verdict verify_individual(const FriendGraph& g, Model m, Notion s,
                          const CoalitionStructure& gamma) {
    int n = g.n();
    PlayerSet empty(n);
    for (int i = 0; i < n; ++i) {
        // Targets in block order, the empty coalition last; IR only looks at
        // going alone.
        std::vector<const PlayerSet*> targets;
        if (s != Notion::IndividuallyRational) {
            for (int b = 0; b < gamma.block_count(); ++b)
                if (b != gamma.block_index_of(i)) targets.push_back(&gamma.block(b));
        }
        targets.push_back(&empty);
        for (const PlayerSet* c : targets) {
            CoalitionStructure delta = move_player(gamma, i, *c);
            if (compare(g, m, i, delta, gamma) != Pref::FirstPreferred) continue;
            bool vetoed = false;
            switch (s) {
                case Notion::Nash:
                case Notion::IndividuallyRational:
                    break;
                case Notion::IndividuallyStable:
                    vetoed = someone_objects(g, m, gamma, delta, *c);
                    break;
                case Notion::ContractuallyIndividuallyStable:
                    vetoed = someone_objects(g, m, gamma, delta, *c | gamma.coalition_of(i));
                    break;
                case Notion::TotallyIndividuallyStable: {
                    PlayerSet others = PlayerSet::full(n);
                    others.reset(i);
                    vetoed = someone_objects(g, m, gamma, delta, others);
                    break;
                }
                default:
                    throw std::invalid_argument("verify_individual handles nash/ir/is/cis/tis only");
            }
            if (!vetoed) return {false, Witness{PlayerMove{i, c->members()}}};
        }
    }
    return {true, std::nullopt};
}

bool is_blocking(const FriendGraph& g, Model m, const CoalitionStructure& gamma,
                 const PlayerSet& c) {
    if (c.empty()) throw std::invalid_argument("blocking coalition must be nonempty");
    CoalitionStructure delta = carve_out(gamma, c);
    bool all_strict = true;
    c.for_each([&](int i) {
        if (all_strict && compare(g, m, i, delta, gamma) != Pref::FirstPreferred) all_strict = false;
    });
    return all_strict;
}

bool is_weakly_blocking(const FriendGraph& g, Model m, const CoalitionStructure& gamma,
                        const PlayerSet& c) {
    if (c.empty()) throw std::invalid_argument("blocking coalition must be nonempty");
    CoalitionStructure delta = carve_out(gamma, c);
    bool none_worse = true;
    bool some_better = false;
    c.for_each([&](int i) {
        if (!none_worse) return;
        Pref p = compare(g, m, i, delta, gamma);
        if (p == Pref::SecondPreferred) none_worse = false;
        else if (p == Pref::FirstPreferred) some_better = true;
    });
    return none_worse && some_better;
}

namespace {

// Runs fn(t) on threads workers; fn must be safe to run concurrently.
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

}  // namespace

Verdict verify_core(const FriendGraph& g, Model m, const CoalitionStructure& gamma,
                    bool strict, int threads) {
    int n = g.n();
    if (n > kMaxSubsetN)
        throw std::invalid_argument("core verification capped at n = " + std::to_string(kMaxSubsetN));
    if (n == 0) return {true, std::nullopt};
    uint64_t total = (uint64_t{1} << n) - 1;  // nonempty subsets 1..2^n-1
    if (threads < 1) threads = 1;
    std::atomic<uint64_t> first{UINT64_MAX};
    run_workers(threads, [&](int t) {
        uint64_t chunk = (total + static_cast<uint64_t>(threads) - 1) / static_cast<uint64_t>(threads);
        uint64_t lo = 1 + static_cast<uint64_t>(t) * chunk;
        uint64_t hi = std::min(total + 1, lo + chunk);
        for (uint64_t mask = lo; mask < hi; ++mask) {
            if (first.load(std::memory_order_relaxed) < mask) return;
            PlayerSet c(n);
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) c.set(i);
            bool hit = strict ? is_weakly_blocking(g, m, gamma, c) : is_blocking(g, m, gamma, c);
            if (hit) {
                uint64_t cur = first.load(std::memory_order_relaxed);
                while (mask < cur && !first.compare_exchange_weak(cur, mask)) {
                }
                return;
            }
        }
    });
    uint64_t mask = first.load();
    if (mask == UINT64_MAX) return {true, std::nullopt};
    PlayerSet c(n);
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1) c.set(i);
    return {false, Witness{BlockingCoalition{c.members(), strict}}};
}

namespace {

struct PartitionSweepHit {
    uint64_t index = UINT64_MAX;
    CoalitionStructure rival;
};

// Scans all partitions of n in enumeration order on `threads` workers and
// reports the first (lowest-index) partition where test() returns true.
// test must be pure.
std::optional<CoalitionStructure> first_partition_where(
    int n, int threads, const std::function<bool(const CoalitionStructure&)>& test) {
    if (threads < 1) threads = 1;
    uint64_t total = bell_u64(n);
    std::atomic<uint64_t> best{UINT64_MAX};
    std::vector<PartitionSweepHit> hits(static_cast<size_t>(threads));
    run_workers(threads, [&](int t) {
        uint64_t chunk = (total + static_cast<uint64_t>(threads) - 1) / static_cast<uint64_t>(threads);
        uint64_t lo = static_cast<uint64_t>(t) * chunk;
        uint64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) return;
        PartitionCursor cur(n);
        cur.seek(lo);
        for (uint64_t idx = lo; idx < hi; ++idx) {
            if (!cur.next()) break;
            if (best.load(std::memory_order_relaxed) < idx) return;
            CoalitionStructure part = cur.make();
            if (test(part)) {
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
        if (h.index == idx) return h.rival;
    return std::nullopt;
}

}  // namespace

Verdict verify_popular(const FriendGraph& g, Model m, const CoalitionStructure& gamma,
                       bool strict, int threads) {
    int n = g.n();
    if (n > kMaxEnumerationN)
        throw std::invalid_argument("popularity verification capped at n = " +
                                    std::to_string(kMaxEnumerationN));
    auto gk = utility_keys(g, m, gamma);
    auto beats = [&](const CoalitionStructure& delta) {
        if (delta == gamma) return false;
        auto dk = utility_keys(g, m, delta);
        int here = 0, rival = 0;
        for (int i = 0; i < n; ++i) {
            if (gk[static_cast<size_t>(i)] > dk[static_cast<size_t>(i)]) ++here;
            else if (gk[static_cast<size_t>(i)] < dk[static_cast<size_t>(i)]) ++rival;
        }
        return strict ? rival >= here : rival > here;
    };
    auto rival = first_partition_where(n, threads, beats);
    if (!rival) return {true, std::nullopt};
    auto [here, other] = count_prefers(g, m, gamma, *rival);
    return {false, Witness{RivalPartition{*rival, here, other}}};
}

Verdict verify_perfect(const FriendGraph& g, Model m, const CoalitionStructure& gamma,
                       int threads) {
    int n = g.n();
    if (n > kMaxEnumerationN)
        throw std::invalid_argument("perfectness verification capped at n = " +
                                    std::to_string(kMaxEnumerationN));
    auto gk = utility_keys(g, m, gamma);
    auto has_envy = [&](const CoalitionStructure& delta) {
        auto dk = utility_keys(g, m, delta);
        for (int i = 0; i < n; ++i)
            if (dk[static_cast<size_t>(i)] > gk[static_cast<size_t>(i)]) return true;
        return false;
    };
    auto rival = first_partition_where(n, threads, has_envy);
    if (!rival) return {true, std::nullopt};
    auto dk = utility_keys(g, m, *rival);
    for (int i = 0; i < n; ++i)
        if (dk[static_cast<size_t>(i)] > gk[static_cast<size_t>(i)])
            return {false, Witness{PlayerAndPartition{i, *rival}}};
    throw std::logic_error("perfect witness vanished on re-check");
}

Verdict verify(const FriendGraph& g, Model m, Notion s, const CoalitionStructure& gamma,
               int threads) {
    switch (s) {
        case Notion::Nash:
        case Notion::IndividuallyRational:
        case Notion::IndividuallyStable:
        case Notion::ContractuallyIndividuallyStable:
        case Notion::TotallyIndividuallyStable:
            return verify_individual(g, m, s, gamma);
        case Notion::Core: return verify_core(g, m, gamma, false, threads);
        case Notion::StrictCore: return verify_core(g, m, gamma, true, threads);
        case Notion::Popular: return verify_popular(g, m, gamma, false, threads);
        case Notion::StrictlyPopular: return verify_popular(g, m, gamma, true, threads);
        case Notion::Perfect: return verify_perfect(g, m, gamma, threads);
    }
    throw std::logic_error("bad notion");
}

}  // namespace acfg
