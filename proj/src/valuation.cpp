#include "acfg/valuation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace acfg {

bool model_is_sum_based(Model m) {
    return m == Model::SumSF || m == Model::SumEQ || m == Model::SumAL;
}

bool model_is_min_based(Model m) { return !model_is_sum_based(m); }

std::string model_name(Model m) {
    switch (m) {
        case Model::SumSF: return "sumSF";
        case Model::SumEQ: return "sumEQ";
        case Model::SumAL: return "sumAL";
        case Model::MinSF: return "minSF";
        case Model::MinEQ: return "minEQ";
        case Model::MinAL: return "minAL";
    }
    throw std::logic_error("bad model");
}

std::optional<Model> parse_model(const std::string& s) {
    std::string low;
    low.reserve(s.size());
    for (char c : s) low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (low == "sumsf") return Model::SumSF;
    if (low == "sumeq") return Model::SumEQ;
    if (low == "sumal") return Model::SumAL;
    if (low == "minsf") return Model::MinSF;
    if (low == "mineq") return Model::MinEQ;
    if (low == "minal") return Model::MinAL;
    return std::nullopt;
}

int value(const FriendGraph& g, int i, const PlayerSet& coalition) {
    if (!coalition.test(i)) throw std::invalid_argument("coalition does not contain the player");
    int f = g.friends(i).intersection_count(coalition);
    int e = coalition.count() - 1 - f;
    return g.n() * f - e;
}

int value(const FriendGraph& g, int i, const CoalitionStructure& gamma) {
    return value(g, i, gamma.coalition_of(i));
}

std::vector<int> value_vector(const FriendGraph& g, const CoalitionStructure& gamma) {
    int n = g.n();
    std::vector<int> v(static_cast<size_t>(n));
    for (int b = 0; b < gamma.block_count(); ++b) {
        const PlayerSet& blk = gamma.block(b);
        int size = blk.count();
        blk.for_each([&](int i) {
            int f = g.friends(i).intersection_count(blk);
            v[static_cast<size_t>(i)] = n * f - (size - 1 - f);
        });
    }
    return v;
}

namespace {

struct Aggregates {
    int v;
    int sum_f;
    int sum_f_incl;
    int min_f;       // 0 when friendless
    int min_f_incl;  // includes own value, never empty
};

Aggregates aggregates_for(const FriendGraph& g, int i, const CoalitionStructure& gamma) {
    Aggregates a{};
    a.v = value(g, i, gamma);
    bool any = false;
    int sum = 0, mn = 0;
    for (int j : g.neighbors(i)) {
        int vj = value(g, j, gamma);
        sum += vj;
        mn = any ? std::min(mn, vj) : vj;
        any = true;
    }
    a.sum_f = sum;
    a.sum_f_incl = sum + a.v;
    a.min_f = any ? mn : 0;
    a.min_f_incl = any ? std::min(mn, a.v) : a.v;
    return a;
}

std::pair<int64_t, int64_t> key_from(Model m, const Aggregates& a) {
    switch (m) {
        case Model::SumSF: return {a.v, a.sum_f};
        case Model::MinSF: return {a.v, a.min_f};
        case Model::SumEQ: return {a.sum_f_incl, 0};
        case Model::MinEQ: return {a.min_f_incl, 0};
        case Model::SumAL: return {a.sum_f, a.v};
        case Model::MinAL: return {a.min_f, a.v};
    }
    throw std::logic_error("bad model");
}

}  // namespace

int friend_sum(const FriendGraph& g, int i, const CoalitionStructure& gamma) {
    return aggregates_for(g, i, gamma).sum_f;
}

int friend_sum_incl(const FriendGraph& g, int i, const CoalitionStructure& gamma) {
    return aggregates_for(g, i, gamma).sum_f_incl;
}

int friend_min(const FriendGraph& g, int i, const CoalitionStructure& gamma) {
    return aggregates_for(g, i, gamma).min_f;
}

int friend_min_incl(const FriendGraph& g, int i, const CoalitionStructure& gamma) {
    return aggregates_for(g, i, gamma).min_f_incl;
}

Bigint utility(const FriendGraph& g, Model m, int i, const CoalitionStructure& gamma) {
    Aggregates a = aggregates_for(g, i, gamma);
    int64_t n = g.n();
    Bigint big_m(n * n * n);
    switch (m) {
        case Model::SumSF: return big_m * Bigint(a.v) + Bigint(a.sum_f);
        case Model::MinSF: return big_m * Bigint(a.v) + Bigint(a.min_f);
        case Model::SumEQ: return Bigint(a.sum_f_incl);
        case Model::MinEQ: return Bigint(a.min_f_incl);
        case Model::SumAL: return Bigint(a.v) + big_m * Bigint(a.sum_f);
        case Model::MinAL: return Bigint(a.v) + big_m * Bigint(a.min_f);
    }
    throw std::logic_error("bad model");
}

std::pair<int64_t, int64_t> utility_key(const FriendGraph& g, Model m, int i,
                                        const CoalitionStructure& gamma) {
    return key_from(m, aggregates_for(g, i, gamma));
}

std::vector<std::pair<int64_t, int64_t>> utility_keys(const FriendGraph& g, Model m,
                                                      const CoalitionStructure& gamma) {
    int n = g.n();
    std::vector<int> v = value_vector(g, gamma);
    std::vector<std::pair<int64_t, int64_t>> keys(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Aggregates a{};
        a.v = v[static_cast<size_t>(i)];
        bool any = false;
        int sum = 0, mn = 0;
        for (int j : g.neighbors(i)) {
            int vj = v[static_cast<size_t>(j)];
            sum += vj;
            mn = any ? std::min(mn, vj) : vj;
            any = true;
        }
        a.sum_f = sum;
        a.sum_f_incl = sum + a.v;
        a.min_f = any ? mn : 0;
        a.min_f_incl = any ? std::min(mn, a.v) : a.v;
        keys[static_cast<size_t>(i)] = key_from(m, a);
    }
    return keys;
}

Pref compare(const FriendGraph& g, Model m, int i, const CoalitionStructure& gamma,
             const CoalitionStructure& delta) {
    auto a = utility_key(g, m, i, gamma);
    auto b = utility_key(g, m, i, delta);
    if (a > b) return Pref::FirstPreferred;
    if (a < b) return Pref::SecondPreferred;
    return Pref::Indifferent;
}

std::pair<int, int> count_prefers(const FriendGraph& g, Model m,
                                  const CoalitionStructure& gamma,
                                  const CoalitionStructure& delta) {
    auto ka = utility_keys(g, m, gamma);
    auto kb = utility_keys(g, m, delta);
    int a = 0, b = 0;
    for (int i = 0; i < g.n(); ++i) {
        if (ka[static_cast<size_t>(i)] > kb[static_cast<size_t>(i)]) ++a;
        else if (ka[static_cast<size_t>(i)] < kb[static_cast<size_t>(i)]) ++b;
    }
    return {a, b};
}

}  // namespace acfg
