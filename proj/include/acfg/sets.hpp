#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace acfg {

// Set of players over a fixed universe {0, ..., n-1}, stored as a bit vector.
// Players are 0-based internally; all file formats and reports are 1-based.
class PlayerSet {
public:
    PlayerSet() = default;
    explicit PlayerSet(int universe_size)
        : n_(universe_size), w_(static_cast<size_t>((universe_size + 63) / 64), 0) {
        if (universe_size < 0) throw std::invalid_argument("negative universe size");
    }

    static PlayerSet full(int n) {
        PlayerSet s(n);
        for (int i = 0; i < n; ++i) s.set(i);
        return s;
    }

    static PlayerSet of(int n, std::initializer_list<int> members) {
        PlayerSet s(n);
        for (int i : members) s.set(i);
        return s;
    }

    static PlayerSet of(int n, const std::vector<int>& members) {
        PlayerSet s(n);
        for (int i : members) s.set(i);
        return s;
    }

    int universe() const { return n_; }

    bool test(int i) const {
        check(i);
        return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) {
        check(i);
        w_[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        check(i);
        w_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    bool any() const { return !empty(); }

    // Smallest member, or -1 when empty.
    int min_member() const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k * 64) + std::countr_zero(w_[k]);
        return -1;
    }

    int intersection_count(const PlayerSet& o) const {
        int c = 0;
        for (size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
        return c;
    }

    bool intersects(const PlayerSet& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    bool contains_all(const PlayerSet& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (o.w_[k] & ~w_[k]) return false;
        return true;
    }

    PlayerSet& operator&=(const PlayerSet& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }

    PlayerSet& operator|=(const PlayerSet& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }

    // Set difference: members of *this not in o.
    PlayerSet minus(const PlayerSet& o) const {
        PlayerSet r(*this);
        for (size_t k = 0; k < w_.size(); ++k) r.w_[k] &= ~o.w_[k];
        return r;
    }

    friend PlayerSet operator&(PlayerSet a, const PlayerSet& b) { return a &= b; }
    friend PlayerSet operator|(PlayerSet a, const PlayerSet& b) { return a |= b; }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (size_t k = 0; k < w_.size(); ++k) {
            uint64_t w = w_[k];
            while (w) {
                int i = static_cast<int>(k * 64) + std::countr_zero(w);
                f(i);
                w &= w - 1;
            }
        }
    }

    bool operator==(const PlayerSet&) const = default;

private:
    void check(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("player index out of range");
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace acfg
