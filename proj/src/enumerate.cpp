#include "acfg/enumerate.hpp"

#include <stdexcept>

namespace acfg {

Bigint bell(int n) {
    if (n < 0) throw std::invalid_argument("bell of negative n");
    // B_{r+1} = sum_k C(r, k) B_k, with the binomials kept as a running
    // Pascal row. Exact arithmetic throughout.
    std::vector<Bigint> b{Bigint(1)};  // b[r] = B_r
    std::vector<Bigint> row{Bigint(1)};  // C(r, *)
    for (int r = 0; r < n; ++r) {
        Bigint next(0);
        for (int k = 0; k <= r; ++k) next += row[static_cast<size_t>(k)] * b[static_cast<size_t>(k)];
        b.push_back(next);
        std::vector<Bigint> nrow(static_cast<size_t>(r) + 2, Bigint(1));
        for (int k = 1; k <= r; ++k)
            nrow[static_cast<size_t>(k)] =
                row[static_cast<size_t>(k - 1)] + row[static_cast<size_t>(k)];
        row = std::move(nrow);
    }
    return b[static_cast<size_t>(n)];
}

uint64_t bell_u64(int n) {
    if (n < 0 || n > kMaxEnumerationN) throw std::invalid_argument("bell_u64 out of supported range");
    return static_cast<uint64_t>(bell(n).to_int64());
}

namespace {

// T(r, b): number of ways to finish a restricted growth string with r symbols
// left when b blocks are open. All values for n <= kMaxEnumerationN fit in
// uint64 (they are bounded by Bell(20) ~ 5.2e13).
struct SuffixTable {
    int n;
    std::vector<uint64_t> t;  // t[r * (n + 2) + b]

    explicit SuffixTable(int n_) : n(n_), t(static_cast<size_t>(n_ + 1) * (n_ + 2), 0) {
        for (int b = 0; b <= n + 1; ++b) at(0, b) = 1;
        for (int r = 1; r <= n; ++r)
            for (int b = n + 1 - r; b >= 0; --b)
                at(r, b) = static_cast<uint64_t>(b) * at(r - 1, b) + at(r - 1, b + 1);
    }

    uint64_t& at(int r, int b) { return t[static_cast<size_t>(r) * (n + 2) + b]; }
    uint64_t get(int r, int b) const { return t[static_cast<size_t>(r) * (n + 2) + b]; }
};

}  // namespace

uint64_t rgs_suffix_count(int remaining, int open_blocks) {
    if (remaining < 0 || open_blocks < 0) throw std::invalid_argument("negative argument");
    if (remaining + open_blocks > kMaxEnumerationN + 1)
        throw std::invalid_argument("suffix count out of supported range");
    SuffixTable tbl(remaining + open_blocks);
    return tbl.get(remaining, open_blocks);
}

PartitionCursor::PartitionCursor(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("partition enumeration needs n >= 1");
    if (n > kMaxEnumerationN)
        throw std::invalid_argument("partition enumeration capped at n = " +
                                    std::to_string(kMaxEnumerationN));
    rgs_.assign(static_cast<size_t>(n), 0);
    maxval_.assign(static_cast<size_t>(n), 0);
    for (int i = 1; i < n; ++i) maxval_[static_cast<size_t>(i)] = 1;
}

void PartitionCursor::seek(uint64_t index) {
    SuffixTable tbl(n_);
    if (index >= tbl.get(n_ - 1, 1) && n_ >= 1) {
        // tbl(n-1, 1) counts full strings (first symbol fixed at 0).
        throw std::out_of_range("partition index out of range");
    }
    fresh_ = true;
    done_ = false;
    rgs_[0] = 0;
    int open = 1;
    for (int i = 1; i < n_; ++i) {
        maxval_[static_cast<size_t>(i)] = static_cast<uint8_t>(open);
        int rem = n_ - 1 - i;
        uint64_t reuse = tbl.get(rem, open);  // suffix count per reused digit
        uint8_t digit;
        if (index < static_cast<uint64_t>(open) * reuse) {
            digit = static_cast<uint8_t>(index / reuse);
            index %= reuse;
        } else {
            index -= static_cast<uint64_t>(open) * reuse;
            digit = static_cast<uint8_t>(open);
            ++open;
        }
        rgs_[static_cast<size_t>(i)] = digit;
    }
}

bool PartitionCursor::next() {
    if (done_) return false;
    if (fresh_) {
        fresh_ = false;
        return true;
    }
    // Standard RGS successor: find the rightmost position that can grow.
    for (int i = n_ - 1; i >= 1; --i) {
        if (rgs_[static_cast<size_t>(i)] <= maxval_[static_cast<size_t>(i)] - 1 &&
            rgs_[static_cast<size_t>(i)] < static_cast<uint8_t>(i)) {
            ++rgs_[static_cast<size_t>(i)];
            uint8_t mv = std::max<uint8_t>(maxval_[static_cast<size_t>(i)],
                                           static_cast<uint8_t>(rgs_[static_cast<size_t>(i)] + 1));
            for (int j = i + 1; j < n_; ++j) {
                rgs_[static_cast<size_t>(j)] = 0;
                maxval_[static_cast<size_t>(j)] = mv;
            }
            return true;
        }
    }
    done_ = true;
    return false;
}

uint64_t enumerate_partitions(int n, const std::function<bool(const CoalitionStructure&)>& visit) {
    PartitionCursor cur(n);
    uint64_t seen = 0;
    while (cur.next()) {
        ++seen;
        if (!visit(cur.make())) break;
    }
    return seen;
}

}  // namespace acfg
