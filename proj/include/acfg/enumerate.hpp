#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "acfg/bigint.hpp"
#include "acfg/partition.hpp"

namespace acfg {

// Hard ceilings for exhaustive work. Exceeding them is a usage error, not a
// performance degradation, so the enumeration entry points throw.
inline constexpr int kMaxEnumerationN = 20;  // all partitions of N
inline constexpr int kMaxSubsetN = 24;       // all subsets of N

// Number of partitions of an n-element set (Bell number), exact.
Bigint bell(int n);

// bell(n) as uint64, valid for n <= kMaxEnumerationN.
uint64_t bell_u64(int n);

// Streams every partition of {0,..,n-1} exactly once, in restricted-growth-
// string lexicographic order: first {N}, last all singletons. The callback
// returns false to stop early. Returns the number of partitions visited.
uint64_t enumerate_partitions(int n, const std::function<bool(const CoalitionStructure&)>& visit);

// Cursor over the same sequence, splittable by global index for worker
// threads. Usage: seek(start), then next() until done() or the local count
// runs out.
class PartitionCursor {
public:
    explicit PartitionCursor(int n);

    // Positions the cursor so the following next() yields the partition with
    // this zero-based index in RGS-lex order. index must be < bell_u64(n).
    void seek(uint64_t index);

    bool done() const { return done_; }

    // Advances and exposes the current restricted growth string. Call
    // current()/make() after. Returns false when the sequence is exhausted.
    bool next();

    const std::vector<uint8_t>& rgs() const { return rgs_; }
    CoalitionStructure make() const { return CoalitionStructure::from_rgs(n_, rgs_); }

private:
    int n_;
    bool fresh_ = true;
    bool done_ = false;
    std::vector<uint8_t> rgs_;
    std::vector<uint8_t> maxval_;  // maxval_[i] = 1 + max(rgs_[0..i-1])
};

// Count of RGS suffixes: ways to extend a prefix with r symbols left when
// b distinct blocks are already open. T(0,*) = 1, T(r,b) = b*T(r-1,b) + T(r-1,b+1).
// Exposed for tests.
uint64_t rgs_suffix_count(int remaining, int open_blocks);

}  // namespace acfg
