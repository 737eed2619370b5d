#include "acfg/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace acfg {

CoalitionStructure::CoalitionStructure(int n, std::vector<PlayerSet> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n < 0) throw std::invalid_argument("negative player count");
    block_of_.assign(static_cast<size_t>(n), -1);
    for (auto& b : blocks_) {
        if (b.universe() != n) throw std::invalid_argument("block universe mismatch");
        if (b.empty()) throw std::invalid_argument("empty block");
        b.for_each([&](int i) {
            if (block_of_[static_cast<size_t>(i)] != -1)
                throw std::invalid_argument("blocks overlap at player " + std::to_string(i + 1));
            block_of_[static_cast<size_t>(i)] = 0;  // provisional; fixed after sorting
        });
    }
    for (int i = 0; i < n; ++i)
        if (block_of_[static_cast<size_t>(i)] == -1)
            throw std::invalid_argument("player " + std::to_string(i + 1) + " missing from all blocks");
    std::sort(blocks_.begin(), blocks_.end(), [](const PlayerSet& a, const PlayerSet& b) {
        return a.min_member() < b.min_member();
    });
    for (int b = 0; b < static_cast<int>(blocks_.size()); ++b)
        blocks_[static_cast<size_t>(b)].for_each(
            [&](int i) { block_of_[static_cast<size_t>(i)] = b; });
}

CoalitionStructure CoalitionStructure::from_rgs(int n, const std::vector<uint8_t>& rgs) {
    if (static_cast<int>(rgs.size()) != n) throw std::invalid_argument("rgs length mismatch");
    int nblocks = 0;
    for (uint8_t d : rgs) nblocks = std::max(nblocks, d + 1);
    std::vector<PlayerSet> blocks(static_cast<size_t>(nblocks), PlayerSet(n));
    for (int i = 0; i < n; ++i) blocks[rgs[static_cast<size_t>(i)]].set(i);
    // A restricted growth string opens blocks in order of minimum member, so
    // the blocks are already canonical; the validating constructor just
    // re-checks cheaply.
    return CoalitionStructure(n, std::move(blocks));
}

CoalitionStructure CoalitionStructure::singletons(int n) {
    std::vector<PlayerSet> blocks;
    blocks.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) blocks.push_back(PlayerSet::of(n, {i}));
    return CoalitionStructure(n, std::move(blocks));
}

CoalitionStructure CoalitionStructure::grand(int n) {
    return CoalitionStructure(n, {PlayerSet::full(n)});
}

CoalitionStructure move_player(const CoalitionStructure& gamma, int i, const PlayerSet& c) {
    int n = gamma.n();
    if (i < 0 || i >= n) throw std::out_of_range("player out of range");
    if (!c.empty()) {
        bool is_block = false;
        for (const auto& b : gamma.blocks())
            if (b == c) is_block = true;
        if (!is_block) throw std::invalid_argument("target is neither empty nor a block");
        if (c.test(i)) throw std::invalid_argument("target is the player's own block");
    }
    std::vector<PlayerSet> blocks;
    blocks.reserve(gamma.blocks().size() + 1);
    for (const auto& b : gamma.blocks()) {
        if (b.test(i)) {
            PlayerSet rest = b;
            rest.reset(i);
            if (rest.any()) blocks.push_back(std::move(rest));
        } else if (!c.empty() && b == c) {
            PlayerSet grown = b;
            grown.set(i);
            blocks.push_back(std::move(grown));
        } else {
            blocks.push_back(b);
        }
    }
    if (c.empty()) blocks.push_back(PlayerSet::of(n, {i}));
    return CoalitionStructure(n, std::move(blocks));
}

CoalitionStructure carve_out(const CoalitionStructure& gamma, const PlayerSet& c) {
    if (c.empty()) throw std::invalid_argument("carve_out of empty coalition");
    std::vector<PlayerSet> blocks;
    blocks.reserve(gamma.blocks().size() + 1);
    for (const auto& b : gamma.blocks()) {
        PlayerSet rest = b.minus(c);
        if (rest.any()) blocks.push_back(std::move(rest));
    }
    blocks.push_back(c);
    return CoalitionStructure(gamma.n(), std::move(blocks));
}

CoalitionStructure parse_partition(const std::string& line, int n) {
    std::vector<PlayerSet> blocks;
    std::string piece;
    std::istringstream in(line);
    while (std::getline(in, piece, '|')) {
        std::istringstream ps(piece);
        PlayerSet block(n);
        int x = 0;
        bool got = false;
        while (ps >> x) {
            if (x < 1 || x > n)
                throw std::runtime_error("player " + std::to_string(x) + " out of range 1.." +
                                         std::to_string(n));
            block.set(x - 1);
            got = true;
        }
        if (!ps.eof())
            throw std::runtime_error("malformed block \"" + piece + "\"");
        if (!got) throw std::runtime_error("empty block in partition line");
        blocks.push_back(std::move(block));
    }
    if (blocks.empty()) throw std::runtime_error("empty partition line");
    try {
        return CoalitionStructure(n, std::move(blocks));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
}

std::vector<CoalitionStructure> parse_partition_file(const std::string& text, int n) {
    std::vector<CoalitionStructure> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parse_partition(line, n));
    }
    return out;
}

std::string format_partition(const CoalitionStructure& gamma) {
    std::ostringstream out;
    bool first_block = true;
    for (const auto& b : gamma.blocks()) {
        if (!first_block) out << " | ";
        first_block = false;
        bool first = true;
        b.for_each([&](int i) {
            if (!first) out << ' ';
            first = false;
            out << i + 1;
        });
    }
    return out.str();
}

std::string format_coalition(const PlayerSet& c) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    c.for_each([&](int i) {
        if (!first) out << ", ";
        first = false;
        out << i + 1;
    });
    out << '}';
    return out.str();
}

}  // namespace acfg
