#include "hedonic/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hedonic/errors.hpp"

namespace hedonic {

Partition::Partition(int n, std::vector<std::vector<Agent>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n_ < 1) throw std::invalid_argument("Partition: agent count must be >= 1");
    block_index_.assign(static_cast<std::size_t>(n_) + 1, -1);
    for (auto& block : blocks_) {
        if (block.empty()) throw std::invalid_argument("Partition: empty block");
        std::sort(block.begin(), block.end());
        for (Agent v : block) {
            if (v < 1 || v > n_) throw std::invalid_argument("Partition: agent out of range");
            if (block_index_[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("Partition: agent " + std::to_string(v) +
                                            " appears twice");
            block_index_[static_cast<std::size_t>(v)] = 0;  // provisional, fixed below
        }
    }
    for (Agent v = 1; v <= n_; ++v) {
        if (block_index_[static_cast<std::size_t>(v)] == -1)
            throw std::invalid_argument("Partition: agent " + std::to_string(v) + " is missing");
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (Agent v : blocks_[i]) block_index_[static_cast<std::size_t>(v)] = static_cast<int>(i);
}

Partition Partition::singletons(int n) {
    std::vector<std::vector<Agent>> blocks;
    blocks.reserve(static_cast<std::size_t>(n));
    for (Agent v = 1; v <= n; ++v) blocks.push_back({v});
    return Partition(n, std::move(blocks));
}

const std::vector<Agent>& Partition::block_of(Agent v) const {
    return blocks_[static_cast<std::size_t>(block_index_of(v))];
}

int Partition::block_index_of(Agent v) const {
    if (v < 1 || v > n_) throw std::domain_error("Partition::block_of: agent out of range");
    return block_index_[static_cast<std::size_t>(v)];
}

int Partition::max_block_size() const {
    std::size_t m = 0;
    for (const auto& b : blocks_) m = std::max(m, b.size());
    return static_cast<int>(m);
}

void Partition::validate_for(const GameInstance& game) const {
    if (n_ != game.n())
        throw ValidationError("partition covers " + std::to_string(n_) + " agents, graph has " +
                              std::to_string(game.n()));
    if (!is_k_bounded(game.k))
        throw ValidationError("partition has a block of size " +
                              std::to_string(max_block_size()) + " > k = " +
                              std::to_string(game.k));
}

Partition Partition::break_off(const std::vector<Agent>& coalition) const {
    if (coalition.empty()) throw std::domain_error("break_off: empty coalition");
    std::vector<char> leaving(static_cast<std::size_t>(n_) + 1, 0);
    for (Agent v : coalition) {
        if (v < 1 || v > n_) throw std::domain_error("break_off: agent out of range");
        leaving[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<std::vector<Agent>> next;
    next.reserve(blocks_.size() + 1);
    std::vector<Agent> s(coalition);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    next.push_back(std::move(s));
    for (const auto& block : blocks_) {
        std::vector<Agent> residue;
        for (Agent v : block)
            if (!leaving[static_cast<std::size_t>(v)]) residue.push_back(v);
        if (!residue.empty()) next.push_back(std::move(residue));
    }
    return Partition(n_, std::move(next));
}

std::string Partition::canonical_form() const {
    std::string key;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) key += '|';
        for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j) key += ',';
            key += std::to_string(blocks_[i][j]);
        }
    }
    return key;
}

Partition Partition::from_canonical(int n, const std::string& key) {
    std::vector<std::vector<Agent>> blocks;
    std::vector<Agent> current;
    Agent value = 0;
    bool have_digit = false;
    auto flush_agent = [&] {
        if (!have_digit) throw ParseError("canonical partition: malformed key");
        current.push_back(value);
        value = 0;
        have_digit = false;
    };
    for (char c : key) {
        if (c >= '0' && c <= '9') {
            value = value * 10 + (c - '0');
            have_digit = true;
        } else if (c == ',') {
            flush_agent();
        } else if (c == '|') {
            flush_agent();
            blocks.push_back(std::move(current));
            current.clear();
        } else {
            throw ParseError("canonical partition: unexpected character");
        }
    }
    flush_agent();
    blocks.push_back(std::move(current));
    return Partition(n, std::move(blocks));
}

}  // namespace hedonic
