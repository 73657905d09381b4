#pragma once

#include <string>
#include <vector>

#include "hedonic/graph.hpp"

namespace hedonic {

// A partition of agents 1..n into disjoint non-empty coalitions. Blocks are
// kept canonical at all times: each block sorted ascending, blocks ordered by
// their smallest member. k-boundedness is a property of the owning game and is
// checked with is_k_bounded / validate_for.
class Partition {
public:
    Partition(int n, std::vector<std::vector<Agent>> blocks);

    static Partition singletons(int n);

    int agent_count() const { return n_; }
    const std::vector<std::vector<Agent>>& blocks() const { return blocks_; }
    const std::vector<Agent>& block_of(Agent v) const;
    int block_index_of(Agent v) const;
    std::size_t block_count() const { return blocks_.size(); }
    int max_block_size() const;

    bool is_k_bounded(int k) const { return max_block_size() <= k; }
    // Throws ValidationError unless this is a valid k-bounded partition of the game's agents.
    void validate_for(const GameInstance& game) const;

    // P^{-S}: S becomes a coalition, members leave their blocks, empty residues drop.
    Partition break_off(const std::vector<Agent>& coalition) const;

    // Injective on partition equivalence classes; e.g. {{2,1},{3}} -> "1,2|3".
    std::string canonical_form() const;
    static Partition from_canonical(int n, const std::string& key);

    bool operator==(const Partition& other) const {
        return n_ == other.n_ && blocks_ == other.blocks_;
    }

private:
    int n_;
    std::vector<std::vector<Agent>> blocks_;
    std::vector<int> block_index_;  // agent -> index into blocks_
};

}  // namespace hedonic
