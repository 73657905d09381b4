#pragma once

#include "hedonic/graph.hpp"
#include "hedonic/rng.hpp"

namespace hedonic {

// G(n,p): every unordered pair is an edge independently with probability p.
Graph gen_gnp(int n, double p, RngStream& rng);

// Uniformly random labeled tree on n agents (random Prufer sequence).
Graph gen_uniform_tree(int n, RngStream& rng);

// Watts-Strogatz small world: a ring lattice joining floor(k_nbrs/2)
// neighbors per side, then each lattice edge rewired with probability
// p_rewire (edge count is preserved). Resampled until connected; throws
// ConvergenceError when the retry budget runs out.
Graph gen_watts_strogatz(int n, int k_nbrs, double p_rewire, RngStream& rng,
                         int max_retries = 200);

bool graph_connected(const Graph& g);

}  // namespace hedonic
