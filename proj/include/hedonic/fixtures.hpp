#pragma once

#include <string>

#include "hedonic/graph.hpp"
#include "hedonic/rational.hpp"

namespace hedonic::fixtures {

// Named graphs from the figures and constructions, with exact edge lists.

// 8 agents, 16 unweighted edges; the MaxUtil example (optimum 14 at k=3).
Graph fig1();

// 9 agents, 12 weighted edges; the 3-bounded core of this game is empty.
Graph fig5_empty_core();

Graph complete(int n);
inline Graph clique(int size) { return complete(size); }

// k hub agents in a path, each carrying k-1 private leaves (k*k agents).
Graph star_chain(int k);

// Two unit triangles joined by a bridge of weight eps; weights are scaled by
// eps.den so everything stays integral. The k=3 MnM welfare ratio on this
// instance is exactly (2+eps)/6.
GameInstance mnm_weighted_worst(const Rational& eps);

// The strict-core reduction gadget: for every agent x of the base graph, adds
// x^1..x^{k-1} (a clique, all adjacent to x) plus a twin hat agent adjacent to
// every x^i. Base agents keep ids 1..n; gadget agents for x occupy
// n + (x-1)*k + 1 .. n + x*k, hat last.
Graph sc_gadget(const Graph& base, int k);

// Dispatch by name: "fig1", "fig5_empty_core", "complete(n)", "clique(n)",
// "star_chain(k)", "mnm_weighted_worst(p/q)". Throws std::domain_error for
// unknown names. weight_scale is 1 except for mnm_weighted_worst.
struct NamedFixture {
    Graph graph;
    std::int64_t weight_scale = 1;
};
NamedFixture by_name(const std::string& name);

// Named-graph lookup bundled with the game's size cap.
GameInstance gen_fixture(const std::string& name, int k);

}  // namespace hedonic::fixtures
