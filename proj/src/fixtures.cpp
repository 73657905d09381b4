#include "hedonic/fixtures.hpp"

#include <stdexcept>

namespace hedonic::fixtures {

Graph fig1() {
    return Graph::unweighted(8, {{1, 2},
                                 {1, 3},
                                 {1, 5},
                                 {1, 6},
                                 {2, 4},
                                 {2, 7},
                                 {3, 4},
                                 {3, 5},
                                 {3, 6},
                                 {4, 5},
                                 {4, 6},
                                 {4, 7},
                                 {4, 8},
                                 {5, 8},
                                 {6, 7},
                                 {6, 8}});
}

Graph fig5_empty_core() {
    return Graph(9, {{1, 2, 6},
                     {2, 3, 7},
                     {2, 6, 5},
                     {3, 6, 4},
                     {3, 4, 5},
                     {3, 7, 4},
                     {6, 7, 4},
                     {6, 8, 7},
                     {4, 5, 6},
                     {4, 7, 7},
                     {7, 8, 5},
                     {8, 9, 6}});
}

Graph complete(int n) {
    std::vector<std::pair<Agent, Agent>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
    for (Agent u = 1; u <= n; ++u)
        for (Agent v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    return Graph::unweighted(n, pairs);
}

Graph star_chain(int k) {
    if (k < 2) throw std::domain_error("star_chain: k must be >= 2");
    std::vector<std::pair<Agent, Agent>> pairs;
    for (int i = 1; i < k; ++i) pairs.emplace_back(i, i + 1);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k - 1; ++j) pairs.emplace_back(i, k + (i - 1) * (k - 1) + j);
    return Graph::unweighted(k * k, pairs);
}

GameInstance mnm_weighted_worst(const Rational& eps) {
    if (eps.num <= 0) throw std::domain_error("mnm_weighted_worst: eps must be positive");
    const Weight unit = eps.den;
    const Weight bridge = eps.num;
    Graph g(6, {{1, 2, unit},
                {1, 3, unit},
                {2, 3, unit},
                {4, 5, unit},
                {4, 6, unit},
                {5, 6, unit},
                {3, 4, bridge}});
    return GameInstance(std::move(g), 3, eps.den);
}

Graph sc_gadget(const Graph& base, int k) {
    if (k < 2) throw std::domain_error("sc_gadget: k must be >= 2");
    const int n = base.agent_count();
    std::vector<Edge> edges = base.edges();
    for (Agent x = 1; x <= n; ++x) {
        const Agent first = n + (x - 1) * k + 1;  // x^1
        const Agent hat = first + k - 1;          // hat twin, last in the group
        for (int i = 0; i < k - 1; ++i) {
            edges.push_back({x, first + i, 1});
            edges.push_back({first + i, hat, 1});
            for (int j = i + 1; j < k - 1; ++j) edges.push_back({first + i, first + j, 1});
        }
    }
    return Graph(n + n * k, std::move(edges));
}

namespace {

// "name(arg)" -> {name, arg}; plain names keep arg empty.
std::pair<std::string, std::string> split_name(const std::string& text) {
    const auto open = text.find('(');
    if (open == std::string::npos) return {text, ""};
    if (text.back() != ')') throw std::domain_error("gen_fixture: malformed name '" + text + "'");
    return {text.substr(0, open), text.substr(open + 1, text.size() - open - 2)};
}

}  // namespace

NamedFixture by_name(const std::string& name) {
    auto [head, arg] = split_name(name);
    if (head == "fig1") return {fig1(), 1};
    if (head == "fig5_empty_core") return {fig5_empty_core(), 1};
    if (head == "complete" || head == "clique") return {complete(std::stoi(arg)), 1};
    if (head == "star_chain") return {star_chain(std::stoi(arg)), 1};
    if (head == "mnm_weighted_worst") {
        GameInstance game = mnm_weighted_worst(parse_rational(arg));
        return {game.graph, game.weight_scale};
    }
    throw std::domain_error("gen_fixture: unknown fixture name '" + name + "'");
}

GameInstance gen_fixture(const std::string& name, int k) {
    NamedFixture fixture = by_name(name);
    return GameInstance(std::move(fixture.graph), k, fixture.weight_scale);
}

}  // namespace hedonic::fixtures
