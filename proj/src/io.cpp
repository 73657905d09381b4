#include "hedonic/io.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "hedonic/errors.hpp"

namespace hedonic::io {

namespace {

struct RawWeight {
    std::int64_t integer = 1;   // integral part
    std::string fraction;       // fractional digits, trailing zeros trimmed
};

RawWeight parse_weight_token(const std::string& token, int lineno) {
    RawWeight w;
    const auto dot = token.find('.');
    const std::string head = dot == std::string::npos ? token : token.substr(0, dot);
    std::string tail = dot == std::string::npos ? "" : token.substr(dot + 1);
    if (head.empty() && tail.empty())
        throw ParseError("graph line " + std::to_string(lineno) + ": empty weight");
    for (char c : head)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("graph line " + std::to_string(lineno) + ": bad weight '" + token +
                             "'");
    for (char c : tail)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("graph line " + std::to_string(lineno) + ": bad weight '" + token +
                             "'");
    while (!tail.empty() && tail.back() == '0') tail.pop_back();
    w.integer = head.empty() ? 0 : std::stoll(head);
    w.fraction = tail;
    return w;
}

}  // namespace

ParsedGraphFile parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    long long m = -1;

    struct RawEdge {
        Agent u, v;
        RawWeight w;
        int lineno;
    };
    std::vector<RawEdge> raw;

    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string a, b, c, extra;
        if (!(fields >> a)) continue;  // blank line
        if (n < 0) {
            // header "n m"
            if (!(fields >> b) || (fields >> extra))
                throw ParseError("graph line " + std::to_string(lineno) +
                                 ": expected header 'n m'");
            try {
                n = std::stoi(a);
                m = std::stoll(b);
            } catch (const std::exception&) {
                throw ParseError("graph line " + std::to_string(lineno) + ": bad header");
            }
            if (n < 1 || m < 0)
                throw ParseError("graph line " + std::to_string(lineno) + ": bad header values");
            continue;
        }
        if (!(fields >> b))
            throw ParseError("graph line " + std::to_string(lineno) + ": expected 'u v [w]'");
        const bool has_weight = static_cast<bool>(fields >> c);
        if (fields >> extra)
            throw ParseError("graph line " + std::to_string(lineno) + ": trailing tokens");
        RawEdge e;
        try {
            e.u = std::stoi(a);
            e.v = std::stoi(b);
        } catch (const std::exception&) {
            throw ParseError("graph line " + std::to_string(lineno) + ": bad endpoints");
        }
        e.w = has_weight ? parse_weight_token(c, lineno) : RawWeight{};
        e.lineno = lineno;
        raw.push_back(std::move(e));
    }
    if (n < 0) throw ParseError("graph file: missing 'n m' header");
    if (static_cast<long long>(raw.size()) != m)
        throw ParseError("graph file: header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(raw.size()));

    std::size_t max_digits = 0;
    for (const auto& e : raw) max_digits = std::max(max_digits, e.w.fraction.size());
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < max_digits; ++i) {
        if (scale > (1LL << 60) / 10) throw ParseError("graph file: weight scale overflow");
        scale *= 10;
    }

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& e : raw) {
        std::int64_t w = e.w.integer;
        for (char c : e.w.fraction) w = w * 10 + (c - '0');
        for (std::size_t i = e.w.fraction.size(); i < max_digits; ++i) w *= 10;
        if (w == 0)
            throw ParseError("graph line " + std::to_string(e.lineno) +
                             ": zero-weight edges are not allowed (omit the edge instead)");
        edges.push_back({e.u, e.v, w});
    }
    try {
        return {Graph(n, std::move(edges)), scale};
    } catch (const std::invalid_argument& err) {
        throw ParseError(std::string("graph file: ") + err.what());
    }
}

ParsedGraphFile load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_text(buffer.str());
}

namespace {

std::string render_weight(Weight w, std::int64_t scale) {
    if (scale == 1) return std::to_string(w);
    std::string frac = std::to_string(w % scale);
    frac.insert(frac.begin(),
                std::to_string(scale).size() - 1 - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    std::string head = std::to_string(w / scale);
    return frac.empty() ? head : head + "." + frac;
}

}  // namespace

std::string serialize_graph(const Graph& g, std::int64_t weight_scale) {
    std::ostringstream out;
    out << g.agent_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges())
        out << e.u << " " << e.v << " " << render_weight(e.w, weight_scale) << "\n";
    return out.str();
}

Partition parse_partition_json(int n, const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("partition file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("blocks") || !doc["blocks"].is_array())
        throw ParseError("partition file: expected an object with a 'blocks' array");
    std::vector<std::vector<Agent>> blocks;
    for (const auto& b : doc["blocks"]) {
        if (!b.is_array()) throw ParseError("partition file: blocks must be arrays of agents");
        std::vector<Agent> block;
        for (const auto& v : b) {
            if (!v.is_number_integer())
                throw ParseError("partition file: agents must be integers");
            block.push_back(v.get<Agent>());
        }
        blocks.push_back(std::move(block));
    }
    try {
        return Partition(n, std::move(blocks));
    } catch (const std::invalid_argument& err) {
        throw ValidationError(std::string("partition file: ") + err.what());
    }
}

std::string serialize_partition_file(const Partition& p) {
    nlohmann::json doc;
    doc["blocks"] = partition_json(p);
    return doc.dump(2) + "\n";
}

nlohmann::json partition_json(const Partition& p) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : p.blocks()) blocks.push_back(b);
    return blocks;
}

nlohmann::json witness_json(const BlockingWitness& w) {
    nlohmann::json per_agent = nlohmann::json::array();
    for (const auto& entry : w.per_agent)
        per_agent.push_back({{"agent", entry.agent},
                             {"coalition_value", entry.coalition_value},
                             {"current_utility", entry.current_utility}});
    return {{"coalition", w.coalition}, {"mode", w.mode.name()}, {"per_agent", per_agent}};
}

nlohmann::json stats_json(const SolverStats& stats) {
    return {{"outer_iterations", stats.outer_iterations},
            {"welfare_trajectory", stats.welfare_trajectory},
            {"removed_agents", stats.removed_agents}};
}

nlohmann::json trace_json(const MnMTrace& trace) {
    nlohmann::json rounds = nlohmann::json::array();
    for (const auto& r : trace.rounds) {
        nlohmann::json matching = nlohmann::json::array();
        for (auto [a, b] : r.matching.edges) matching.push_back({a, b});
        rounds.push_back({{"round", r.round},
                          {"nodes", r.node_count},
                          {"edges", r.edge_count},
                          {"matching", matching},
                          {"matched_weight", r.matched_weight}});
    }
    return rounds;
}

nlohmann::json certificate_json(const EmptinessCertificate& cert) {
    nlohmann::json out;
    out["empty"] = cert.empty;
    out["witness"] = cert.witness ? partition_json(*cert.witness) : nlohmann::json(nullptr);
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& [p, w] : cert.blocked_samples)
        samples.push_back({{"partition", partition_json(p)}, {"blocking", witness_json(w)}});
    out["blocked_samples"] = samples;
    return out;
}

nlohmann::json nash_move_json(const NashMove& move) {
    return {{"agent", move.agent},
            {"target_block", move.target_block},
            {"current_utility", move.current_utility},
            {"target_utility", move.target_utility}};
}

nlohmann::json campaign_json(const CampaignReport& report) {
    nlohmann::json families = nlohmann::json::array();
    for (const auto& fam : report.families) {
        nlohmann::json failures = nlohmann::json::array();
        for (const auto& f : fam.failure_detail)
            failures.push_back({{"index", f.index},
                                {"seed", f.seed},
                                {"applied_blocks", f.applied_blocks},
                                {"restarts", f.restarts}});
        families.push_back({{"family", fam.family.label()},
                            {"instances", fam.instances},
                            {"successes", fam.successes},
                            {"failures", fam.failures},
                            {"restarts_total", fam.restarts_total},
                            {"mean_applied_blocks", fam.mean_applied_blocks},
                            {"failure_detail", failures}});
    }
    return {{"master_seed", report.master_seed},
            {"n", report.n},
            {"k", report.k},
            {"seed_derivation", report.seed_derivation},
            {"families", families}};
}

std::string welfare_rational(Weight scaled, std::int64_t weight_scale) {
    const std::int64_t g = std::gcd(scaled, weight_scale);  // scale >= 1, so g >= 1
    const std::int64_t num = scaled / g;
    const std::int64_t den = weight_scale / g;
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace hedonic::io
