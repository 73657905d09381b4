#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "hedonic/blocking.hpp"
#include "hedonic/campaign.hpp"
#include "hedonic/graph.hpp"
#include "hedonic/mnm.hpp"
#include "hedonic/oracle.hpp"
#include "hedonic/partition.hpp"
#include "hedonic/stability.hpp"

namespace hedonic::io {

// Text graph format: optional '#' comment lines, a header "n m", then m lines
// "u v [w]" with 1-indexed endpoints and an optional positive decimal weight
// (default 1). Decimal weights are scaled to integers by one global power of
// ten (the maximum fractional digit count across the file, after trimming
// trailing zeros), recorded in weight_scale.
struct ParsedGraphFile {
    Graph graph;
    std::int64_t weight_scale = 1;
};

ParsedGraphFile parse_graph_text(const std::string& text);
ParsedGraphFile load_graph_file(const std::string& path);
std::string serialize_graph(const Graph& g, std::int64_t weight_scale);

// Partition payload: {"blocks": [[1,2],[3]]}.
Partition parse_partition_json(int n, const std::string& text);
std::string serialize_partition_file(const Partition& p);

// JSON builders for report payloads.
nlohmann::json partition_json(const Partition& p);
nlohmann::json witness_json(const BlockingWitness& w);
nlohmann::json stats_json(const SolverStats& stats);
nlohmann::json trace_json(const MnMTrace& trace);
nlohmann::json certificate_json(const EmptinessCertificate& cert);
nlohmann::json nash_move_json(const NashMove& move);
nlohmann::json campaign_json(const CampaignReport& report);

// Exact welfare as a reduced rational string, e.g. 42 at scale 10 -> "21/5".
std::string welfare_rational(Weight scaled, std::int64_t weight_scale);

}  // namespace hedonic::io
