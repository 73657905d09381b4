#include "hedonic/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "hedonic/errors.hpp"
#include "hedonic/fixtures.hpp"
#include "hedonic/oracle.hpp"
#include "hedonic/random_graphs.hpp"

namespace hedonic {

std::string FamilySpec::label() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::gnp: out << "gnp:" << p; break;
        case Kind::uniform_tree: out << "uniform_tree"; break;
        case Kind::watts_strogatz: out << "watts_strogatz:" << neighbors << ":" << rewire; break;
        case Kind::fixture: out << "fixture:" << fixture; break;
    }
    return out.str();
}

FamilySpec FamilySpec::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ':')) parts.push_back(token);
    if (parts.empty()) throw ParseError("campaign: empty family spec");

    FamilySpec spec;
    if (parts[0] == "gnp") {
        spec.kind = Kind::gnp;
        if (parts.size() > 1) spec.p = std::stod(parts[1]);
    } else if (parts[0] == "uniform_tree") {
        spec.kind = Kind::uniform_tree;
    } else if (parts[0] == "watts_strogatz") {
        spec.kind = Kind::watts_strogatz;
        if (parts.size() > 1) spec.neighbors = std::stoi(parts[1]);
        if (parts.size() > 2) spec.rewire = std::stod(parts[2]);
    } else if (parts[0] == "fixture") {
        if (parts.size() < 2) throw ParseError("campaign: fixture family needs a name");
        spec.kind = Kind::fixture;
        spec.fixture = parts[1];
    } else {
        throw ParseError("campaign: unknown family '" + parts[0] + "'");
    }
    return spec;
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

CampaignConfig parse_campaign_config(const std::string& text) {
    CampaignConfig config;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("campaign config line " + std::to_string(lineno) +
                             ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "seed") {
                config.master_seed = std::stoull(value);
            } else if (key == "n") {
                config.n = std::stoi(value);
            } else if (key == "k") {
                config.k = std::stoi(value);
            } else if (key == "instances") {
                config.instances_per_family = std::stoi(value);
            } else if (key == "restart_threshold") {
                config.restart_threshold = std::stoi(value);
            } else if (key == "max_restarts") {
                config.max_restarts = std::stoi(value);
            } else if (key == "workers") {
                config.workers = std::stoi(value);
            } else if (key == "verify") {
                config.verify_successes = (value == "true" || value == "1" || value == "yes");
            } else if (key == "families") {
                std::istringstream fams(value);
                std::string fam;
                while (std::getline(fams, fam, ',')) {
                    fam = trim(fam);
                    if (!fam.empty()) config.families.push_back(FamilySpec::parse(fam));
                }
            } else {
                throw ParseError("campaign config line " + std::to_string(lineno) +
                                 ": unknown key '" + key + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("campaign config line " + std::to_string(lineno) +
                             ": bad value for '" + key + "'");
        }
    }
    if (config.k < 2) throw ParseError("campaign config: k must be >= 2");
    if (config.instances_per_family < 0) throw ParseError("campaign config: instances must be >= 0");
    return config;
}

namespace {

GameInstance make_instance(const CampaignConfig& config, const FamilySpec& family,
                           RngStream& rng) {
    switch (family.kind) {
        case FamilySpec::Kind::gnp:
            return GameInstance(gen_gnp(config.n, family.p, rng), config.k);
        case FamilySpec::Kind::uniform_tree:
            return GameInstance(gen_uniform_tree(config.n, rng), config.k);
        case FamilySpec::Kind::watts_strogatz:
            return GameInstance(gen_watts_strogatz(config.n, family.neighbors, family.rewire, rng),
                                config.k);
        case FamilySpec::Kind::fixture: {
            auto fixture = fixtures::by_name(family.fixture);
            return GameInstance(std::move(fixture.graph), config.k, fixture.weight_scale);
        }
    }
    throw std::logic_error("unreachable family kind");
}

int effective_workers(const CampaignConfig& config) {
    if (config.workers > 0) return config.workers;
    if (const char* env = std::getenv("HEDONIC_WORKERS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& config) {
    CampaignReport report;
    report.master_seed = config.master_seed;
    report.n = config.n;
    report.k = config.k;
    report.seed_derivation = "splitmix64(master ^ splitmix64(family*instances + index + 1))";

    const int per_family = config.instances_per_family;
    const int total = static_cast<int>(config.families.size()) * per_family;
    std::vector<InstanceOutcome> outcomes(static_cast<std::size_t>(std::max(total, 0)));

    std::atomic<int> cursor{0};
    auto worker = [&] {
        for (;;) {
            const int at = cursor.fetch_add(1);
            if (at >= total) return;
            const int family_index = at / per_family;
            const int instance_index = at % per_family;
            const FamilySpec& family = config.families[static_cast<std::size_t>(family_index)];

            InstanceOutcome out;
            out.index = instance_index;
            out.seed = derive_subseed(config.master_seed, static_cast<std::uint64_t>(at));
            RngStream rng(out.seed);
            GameInstance game = make_instance(config, family, rng);
            HeuristicResult run =
                core_heuristic(game, rng, config.restart_threshold, config.max_restarts);
            out.applied_blocks = run.stats.applied_blocks;
            out.restarts = run.stats.restarts;
            if (run.success) {
                out.verified =
                    !config.verify_successes ||
                    verify_membership(game, *run.partition, ConceptQuery::core()).member;
                out.success = out.verified;
            }
            outcomes[static_cast<std::size_t>(at)] = out;
        }
    };

    const int workers = std::min(effective_workers(config), std::max(total, 1));
    if (total > 0) {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (std::size_t f = 0; f < config.families.size(); ++f) {
        FamilyReport fam;
        fam.family = config.families[f];
        fam.instances = per_family;
        long long blocks_total = 0;
        for (int i = 0; i < per_family; ++i) {
            const auto& out = outcomes[f * static_cast<std::size_t>(per_family) +
                                       static_cast<std::size_t>(i)];
            blocks_total += out.applied_blocks;
            fam.restarts_total += out.restarts;
            if (out.success) {
                ++fam.successes;
            } else {
                ++fam.failures;
                fam.failure_detail.push_back(out);
            }
        }
        fam.mean_applied_blocks =
            per_family == 0 ? 0.0 : static_cast<double>(blocks_total) / per_family;
        report.families.push_back(std::move(fam));
    }
    return report;
}

}  // namespace hedonic
