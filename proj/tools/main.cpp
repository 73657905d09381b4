// hedonic: command-line front end for bounded-coalition hedonic games.
//
// Subcommands: solve (approximation + stability solvers), verify (membership
// of a given partition in a stability concept), oracle (brute-force questions
// at desk scale), simulate (seeded heuristic campaigns).
//
// Exit codes: 0 ok, 2 input parse error, 3 domain error (bad k, algorithm or
// parameter mismatch), 4 non-convergence, 5 invalid partition, 6 guard
// exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hedonic/blocking.hpp"
#include "hedonic/campaign.hpp"
#include "hedonic/errors.hpp"
#include "hedonic/fixtures.hpp"
#include "hedonic/io.hpp"
#include "hedonic/mnm.hpp"
#include "hedonic/oracle.hpp"
#include "hedonic/stability.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitParseError = 2;
constexpr int kExitDomainError = 3;
constexpr int kExitNonConvergence = 4;
constexpr int kExitInvalidPartition = 5;
constexpr int kExitGuardExceeded = 6;

using nlohmann::json;
using namespace hedonic;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw ParseError("cannot open output file '" + out_path + "'");
        out << report.dump(2) << "\n";
    }
}

json envelope(const std::string& command, const io::ParsedGraphFile& input, int k) {
    return {{"version", kVersion},
            {"command", command},
            {"instance",
             {{"n", input.graph.agent_count()},
              {"m", input.graph.edge_count()},
              {"k", k},
              {"weight_scale", input.weight_scale}}}};
}

void attach_partition(json& report, const GameInstance& game, const Partition& p) {
    const Weight welfare = social_welfare(game, p);
    report["partition"] = io::partition_json(p);
    report["welfare_scaled"] = welfare;
    report["welfare"] = io::welfare_rational(welfare, game.weight_scale);
}

Rational require_eps(const std::optional<std::string>& flag, const char* name) {
    if (!flag) throw std::domain_error(std::string("algorithm requires ") + name);
    return parse_rational(*flag);
}

struct SolveArgs {
    std::string graph_path;
    int k = 0;
    std::string algorithm;
    std::optional<std::string> eps_a;
    std::optional<std::string> eps_m;
    std::uint64_t seed = 0;
    std::string out;
};

void run_solve(const SolveArgs& args) {
    io::ParsedGraphFile input = io::load_graph_file(args.graph_path);
    GameInstance game(input.graph, args.k, input.weight_scale);
    json report = envelope("solve", input, args.k);
    report["algorithm"] = args.algorithm;

    if (args.algorithm == "mnm") {
        auto [p, trace] = match_and_merge(game);
        attach_partition(report, game, p);
        report["trace"] = io::trace_json(trace);
    } else if (args.algorithm == "core-k3") {
        auto [p, stats] = find_core_k3(game);
        attach_partition(report, game, p);
        report["stats"] = io::stats_json(stats);
    } else if (args.algorithm == "eps-a-core") {
        const Rational eps = require_eps(args.eps_a, "--eps-a");
        auto [p, stats] = find_eps_a_core(game, eps);
        report["eps_a"] = eps.str();
        attach_partition(report, game, p);
        report["stats"] = io::stats_json(stats);
    } else if (args.algorithm == "eps-m-core") {
        const Rational eps = require_eps(args.eps_m, "--eps-m");
        auto [p, stats] = find_eps_m_core(game, eps);
        report["eps_m"] = eps.str();
        attach_partition(report, game, p);
        report["stats"] = io::stats_json(stats);
    } else if (args.algorithm == "csc") {
        auto [p, stats] = find_csc(game);
        attach_partition(report, game, p);
        report["stats"] = io::stats_json(stats);
    } else if (args.algorithm == "nash") {
        auto [p, stats] = find_nash_stable(game);
        attach_partition(report, game, p);
        report["stats"] = io::stats_json(stats);
    } else if (args.algorithm == "arbmax") {
        RngStream rng(args.seed);
        Partition p = arbmax_random(game, rng);
        attach_partition(report, game, p);
        report["seed"] = args.seed;
    } else {
        throw std::domain_error("unknown algorithm '" + args.algorithm + "'");
    }
    emit(report, args.out);
}

struct VerifyArgs {
    std::string graph_path;
    std::string partition_path;
    int k = 0;
    std::string concept_name;
    std::optional<std::string> eps_a;
    std::optional<std::string> eps_m;
    bool guard_override = false;
    std::string out;
};

void run_verify(const VerifyArgs& args) {
    io::ParsedGraphFile input = io::load_graph_file(args.graph_path);
    GameInstance game(input.graph, args.k, input.weight_scale);
    Partition p = io::parse_partition_json(game.n(), read_file(args.partition_path));
    p.validate_for(game);

    ConceptQuery query;
    if (args.concept_name == "core") {
        query = ConceptQuery::core();
    } else if (args.concept_name == "sc") {
        query = ConceptQuery::strict_core();
    } else if (args.concept_name == "csc") {
        query = ConceptQuery::csc();
    } else if (args.concept_name == "eps-a") {
        query = ConceptQuery::eps_a(require_eps(args.eps_a, "--eps-a"));
    } else if (args.concept_name == "eps-m") {
        query = ConceptQuery::eps_m(require_eps(args.eps_m, "--eps-m"));
    } else if (args.concept_name == "nash") {
        query = ConceptQuery::nash();
    } else {
        throw std::domain_error("unknown concept '" + args.concept_name + "'");
    }

    MembershipResult res = verify_membership(game, p, query, args.guard_override);
    json report = envelope("verify", input, args.k);
    report["concept"] = args.concept_name;
    report["partition"] = io::partition_json(p);
    report["member"] = res.member;
    if (res.blocking) report["witness"] = io::witness_json(*res.blocking);
    if (res.move) report["witness"] = io::nash_move_json(*res.move);
    emit(report, args.out);
}

struct OracleArgs {
    std::string graph_path;
    int k = 0;
    std::string question;
    bool guard_override = false;
    std::string out;
};

void run_oracle(const OracleArgs& args) {
    io::ParsedGraphFile input = io::load_graph_file(args.graph_path);
    GameInstance game(input.graph, args.k, input.weight_scale);
    json report = envelope("oracle", input, args.k);
    report["question"] = args.question;

    std::string head = args.question;
    std::string arg;
    if (const auto open = head.find('('); open != std::string::npos) {
        if (head.back() != ')') throw std::domain_error("malformed question '" + head + "'");
        arg = head.substr(open + 1, head.size() - open - 2);
        head = head.substr(0, open);
    }

    if (head == "opt") {
        auto [p, welfare] = opt_max_util(game, args.guard_override);
        attach_partition(report, game, p);
    } else if (head == "core-empty") {
        report["certificate"] = io::certificate_json(core_emptiness(game, args.guard_override));
    } else if (head == "sc-empty") {
        report["certificate"] = io::certificate_json(sc_emptiness(game, args.guard_override));
    } else if (head == "kn-factorize") {
        const int n = arg.empty() ? game.n() : std::stoi(arg);
        auto classes = kn_matching_partition(n);
        json matchings = json::array();
        json sizes = json::array();
        for (const auto& m : classes) {
            json edges = json::array();
            for (auto [a, b] : m.edges) edges.push_back({a, b});
            matchings.push_back(edges);
            sizes.push_back(m.size());
        }
        report["kn"] = n;
        report["matchings"] = matchings;
        report["sizes"] = sizes;
    } else {
        throw std::domain_error("unknown oracle question '" + args.question + "'");
    }
    emit(report, args.out);
}

struct SimulateArgs {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> restart_threshold;
    std::optional<int> max_restarts;
    std::string out;
};

void run_simulate(const SimulateArgs& args) {
    CampaignConfig config = parse_campaign_config(read_file(args.config_path));
    if (args.seed) config.master_seed = *args.seed;
    if (args.restart_threshold) config.restart_threshold = *args.restart_threshold;
    if (args.max_restarts) config.max_restarts = *args.max_restarts;

    CampaignReport result = run_campaign(config);
    json report = {{"version", kVersion}, {"command", "simulate"}};
    report["report"] = io::campaign_json(result);
    emit(report, args.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Additively separable hedonic games with bounded coalition size"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Run an approximation or stability solver");
    solve->add_option("graph", solve_args.graph_path, "graph file")->required();
    solve->add_option("--k", solve_args.k, "coalition size cap")->required();
    solve
        ->add_option("--algorithm", solve_args.algorithm,
                     "mnm | core-k3 | eps-a-core | eps-m-core | csc | nash | arbmax")
        ->required();
    std::string solve_eps_a, solve_eps_m;
    solve->add_option("--eps-a", solve_eps_a, "additive core relaxation (rational)");
    solve->add_option("--eps-m", solve_eps_m, "multiplicative core relaxation (rational)");
    solve->add_option("--seed", solve_args.seed, "seed for arbmax merge order");
    solve->add_option("--out", solve_args.out, "write the report here instead of stdout");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Check a partition against a stability concept");
    verify->add_option("graph", verify_args.graph_path, "graph file")->required();
    verify->add_option("partition", verify_args.partition_path, "partition JSON file")->required();
    verify->add_option("--k", verify_args.k, "coalition size cap")->required();
    verify
        ->add_option("--concept", verify_args.concept_name,
                     "core | sc | csc | eps-a | eps-m | nash")
        ->required();
    std::string verify_eps_a, verify_eps_m;
    verify->add_option("--eps-a", verify_eps_a, "additive relaxation (rational)");
    verify->add_option("--eps-m", verify_eps_m, "multiplicative relaxation (rational)");
    verify->add_flag("--guard-override", verify_args.guard_override,
                     "force checks beyond the desk-scale guard");
    verify->add_option("--out", verify_args.out, "write the report here instead of stdout");

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "Brute-force ground truth questions");
    oracle->add_option("graph", oracle_args.graph_path, "graph file")->required();
    oracle->add_option("--k", oracle_args.k, "coalition size cap")->required();
    oracle
        ->add_option("--question", oracle_args.question,
                     "opt | core-empty | sc-empty | kn-factorize[(n)]")
        ->required();
    oracle->add_flag("--guard-override", oracle_args.guard_override,
                     "force checks beyond the desk-scale guard");
    oracle->add_option("--out", oracle_args.out, "write the report here instead of stdout");

    SimulateArgs simulate_args;
    auto* simulate = app.add_subcommand("simulate", "Run a heuristic campaign from a config file");
    simulate->add_option("config", simulate_args.config_path, "campaign config file")->required();
    std::uint64_t sim_seed = 0;
    int sim_threshold = 0, sim_max_restarts = 0;
    auto* seed_opt = simulate->add_option("--seed", sim_seed, "override the master seed");
    auto* thresh_opt = simulate->add_option("--restart-threshold", sim_threshold,
                                            "override the staleness threshold");
    auto* restarts_opt =
        simulate->add_option("--max-restarts", sim_max_restarts, "override the restart cap");
    simulate->add_option("--out", simulate_args.out, "write the report here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            if (!solve_eps_a.empty()) solve_args.eps_a = solve_eps_a;
            if (!solve_eps_m.empty()) solve_args.eps_m = solve_eps_m;
            run_solve(solve_args);
        } else if (verify->parsed()) {
            if (!verify_eps_a.empty()) verify_args.eps_a = verify_eps_a;
            if (!verify_eps_m.empty()) verify_args.eps_m = verify_eps_m;
            run_verify(verify_args);
        } else if (oracle->parsed()) {
            run_oracle(oracle_args);
        } else if (simulate->parsed()) {
            if (seed_opt->count() > 0) simulate_args.seed = sim_seed;
            if (thresh_opt->count() > 0) simulate_args.restart_threshold = sim_threshold;
            if (restarts_opt->count() > 0) simulate_args.max_restarts = sim_max_restarts;
            run_simulate(simulate_args);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const ValidationError& e) {
        std::cerr << "invalid partition: " << e.what() << "\n";
        return kExitInvalidPartition;
    } catch (const GuardError& e) {
        std::cerr << "instance too large: " << e.what() << "\n";
        return kExitGuardExceeded;
    } catch (const ConvergenceError& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitOk;
}
