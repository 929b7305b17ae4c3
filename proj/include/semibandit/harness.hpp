#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semibandit/env.hpp"
#include "semibandit/errors.hpp"
#include "semibandit/graph.hpp"
#include "semibandit/io.hpp"
#include "semibandit/oracle.hpp"
#include "semibandit/policy.hpp"
#include "semibandit/regret.hpp"

namespace semibandit {

enum class Scenario { AdPlacement, ShortestPathDemo, ChannelAccess, Custom };

inline const char* scenario_name(Scenario s) {
    switch (s) {
        case Scenario::AdPlacement:      return "ad_placement";
        case Scenario::ShortestPathDemo: return "shortest_path_demo";
        case Scenario::ChannelAccess:    return "channel_access";
        case Scenario::Custom:           return "custom";
    }
    return "?";
}

// A fully resolved experiment: normalized arms, the per-round problem, and the
// loop parameters. Identical configs replay identically.
struct RunConfig {
    Scenario scenario = Scenario::Custom;
    std::string policy = "dfl";
    MwisMode oracle_mode = MwisMode::Exact;
    long horizon = 1000;
    int replications = 1;
    std::uint64_t seed = 1;
    std::vector<ArmModel> arms;
    double scale = 1.0;
    OracleProblem problem = ExhaustiveProblem{};
};

struct TraceRow {
    int replication = 0;
    long t = 0;
    Strategy strategy;
    double reward = 0.0;
    double cum_reward = 0.0;
    double avg_regret = 0.0;
    double avg_beta_regret = 0.0;
};

struct RunSummary {
    double lambda1 = 0.0; // normalized units
    double beta = 1.0;
    double scale = 1.0;
    std::string policy;
    std::string oracle;
    long horizon = 0;
    int replications = 0;
    std::vector<double> mean_avg_regret;      // index t-1
    std::vector<double> mean_avg_beta_regret; // index t-1
};

struct RunOutput {
    std::vector<TraceRow> traces;
    RunSummary summary;
};

inline void validate_config(const RunConfig& c) {
    if (c.horizon < 1) fail(Errc::config, "horizon must be >= 1");
    if (c.replications < 1) fail(Errc::config, "replications must be >= 1");
    policy_from_name(c.policy);
    if (c.arms.empty()) fail(Errc::config, "environment has no arms");
    for (int k = 0; k < static_cast<int>(c.arms.size()); ++k) validate_arm(c.arms[k], k);
    validate_problem(c.problem);
    const int K = static_cast<int>(c.arms.size());
    if (std::holds_alternative<ExhaustiveProblem>(c.problem)) {
        if (arm_count(c.problem) > K)
            fail(Errc::config, "strategy list references arms beyond the environment");
    } else if (arm_count(c.problem) != K) {
        fail(Errc::config, "problem arm count " + std::to_string(arm_count(c.problem)) +
                               " != environment arm count " + std::to_string(K));
    }
    if (c.oracle_mode == MwisMode::Greedy && !std::holds_alternative<MwisProblem>(c.problem))
        fail(Errc::config, "oracle_mode=greedy applies only to mwis problems");
}

// Approximation factor of the run's per-round oracle.
inline double config_beta(const RunConfig& c) {
    if (c.oracle_mode == MwisMode::Greedy)
        if (const auto* m = std::get_if<MwisProblem>(&c.problem))
            return static_cast<double>(max_degree(m->graph) + 1);
    return 1.0;
}

namespace detail {

inline bool literal_path_mode(const OracleProblem& p) {
    const auto* q = std::get_if<PathProblem>(&p);
    return q && q->mode == PathMode::LiteralAlg3;
}

} // namespace detail

// True means in the units the ledger accounts. Under LiteralAlg3 the
// environment arms carry delays and the ledger accounts gains 1 - delay.
inline std::vector<double> regret_means(const RunConfig& c) {
    std::vector<double> m;
    m.reserve(c.arms.size());
    for (const ArmModel& a : c.arms) m.push_back(a.mean);
    if (detail::literal_path_mode(c.problem))
        for (double& x : m) x = 1.0 - x;
    return m;
}

// One replication: seed xor r, then per round t = 1..n
//   indices -> oracle argmax -> sample -> update stats -> record.
// Under LiteralAlg3 the stats track delays (1 - observed gain) and the oracle
// minimizes; the ledger always accounts gains.
inline RunOutput run(const RunConfig& config) {
    validate_config(config);
    const PolicyKind kind = policy_from_name(config.policy);
    const int K = static_cast<int>(config.arms.size());
    const int N = max_strategy_size(config.problem);
    const double beta = config_beta(config);
    double lambda1 = 0.0;
    std::vector<Strategy> moss_list;
    try {
        lambda1 = static_optimum(regret_means(config), config.problem).second;
        if (kind == PolicyKind::NaiveMoss) moss_list = enumerate_feasible(config.problem);
    } catch (const SimError& e) {
        throw SimError(e.code(), std::string(e.what()) + " [while computing the static optimum]");
    }

    OracleProblem round_problem = config.problem;
    if (auto* m = std::get_if<MwisProblem>(&round_problem)) m->mode = config.oracle_mode;

    const bool literal = detail::literal_path_mode(config.problem);

    RunOutput out;
    out.summary.lambda1 = lambda1;
    out.summary.beta = beta;
    out.summary.scale = config.scale;
    out.summary.policy = config.policy;
    out.summary.oracle = (config.oracle_mode == MwisMode::Greedy) ? "greedy" : "exact";
    out.summary.horizon = config.horizon;
    out.summary.replications = config.replications;
    out.summary.mean_avg_regret.assign(static_cast<std::size_t>(config.horizon), 0.0);
    out.summary.mean_avg_beta_regret.assign(static_cast<std::size_t>(config.horizon), 0.0);
    out.traces.reserve(static_cast<std::size_t>(config.horizon) *
                       static_cast<std::size_t>(config.replications));

    for (int rep = 0; rep < config.replications; ++rep) {
        Environment env(config.arms, config.seed ^ static_cast<std::uint64_t>(rep));
        PolicyState st =
            make_policy_state(kind, K, static_cast<int>(moss_list.size()));
        RegretLedger ledger(lambda1, beta, config.scale);
        for (long t = 1; t <= config.horizon; ++t) {
            try {
                std::size_t moss_index = 0;
                Strategy chosen;
                if (kind == PolicyKind::NaiveMoss) {
                    moss_index = naive_moss_select_index(st, moss_list, t, config.horizon);
                    chosen = moss_list[moss_index];
                } else {
                    chosen = select_strategy(st, round_problem, t, N);
                }
                const auto obs = env.sample_round(chosen);
                double reward = 0.0;
                for (auto [k, r] : obs) reward += literal ? 1.0 - r : r;
                if (literal) {
                    auto delays = obs;
                    for (auto& kv : delays) kv.second = 1.0 - kv.second;
                    update_stats(st, delays);
                } else {
                    update_stats(st, obs);
                }
                if (kind == PolicyKind::NaiveMoss) note_strategy_reward(st, moss_index, reward);
                ledger.record_round(t, chosen, reward);
            } catch (const SimError& e) {
                throw SimError(e.code(), std::string(e.what()) + " [replication " +
                                             std::to_string(rep) + ", round " +
                                             std::to_string(t) + "]");
            }
        }
        for (const RoundRecord& r : ledger.rows()) {
            out.traces.push_back(TraceRow{rep, r.t, r.strategy, r.reward,
                                          // cum_reward reconstructed below
                                          0.0, r.avg_regret, r.avg_beta_regret});
            out.summary.mean_avg_regret[static_cast<std::size_t>(r.t - 1)] += r.avg_regret;
            out.summary.mean_avg_beta_regret[static_cast<std::size_t>(r.t - 1)] +=
                r.avg_beta_regret;
        }
        // fill cumulative rewards for this replication's rows
        double cum = 0.0;
        const std::size_t base = out.traces.size() - static_cast<std::size_t>(config.horizon);
        for (std::size_t i = base; i < out.traces.size(); ++i) {
            cum += out.traces[i].reward;
            out.traces[i].cum_reward = cum;
        }
    }
    for (double& v : out.summary.mean_avg_regret) v /= config.replications;
    for (double& v : out.summary.mean_avg_beta_regret) v /= config.replications;
    return out;
}

// ---------------------------------------------------------------------------
// Built-in scenarios

// Ten ad categories: click-through means in [0,1] and bids in currency units;
// a displayed set of at most 5 must carry a bid sum strictly above 3000.
inline const std::vector<double>& ad_placement_means() {
    static const std::vector<double> v{0.4506, 0.7279, 0.8377, 0.1662, 0.8055,
                                       0.7732, 0.2179, 0.2688, 0.3722, 0.6971};
    return v;
}

inline const std::vector<double>& ad_placement_bids() {
    static const std::vector<double> v{640.9853,  173.41842, 924.09434, 601.3466, 705.72878,
                                       759.04837, 302.2392,  809.4084,  421.9816, 771.5156};
    return v;
}

// Five users, five channels; 1 marks conflicting users.
inline const std::vector<std::vector<int>>& channel_access_conflicts() {
    static const std::vector<std::vector<int>> m{{1, 1, 1, 1, 0},
                                                 {1, 1, 1, 0, 1},
                                                 {1, 1, 1, 1, 0},
                                                 {1, 0, 1, 1, 0},
                                                 {0, 1, 0, 0, 1}};
    return m;
}

// Mean data rate of channel j for user i.
inline const std::vector<std::vector<double>>& channel_access_rates() {
    static const std::vector<std::vector<double>> m{
        {631.98, 369.81, 128.43, 191.70, 155.64},
        {432.00, 53.93, 598.08, 30.93, 551.52},
        {199.55, 26.00, 1175.17, 524.34, 147.69},
        {127.38, 53.73, 68.34, 937.44, 117.62},
        {311.04, 101.28, 171.95, 436.45, 62.19}};
    return m;
}

// The demo routing instance is this artifact's own: a 6-node DAG with fixed
// edge delay means. Arms are the gain processes 1 - delay.
struct DemoDag {
    std::vector<std::pair<int, int>> edges;
    std::vector<double> delay_means;
};

inline const DemoDag& shortest_path_demo_dag() {
    static const DemoDag d{
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}},
        {0.2, 0.6, 0.9, 0.3, 0.7, 0.8, 0.1, 0.5, 0.4, 0.2}};
    return d;
}

inline RunConfig make_channel_access_config(const std::vector<std::vector<int>>& conflicts,
                                            const std::vector<std::vector<double>>& rates) {
    if (rates.empty() || conflicts.size() != rates.size())
        fail(Errc::config, "conflict matrix and rate matrix must cover the same users");
    const int N = static_cast<int>(rates.size());
    const int M = static_cast<int>(rates.front().size());
    std::vector<double> raw;
    raw.reserve(static_cast<std::size_t>(N) * static_cast<std::size_t>(M));
    for (const auto& row : rates) {
        if (static_cast<int>(row.size()) != M)
            fail(Errc::config, "rate matrix rows must have equal length");
        for (double r : row) raw.push_back(r);
    }
    ConflictGraph cg{N, M, conflicts};
    const UGraph extended = build_extended_conflict_graph(cg);

    RunConfig c;
    c.scenario = Scenario::ChannelAccess;
    auto [env, scale] = normalize_environment(raw, /*seed*/ 0);
    c.arms = env.arms();
    c.scale = scale;
    c.problem = MwisProblem{extended, MwisMode::Exact};
    return c;
}

inline RunConfig builtin_scenario(const std::string& name) {
    RunConfig c;
    c.policy = "dfl";
    c.horizon = 2000;
    c.replications = 20;
    c.seed = 20140214;
    if (name == "ad_placement") {
        c.scenario = Scenario::AdPlacement;
        for (double m : ad_placement_means())
            c.arms.push_back(ArmModel{m, RewardFamily::Bernoulli, 0.0, 1.0});
        c.scale = 1.0;
        c.problem = ThresholdProblem{ad_placement_bids(), 3000.0, 5};
        return c;
    }
    if (name == "channel_access") {
        RunConfig ca = make_channel_access_config(channel_access_conflicts(),
                                                  channel_access_rates());
        ca.policy = c.policy;
        ca.horizon = c.horizon;
        ca.replications = c.replications;
        ca.seed = c.seed;
        return ca;
    }
    if (name == "shortest_path_demo") {
        c.scenario = Scenario::ShortestPathDemo;
        const DemoDag& d = shortest_path_demo_dag();
        for (double delay : d.delay_means)
            c.arms.push_back(ArmModel{1.0 - delay, RewardFamily::Bernoulli, 0.0, 1.0});
        c.scale = 1.0;
        c.problem = PathProblem{6, 0, 5, d.edges, PathMode::GainOptimism};
        return c;
    }
    fail(Errc::config, "unknown scenario '" + name +
                           "' (expected ad_placement|channel_access|shortest_path_demo)");
}

// ---------------------------------------------------------------------------
// CSV serialization

inline std::string trace_csv(const std::vector<TraceRow>& rows) {
    std::string out = "replication,t,strategy,reward,cum_reward,avg_regret,avg_beta_regret\n";
    for (const TraceRow& r : rows) {
        out += std::to_string(r.replication);
        out += ',';
        out += std::to_string(r.t);
        out += ',';
        out += format_strategy_csv(r.strategy);
        out += ',';
        out += format_real(r.reward);
        out += ',';
        out += format_real(r.cum_reward);
        out += ',';
        out += format_real(r.avg_regret);
        out += ',';
        out += format_real(r.avg_beta_regret);
        out += '\n';
    }
    return out;
}

inline std::string summary_meta_line(const RunSummary& s) {
    return "# lambda1=" + format_real(s.lambda1) + ",beta=" + format_real(s.beta) +
           ",scale=" + format_real(s.scale) + ",policy=" + s.policy + ",oracle=" + s.oracle +
           ",horizon=" + std::to_string(s.horizon) +
           ",replications=" + std::to_string(s.replications) + "\n";
}

inline std::string summary_csv(const RunSummary& s) {
    std::string out = summary_meta_line(s);
    out += "t,mean_avg_regret,mean_avg_beta_regret\n";
    for (std::size_t i = 0; i < s.mean_avg_regret.size(); ++i) {
        out += std::to_string(i + 1);
        out += ',';
        out += format_real(s.mean_avg_regret[i]);
        out += ',';
        out += format_real(s.mean_avg_beta_regret[i]);
        out += '\n';
    }
    return out;
}

// Joined comparison table: one mean-regret column per policy, common seeds.
inline std::string compare_csv(const std::vector<RunSummary>& summaries) {
    if (summaries.empty()) fail(Errc::config, "nothing to compare");
    std::string out = "# lambda1=" + format_real(summaries.front().lambda1) +
                      ",beta=" + format_real(summaries.front().beta) +
                      ",scale=" + format_real(summaries.front().scale) +
                      ",oracle=" + summaries.front().oracle + "\n";
    out += "t";
    for (const RunSummary& s : summaries) out += ",mean_avg_regret_" + s.policy;
    out += '\n';
    const std::size_t n = summaries.front().mean_avg_regret.size();
    for (const RunSummary& s : summaries)
        if (s.mean_avg_regret.size() != n) fail(Errc::config, "mismatched horizons in compare");
    for (std::size_t i = 0; i < n; ++i) {
        out += std::to_string(i + 1);
        for (const RunSummary& s : summaries) {
            out += ',';
            out += format_real(s.mean_avg_regret[i]);
        }
        out += '\n';
    }
    return out;
}

} // namespace semibandit
