#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "semibandit/errors.hpp"
#include "semibandit/oracle.hpp"
#include "semibandit/strategy.hpp"
#include "semibandit/weights.hpp"

namespace semibandit {

// Per-arm sufficient statistics. plays == 0 is a distinguished cold state;
// the empirical mean is undefined there, never zero.
struct ArmStats {
    long plays = 0;
    double reward_sum = 0.0;

    bool cold() const { return plays == 0; }
    double mean() const {
        if (plays == 0) fail(Errc::domain, "empirical mean of an unplayed arm");
        return reward_sum / static_cast<double>(plays);
    }
};

enum class PolicyKind { Dfl, Llr, NaiveMoss };

inline const char* policy_name(PolicyKind k) {
    switch (k) {
        case PolicyKind::Dfl:       return "dfl";
        case PolicyKind::Llr:       return "llr";
        case PolicyKind::NaiveMoss: return "moss";
    }
    return "?";
}

inline PolicyKind policy_from_name(const std::string& name) {
    if (name == "dfl") return PolicyKind::Dfl;
    if (name == "llr") return PolicyKind::Llr;
    if (name == "moss") return PolicyKind::NaiveMoss;
    fail(Errc::config, "unknown policy '" + name + "' (expected dfl|llr|moss)");
}

// DFL and LLR keep Theta(K) state: the per-arm stats and a round counter,
// nothing per strategy. Only the NaiveMoss baseline carries per-strategy
// statistics, keyed by position in its enumerated strategy list.
struct PolicyState {
    PolicyKind kind = PolicyKind::Dfl;
    std::vector<ArmStats> stats;
    long round = 0;

    // NaiveMoss only; parallel to the enumerated strategy list.
    std::vector<long> strategy_plays;
    std::vector<double> strategy_reward_sum;
};

inline PolicyState make_policy_state(PolicyKind kind, int arm_count, int strategy_count = 0) {
    PolicyState st;
    st.kind = kind;
    st.stats.assign(static_cast<std::size_t>(arm_count), ArmStats{});
    if (kind == PolicyKind::NaiveMoss) {
        st.strategy_plays.assign(static_cast<std::size_t>(strategy_count), 0);
        st.strategy_reward_sum.assign(static_cast<std::size_t>(strategy_count), 0.0);
    }
    return st;
}

// Fold one round of semi-bandit observations into the per-arm stats.
inline void update_stats(PolicyState& st, const std::vector<std::pair<int, double>>& observations) {
    for (auto [k, r] : observations) {
        if (k < 0 || k >= static_cast<int>(st.stats.size()))
            fail(Errc::invalid_observation, "arm index " + std::to_string(k) + " out of range");
        if (!(r >= 0.0 && r <= 1.0))
            fail(Errc::invalid_observation,
                 "reward " + std::to_string(r) + " outside [0,1] for arm " + std::to_string(k));
    }
    for (auto [k, r] : observations) {
        ArmStats& a = st.stats[static_cast<std::size_t>(k)];
        a.plays += 1;
        a.reward_sum += r;
    }
    st.round += 1;
}

// w_k(t) = mu~_k + sqrt( max(ln(t^{2/3} / (K m_k)), 0) / m_k ); natural log,
// t^{2/3} in floating point. Unplayed arms dominate any finite sum.
inline double dfl_index(const ArmStats& a, double t, int K) {
    if (!(t >= 1.0) || K < 1) fail(Errc::domain, "dfl_index requires t >= 1 and K >= 1");
    if (a.cold()) return std::numeric_limits<double>::infinity();
    const double m = static_cast<double>(a.plays);
    const double t23 = std::pow(t, 2.0 / 3.0);
    const double bonus = std::sqrt(std::max(std::log(t23 / (static_cast<double>(K) * m)), 0.0) / m);
    return a.mean() + bonus;
}

// Baseline from prior work: mu~_k + sqrt((N+1) ln t / m_k).
inline double llr_index(const ArmStats& a, double t, int N) {
    if (!(t >= 1.0) || N < 1) fail(Errc::domain, "llr_index requires t >= 1 and N >= 1");
    if (a.cold()) return std::numeric_limits<double>::infinity();
    const double m = static_cast<double>(a.plays);
    const double bonus = std::sqrt(static_cast<double>(N + 1) * std::log(t) / m);
    return a.mean() + bonus;
}

// Per-arm oracle weights under the two-tier cold/finite order.
inline std::vector<TieredWeight> arm_weights(const PolicyState& st, long t, int N) {
    const int K = static_cast<int>(st.stats.size());
    const double tr = static_cast<double>(t);
    std::vector<TieredWeight> w;
    w.reserve(st.stats.size());
    for (const ArmStats& a : st.stats) {
        if (a.cold()) {
            w.push_back(cold_weight());
        } else if (st.kind == PolicyKind::Llr) {
            w.push_back(warm_weight(llr_index(a, tr, N)));
        } else {
            w.push_back(warm_weight(dfl_index(a, tr, K)));
        }
    }
    return w;
}

// Index computation plus the oracle argmax. During cold start the two-tier
// weights make the oracle prefer strategies covering more unplayed arms.
// N is the largest feasible strategy size (the LLR bonus needs it); the
// convenience overload derives it from the problem.
inline Strategy select_strategy(const PolicyState& st, const OracleProblem& problem, long t,
                                int N) {
    return maximize(problem, arm_weights(st, t, N)).strategy;
}

inline Strategy select_strategy(const PolicyState& st, const OracleProblem& problem, long t) {
    return select_strategy(st, problem, t, max_strategy_size(problem));
}

// Strategy-level MOSS over an explicitly enumerated feasible set; kappa is the
// list size and n the known horizon. Unplayed strategies first, in list order.
inline std::size_t naive_moss_select_index(const PolicyState& st,
                                           const std::vector<Strategy>& strategies, long t,
                                           long n) {
    (void)t;
    if (strategies.empty()) fail(Errc::no_feasible_strategy, "empty strategy list");
    if (st.strategy_plays.size() != strategies.size())
        fail(Errc::config, "moss state sized for a different strategy list");
    const double kappa = static_cast<double>(strategies.size());
    for (std::size_t x = 0; x < strategies.size(); ++x)
        if (st.strategy_plays[x] == 0) return x;
    std::size_t best = 0;
    double best_idx = -std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < strategies.size(); ++x) {
        const double m = static_cast<double>(st.strategy_plays[x]);
        const double mean = st.strategy_reward_sum[x] / m;
        const double idx =
            mean + std::sqrt(std::max(std::log(static_cast<double>(n) / (kappa * m)), 0.0) / m);
        if (idx > best_idx) { // ties keep the first in list order
            best_idx = idx;
            best = x;
        }
    }
    return best;
}

inline Strategy naive_moss_select(const PolicyState& st, const std::vector<Strategy>& strategies,
                                  long t, long n) {
    return strategies[naive_moss_select_index(st, strategies, t, n)];
}

inline void note_strategy_reward(PolicyState& st, std::size_t strategy_index, double reward) {
    st.strategy_plays[strategy_index] += 1;
    st.strategy_reward_sum[strategy_index] += reward;
}

// Canonical fixed-width encoding; its size depends only on K (plus the
// strategy-list size for NaiveMoss), never on the feasible set of DFL/LLR.
inline std::string serialize_policy_state(const PolicyState& st) {
    std::string out;
    auto put_u64 = [&out](std::uint64_t v) {
        char buf[8];
        std::memcpy(buf, &v, 8);
        out.append(buf, 8);
    };
    auto put_f64 = [&out](double v) {
        char buf[8];
        std::memcpy(buf, &v, 8);
        out.append(buf, 8);
    };
    put_u64(static_cast<std::uint64_t>(st.kind));
    put_u64(static_cast<std::uint64_t>(st.round));
    put_u64(st.stats.size());
    for (const ArmStats& a : st.stats) {
        put_u64(static_cast<std::uint64_t>(a.plays));
        put_f64(a.reward_sum);
    }
    put_u64(st.strategy_plays.size());
    for (std::size_t x = 0; x < st.strategy_plays.size(); ++x) {
        put_u64(static_cast<std::uint64_t>(st.strategy_plays[x]));
        put_f64(st.strategy_reward_sum[x]);
    }
    return out;
}

} // namespace semibandit
