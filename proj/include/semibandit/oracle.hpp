#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <tuple>
#include <variant>
#include <vector>

#include "semibandit/errors.hpp"
#include "semibandit/graph.hpp"
#include "semibandit/strategy.hpp"
#include "semibandit/weights.hpp"

namespace semibandit {

// ---------------------------------------------------------------------------
// Problem variants

struct ExhaustiveProblem {
    std::vector<Strategy> strategies;
};

// Subsets of size <= max_size whose bid sum strictly exceeds the threshold.
struct ThresholdProblem {
    std::vector<double> bids;
    double threshold = 0.0;
    int max_size = 1;
};

// GainOptimism maximizes the gain-based index sum over source-sink paths
// (the form consistent with the learning policy's argmax). LiteralAlg3
// minimizes the delay-based index sum instead; under minimization a cold
// (infinite-index) edge is avoided rather than sought.
enum class PathMode { GainOptimism, LiteralAlg3 };

struct PathProblem {
    int nodes = 0;
    int source = 0;
    int sink = 0;
    std::vector<std::pair<int, int>> edges; // arm k is edges[k]
    PathMode mode = PathMode::GainOptimism;
};

enum class MwisMode { Exact, Greedy };

// Feasible strategies are the maximal independent sets of the graph.
struct MwisProblem {
    UGraph graph;
    MwisMode mode = MwisMode::Exact;
};

using OracleProblem = std::variant<ExhaustiveProblem, ThresholdProblem, PathProblem, MwisProblem>;

struct OracleResult {
    Strategy strategy;
    TieredWeight weight;
    double beta = 1.0;
};

// ---------------------------------------------------------------------------
// Shared helpers

inline TieredWeight strategy_weight(const Strategy& s, const std::vector<TieredWeight>& w) {
    TieredWeight sum;
    for (int k : s.arms) sum += w[static_cast<std::size_t>(k)];
    return sum;
}

inline std::vector<TieredWeight> warm_weights(const std::vector<double>& v) {
    std::vector<TieredWeight> out;
    out.reserve(v.size());
    for (double x : v) out.push_back(warm_weight(x));
    return out;
}

namespace detail {

// Replace `best` when strictly better, or equal-valued and lexicographically
// smaller. Every oracle funnels ties through this rule.
inline void consider(std::optional<std::pair<Strategy, TieredWeight>>& best,
                     const Strategy& s, const TieredWeight& w) {
    if (!best || tier_less(best->second, w) ||
        (best->second == w && lex_less(s, best->first))) {
        best = {s, w};
    }
}

inline std::vector<int> mask_to_nodes(std::uint64_t mask) {
    std::vector<int> out;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1u) out.push_back(v);
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Problem metadata

inline int arm_count(const OracleProblem& p) {
    return std::visit(
        [](const auto& q) -> int {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, ExhaustiveProblem>) {
                int hi = -1;
                for (const Strategy& s : q.strategies)
                    for (int k : s.arms) hi = std::max(hi, k);
                return hi + 1;
            } else if constexpr (std::is_same_v<T, ThresholdProblem>) {
                return static_cast<int>(q.bids.size());
            } else if constexpr (std::is_same_v<T, PathProblem>) {
                return static_cast<int>(q.edges.size());
            } else {
                return q.graph.n;
            }
        },
        p);
}

inline void validate_problem(const OracleProblem& p) {
    std::visit(
        [](const auto& q) {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, ExhaustiveProblem>) {
                if (q.strategies.empty())
                    fail(Errc::no_feasible_strategy, "exhaustive strategy list is empty");
                int hi = 0;
                for (const Strategy& s : q.strategies)
                    for (int k : s.arms) hi = std::max(hi, k + 1);
                for (const Strategy& s : q.strategies)
                    validate_strategy(s, hi, hi);
            } else if constexpr (std::is_same_v<T, ThresholdProblem>) {
                if (q.bids.empty())
                    fail(Errc::config, "threshold problem has no bids");
                if (q.max_size < 1 || q.max_size > static_cast<int>(q.bids.size()))
                    fail(Errc::config, "threshold max_size out of range");
            } else if constexpr (std::is_same_v<T, PathProblem>) {
                if (q.nodes < 2)
                    fail(Errc::config, "path problem needs at least two nodes");
                if (q.source < 0 || q.source >= q.nodes || q.sink < 0 || q.sink >= q.nodes ||
                    q.source == q.sink)
                    fail(Errc::config, "path source/sink invalid");
                for (auto [u, v] : q.edges)
                    if (u < 0 || u >= q.nodes || v < 0 || v >= q.nodes || u == v)
                        fail(Errc::invalid_graph, "path edge endpoint invalid");
            } else {
                if (q.graph.n < 1)
                    fail(Errc::config, "mwis graph is empty");
            }
        },
        p);
}

// ---------------------------------------------------------------------------
// Threshold subset oracle

namespace detail {

inline void threshold_enumerate(const std::vector<TieredWeight>& w,
                                const std::vector<double>& bids, double h, int max_size,
                                std::optional<std::pair<Strategy, TieredWeight>>& best) {
    const int K = static_cast<int>(bids.size());
    Strategy cur;
    // Depth-first in ascending index order emits subsets in lexicographic
    // order, so keep-first-on-tie is the lexicographic tie-break.
    auto rec = [&](auto&& self, int from, double bid_sum, TieredWeight weight) -> void {
        for (int k = from; k < K; ++k) {
            cur.arms.push_back(k);
            const double b = bid_sum + bids[static_cast<std::size_t>(k)];
            const TieredWeight cw = weight + w[static_cast<std::size_t>(k)];
            if (b > h) {
                if (!best || tier_less(best->second, cw)) best = {cur, cw};
            }
            if (static_cast<int>(cur.arms.size()) < max_size) self(self, k + 1, b, cw);
            cur.arms.pop_back();
        }
    };
    rec(rec, 0, 0.0, TieredWeight{});
}

// Fallback for K > 25: DP over bids discretized to a 2^13 grid (floor
// rounding, so any claimed-feasible subset truly satisfies the strict
// threshold; borderline sets within one tick may be missed). Exact when
// bids are integers that fit the grid. Cells carry the subset bitmask,
// which keeps reconstruction trivially consistent; hence the 64-arm limit.
inline void threshold_dp(const std::vector<TieredWeight>& w, const std::vector<double>& bids,
                         double h, int max_size,
                         std::optional<std::pair<Strategy, TieredWeight>>& best) {
    const int K = static_cast<int>(bids.size());
    if (K > 64) fail(Errc::instance_too_large, "threshold DP limited to 64 arms");
    double total = 0.0;
    for (double b : bids) {
        if (b < 0.0) fail(Errc::domain, "negative bid");
        total += b;
    }
    if (total <= 0.0) fail(Errc::no_feasible_strategy, "all bids are zero");
    constexpr long grid = 1 << 13;
    const double tick = total / static_cast<double>(grid);
    auto ticks_of = [&](double x) {
        if (x <= 0.0) return 0L;
        const double t = std::floor(x / tick);
        return t >= static_cast<double>(grid + 1) ? grid + 1 : static_cast<long>(t);
    };
    const long cap = std::min(grid + 1, ticks_of(h) + 1); // tick sums > h saturate here
    std::vector<long> ib(bids.size());
    for (std::size_t i = 0; i < bids.size(); ++i) ib[i] = ticks_of(bids[i]);

    struct Cell {
        TieredWeight w;
        std::uint64_t subset = 0;
        bool reachable = false;
    };
    std::vector<Cell> dp(static_cast<std::size_t>(max_size + 1) *
                         static_cast<std::size_t>(cap + 1));
    auto at = [&](int size, long c) -> Cell& {
        return dp[static_cast<std::size_t>(size) * static_cast<std::size_t>(cap + 1) +
                  static_cast<std::size_t>(c)];
    };
    at(0, 0) = Cell{TieredWeight{}, 0, true};
    for (int k = 0; k < K; ++k) {
        // s descending: (s, c) is untouched within this arm's pass, so each
        // arm is used at most once.
        for (int s = std::min(k, max_size - 1); s >= 0; --s) {
            for (long c = cap; c >= 0; --c) {
                const Cell cur = at(s, c);
                if (!cur.reachable) continue;
                const long nc = std::min(cap, c + ib[static_cast<std::size_t>(k)]);
                Cell& dst = at(s + 1, nc);
                const TieredWeight cand = cur.w + w[static_cast<std::size_t>(k)];
                if (!dst.reachable || tier_less(dst.w, cand))
                    dst = Cell{cand, cur.subset | (std::uint64_t{1} << k), true};
            }
        }
    }
    const Cell* winner = nullptr;
    for (int s = 1; s <= max_size; ++s) {
        const Cell& cand = at(s, cap);
        if (!cand.reachable) continue;
        if (!winner || tier_less(winner->w, cand.w)) winner = &at(s, cap);
    }
    if (!winner) return;
    best = {Strategy{mask_to_nodes(winner->subset)}, winner->w};
}

} // namespace detail

inline std::pair<Strategy, TieredWeight>
threshold_subset_max_tiered(const std::vector<TieredWeight>& weights,
                            const std::vector<double>& bids, double h, int max_size) {
    if (weights.size() != bids.size())
        fail(Errc::config, "weights/bids length mismatch");
    if (max_size < 1 || max_size > static_cast<int>(bids.size()))
        fail(Errc::config, "threshold max_size out of range");
    std::optional<std::pair<Strategy, TieredWeight>> best;
    if (bids.size() <= 25)
        detail::threshold_enumerate(weights, bids, h, max_size, best);
    else
        detail::threshold_dp(weights, bids, h, max_size, best);
    if (!best)
        fail(Errc::no_feasible_strategy, "no subset of size <= " + std::to_string(max_size) +
                                             " has bid sum > " + std::to_string(h));
    return *best;
}

inline Strategy threshold_subset_max(const std::vector<double>& weights,
                                     const std::vector<double>& bids, double h, int max_size) {
    return threshold_subset_max_tiered(warm_weights(weights), bids, h, max_size).first;
}

// ---------------------------------------------------------------------------
// Shortest/longest path oracle

namespace detail {

struct PathLabel {
    TieredWeight cost;
    std::vector<int> edges;        // sorted ascending
    std::uint64_t node_mask = 0;   // nodes on the path, keeps labels simple
};

inline bool path_label_better(const PathLabel& cand, const PathLabel& cur, PathMode mode,
                              bool lex_ties) {
    if (mode == PathMode::GainOptimism) {
        if (tier_less(cur.cost, cand.cost)) return true;
        if (tier_less(cand.cost, cur.cost)) return false;
    } else {
        if (tier_less(cand.cost, cur.cost)) return true;
        if (tier_less(cur.cost, cand.cost)) return false;
    }
    return lex_ties && std::lexicographical_compare(cand.edges.begin(), cand.edges.end(),
                                                    cur.edges.begin(), cur.edges.end());
}

inline std::optional<std::vector<int>> topological_order(const PathProblem& p) {
    std::vector<int> indeg(static_cast<std::size_t>(p.nodes), 0);
    for (auto [u, v] : p.edges) indeg[static_cast<std::size_t>(v)]++;
    std::vector<int> order;
    std::vector<int> stack;
    for (int v = 0; v < p.nodes; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) stack.push_back(v);
    while (!stack.empty()) {
        // pop the smallest for determinism
        auto it = std::min_element(stack.begin(), stack.end());
        int u = *it;
        stack.erase(it);
        order.push_back(u);
        for (std::size_t e = 0; e < p.edges.size(); ++e)
            if (p.edges[e].first == u && --indeg[static_cast<std::size_t>(p.edges[e].second)] == 0)
                stack.push_back(p.edges[e].second);
    }
    if (static_cast<int>(order.size()) != p.nodes) return std::nullopt;
    return order;
}

} // namespace detail

inline std::pair<Strategy, TieredWeight>
shortest_path_select_tiered(const PathProblem& p, const std::vector<TieredWeight>& weights) {
    validate_problem(OracleProblem{p});
    if (weights.size() != p.edges.size())
        fail(Errc::config, "one weight per edge required");
    if (p.nodes > 64)
        fail(Errc::instance_too_large, "path instances are limited to 64 nodes");

    std::vector<std::optional<detail::PathLabel>> label(static_cast<std::size_t>(p.nodes));
    label[static_cast<std::size_t>(p.source)] =
        detail::PathLabel{TieredWeight{}, {}, node_bit(p.source)};

    auto relax_edge = [&](std::size_t e, bool lex_ties) -> bool {
        const auto [u, v] = p.edges[e];
        const auto& lu = label[static_cast<std::size_t>(u)];
        if (!lu) return false;
        if (lu->node_mask & node_bit(v)) return false; // keep the path simple
        detail::PathLabel cand;
        cand.cost = lu->cost + weights[e];
        cand.edges = lu->edges;
        cand.edges.insert(std::lower_bound(cand.edges.begin(), cand.edges.end(),
                                           static_cast<int>(e)),
                          static_cast<int>(e));
        cand.node_mask = lu->node_mask | node_bit(v);
        auto& lv = label[static_cast<std::size_t>(v)];
        if (!lv || detail::path_label_better(cand, *lv, p.mode, lex_ties)) {
            lv = std::move(cand);
            return true;
        }
        return false;
    };

    if (auto order = detail::topological_order(p)) {
        for (int u : *order)
            for (std::size_t e = 0; e < p.edges.size(); ++e)
                if (p.edges[e].first == u) relax_edge(e, /*lex_ties*/ true);
    } else {
        if (p.mode == PathMode::GainOptimism)
            fail(Errc::unsupported_instance,
                 "cyclic graph under gain maximization (longest path undefined)");
        // Label-correcting passes; nonnegative costs converge within n passes.
        // Only strict cost improvements count here, so equal-cost plateaus
        // cannot be mistaken for an improving cycle (edge order still makes
        // the result deterministic).
        bool changed = true;
        for (int pass = 0; pass <= p.nodes && changed; ++pass) {
            changed = false;
            for (std::size_t e = 0; e < p.edges.size(); ++e)
                if (relax_edge(e, /*lex_ties*/ false)) changed = true;
        }
        if (changed)
            fail(Errc::unsupported_instance,
                 "labels still improving after |V| passes (improving cycle)");
    }

    const auto& ls = label[static_cast<std::size_t>(p.sink)];
    if (!ls) fail(Errc::no_feasible_strategy, "no source-sink path exists");
    return {Strategy{ls->edges}, ls->cost};
}

inline Strategy shortest_path_select(const PathProblem& p, const std::vector<double>& weights,
                                     PathMode mode) {
    PathProblem q = p;
    q.mode = mode;
    return shortest_path_select_tiered(q, warm_weights(weights)).first;
}

// ---------------------------------------------------------------------------
// Maximum-weight independent set (exact and greedy over maximal sets)

inline std::tuple<Strategy, TieredWeight, double>
mwis_greedy_tiered(const UGraph& g, const std::vector<TieredWeight>& weights) {
    if (static_cast<int>(weights.size()) != g.n)
        fail(Errc::config, "one weight per node required");
    std::uint64_t remaining = (g.n == 64) ? ~std::uint64_t{0}
                                          : ((std::uint64_t{1} << g.n) - 1);
    std::vector<int> chosen;
    while (remaining) {
        int best_v = -1;
        TieredWeight best_ratio;
        for (int v = 0; v < g.n; ++v) {
            if (!(remaining & node_bit(v))) continue;
            const int d = std::popcount(g.adj[static_cast<std::size_t>(v)] & remaining);
            const TieredWeight ratio =
                scale_down(weights[static_cast<std::size_t>(v)], static_cast<double>(d + 1));
            if (best_v < 0 || tier_less(best_ratio, ratio)) {
                best_v = v;
                best_ratio = ratio;
            }
        }
        chosen.push_back(best_v);
        remaining &= ~(g.adj[static_cast<std::size_t>(best_v)] | node_bit(best_v));
    }
    std::sort(chosen.begin(), chosen.end());
    TieredWeight value;
    for (int v : chosen) value += weights[static_cast<std::size_t>(v)];
    return {Strategy{chosen}, value, static_cast<double>(max_degree(g) + 1)};
}

inline std::tuple<Strategy, double, double>
mwis_greedy(const UGraph& g, const std::vector<double>& weights) {
    auto [s, w, beta] = mwis_greedy_tiered(g, warm_weights(weights));
    return {s, w.value, beta};
}

namespace detail {

struct MwisSearch {
    const UGraph& g;
    const std::vector<TieredWeight>& w;
    std::uint64_t all_mask;
    std::uint64_t best_mask = 0;
    TieredWeight best;

    void consider(std::uint64_t in_mask, const TieredWeight& cur) {
        if (tier_less(best, cur)) {
            best = cur;
            best_mask = in_mask;
        } else if (cur == best) {
            const auto a = mask_to_nodes(in_mask);
            const auto b = mask_to_nodes(best_mask);
            if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()))
                best_mask = in_mask;
        }
    }

    void rec(int idx, std::uint64_t in_mask, std::uint64_t out_mask, TieredWeight cur) {
        if (idx == g.n) {
            // maximality: every excluded node must see an included neighbor
            for (std::uint64_t m = out_mask; m;) {
                const int v = std::countr_zero(m);
                m &= m - 1;
                if (!(g.adj[static_cast<std::size_t>(v)] & in_mask)) return;
            }
            consider(in_mask, cur);
            return;
        }
        // optimistic completion: every undecided node from idx on joins in
        TieredWeight ub = cur;
        for (std::uint64_t m = (all_mask & ~out_mask) >> idx << idx; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            const TieredWeight& wv = w[static_cast<std::size_t>(v)];
            ub.cold += wv.cold;
            if (wv.value > 0.0) ub.value += wv.value;
        }
        if (tier_less(ub, best)) return;

        const std::uint64_t vb = node_bit(idx);
        if (out_mask & vb) {
            rec(idx + 1, in_mask, out_mask, cur);
            return;
        }
        rec(idx + 1, in_mask | vb, out_mask | g.adj[static_cast<std::size_t>(idx)],
            cur + w[static_cast<std::size_t>(idx)]);
        // excluding idx is viable only if some neighbor can still cover it
        const std::uint64_t future = all_mask & ~((vb << 1) - 1) & ~out_mask;
        if ((g.adj[static_cast<std::size_t>(idx)] & (in_mask | future)))
            rec(idx + 1, in_mask, out_mask | vb, cur);
    }
};

} // namespace detail

inline std::pair<Strategy, TieredWeight>
mwis_exact_tiered(const UGraph& g, const std::vector<TieredWeight>& weights) {
    if (static_cast<int>(weights.size()) != g.n)
        fail(Errc::config, "one weight per node required");
    if (g.n < 1) fail(Errc::no_feasible_strategy, "empty graph");
    if (g.n > 40)
        fail(Errc::instance_too_large,
             "branch-and-bound budget is 40 nodes, got " + std::to_string(g.n));

    detail::MwisSearch search{g, weights,
                              (g.n == 64) ? ~std::uint64_t{0}
                                          : ((std::uint64_t{1} << g.n) - 1),
                              0, TieredWeight{}};
    // greedy lower bound seeds the incumbent
    auto [gs, gw, beta] = mwis_greedy_tiered(g, weights);
    (void)beta;
    std::uint64_t gmask = 0;
    for (int v : gs.arms) gmask |= node_bit(v);
    search.best = gw;
    search.best_mask = gmask;
    search.rec(0, 0, 0, TieredWeight{});
    return {Strategy{detail::mask_to_nodes(search.best_mask)}, search.best};
}

inline std::pair<Strategy, double> mwis_exact(const UGraph& g,
                                              const std::vector<double>& weights) {
    auto [s, w] = mwis_exact_tiered(g, warm_weights(weights));
    return {s, w.value};
}

// ---------------------------------------------------------------------------
// Common entry point: argmax over the feasible set under two-tier weights

inline OracleResult maximize(const OracleProblem& problem,
                             const std::vector<TieredWeight>& weights) {
    validate_problem(problem);
    if (static_cast<int>(weights.size()) < arm_count(problem))
        fail(Errc::config, "weight vector shorter than the problem's arm count");
    return std::visit(
        [&](const auto& q) -> OracleResult {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, ExhaustiveProblem>) {
                std::optional<std::pair<Strategy, TieredWeight>> best;
                for (const Strategy& s : q.strategies)
                    detail::consider(best, s, strategy_weight(s, weights));
                return {best->first, best->second, 1.0};
            } else if constexpr (std::is_same_v<T, ThresholdProblem>) {
                auto [s, w] =
                    threshold_subset_max_tiered(weights, q.bids, q.threshold, q.max_size);
                return {s, w, 1.0};
            } else if constexpr (std::is_same_v<T, PathProblem>) {
                auto [s, w] = shortest_path_select_tiered(q, weights);
                return {s, w, 1.0};
            } else {
                if (q.mode == MwisMode::Greedy) {
                    auto [s, w, beta] = mwis_greedy_tiered(q.graph, weights);
                    return {s, w, beta};
                }
                auto [s, w] = mwis_exact_tiered(q.graph, weights);
                return {s, w, 1.0};
            }
        },
        problem);
}

// ---------------------------------------------------------------------------
// Feasibility checker (used by property tests and the harness)

inline bool is_feasible(const OracleProblem& problem, const Strategy& s) {
    return std::visit(
        [&](const auto& q) -> bool {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, ExhaustiveProblem>) {
                return std::find(q.strategies.begin(), q.strategies.end(), s) !=
                       q.strategies.end();
            } else if constexpr (std::is_same_v<T, ThresholdProblem>) {
                if (s.arms.empty() || static_cast<int>(s.arms.size()) > q.max_size)
                    return false;
                double bid_sum = 0.0;
                int prev = -1;
                for (int k : s.arms) {
                    if (k <= prev || k >= static_cast<int>(q.bids.size())) return false;
                    prev = k;
                    bid_sum += q.bids[static_cast<std::size_t>(k)];
                }
                return bid_sum > q.threshold;
            } else if constexpr (std::is_same_v<T, PathProblem>) {
                // the edge set must walk source -> sink, using every edge once
                std::vector<char> used(q.edges.size(), 0);
                for (int e : s.arms) {
                    if (e < 0 || e >= static_cast<int>(q.edges.size()) ||
                        used[static_cast<std::size_t>(e)])
                        return false;
                    used[static_cast<std::size_t>(e)] = 1;
                }
                int cur = q.source;
                std::uint64_t visited = node_bit(q.source);
                std::size_t steps = 0;
                while (steps < s.arms.size()) {
                    int next_edge = -1;
                    for (int e : s.arms) {
                        if (used[static_cast<std::size_t>(e)] == 1 &&
                            q.edges[static_cast<std::size_t>(e)].first == cur) {
                            if (next_edge != -1) return false; // branching, not a path
                            next_edge = e;
                        }
                    }
                    if (next_edge < 0) return false;
                    used[static_cast<std::size_t>(next_edge)] = 2;
                    cur = q.edges[static_cast<std::size_t>(next_edge)].second;
                    if (visited & node_bit(cur)) return false;
                    visited |= node_bit(cur);
                    ++steps;
                }
                return cur == q.sink;
            } else {
                if (s.arms.empty()) return false;
                std::uint64_t mask = 0;
                for (int v : s.arms) {
                    if (v < 0 || v >= q.graph.n) return false;
                    mask |= node_bit(v);
                }
                for (int v : s.arms)
                    if (q.graph.adj[static_cast<std::size_t>(v)] & mask) return false;
                // maximal: no outside node is addable
                for (int v = 0; v < q.graph.n; ++v)
                    if (!(mask & node_bit(v)) &&
                        !(q.graph.adj[static_cast<std::size_t>(v)] & mask))
                        return false;
                return true;
            }
        },
        problem);
}

// ---------------------------------------------------------------------------
// Desk-scale enumeration of the feasible set (used by the NaiveMOSS baseline)

namespace detail {

inline void enumerate_paths(const PathProblem& p, std::vector<Strategy>& out) {
    if (p.nodes > 32)
        fail(Errc::instance_too_large, "path enumeration limited to 32 nodes");
    std::vector<int> edge_stack;
    std::uint64_t visited = node_bit(p.source);
    auto rec = [&](auto&& self, int u) -> void {
        if (u == p.sink) {
            Strategy s{edge_stack};
            std::sort(s.arms.begin(), s.arms.end());
            out.push_back(std::move(s));
            return;
        }
        for (std::size_t e = 0; e < p.edges.size(); ++e) {
            if (p.edges[e].first != u) continue;
            const int v = p.edges[e].second;
            if (visited & node_bit(v)) continue;
            visited |= node_bit(v);
            edge_stack.push_back(static_cast<int>(e));
            self(self, v);
            edge_stack.pop_back();
            visited &= ~node_bit(v);
        }
    };
    rec(rec, p.source);
}

inline void enumerate_maximal_independent_sets(const UGraph& g, std::vector<Strategy>& out) {
    if (g.n > 40)
        fail(Errc::instance_too_large, "independent-set enumeration limited to 40 nodes");
    const std::uint64_t all =
        (g.n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n) - 1);
    auto rec = [&](auto&& self, int idx, std::uint64_t in, std::uint64_t outm) -> void {
        if (idx == g.n) {
            for (std::uint64_t m = outm; m;) {
                const int v = std::countr_zero(m);
                m &= m - 1;
                if (!(g.adj[static_cast<std::size_t>(v)] & in)) return;
            }
            if (in) out.push_back(Strategy{mask_to_nodes(in)});
            return;
        }
        const std::uint64_t vb = node_bit(idx);
        if (outm & vb) {
            self(self, idx + 1, in, outm);
            return;
        }
        self(self, idx + 1, in | vb, outm | g.adj[static_cast<std::size_t>(idx)]);
        const std::uint64_t future = all & ~((vb << 1) - 1) & ~outm;
        if (g.adj[static_cast<std::size_t>(idx)] & (in | future))
            self(self, idx + 1, in, outm | vb);
    };
    rec(rec, 0, 0, 0);
}

} // namespace detail

inline std::vector<Strategy> enumerate_feasible(const OracleProblem& problem) {
    validate_problem(problem);
    return std::visit(
        [&](const auto& q) -> std::vector<Strategy> {
            using T = std::decay_t<decltype(q)>;
            std::vector<Strategy> out;
            if constexpr (std::is_same_v<T, ExhaustiveProblem>) {
                out = q.strategies;
            } else if constexpr (std::is_same_v<T, ThresholdProblem>) {
                if (q.bids.size() > 25)
                    fail(Errc::instance_too_large, "subset enumeration limited to 25 bids");
                const int K = static_cast<int>(q.bids.size());
                Strategy cur;
                auto rec = [&](auto&& self, int from, double bid_sum) -> void {
                    for (int k = from; k < K; ++k) {
                        cur.arms.push_back(k);
                        const double b = bid_sum + q.bids[static_cast<std::size_t>(k)];
                        if (b > q.threshold) out.push_back(cur);
                        if (static_cast<int>(cur.arms.size()) < q.max_size)
                            self(self, k + 1, b);
                        cur.arms.pop_back();
                    }
                };
                rec(rec, 0, 0.0);
            } else if constexpr (std::is_same_v<T, PathProblem>) {
                detail::enumerate_paths(q, out);
            } else {
                detail::enumerate_maximal_independent_sets(q.graph, out);
            }
            std::sort(out.begin(), out.end(),
                      [](const Strategy& a, const Strategy& b) { return lex_less(a, b); });
            return out;
        },
        problem);
}

// Largest feasible strategy cardinality; this is the N fed to the LLR bonus.
inline int max_strategy_size(const OracleProblem& problem) {
    return std::visit(
        [&](const auto& q) -> int {
            using T = std::decay_t<decltype(q)>;
            if constexpr (std::is_same_v<T, ExhaustiveProblem>) {
                std::size_t n = 0;
                for (const Strategy& s : q.strategies) n = std::max(n, s.arms.size());
                return static_cast<int>(n);
            } else if constexpr (std::is_same_v<T, ThresholdProblem>) {
                return q.max_size;
            } else if constexpr (std::is_same_v<T, PathProblem>) {
                std::vector<Strategy> paths;
                detail::enumerate_paths(q, paths);
                if (paths.empty())
                    fail(Errc::no_feasible_strategy, "no source-sink path exists");
                std::size_t n = 0;
                for (const Strategy& s : paths) n = std::max(n, s.arms.size());
                return static_cast<int>(n);
            } else {
                std::vector<TieredWeight> unit(static_cast<std::size_t>(q.graph.n),
                                               warm_weight(1.0));
                auto [s, w] = mwis_exact_tiered(q.graph, unit);
                (void)s;
                return static_cast<int>(w.value + 0.5);
            }
        },
        problem);
}

} // namespace semibandit
