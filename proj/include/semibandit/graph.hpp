#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "semibandit/errors.hpp"

namespace semibandit {

// Undirected graph on up to 64 nodes, adjacency as bitmask rows.
struct UGraph {
    int n = 0;
    std::vector<std::uint64_t> adj; // adj[v] has bit u set iff {u,v} is an edge

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
};

inline std::uint64_t node_bit(int v) { return std::uint64_t{1} << v; }

inline UGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) fail(Errc::invalid_graph, "negative node count");
    if (n > 64) fail(Errc::instance_too_large, "graphs are limited to 64 nodes");
    UGraph g;
    g.n = n;
    g.adj.assign(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(Errc::invalid_graph, "edge endpoint out of range");
        if (u == v)
            fail(Errc::invalid_graph, "self-loop at node " + std::to_string(u));
        g.adj[u] |= node_bit(v);
        g.adj[v] |= node_bit(u);
    }
    return g;
}

// 0/1 row lists as accepted in run configs. Must be symmetric with zero diagonal.
inline UGraph graph_from_adjacency(const std::vector<std::vector<int>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n)
            fail(Errc::invalid_graph, "adjacency matrix is not square");
        if (m[i][i] != 0)
            fail(Errc::invalid_graph, "adjacency diagonal must be zero");
        for (int j = i + 1; j < n; ++j) {
            if (m[i][j] != m[j][i])
                fail(Errc::invalid_graph, "adjacency matrix is not symmetric");
            if (m[i][j]) edges.emplace_back(i, j);
        }
    }
    return make_graph(n, edges);
}

inline int degree(const UGraph& g, int v) { return std::popcount(g.adj[v]); }

inline int max_degree(const UGraph& g) {
    int d = 0;
    for (int v = 0; v < g.n; ++v) d = std::max(d, degree(g, v));
    return d;
}

inline int edge_count(const UGraph& g) {
    int twice = 0;
    for (int v = 0; v < g.n; ++v) twice += degree(g, v);
    return twice / 2;
}

// User-level conflict graph: users x users, symmetric, diagonal all ones
// (a user always conflicts with itself on the same channel).
struct ConflictGraph {
    int users = 0;
    int channels = 0;
    std::vector<std::vector<int>> adjacency; // users x users, 0/1
};

inline void validate_conflict_graph(const ConflictGraph& g) {
    if (g.users < 1 || g.channels < 1)
        fail(Errc::invalid_graph, "conflict graph needs at least one user and one channel");
    if (static_cast<int>(g.adjacency.size()) != g.users)
        fail(Errc::invalid_graph, "conflict matrix row count != users");
    for (int i = 0; i < g.users; ++i) {
        if (static_cast<int>(g.adjacency[i].size()) != g.users)
            fail(Errc::invalid_graph, "conflict matrix is not square");
        if (g.adjacency[i][i] != 1)
            fail(Errc::invalid_graph, "conflict matrix diagonal must be 1");
        for (int j = 0; j < g.users; ++j)
            if (g.adjacency[i][j] != g.adjacency[j][i])
                fail(Errc::invalid_graph, "conflict matrix is not symmetric");
    }
}

// Extended graph H over users*channels virtual nodes. Node (user i, channel j)
// gets index i*channels + j. Per-user channel sets form cliques; conflicting
// users are linked channel-wise. Independent sets in H are exactly the valid
// channel allocations.
inline UGraph build_extended_conflict_graph(const ConflictGraph& g) {
    validate_conflict_graph(g);
    const int N = g.users, M = g.channels;
    std::vector<std::pair<int, int>> edges;
    auto id = [M](int user, int channel) { return user * M + channel; };
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < M; ++j)
            for (int k = j + 1; k < M; ++k)
                edges.emplace_back(id(i, j), id(i, k));
    for (int i = 0; i < N; ++i)
        for (int p = i + 1; p < N; ++p)
            if (g.adjacency[i][p])
                for (int j = 0; j < M; ++j)
                    edges.emplace_back(id(i, j), id(p, j));
    return make_graph(N * M, edges);
}

} // namespace semibandit
