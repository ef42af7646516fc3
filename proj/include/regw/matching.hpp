#pragma once

#include <deque>
#include <limits>
#include <vector>

#include "regw/graph.hpp"

namespace regw {

// A matching between two disjoint vertex sets; only edges with one end in
// each set are used.  `pairs` maps (side_a vertex, side_b vertex).
struct Matching {
    std::vector<std::pair<int, int>> pairs;
    int size() const { return static_cast<int>(pairs.size()); }
};

struct BipartiteMatchingResult {
    Matching matching;
    bool saturated = false;      // every side_b vertex covered
    std::vector<int> violators;  // Hall violator S on side_b when not saturated
};

// Maximum matching of the bipartite graph G[side_a, side_b] via
// Hopcroft-Karp (BFS layering plus DFS augmentation), deterministic scan
// order.  When side_b is left uncovered, the set of side_b vertices
// reachable from an uncovered one by alternating paths is a Hall violator
// S with |N(S) cap side_a| < |S|, and is reported.
inline BipartiteMatchingResult maximum_bipartite_matching(const Graph& g,
                                                          const std::vector<int>& side_a,
                                                          const std::vector<int>& side_b) {
    VertexSet in_a = to_vertex_set(g.num_vertices(), side_a);
    if ((in_a & to_vertex_set(g.num_vertices(), side_b)).any())
        throw InputError("matching: sides must be disjoint");

    int nb = static_cast<int>(side_b.size());
    std::vector<int> index_of(g.num_vertices(), -1);
    for (int i = 0; i < nb; ++i) index_of[side_b[i]] = i;

    // Adjacency restricted to cross edges, from the side to saturate.
    std::vector<std::vector<int>> adj(nb);
    for (int i = 0; i < nb; ++i)
        for (int u : g.neighbors(side_b[i]))
            if (in_a.test(u)) adj[i].push_back(u);

    const int inf = std::numeric_limits<int>::max();
    std::vector<int> mate_b(nb, -1);                    // b index -> a vertex
    std::vector<int> mate_a(g.num_vertices(), -1);      // a vertex -> b index
    std::vector<int> level(nb);

    auto bfs = [&]() -> bool {
        std::deque<int> queue;
        bool reachable_free = false;
        for (int i = 0; i < nb; ++i) {
            level[i] = mate_b[i] < 0 ? 0 : inf;
            if (mate_b[i] < 0) queue.push_back(i);
        }
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            for (int u : adj[i]) {
                int j = mate_a[u];
                if (j < 0) {
                    reachable_free = true;
                } else if (level[j] == inf) {
                    level[j] = level[i] + 1;
                    queue.push_back(j);
                }
            }
        }
        return reachable_free;
    };
    std::vector<char> visited(nb);
    auto dfs = [&](auto&& self, int i) -> bool {
        visited[i] = 1;
        for (int u : adj[i]) {
            int j = mate_a[u];
            if (j < 0 || (!visited[j] && level[j] == level[i] + 1 && self(self, j))) {
                mate_b[i] = u;
                mate_a[u] = i;
                return true;
            }
        }
        return false;
    };

    while (bfs()) {
        std::fill(visited.begin(), visited.end(), 0);
        for (int i = 0; i < nb; ++i)
            if (mate_b[i] < 0) dfs(dfs, i);
    }

    BipartiteMatchingResult result;
    for (int i = 0; i < nb; ++i)
        if (mate_b[i] >= 0) result.matching.pairs.emplace_back(mate_b[i], side_b[i]);
    result.saturated = result.matching.size() == nb;
    if (!result.saturated) {
        // Alternating reachability from the uncovered side_b vertices.
        std::vector<char> in_s(nb);
        std::deque<int> queue;
        for (int i = 0; i < nb; ++i)
            if (mate_b[i] < 0) {
                in_s[i] = 1;
                queue.push_back(i);
            }
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            for (int u : adj[i]) {
                int j = mate_a[u];
                if (j >= 0 && !in_s[j]) {
                    in_s[j] = 1;
                    queue.push_back(j);
                }
            }
        }
        for (int i = 0; i < nb; ++i)
            if (in_s[i]) result.violators.push_back(side_b[i]);
    }
    return result;
}

// Matching covering every vertex of side_b; throws SaturationError with
// the Hall violator set when none exists.
inline Matching saturating_matching(const Graph& g, const std::vector<int>& side_a,
                                    const std::vector<int>& side_b, int layer = -1) {
    auto result = maximum_bipartite_matching(g, side_a, side_b);
    if (!result.saturated)
        throw SaturationError("matching cannot saturate the requested side (" +
                                  std::to_string(result.violators.size()) +
                                  "-vertex Hall violator)",
                              result.violators, layer);
    return result.matching;
}

}  // namespace regw
