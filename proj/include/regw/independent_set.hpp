#pragma once

#include <vector>

#include "regw/graph.hpp"

namespace regw {

namespace detail {

// Closed-form optimum on a residual graph of maximum degree <= 2: take
// every isolated vertex, alternate vertices along each path from its
// smallest endpoint, and on each cycle include the smallest vertex and
// alternate around.
inline void low_degree_optimum(const Graph& g, const VertexSet& sub, VertexSet& out) {
    VertexSet left = sub;
    auto residual_degree = [&](int v) {
        return static_cast<int>((g.row(v) & left).count());
    };
    while (left.any()) {
        // Locate the component of the lowest remaining vertex and, within
        // it, the walk start: the smallest endpoint for a path, the
        // smallest vertex for a cycle.
        int seed = static_cast<int>(left.find_first());
        std::vector<int> comp{seed};
        VertexSet in_comp(g.num_vertices());
        in_comp.set(seed);
        for (std::size_t t = 0; t < comp.size(); ++t)
            for (int u : g.neighbors(comp[t]))
                if (left.test(u) && !in_comp.test(u)) {
                    in_comp.set(u);
                    comp.push_back(u);
                }
        int start = -1;
        bool cycle = true;
        for (auto v = in_comp.find_first(); v != VertexSet::npos; v = in_comp.find_next(v))
            if (residual_degree(static_cast<int>(v)) <= 1) {
                start = static_cast<int>(v);
                cycle = false;
                break;
            }
        if (cycle) start = static_cast<int>(in_comp.find_first());

        std::vector<int> walk{start};
        int prev = -1, cur = start;
        for (;;) {
            int next = -1;
            for (int u : g.neighbors(cur))
                if (in_comp.test(u) && u != prev && (next < 0 || u < next)) next = u;
            if (next < 0 || next == start) break;
            prev = cur;
            cur = next;
            walk.push_back(cur);
        }
        int len = static_cast<int>(walk.size());
        int picks = cycle ? len / 2 : (len + 1) / 2;
        for (int t = 0; t < picks; ++t) out.set(walk[2 * t]);
        left -= in_comp;
    }
}

// Greedy clique cover of the residual graph; each clique meets an
// independent set at most once, so the cover size bounds the optimum.
inline int clique_cover_bound(const Graph& g, const VertexSet& sub) {
    VertexSet left = sub;
    int cliques = 0;
    while (left.any()) {
        int u = static_cast<int>(left.find_first());
        VertexSet common = g.row(u) & left;
        left.reset(u);
        while (common.any()) {
            int w = static_cast<int>(common.find_first());
            common &= g.row(w);
            left.reset(w);
        }
        ++cliques;
    }
    return cliques;
}

struct MisSearch {
    const Graph& g;
    VertexSet best;
    int best_size = -1;

    void run(VertexSet allowed, VertexSet chosen, int chosen_size) {
        if (chosen_size + static_cast<int>(allowed.count()) <= best_size) return;

        // Branch on a maximum-degree vertex; below degree 3 the rest is
        // paths and cycles, solved directly.
        int pivot = -1, pivot_deg = -1;
        for (auto v = allowed.find_first(); v != VertexSet::npos; v = allowed.find_next(v)) {
            int d = static_cast<int>((g.row(static_cast<int>(v)) & allowed).count());
            if (d > pivot_deg) {
                pivot_deg = d;
                pivot = static_cast<int>(v);
            }
        }
        if (pivot < 0) {
            if (chosen_size > best_size) {
                best_size = chosen_size;
                best = chosen;
            }
            return;
        }
        if (pivot_deg <= 2) {
            low_degree_optimum(g, allowed, chosen);
            int size = static_cast<int>(chosen.count());
            if (size > best_size) {
                best_size = size;
                best = chosen;
            }
            return;
        }
        if (chosen_size + clique_cover_bound(g, allowed) <= best_size) return;

        VertexSet with = allowed;
        with -= g.row(pivot);
        with.reset(pivot);
        VertexSet chosen_with = chosen;
        chosen_with.set(pivot);
        run(std::move(with), std::move(chosen_with), chosen_size + 1);

        allowed.reset(pivot);
        run(std::move(allowed), std::move(chosen), chosen_size);
    }
};

}  // namespace detail

// Maximal (not maximum) independent set: repeatedly take the vertex of
// minimum residual degree, smallest index first.
inline VertexSet greedy_maximal_independent_set(const Graph& g, const VertexSet& sub) {
    VertexSet left = sub, out(g.num_vertices());
    while (left.any()) {
        int pick = -1, pick_deg = g.num_vertices() + 1;
        for (auto v = left.find_first(); v != VertexSet::npos; v = left.find_next(v)) {
            int d = static_cast<int>((g.row(static_cast<int>(v)) & left).count());
            if (d < pick_deg) {
                pick_deg = d;
                pick = static_cast<int>(v);
            }
        }
        out.set(pick);
        left -= g.row(pick);
        left.reset(pick);
    }
    return out;
}

// Exact maximum independent set of the subgraph induced by `sub`.
// Branch and bound: include/exclude a maximum-degree vertex, greedy
// clique-cover upper bound, closed-form base case once every residual
// degree is at most 2.  Deterministic; seeded with the greedy solution
// and improved only strictly, so ties resolve to the first optimum under
// this branching order.
inline VertexSet maximum_independent_set(const Graph& g, const VertexSet& sub) {
    detail::MisSearch search{g};
    search.best = greedy_maximal_independent_set(g, sub);
    search.best_size = static_cast<int>(search.best.count());
    search.run(sub, VertexSet(g.num_vertices()), 0);
    return search.best;
}

inline VertexSet maximum_independent_set(const Graph& g) {
    VertexSet all(g.num_vertices());
    all.set();
    return maximum_independent_set(g, all);
}

}  // namespace regw
