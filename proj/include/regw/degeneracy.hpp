#pragma once

#include <vector>

#include "regw/graph.hpp"

namespace regw {

struct DegeneracyOrder {
    std::vector<int> order;  // smallest-last removal sequence
    int degeneracy = 0;      // max residual degree at removal time
};

// Smallest-last ordering: repeatedly remove a minimum-residual-degree
// vertex (smallest index on ties).
inline DegeneracyOrder degeneracy_order(const Graph& g, const VertexSet& sub) {
    DegeneracyOrder out;
    VertexSet left = sub;
    while (left.any()) {
        int pick = -1, pick_deg = g.num_vertices() + 1;
        for (auto v = left.find_first(); v != VertexSet::npos; v = left.find_next(v)) {
            int d = static_cast<int>((g.row(static_cast<int>(v)) & left).count());
            if (d < pick_deg) {
                pick_deg = d;
                pick = static_cast<int>(v);
            }
        }
        out.order.push_back(pick);
        out.degeneracy = std::max(out.degeneracy, pick_deg);
        left.reset(pick);
    }
    return out;
}

inline DegeneracyOrder degeneracy_order(const Graph& g) {
    VertexSet all(g.num_vertices());
    all.set();
    return degeneracy_order(g, all);
}

struct Coloring {
    std::vector<int> color;  // per vertex; -1 outside the colored subset
    int num_colors = 0;
};

// Greedy proper coloring along the reverse smallest-last order, smallest
// available color first.  Uses at most degeneracy+1 colors.
inline Coloring degeneracy_coloring(const Graph& g, const VertexSet& sub) {
    auto deg_order = degeneracy_order(g, sub);
    Coloring out;
    out.color.assign(g.num_vertices(), -1);
    for (auto it = deg_order.order.rbegin(); it != deg_order.order.rend(); ++it) {
        int v = *it;
        std::vector<char> used(deg_order.degeneracy + 2, 0);
        for (int u : g.neighbors(v))
            if (sub.test(u) && out.color[u] >= 0 && out.color[u] < static_cast<int>(used.size()))
                used[out.color[u]] = 1;
        int c = 0;
        while (used[c]) ++c;
        out.color[v] = c;
        out.num_colors = std::max(out.num_colors, c + 1);
    }
    return out;
}

inline Coloring degeneracy_coloring(const Graph& g) {
    VertexSet all(g.num_vertices());
    all.set();
    return degeneracy_coloring(g, all);
}

}  // namespace regw
