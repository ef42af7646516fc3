#pragma once

#include <vector>

#include "regw/weighting.hpp"

namespace regw {

// Base-case construction for a bipartite graph on (side0, side1) where
// every side1 vertex has degree >= 3: after it runs, every side1 vertex
// has weighted degree in {-3*down, up} and every side0 vertex stays in
// (-inf, up - down) with -3*down excluded, so no edge can conflict.
//
// Side1 vertices are processed in ascending order.  For each x:
//   - if some neighbor y* has d_w(y*) in (-inf, -down) \ {-up - 3*down},
//     weight edge x..y* with up (y* cannot land on -3*down afterwards);
//   - otherwise give three of x's edges weight -down; each neighbor then
//     moves to [-2*down, up - 2*down) or -up - 4*down, all safe.
inline void weight_bipartite_state(WeightState& st) {
    const Graph& g = *st.graph;
    if (st.partition.last() != 1)
        throw InternalError("bipartite base case expects exactly two layers");
    const auto& side1 = st.partition.layers[1];

    for (int x : side1) {
        if (g.degree(x) < 3)
            throw InputError("bipartite weighting: vertex " + std::to_string(x) +
                             " has degree " + std::to_string(g.degree(x)) + " < 3");
        int lift = -1;
        const Rational barrier = -st.up - 3 * st.down;
        for (int y : g.neighbors(x)) {
            if (st.dw[y] < -st.down && st.dw[y] != barrier) {
                lift = y;
                break;
            }
        }
        if (lift >= 0) {
            st.assign(x, lift, st.up);
        } else {
            int given = 0;
            for (int y : g.neighbors(x)) {
                if (st.audit &&
                    !((-st.down <= st.dw[y] && st.dw[y] < st.up - st.down) || st.dw[y] == barrier))
                    throw InternalError("bipartite weighting: neighbor value out of range");
                st.assign(x, y, -st.down);
                if (++given == 3) break;
            }
        }
    }
    st.note("bipartite-base", {{"side1", std::to_string(side1.size())}});
}

// Standalone form: validates the bipartition, runs the construction, and
// returns the per-edge weights.
inline std::vector<Rational> weight_bipartite(const Graph& g, const std::vector<int>& side0,
                                              const std::vector<int>& side1, const Rational& down,
                                              const Rational& up, Trace* trace = nullptr) {
    LayeredPartition part;
    part.layer_of.assign(g.num_vertices(), -1);
    part.layers = {side0, side1};
    for (int v : side0) part.layer_of[v] = 0;
    for (int v : side1) {
        if (part.layer_of[v] == 0) throw InputError("bipartite weighting: sides overlap");
        part.layer_of[v] = 1;
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        if (part.layer_of[v] < 0)
            throw InputError("bipartite weighting: vertex " + std::to_string(v) +
                             " is on neither side");
    for (auto [u, v] : g.edges())
        if (part.layer_of[u] == part.layer_of[v])
            throw InputError("bipartite weighting: edge (" + std::to_string(u) + ", " +
                             std::to_string(v) + ") inside one side");

    WeightState st(g, std::move(part), down, up);
    st.trace = trace;
    weight_bipartite_state(st);
    return st.w;
}

}  // namespace regw
