#pragma once

#include <vector>

#include "regw/graph.hpp"
#include "regw/rational.hpp"

namespace regw {

struct Conflict {
    int edge;
    int u, v;
    Rational value;  // the shared weighted degree
};

struct ConflictReport {
    std::vector<Conflict> conflicts;             // ascending edge id
    std::vector<Rational> weighted_degrees;      // recomputed per vertex
    bool proper() const { return conflicts.empty(); }
};

// Checks a complete weighting independently of how it was built: every
// weight must lie in the declared set, weighted degrees are recomputed
// from scratch, and every edge whose endpoints tie is reported.
inline ConflictReport verify_proper(const Graph& g, const std::vector<Rational>& w,
                                    const WeightSet& q) {
    if (static_cast<int>(w.size()) != g.num_edges())
        throw InputError("weighting covers " + std::to_string(w.size()) + " edges, graph has " +
                         std::to_string(g.num_edges()));
    for (int e = 0; e < g.num_edges(); ++e)
        if (!q.contains(w[e]))
            throw InputError("weight " + to_fraction_string(w[e]) + " on edge " +
                             std::to_string(e) + " lies outside " + q.str());

    ConflictReport report;
    report.weighted_degrees.assign(g.num_vertices(), Rational(0));
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        report.weighted_degrees[u] += w[e];
        report.weighted_degrees[v] += w[e];
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        if (report.weighted_degrees[u] == report.weighted_degrees[v])
            report.conflicts.push_back({e, u, v, report.weighted_degrees[u]});
    }
    return report;
}

}  // namespace regw
