#pragma once

#include <set>
#include <string>
#include <vector>

#include "regw/audit.hpp"
#include "regw/bipartite_weighting.hpp"
#include "regw/degeneracy.hpp"
#include "regw/matching.hpp"
#include "regw/weighting.hpp"

namespace regw {

struct ConstructionOptions {
    PartitionMode mode = PartitionMode::Exact;
    bool audit = false;   // run invariant auditors at every checkpoint
    Trace* trace = nullptr;
};

struct Construction {
    std::vector<Rational> weights;  // per edge id, in {-down, 0, up}
    LayeredPartition partition;
    std::string branch;  // "bipartite-base" or "two-phase"
    int degree = 0;
};

namespace detail {

// Loop invariants of the initial-weighting pass, checked right before
// layer i is processed:
//   (A) nothing incident to layers 1..i is weighted yet;
//   (B) every vertex above layer i is TypeI, TypeII or hungry;
//   (C) a hungry vertex in layer a > i+1 already holds an up-edge into
//       every layer strictly between i and a.
inline void check_initial_invariants(const WeightState& st, int i) {
    const Graph& g = *st.graph;
    int ell = st.partition.last();
    for (int e = 0; e < g.num_edges(); ++e) {
        if (!st.touched[e]) continue;
        auto [u, v] = g.edge(e);
        auto low = [&](int x) { return st.layer(x) >= 1 && st.layer(x) <= i; };
        if (low(u) || low(v))
            throw InternalError("initial weighting: edge " + std::to_string(e) +
                                " touches layer <= " + std::to_string(i) + " too early");
    }
    for (int a = i + 1; a <= ell; ++a)
        for (int v : st.partition.layers[a]) {
            auto t = st.classify(v);
            if (t != VertexType::TypeI && t != VertexType::TypeII && t != VertexType::Hungry)
                throw InternalError("initial weighting: vertex " + std::to_string(v) +
                                    " in layer " + std::to_string(a) + " is " + to_string(t));
        }
    for (int a = i + 2; a <= ell; ++a)
        for (int u : st.partition.layers[a]) {
            if (st.classify(u) != VertexType::Hungry) continue;
            std::vector<char> hit(ell + 1, 0);
            for (int nb : g.neighbors(u)) {
                int e = g.edge_id(u, nb);
                if (st.touched[e] && st.w[e] == st.up) hit[st.layer(nb)] = 1;
            }
            for (int b = i + 1; b < a; ++b)
                if (!hit[b])
                    throw InternalError("initial weighting: hungry vertex " + std::to_string(u) +
                                        " misses an up-edge into layer " + std::to_string(b));
        }
}

// One round of the initial weighting for layer i (processed in decreasing
// order): sweep still-unweighted edges above layer i and feed every
// hungry-hungry pair an up-edge; split the remaining hungry vertices into
// independent classes (their induced graph is (i-1)-degenerate, so i
// classes suffice); cover each class by a matching from layer i weighted
// up; finally, layer-i vertices that absorbed a full i up-edges take one
// down-edge into layer 0.
inline void process_layer(WeightState& st, int i) {
    const Graph& g = *st.graph;
    int ell = st.partition.last();

    int swept = 0;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (st.touched[e]) continue;
        auto [u, v] = g.edge(e);
        if (st.layer(u) < i + 1 || st.layer(v) < i + 1) continue;
        if (st.hungry(u) && st.hungry(v)) {
            st.assign(e, st.up);
            ++swept;
        }
    }

    VertexSet hungry_above(g.num_vertices());
    for (int a = i + 1; a <= ell; ++a)
        for (int v : st.partition.layers[a])
            if (st.hungry(v)) hungry_above.set(v);

    int classes = 0;
    if (hungry_above.any()) {
        auto coloring = degeneracy_coloring(g, hungry_above);
        classes = coloring.num_colors;
        if (classes > i)
            throw InternalError("hungry set above layer " + std::to_string(i) + " needed " +
                                std::to_string(classes) + " independent classes");
        for (int t = 0; t < classes; ++t) {
            std::vector<int> cls;
            for (auto v = hungry_above.find_first(); v != VertexSet::npos;
                 v = hungry_above.find_next(v))
                if (coloring.color[v] == t) cls.push_back(static_cast<int>(v));
            if (cls.empty()) continue;
            auto feed = saturating_matching(g, st.partition.layers[i], cls, i);
            for (auto [a, b] : feed.pairs) st.assign(a, b, st.up);
        }
    }

    std::vector<int> full;
    for (int v : st.partition.layers[i])
        if (st.dw[v] == Rational(i) * st.up) full.push_back(v);
    if (!full.empty()) {
        auto anchor = saturating_matching(g, st.partition.layers[0], full, 0);
        for (auto [a, b] : anchor.pairs) st.assign(a, b, -st.down);
    }

    st.note("initial.layer",
            {{"layer", std::to_string(i)},
             {"swept", std::to_string(swept)},
             {"hungry-above", std::to_string(hungry_above.count())},
             {"classes", std::to_string(classes)},
             {"full", std::to_string(full.size())}});
}

// Final pass of the initial weighting: while some TypeI vertex of layer 1
// neighbors a TypeI vertex of a higher layer (both would end at TypeI
// values that could collide through layer 0 later), convert both to
// TypeII by anchoring each to layer 0 with a down-edge and weighting the
// joining edge up.  Both vertices are untouched, so all three edges are
// free; every repair removes two TypeI vertices, so this terminates.
inline void repair_plain_pairs(WeightState& st) {
    const Graph& g = *st.graph;
    int repairs = 0;
    for (;;) {
        int v1 = -1, v2 = -1;
        for (int v : st.partition.layers[1]) {
            if (st.classify(v) != VertexType::TypeI) continue;
            for (int u : g.neighbors(v))
                if (st.layer(u) >= 2 && st.classify(u) == VertexType::TypeI) {
                    v1 = v;
                    v2 = u;
                    break;
                }
            if (v1 >= 0) break;
        }
        if (v1 < 0) break;
        auto base_neighbor = [&](int x) {
            for (int u : g.neighbors(x))
                if (st.layer(u) == 0) return u;
            throw InternalError("vertex " + std::to_string(x) + " has no layer-0 neighbor");
        };
        st.assign(v1, base_neighbor(v1), -st.down);
        st.assign(v2, base_neighbor(v2), -st.down);
        st.assign(v1, v2, st.up);
        ++repairs;
    }
    st.note("initial.repairs", {{"count", std::to_string(repairs)}});
}

}  // namespace detail

// First phase: weight edges so that every vertex above layer 0 becomes
// TypeI or TypeII, every layer-0 degree stays nonpositive, and no TypeI
// vertex of layer 1 neighbors a TypeI vertex higher up.  Needs at least
// three layers or exactly three (last() >= 2) and a fresh state.
inline void initial_weighting(WeightState& st) {
    const Graph& g = *st.graph;
    int ell = st.partition.last();
    if (ell < 2) throw InternalError("initial weighting expects last layer index >= 2");
    for (char t : st.touched)
        if (t) throw InternalError("initial weighting expects a fresh state");
    if (st.audit) check_layer_value_separation(st.down, st.up, ell);

    // Cover the top layer by a matching from the layer below, weighted up.
    auto top = saturating_matching(g, st.partition.layers[ell - 1], st.partition.layers[ell],
                                   ell - 1);
    for (auto [a, b] : top.pairs) st.assign(a, b, st.up);
    st.note("initial.top-matching", {{"size", std::to_string(top.size())}});

    if (ell == 2) {
        // The saturated layer-1 vertices anchor to layer 0 with down-edges.
        std::vector<int> saturated;
        for (auto [a, b] : top.pairs) saturated.push_back(a);
        std::sort(saturated.begin(), saturated.end());
        auto base = saturating_matching(g, st.partition.layers[0], saturated, 0);
        for (auto [a, b] : base.pairs) st.assign(a, b, -st.down);
        st.note("initial.base-matching", {{"size", std::to_string(base.size())}});
    } else {
        for (int i = ell - 2; i >= 1; --i) {
            if (st.audit) detail::check_initial_invariants(st, i);
            detail::process_layer(st, i);
        }
    }
    detail::repair_plain_pairs(st);
}

namespace detail {

// Invariants of the conflict-resolution pass, before each step:
//   (i)   unresolved multi-support zeros still have all edges unweighted;
//   (ii)  every layer-0 weighted degree sits below up - down;
//   (iii) every resolved vertex ended at up - down, or at -3*down with no
//         layer-0 neighbor at -3*down.
inline void check_resolution_invariants(const WeightState& st, const std::vector<int>& multis,
                                        const std::vector<char>& processed) {
    const Graph& g = *st.graph;
    for (int x : multis) {
        if (processed[x]) continue;
        for (int u : g.neighbors(x))
            if (st.touched[g.edge_id(x, u)])
                throw InternalError("resolution: unresolved vertex " + std::to_string(x) +
                                    " already has weighted edges");
    }
    for (int y : st.partition.layers[0])
        if (!(st.dw[y] < st.up - st.down))
            throw InternalError("resolution: layer-0 vertex " + std::to_string(y) +
                                " reached " + to_fraction_string(st.dw[y]));
    const Rational low = -3 * st.down;
    for (int x : multis) {
        if (!processed[x]) continue;
        if (st.dw[x] == st.up - st.down) continue;
        if (st.dw[x] != low)
            throw InternalError("resolution: resolved vertex " + std::to_string(x) +
                                " has unexpected degree " + to_fraction_string(st.dw[x]));
        for (int u : g.neighbors(x))
            if (st.layer(u) == 0 && st.dw[u] == low)
                throw InternalError("resolution: resolved vertex " + std::to_string(x) +
                                    " still collides with neighbor " + std::to_string(u));
    }
}

}  // namespace detail

// Second phase: clear the remaining possible conflicts, which all sit on
// edges between zero-degree layer-0 and zero-degree layer-1 vertices.
// Multi-support zeros (two or more layer-0 neighbors) are processed one
// at a time, each leaving at up - down or -3*down with a safe layer-0
// neighborhood; single-support zeros whose unique layer-0 neighbor is
// still zero drop to -down through their matched partner above layer 1.
inline void resolve_conflicts(WeightState& st, int degree) {
    const Graph& g = *st.graph;
    if (st.partition.last() < 2) throw InternalError("conflict resolution expects three layers");
    const auto& base = st.partition.layers[0];

    int base_zeros = 0;
    for (int y : base)
        if (st.dw[y] == 0) ++base_zeros;

    std::vector<int> zeros1;
    for (int x : st.partition.layers[1])
        if (st.dw[x] == 0) zeros1.push_back(x);

    std::vector<int> support(g.num_vertices(), 0);
    std::vector<int> singles, multis;
    int doubles = 0;
    for (int x : zeros1) {
        for (int u : g.neighbors(x))
            if (st.layer(u) == 0) ++support[x];
        if (support[x] < 1)
            throw InternalError("layer-1 vertex " + std::to_string(x) +
                                " has no layer-0 neighbor");
        (support[x] == 1 ? singles : multis).push_back(x);
        if (support[x] == 2) ++doubles;
    }
    // With degree 3 the partner-degree counting forces these empty.
    if (degree == 3 && (!singles.empty() || doubles > 0))
        throw InternalError("cubic run produced low-support layer-1 zeros");

    st.note("resolve.start", {{"base-zeros", std::to_string(base_zeros)},
                              {"layer1-zeros", std::to_string(zeros1.size())},
                              {"support1", std::to_string(singles.size())},
                              {"support2", std::to_string(doubles)}});

    bool any_conflict = false;
    for (int x : zeros1) {
        for (int u : g.neighbors(x))
            if (st.layer(u) == 0 && st.dw[u] == 0) {
                any_conflict = true;
                break;
            }
        if (any_conflict) break;
    }
    if (!any_conflict) {
        st.note("resolve.identity");
        return;
    }

    // Low-support zeros get a matched partner above layer 1: they have at
    // least degree-2 TypeII neighbors up there, while a TypeII vertex can
    // see at most degree-3 of them, so a saturating matching exists.
    std::vector<int> partner(g.num_vertices(), -1);
    std::vector<int> low;
    for (int x : zeros1)
        if (support[x] <= 2) low.push_back(x);
    if (!low.empty()) {
        std::vector<int> high;
        for (int a = 2; a <= st.partition.last(); ++a)
            high.insert(high.end(), st.partition.layers[a].begin(),
                        st.partition.layers[a].end());
        std::sort(high.begin(), high.end());
        auto m = maximum_bipartite_matching(g, high, low);
        if (!m.saturated)
            throw InternalError("partner matching failed (Hall violator of size " +
                                std::to_string(m.violators.size()) + ")");
        for (auto [a, b] : m.pairs) partner[b] = a;
        st.note("resolve.partner-matching", {{"size", std::to_string(m.matching.size())}});
    }

    std::vector<char> processed(g.num_vertices(), 0);
    const Rational barrier = -st.up - 3 * st.down;
    int steps = 0;
    for (;;) {
        int x = -1;
        for (int cand : multis) {
            if (processed[cand]) continue;
            for (int u : g.neighbors(cand))
                if (st.layer(u) == 0 && st.dw[u] == 0) {
                    x = cand;
                    break;
                }
            if (x >= 0) break;
        }
        if (x < 0) break;
        if (st.audit) detail::check_resolution_invariants(st, multis, processed);

        int anchor = -1, lift = -1;
        for (int u : g.neighbors(x)) {
            if (st.layer(u) != 0) continue;
            if (anchor < 0 && st.dw[u] == 0) anchor = u;
            if (lift < 0 && st.dw[u] < -st.down && st.dw[u] != barrier) lift = u;
        }
        const char* route;
        if (lift >= 0) {
            // Lifting a deep neighbor to up keeps it clear of -3*down and
            // below up - down; x itself lands at up - down.
            st.assign(x, lift, st.up);
            st.assign(x, anchor, -st.down);
            route = "lift";
        } else if (support[x] >= 3) {
            int given = 0;
            for (int u : g.neighbors(x)) {
                if (st.layer(u) != 0) continue;
                st.assign(x, u, -st.down);
                if (++given == 3) break;
            }
            route = "triple-drop";
        } else {
            int other = -1;
            for (int u : g.neighbors(x))
                if (st.layer(u) == 0 && u != anchor) other = u;
            int z = partner[x];
            if (other < 0 || z < 0)
                throw InternalError("double-support vertex " + std::to_string(x) +
                                    " lost its partner or second neighbor");
            st.assign(x, anchor, -st.down);
            st.assign(x, other, -st.down);
            st.assign(x, z, -st.down);
            if (st.audit && st.classify(z) != VertexType::TypeIII)
                throw InternalError("partner of " + std::to_string(x) +
                                    " did not become TypeIII");
            route = "partner-drop";
        }
        processed[x] = 1;
        ++steps;
        if (st.dw[x] == 0)
            throw InternalError("resolved vertex " + std::to_string(x) + " still at zero");
        st.note("resolve.step", {{"vertex", std::to_string(x)}, {"route", route}});
    }

    int dropped_singles = 0;
    for (int x : singles) {
        int y = -1;
        for (int u : g.neighbors(x))
            if (st.layer(u) == 0) y = u;
        if (st.dw[y] != 0) continue;
        int z = partner[x];
        if (z < 0) throw InternalError("single-support vertex " + std::to_string(x) +
                                       " has no partner");
        st.assign(x, z, -st.down);
        if (st.audit && st.classify(z) != VertexType::TypeIII)
            throw InternalError("partner of " + std::to_string(x) + " did not become TypeIII");
        ++dropped_singles;
    }
    st.note("resolve.finish", {{"steps", std::to_string(steps)},
                               {"single-drops", std::to_string(dropped_singles)}});
}

// Proper {-down, 0, up} edge weighting of a k-regular graph, k >= 3.
// When the layering stops after one extraction the graph is bipartite
// with all degrees >= 3 and the base construction applies; otherwise the
// two passes above run.  In optimistic mode a failed saturation pins the
// responsible layer to the exact solver and retries.
inline Construction construct_regular(const Graph& g, const Rational& down, const Rational& up,
                                      const ConstructionOptions& opt = {}) {
    auto k = g.regularity();
    if (!k) throw InputError("graph is not regular");
    if (*k < 3)
        throw InputError("regular weighting requires degree >= 3, got " + std::to_string(*k));
    if (!(Rational(0) < down && down < up))
        throw InputError("weighting steps must satisfy 0 < down < up");

    std::set<int> force_exact;
    for (;;) {
        auto part = layered_partition(g, opt.mode, force_exact);
        try {
            int ell = part.last();
            if (ell < 1)
                throw InternalError("regular graph with edges produced a single layer");
            WeightState st(g, std::move(part), down, up);
            st.trace = opt.trace;
            st.audit = opt.audit;
            st.note("partition", {{"layers", std::to_string(ell + 1)},
                                  {"mode", opt.mode == PartitionMode::Exact ? "exact"
                                                                            : "optimistic"}});
            std::string branch;
            if (ell == 1) {
                weight_bipartite_state(st);
                branch = "bipartite-base";
                if (st.audit) require_audit(st, AuditStage::BipartiteBase);
            } else {
                initial_weighting(st);
                if (st.audit) require_audit(st, AuditStage::PostInitial);
                resolve_conflicts(st, *k);
                if (st.audit) require_audit(st, AuditStage::PostResolution);
                branch = "two-phase";
            }
            return Construction{std::move(st.w), std::move(st.partition), branch, *k};
        } catch (const SaturationError& e) {
            if (opt.mode == PartitionMode::Exact || e.layer < 0 || force_exact.count(e.layer))
                throw InternalError(std::string("saturation failed with exact layers: ") +
                                    e.what());
            force_exact.insert(e.layer);
            trace_note(opt.trace, "partition.retry",
                       {{"exact-layer", std::to_string(e.layer)}});
        }
    }
}

}  // namespace regw
