#pragma once

#include <string>
#include <utility>
#include <vector>

#include "regw/graph.hpp"
#include "regw/partition.hpp"
#include "regw/rational.hpp"

namespace regw {

// One milestone in a construction run; certificates carry the sequence.
struct TraceEvent {
    std::string name;
    std::vector<std::pair<std::string, std::string>> fields;
};
using Trace = std::vector<TraceEvent>;

inline void trace_note(Trace* trace, std::string name,
                       std::vector<std::pair<std::string, std::string>> fields = {}) {
    if (trace) trace->push_back({std::move(name), std::move(fields)});
}

// Classification of a layer-i vertex (i >= 1) by weighted degree and
// incident-edge profile.  `up_high` counts incident up-edges whose other
// end lies in layers >= 1; `down_base`/`down_first` count incident
// down-edges into layer 0 / layer 1.
//
//   TypeI   : d_w = (i-1)*up with exactly i-1 such up-edges
//   TypeII  : d_w = i*up - down, i up-edges, one down-edge to layer 0
//   TypeIII : i >= 2, d_w = i*up - 2*down, i up-edges, one down-edge to
//             layer 0 and one to layer 1
//   Hungry  : i >= 2, d_w = p*up for p = up_high <= i-2
//
// Because 0 < down < up these classes are mutually exclusive.
enum class VertexType { TypeI, TypeII, TypeIII, Hungry, Unclassified };

inline const char* to_string(VertexType t) {
    switch (t) {
        case VertexType::TypeI: return "I";
        case VertexType::TypeII: return "II";
        case VertexType::TypeIII: return "III";
        case VertexType::Hungry: return "hungry";
        default: return "unclassified";
    }
}

inline VertexType classify_profile(int layer, const Rational& dw, int up_high, int down_base,
                                   int down_first, const Rational& down, const Rational& up) {
    if (layer < 1) return VertexType::Unclassified;
    if (dw == Rational(layer - 1) * up && up_high == layer - 1) return VertexType::TypeI;
    if (dw == Rational(layer) * up - down && up_high == layer && down_base == 1)
        return VertexType::TypeII;
    if (layer >= 2 && dw == Rational(layer) * up - 2 * down && up_high == layer &&
        down_base == 1 && down_first == 1)
        return VertexType::TypeIII;
    if (layer >= 2 && up_high <= layer - 2 && dw == Rational(up_high) * up)
        return VertexType::Hungry;
    return VertexType::Unclassified;
}

// Mutable construction state: a partial {-down, 0, up} edge weighting over
// a layered partition, with cached weighted degrees and edge-profile
// counters.  Every edge starts at 0 untouched; each construction step
// weights a previously untouched edge with -down or up exactly once.
struct WeightState {
    const Graph* graph = nullptr;
    LayeredPartition partition;
    Rational down, up;  // 0 < down < up; the working set is {-down, 0, up}

    std::vector<Rational> w;        // per edge id
    std::vector<char> touched;      // per edge id
    std::vector<Rational> dw;       // per vertex, always equals sum of incident w
    std::vector<int> up_high;       // per vertex: up-edges into layers >= 1
    std::vector<int> down_base;     // per vertex: down-edges into layer 0
    std::vector<int> down_first;    // per vertex: down-edges into layer 1

    Trace* trace = nullptr;
    bool audit = false;  // run internal invariant auditors at checkpoints

    WeightState(const Graph& g, LayeredPartition part, Rational down_step, Rational up_step)
        : graph(&g),
          partition(std::move(part)),
          down(std::move(down_step)),
          up(std::move(up_step)) {
        if (!(Rational(0) < down && down < up))
            throw InputError("weighting steps must satisfy 0 < down < up");
        w.assign(g.num_edges(), Rational(0));
        touched.assign(g.num_edges(), 0);
        dw.assign(g.num_vertices(), Rational(0));
        up_high.assign(g.num_vertices(), 0);
        down_base.assign(g.num_vertices(), 0);
        down_first.assign(g.num_vertices(), 0);
    }

    int layer(int v) const { return partition.layer_of[v]; }

    void assign(int edge, const Rational& value) {
        if (touched[edge])
            throw InternalError("edge " + std::to_string(edge) + " weighted twice");
        if (value != up && value != -down)
            throw InternalError("construction may only assign -down or up");
        auto [u, v] = graph->edge(edge);
        touched[edge] = 1;
        w[edge] = value;
        dw[u] += value;
        dw[v] += value;
        if (value == up) {
            if (layer(v) >= 1) ++up_high[u];
            if (layer(u) >= 1) ++up_high[v];
        } else {
            if (layer(v) == 0) ++down_base[u];
            if (layer(u) == 0) ++down_base[v];
            if (layer(v) == 1) ++down_first[u];
            if (layer(u) == 1) ++down_first[v];
        }
    }

    void assign(int u, int v, const Rational& value) {
        int e = graph->edge_id(u, v);
        if (e < 0)
            throw InternalError("no edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        assign(e, value);
    }

    VertexType classify(int v) const {
        return classify_profile(layer(v), dw[v], up_high[v], down_base[v], down_first[v], down,
                                up);
    }

    bool hungry(int v) const { return classify(v) == VertexType::Hungry; }

    void note(std::string name, std::vector<std::pair<std::string, std::string>> fields = {}) {
        trace_note(trace, std::move(name), std::move(fields));
    }
};

// The target weighted degrees of distinct layers never collide: within a
// layer the three class values are distinct, and everything reachable at
// layer i sits strictly below the smallest class value of layer j > i.
// True whenever 0 < down < up; checked explicitly in audit runs.
inline void check_layer_value_separation(const Rational& down, const Rational& up, int last_layer) {
    for (int i = 1; i <= last_layer; ++i) {
        Rational type2 = Rational(i) * up - down;
        if (!(Rational(i - 1) * up < type2) || !(Rational(i) * up - 2 * down < type2))
            throw InternalError("layer value separation failed at layer " + std::to_string(i));
        for (int j = i + 1; j <= last_layer; ++j) {
            if (!(type2 < Rational(j - 1) * up) || !(type2 < Rational(j) * up - 2 * down))
                throw InternalError("layer value separation failed between layers " +
                                    std::to_string(i) + " and " + std::to_string(j));
        }
    }
}

}  // namespace regw
