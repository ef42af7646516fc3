#pragma once

#include <set>
#include <vector>

#include "regw/graph.hpp"
#include "regw/independent_set.hpp"

namespace regw {

enum class PartitionMode {
    Exact,       // every layer is a true maximum independent set
    Optimistic,  // greedy maximal layers; callers recover via force_exact
};

// The layering obtained by repeatedly extracting an independent set from
// what remains: layers[0] from the whole graph, layers[i] from the graph
// induced by the uncovered rest.  Layers are disjoint, cover V, and each
// is independent; in exact mode each is maximum within its residual graph,
// which is what downstream saturation guarantees rest on.
struct LayeredPartition {
    std::vector<std::vector<int>> layers;  // all nonempty, sorted vertex lists
    std::vector<int> layer_of;             // per-vertex layer index

    int last() const { return static_cast<int>(layers.size()) - 1; }
};

inline LayeredPartition layered_partition(const Graph& g,
                                          PartitionMode mode = PartitionMode::Exact,
                                          const std::set<int>& force_exact = {}) {
    LayeredPartition part;
    part.layer_of.assign(g.num_vertices(), -1);
    VertexSet left(g.num_vertices());
    left.set();
    int index = 0;
    while (left.any()) {
        bool exact = mode == PartitionMode::Exact || force_exact.count(index) > 0;
        VertexSet layer = exact ? maximum_independent_set(g, left)
                                : greedy_maximal_independent_set(g, left);
        auto vertices = to_sorted_vector(layer);
        for (int v : vertices) part.layer_of[v] = index;
        part.layers.push_back(std::move(vertices));
        left -= layer;
        ++index;
    }
    return part;
}

}  // namespace regw
