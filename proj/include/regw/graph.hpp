#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "regw/errors.hpp"

namespace regw {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

inline std::vector<int> to_sorted_vector(const VertexSet& s) {
    std::vector<int> out;
    out.reserve(s.count());
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
        out.push_back(static_cast<int>(v));
    return out;
}

inline VertexSet to_vertex_set(int n, const std::vector<int>& vs) {
    VertexSet s(n);
    for (int v : vs) s.set(v);
    return s;
}

// Simple undirected graph.  Immutable after construction and safe to share
// across threads.  Edges are stored once as canonical (u < v) pairs in
// lexicographic order; the edge id is the index into that list, so ids are
// dense in 0..m-1 and stable across identical inputs.
class Graph {
public:
    Graph() = default;

    // Validates and canonicalizes: rejects self-loops, duplicate edges and
    // out-of-range endpoints.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges) {
        if (n < 0) throw InputError("negative vertex count");
        for (auto& [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw InputError("edge endpoint " + std::to_string(std::max(u, v)) +
                                 " out of range for n=" + std::to_string(n));
            if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end())
            throw InputError("duplicate edge (" + std::to_string(it->first) + ", " +
                             std::to_string(it->second) + ")");
        Graph g;
        g.n_ = n;
        g.edges_ = std::move(edges);
        g.rows_.assign(n, VertexSet(n));
        g.neighbors_.assign(n, {});
        for (auto [u, v] : g.edges_) {
            g.rows_[u].set(v);
            g.rows_[v].set(u);
            g.neighbors_[u].push_back(v);
            g.neighbors_[v].push_back(u);
        }
        for (auto& nb : g.neighbors_) std::sort(nb.begin(), nb.end());
        return g;
    }

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int id) const { return edges_[id]; }

    const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }
    const VertexSet& row(int v) const { return rows_[v]; }
    int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }

    bool adjacent(int u, int v) const { return u != v && rows_[u].test(v); }

    // Edge id of (u, v); -1 when absent.
    int edge_id(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
        if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    // k when every degree equals k, absent otherwise.  The empty graph is
    // reported 0-regular.
    std::optional<int> regularity() const {
        if (n_ == 0) return 0;
        int k = degree(0);
        for (int v = 1; v < n_; ++v)
            if (degree(v) != k) return std::nullopt;
        return k;
    }

    bool is_connected() const {
        if (n_ <= 1) return true;
        VertexSet seen(n_);
        std::vector<int> stack{0};
        seen.set(0);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : neighbors_[v])
                if (!seen.test(u)) {
                    seen.set(u);
                    stack.push_back(u);
                }
        }
        return seen.count() == static_cast<std::size_t>(n_);
    }

    // Vertices of each connected component, components ordered by their
    // smallest vertex.
    std::vector<std::vector<int>> components() const {
        std::vector<std::vector<int>> comps;
        VertexSet seen(n_);
        for (int s = 0; s < n_; ++s) {
            if (seen.test(s)) continue;
            std::vector<int> comp, stack{s};
            seen.set(s);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (int u : neighbors_[v])
                    if (!seen.test(u)) {
                        seen.set(u);
                        stack.push_back(u);
                    }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<VertexSet> rows_;
    std::vector<std::vector<int>> neighbors_;
};

}  // namespace regw
