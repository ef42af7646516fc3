#pragma once

#include <array>
#include <optional>
#include <vector>

#include "regw/graph.hpp"
#include "regw/rational.hpp"
#include "regw/weighting.hpp"

namespace regw {

namespace detail {

// Around a cycle the weighted degree of a vertex is the sum of its two
// edge weights, so an edge conflicts exactly when the weights two apart
// are equal.  Assign edge values by DFS with the chain constraint
// w[t] != w[t-2] plus the two wrap constraints; three distinct values
// always suffice.
inline bool weight_one_cycle(int length, std::vector<int>& choice) {
    choice.assign(length, -1);
    auto dfs = [&](auto&& self, int t) -> bool {
        if (t == length) return true;
        for (int val = 0; val < 3; ++val) {
            if (val == choice[t - 2]) continue;
            if (t == length - 2 && val == choice[0]) continue;
            if (t == length - 1 && val == choice[1]) continue;
            choice[t] = val;
            if (self(self, t + 1)) return true;
        }
        choice[t] = -1;
        return false;
    };
    for (int first = 0; first < 3; ++first)
        for (int second = 0; second < 3; ++second) {
            if (length == 3 && second == first) continue;
            choice[0] = first;
            choice[1] = second;
            if (dfs(dfs, 2)) return true;
        }
    return false;
}

}  // namespace detail

// Proper q-edge weighting of a 2-regular graph (a disjoint union of
// cycles), one cycle at a time.  Returns nothing only if some cycle
// admits no proper weighting, which cannot happen for three distinct
// values; callers may still treat the result as optional.
inline std::optional<std::vector<Rational>> weight_cycles(const Graph& g, const WeightSet& q,
                                                          Trace* trace = nullptr) {
    if (g.regularity() != 2) throw InputError("cycle weighting requires a 2-regular graph");

    std::vector<Rational> weights(g.num_edges(), Rational(0));
    for (const auto& comp : g.components()) {
        // Walk the cycle from its smallest vertex toward its smaller
        // neighbor; collect edge ids in cyclic order.
        int start = comp[0];
        std::vector<int> walk{start};
        int prev = -1, cur = start;
        for (;;) {
            int next = -1;
            for (int u : g.neighbors(cur))
                if (u != prev && (next < 0 || u < next)) next = u;
            if (next == start) break;
            prev = cur;
            cur = next;
            walk.push_back(cur);
        }
        int length = static_cast<int>(walk.size());
        std::vector<int> edge_seq(length);
        for (int t = 0; t < length; ++t)
            edge_seq[t] = g.edge_id(walk[t], walk[(t + 1) % length]);

        std::vector<int> choice;
        if (!detail::weight_one_cycle(length, choice)) return std::nullopt;
        for (int t = 0; t < length; ++t) weights[edge_seq[t]] = q.values[choice[t]];
        trace_note(trace, "cycle", {{"start", std::to_string(start)},
                                    {"length", std::to_string(length)}});
    }
    return weights;
}

}  // namespace regw
