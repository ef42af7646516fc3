#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "regw/graph.hpp"
#include "regw/rational.hpp"

namespace regw {

enum class SearchMode { First, Count };

struct SearchOutcome {
    std::optional<std::vector<Rational>> weighting;  // first proper one found
    unsigned long long count = 0;                    // exact count in Count mode
};

namespace detail {

// Common-denominator integer images of the three weights; weighted-degree
// comparisons are unchanged under the scaling.
inline std::array<long long, 3> scale_weight_set(const WeightSet& q) {
    BigInt common = 1;
    for (const auto& v : q.values)
        common = boost::multiprecision::lcm(common, BigInt(denominator(v)));
    std::array<long long, 3> out{};
    for (int i = 0; i < 3; ++i) {
        BigInt scaled = numerator(q.values[i]) * (common / denominator(q.values[i]));
        if (scaled > (BigInt(1) << 40) || scaled < -(BigInt(1) << 40))
            throw InputError("weight set too large for integer search scaling");
        out[i] = static_cast<long long>(scaled);
    }
    return out;
}

}  // namespace detail

// Exhaustive enumeration of all q-assignments in edge-id order, weights
// ascending, with incremental pruning: once the last edge incident to
// either endpoint of some edge is decided, a tie on that edge kills the
// whole branch.  First mode stops at the first proper weighting; Count
// mode returns the exact number of proper weightings.
inline SearchOutcome brute_force_search(const Graph& g, const WeightSet& q, SearchMode mode,
                                        int cap = 20) {
    int m = g.num_edges();
    if (m > cap)
        throw CapError("graph has " + std::to_string(m) + " edges, search cap is " +
                       std::to_string(cap));
    auto scaled = detail::scale_weight_set(q);

    // decided_at[f]: the enumeration step after which both endpoints of
    // edge f have all incident edges assigned.
    std::vector<int> last_incident(g.num_vertices(), -1);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edge(e);
        last_incident[u] = std::max(last_incident[u], e);
        last_incident[v] = std::max(last_incident[v], e);
    }
    std::vector<std::vector<int>> checks_at(std::max(m, 1));
    for (int f = 0; f < m; ++f) {
        auto [u, v] = g.edge(f);
        checks_at[std::max(last_incident[u], last_incident[v])].push_back(f);
    }

    SearchOutcome outcome;
    std::vector<long long> sum(g.num_vertices(), 0);
    std::vector<int> pick(m, -1);

    auto dfs = [&](auto&& self, int e) -> bool {
        if (e == m) {
            ++outcome.count;
            if (!outcome.weighting) {
                std::vector<Rational> w(m);
                for (int i = 0; i < m; ++i) w[i] = q.values[pick[i]];
                outcome.weighting = std::move(w);
            }
            return mode == SearchMode::First;
        }
        auto [u, v] = g.edge(e);
        for (int val = 0; val < 3; ++val) {
            pick[e] = val;
            sum[u] += scaled[val];
            sum[v] += scaled[val];
            bool conflict = false;
            for (int f : checks_at[e]) {
                auto [a, b] = g.edge(f);
                if (sum[a] == sum[b]) {
                    conflict = true;
                    break;
                }
            }
            if (!conflict && self(self, e + 1)) return true;
            sum[u] -= scaled[val];
            sum[v] -= scaled[val];
        }
        pick[e] = -1;
        return false;
    };

    if (m == 0) {
        // No edges: the empty weighting is trivially proper.
        outcome.count = 1;
        outcome.weighting = std::vector<Rational>{};
        return outcome;
    }
    dfs(dfs, 0);
    return outcome;
}

// Conflict-count descent with restarts for graphs past the exhaustive
// cap.  Deterministic for a fixed seed.  Returns nothing when the budget
// runs out; existence may still hold.
inline std::optional<std::vector<Rational>> local_search_weighting(const Graph& g,
                                                                   const WeightSet& q,
                                                                   std::uint64_t seed,
                                                                   int restarts = 24,
                                                                   long long steps = 200000) {
    int m = g.num_edges();
    int n = g.num_vertices();
    if (m == 0) return std::vector<Rational>{};
    auto scaled = detail::scale_weight_set(q);
    std::mt19937_64 rng(seed);

    std::vector<int> pick(m);
    std::vector<long long> sum(n);

    auto conflicts_of = [&]() {
        std::vector<int> bad;
        for (int e = 0; e < m; ++e) {
            auto [u, v] = g.edge(e);
            if (sum[u] == sum[v]) bad.push_back(e);
        }
        return bad;
    };
    auto local_conflicts = [&](int vertex) {
        int count = 0;
        for (int u : g.neighbors(vertex))
            if (sum[u] == sum[vertex]) ++count;
        return count;
    };

    for (int restart = 0; restart < restarts; ++restart) {
        for (int e = 0; e < m; ++e) pick[e] = static_cast<int>(rng() % 3);
        std::fill(sum.begin(), sum.end(), 0);
        for (int e = 0; e < m; ++e) {
            auto [u, v] = g.edge(e);
            sum[u] += scaled[pick[e]];
            sum[v] += scaled[pick[e]];
        }
        long long stagnant = 0;
        for (long long step = 0; step < steps; ++step) {
            auto bad = conflicts_of();
            if (bad.empty()) {
                std::vector<Rational> w(m);
                for (int e = 0; e < m; ++e) w[e] = q.values[pick[e]];
                return w;
            }
            int target = bad[rng() % bad.size()];
            auto [tu, tv] = g.edge(target);

            // Steepest move over reassignments of any edge at the
            // conflicting pair; count only conflicts local to the move.
            int best_edge = -1, best_val = -1, best_delta = 1;
            auto consider = [&](int e) {
                auto [u, v] = g.edge(e);
                int before = local_conflicts(u) + local_conflicts(v) - (sum[u] == sum[v] ? 1 : 0);
                int old = pick[e];
                for (int val = 0; val < 3; ++val) {
                    if (val == old) continue;
                    sum[u] += scaled[val] - scaled[old];
                    sum[v] += scaled[val] - scaled[old];
                    int after =
                        local_conflicts(u) + local_conflicts(v) - (sum[u] == sum[v] ? 1 : 0);
                    sum[u] -= scaled[val] - scaled[old];
                    sum[v] -= scaled[val] - scaled[old];
                    if (after - before < best_delta) {
                        best_delta = after - before;
                        best_edge = e;
                        best_val = val;
                    }
                }
            };
            for (int u : {tu, tv})
                for (int nb : g.neighbors(u)) consider(g.edge_id(std::min(u, nb), std::max(u, nb)));

            if (best_edge < 0 || best_delta > 0) {
                // No improving or sideways move: random kick.
                best_edge = target;
                best_val = (pick[target] + 1 + static_cast<int>(rng() % 2)) % 3;
                ++stagnant;
            } else if (best_delta == 0) {
                ++stagnant;
            } else {
                stagnant = 0;
            }
            auto [u, v] = g.edge(best_edge);
            sum[u] += scaled[best_val] - scaled[pick[best_edge]];
            sum[v] += scaled[best_val] - scaled[pick[best_edge]];
            pick[best_edge] = best_val;
            if (stagnant > 2000) break;
        }
    }
    return std::nullopt;
}

}  // namespace regw
