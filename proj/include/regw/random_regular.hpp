#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "regw/graph.hpp"

namespace regw {

namespace detail {

// Bounded draw by rejection, so results do not depend on the standard
// library's distribution implementation.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t r;
    do r = rng(); while (r >= limit);
    return r % bound;
}

// Loops plus excess parallel pairings in a point pairing.
inline int pairing_defects(const std::vector<std::pair<int, int>>& pairs, int k) {
    int bad = 0;
    std::map<std::pair<int, int>, int> seen;
    for (auto [p, q] : pairs) {
        int u = p / k, v = q / k;
        if (u == v) {
            ++bad;
            continue;
        }
        if (u > v) std::swap(u, v);
        if (seen[{u, v}]++ > 0) ++bad;
    }
    return bad;
}

}  // namespace detail

// Random simple k-regular graph on n vertices via the pairing model:
// shuffle n*k half-edge points, pair them up, and reject pairings with
// loops or parallel edges.  After 100 rejections the last pairing is
// repaired by randomized pair swaps.  Deterministic under a fixed seed.
inline Graph gen_random_regular(int n, int k, std::uint64_t seed) {
    if (n < 0 || k < 0 || k >= std::max(n, 1))
        throw InputError("random regular: need 0 <= k < n");
    if ((static_cast<long long>(n) * k) % 2 != 0)
        throw InputError("random regular: n*k must be even");
    if (k == 0) return Graph::from_edges(n, {});

    std::mt19937_64 rng(seed);
    int points = n * k;
    std::vector<int> perm(points);
    std::vector<std::pair<int, int>> pairs(points / 2);

    auto resample = [&] {
        for (int i = 0; i < points; ++i) perm[i] = i;
        for (int i = points - 1; i > 0; --i) {
            int j = static_cast<int>(detail::draw_below(rng, i + 1));
            std::swap(perm[i], perm[j]);
        }
        for (int i = 0; i < points / 2; ++i) pairs[i] = {perm[2 * i], perm[2 * i + 1]};
    };

    int defects = 0;
    for (int attempt = 0; attempt < 100; ++attempt) {
        resample();
        defects = detail::pairing_defects(pairs, k);
        if (defects == 0) break;
    }

    // Swap repair: exchange endpoints between a defective pair and a random
    // partner whenever that strictly lowers the defect count.
    auto first_defective = [&]() -> int {
        std::map<std::pair<int, int>, int> seen;
        for (auto [p, q] : pairs) {
            int u = p / k, v = q / k;
            if (u > v) std::swap(u, v);
            if (u != v) ++seen[{u, v}];
        }
        for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
            int u = pairs[i].first / k, v = pairs[i].second / k;
            if (u == v) return i;
            if (u > v) std::swap(u, v);
            if (seen[{u, v}] > 1) return i;
        }
        return -1;
    };
    long long budget = 200LL * points;
    while (defects > 0 && budget-- > 0) {
        int bad = first_defective();
        if (bad < 0) break;
        int j = static_cast<int>(detail::draw_below(rng, pairs.size()));
        if (j == bad) continue;
        auto trial = pairs;
        std::swap(trial[bad].second, trial[j].second);
        int trial_defects = detail::pairing_defects(trial, k);
        if (trial_defects < defects) {
            pairs = trial;
            defects = trial_defects;
        }
    }
    if (defects > 0) throw InputError("random regular: retry budget exhausted");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(pairs.size());
    for (auto [p, q] : pairs) edges.emplace_back(p / k, q / k);
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace regw
