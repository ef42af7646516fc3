#pragma once

#include <string>
#include <vector>

#include "regw/certificate.hpp"
#include "regw/cycle_weighting.hpp"
#include "regw/regular_weighting.hpp"
#include "regw/search.hpp"
#include "regw/verify.hpp"

namespace regw {

struct DispatchOptions : ConstructionOptions {
    int search_cap = 20;               // exhaustive fallback limit (edges)
    int search_restarts = 24;          // local-search restarts past the cap
    long long search_steps = 200000;   // local-search steps per restart
};

namespace detail {

inline Certificate finish_certificate(const Graph& g, const WeightSet& q,
                                      std::vector<Rational> weights, std::string branch,
                                      std::string construction, Trace trail) {
    auto report = verify_proper(g, weights, q);
    if (!report.proper())
        throw InternalError("constructed weighting failed verification with " +
                            std::to_string(report.conflicts.size()) + " conflicts");
    return make_certificate(g, q, std::move(weights), std::move(branch),
                            std::move(construction), true, std::move(trail));
}

}  // namespace detail

// Proper {-down, 0, up} weighting of a k-regular graph with k >= 3,
// verified before return.
inline Certificate weight_regular(const Graph& g, const Rational& down, const Rational& up,
                                  ConstructionOptions opt = {}) {
    Trace trail;
    Trace* sink = opt.trace ? opt.trace : &trail;
    opt.trace = sink;
    auto con = construct_regular(g, down, up, opt);
    if (sink != &trail) trail = *sink;
    auto q = WeightSet::of(-down, Rational(0), up);
    return detail::finish_certificate(g, q, std::move(con.weights), "direct", con.branch,
                                      std::move(trail));
}

// Proper q-edge weighting of any regular graph with degree >= 2, for any
// three distinct reals q = {a < b < c}.  Regularity makes weightings
// affine-invariant, so the problem reduces to the gap set
// {-(b-a), 0, c-b} shifted by b:
//   - degree 2: cycles, solved directly over q;
//   - b-a < c-b: run the gap construction and shift;
//   - b-a > c-b: run it on the swapped gaps, negate, then shift;
//   - b-a == c-b: no gap construction applies; fall back to bounded
//     exhaustive or randomized search and report honestly on failure.
inline Certificate weight_with_set(const Graph& g, const WeightSet& q,
                                   const DispatchOptions& opt = {}) {
    auto k = g.regularity();
    if (!k) throw InputError("graph is not regular");
    if (*k == 1) throw InputError("graph has a K2 component (not nice)");
    if (*k < 2) throw InputError("weighting requires degree >= 2, got " + std::to_string(*k));

    Trace trail;
    Trace* sink = opt.trace ? opt.trace : &trail;
    auto collect = [&]() { return sink == &trail ? std::move(trail) : *sink; };

    if (*k == 2) {
        auto weights = weight_cycles(g, q, sink);
        if (!weights) throw InternalError("cycle weighting failed on distinct values");
        trace_note(sink, "dispatch", {{"route", "cycle-dp"}});
        return detail::finish_certificate(g, q, std::move(*weights), "cycle-dp", "cycle-dp",
                                          collect());
    }

    const Rational lower_gap = q.b() - q.a();
    const Rational upper_gap = q.c() - q.b();
    if (lower_gap != upper_gap) {
        bool flip = lower_gap > upper_gap;
        const Rational& down = flip ? upper_gap : lower_gap;
        const Rational& up = flip ? lower_gap : upper_gap;
        ConstructionOptions inner = opt;
        inner.trace = sink;
        auto con = construct_regular(g, down, up, inner);
        std::vector<Rational> weights(con.weights.size());
        for (std::size_t e = 0; e < weights.size(); ++e)
            weights[e] = (flip ? -con.weights[e] : con.weights[e]) + q.b();
        trace_note(sink, "dispatch", {{"route", flip ? "negated" : "direct"},
                                      {"down", to_fraction_string(down)},
                                      {"up", to_fraction_string(up)},
                                      {"shift", to_fraction_string(q.b())}});
        return detail::finish_certificate(g, q, std::move(weights), flip ? "negated" : "direct",
                                          con.branch, collect());
    }

    // Equal gaps: outside the constructive route.  Existence is still
    // guaranteed; search within budget.
    std::optional<std::vector<Rational>> weights;
    if (g.num_edges() <= opt.search_cap) {
        auto outcome = brute_force_search(g, q, SearchMode::First, opt.search_cap);
        weights = std::move(outcome.weighting);
        trace_note(sink, "dispatch", {{"route", "equal-gap-search"}, {"kind", "exhaustive"}});
    } else {
        std::uint64_t seed = fnv1a64(encode_graph6(g));
        weights = local_search_weighting(g, q, seed, opt.search_restarts, opt.search_steps);
        trace_note(sink, "dispatch", {{"route", "equal-gap-search"}, {"kind", "local"}});
    }
    if (!weights)
        throw SearchExhausted(
            "equal-gap set " + q.str() +
            ": a proper weighting exists, but the bounded search did not find one at this size");
    return detail::finish_certificate(g, q, std::move(*weights), "equal-gap-search", "search",
                                      collect());
}

}  // namespace regw
