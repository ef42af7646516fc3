#pragma once

#include <optional>
#include <string>

#include "regw/dispatch.hpp"
#include "regw/search.hpp"

namespace regw {

struct CrossCheckResult {
    bool constructed = false;   // dispatcher produced a verified weighting
    bool oracle_found = false;  // exhaustive enumeration found one
    bool consistent = false;    // verdicts agree
    std::string note;
    std::optional<Certificate> certificate;
};

// Runs the construction and the exhaustive oracle side by side.  The
// construction self-verifies, so "constructed without oracle hit" would
// mean the oracle itself is broken and is flagged as such.  The reverse
// gap (oracle hit, construction gave up) can only happen on equal-gap
// sets, where the constructive route is a bounded search.
inline CrossCheckResult cross_check(const Graph& g, const WeightSet& q, int cap = 20,
                                    const DispatchOptions& opt = {}) {
    if (g.num_edges() > cap)
        throw CapError("cross-check: graph has " + std::to_string(g.num_edges()) +
                       " edges, cap is " + std::to_string(cap));
    CrossCheckResult result;
    try {
        result.certificate = weight_with_set(g, q, opt);
        result.constructed = true;
    } catch (const SearchExhausted& e) {
        result.note = e.what();
    }
    auto oracle = brute_force_search(g, q, SearchMode::First, cap);
    result.oracle_found = oracle.weighting.has_value();
    if (result.constructed && !result.oracle_found)
        throw InternalError("oracle bug: enumeration missed a weighting the verifier accepted");
    result.consistent = result.constructed == result.oracle_found;
    if (!result.consistent && result.note.empty())
        result.note = "construction incomplete but a weighting exists";
    return result;
}

}  // namespace regw
