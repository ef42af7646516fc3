#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace regw {

// Base class for everything this library throws on bad input.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input (graph6, edge list, rational, certificate).
struct ParseError : Error {
    std::size_t offset;  // byte offset into the input where parsing failed
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

// Structurally valid input that violates an operation's precondition
// (non-regular graph, k too small, infeasible generator parameters, ...).
struct InputError : Error {
    using Error::Error;
};

// Exhaustive search asked to run past its hard cap.
struct CapError : Error {
    using Error::Error;
};

// A matching that must saturate one side failed to; carries a Hall
// violator set S on the saturated side with |N(S)| < |S|.  `layer`
// identifies the independent-set layer whose maximality justified the
// saturation claim (-1 when no layer is responsible).
struct SaturationError : Error {
    std::vector<int> violators;
    int layer;
    SaturationError(const std::string& msg, std::vector<int> viol, int layer_idx)
        : Error(msg), violators(std::move(viol)), layer(layer_idx) {}
};

// The constructive search for an equal-gap weight set gave up.  Existence
// of a weighting is still guaranteed; only the constructive route here is
// bounded.
struct SearchExhausted : Error {
    using Error::Error;
};

// An invariant the construction relies on failed.  Always a bug, never an
// input condition.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace regw
