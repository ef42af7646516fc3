#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "regw/graph.hpp"
#include "regw/graph_io.hpp"
#include "regw/rational.hpp"
#include "regw/weighting.hpp"

namespace regw {

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string graph_hash(const std::string& graph6) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a64(graph6);
    std::string out = "fnv1a64:";
    for (int shift = 60; shift >= 0; shift -= 4) out.push_back(hex[(h >> shift) & 15]);
    return out;
}

// Self-contained record of one weighting run: the input graph (canonical
// graph6 plus hash), the declared weight set, the final weights and
// weighted degrees as exact fractions, which construction route fired,
// the verification verdict, and the milestone trail.  Serialization is
// deterministic: identical runs produce byte-identical documents.
struct Certificate {
    std::string graph6;
    std::string hash;
    int n = 0, m = 0;
    std::array<Rational, 3> set_values{};
    std::vector<std::pair<int, int>> edges;
    std::vector<Rational> weights;            // per edge id
    std::vector<Rational> weighted_degrees;   // per vertex
    std::string branch;        // dispatch route: direct | negated | equal-gap-search | cycle-dp
    std::string construction;  // two-phase | bipartite-base | cycle-dp | search
    bool proper = false;
    Trace trail;

    WeightSet set() const { return WeightSet{{set_values[0], set_values[1], set_values[2]}}; }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["format"] = "regw-certificate/1";
        j["graph"] = {{"n", n}, {"m", m}, {"graph6", graph6}, {"hash", hash}};
        j["weight_set"] = {to_fraction_string(set_values[0]), to_fraction_string(set_values[1]),
                           to_fraction_string(set_values[2])};
        j["branch"] = branch;
        j["construction"] = construction;
        nlohmann::json edge_array = nlohmann::json::array();
        for (auto [u, v] : edges) edge_array.push_back({u, v});
        j["edges"] = std::move(edge_array);
        nlohmann::json weight_array = nlohmann::json::array();
        for (const auto& w : weights) weight_array.push_back(to_fraction_string(w));
        j["weights"] = std::move(weight_array);
        nlohmann::json degree_array = nlohmann::json::array();
        for (const auto& d : weighted_degrees) degree_array.push_back(to_fraction_string(d));
        j["weighted_degrees"] = std::move(degree_array);
        j["proper"] = proper;
        nlohmann::json trail_array = nlohmann::json::array();
        for (const auto& event : trail) {
            nlohmann::json entry;
            entry["event"] = event.name;
            for (const auto& [key, value] : event.fields) entry[key] = value;
            trail_array.push_back(std::move(entry));
        }
        j["trail"] = std::move(trail_array);
        return j;
    }

    std::string to_json_string() const { return to_json().dump(2) + "\n"; }

    static Certificate from_json(const nlohmann::json& j) {
        Certificate cert;
        try {
            if (j.at("format").get<std::string>() != "regw-certificate/1")
                throw InputError("certificate: unknown format tag");
            const auto& graph = j.at("graph");
            cert.n = graph.at("n").get<int>();
            cert.m = graph.at("m").get<int>();
            cert.graph6 = graph.at("graph6").get<std::string>();
            cert.hash = graph.at("hash").get<std::string>();
            const auto& set = j.at("weight_set");
            if (set.size() != 3) throw InputError("certificate: weight set needs 3 values");
            for (int i = 0; i < 3; ++i)
                cert.set_values[i] = parse_rational(set.at(i).get<std::string>());
            cert.branch = j.at("branch").get<std::string>();
            cert.construction = j.at("construction").get<std::string>();
            for (const auto& e : j.at("edges")) {
                if (e.size() != 2) throw InputError("certificate: malformed edge entry");
                cert.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
            }
            for (const auto& w : j.at("weights"))
                cert.weights.push_back(parse_rational(w.get<std::string>()));
            for (const auto& d : j.at("weighted_degrees"))
                cert.weighted_degrees.push_back(parse_rational(d.get<std::string>()));
            cert.proper = j.at("proper").get<bool>();
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("certificate: malformed document: ") + e.what());
        }
        if (static_cast<int>(cert.edges.size()) != cert.m ||
            static_cast<int>(cert.weights.size()) != cert.m)
            throw InputError("certificate: edge count disagrees with weight list");
        if (static_cast<int>(cert.weighted_degrees.size()) != cert.n)
            throw InputError("certificate: vertex count disagrees with degree list");
        return cert;
    }

    static Certificate from_json_string(const std::string& text) {
        nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
        if (j.is_discarded()) throw InputError("certificate: not valid JSON");
        return from_json(j);
    }
};

inline Certificate make_certificate(const Graph& g, const WeightSet& q,
                                    std::vector<Rational> weights, std::string branch,
                                    std::string construction, bool proper, Trace trail) {
    Certificate cert;
    cert.graph6 = encode_graph6(g);
    cert.hash = graph_hash(cert.graph6);
    cert.n = g.num_vertices();
    cert.m = g.num_edges();
    cert.set_values = q.values;
    cert.edges = g.edges();
    cert.weights = std::move(weights);
    cert.weighted_degrees.assign(g.num_vertices(), Rational(0));
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        cert.weighted_degrees[u] += cert.weights[e];
        cert.weighted_degrees[v] += cert.weights[e];
    }
    cert.branch = std::move(branch);
    cert.construction = std::move(construction);
    cert.proper = proper;
    cert.trail = std::move(trail);
    return cert;
}

}  // namespace regw
