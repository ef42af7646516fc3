#pragma once

#include <string>
#include <vector>

#include "regw/weighting.hpp"

namespace regw {

enum class AuditStage { BipartiteBase, PostInitial, PostResolution };

inline const char* to_string(AuditStage s) {
    switch (s) {
        case AuditStage::BipartiteBase: return "bipartite-base";
        case AuditStage::PostInitial: return "post-initial";
        default: return "post-resolution";
    }
}

struct ConditionResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> witnesses;  // offending vertices/edges with values
};

struct AuditReport {
    AuditStage stage;
    std::vector<ConditionResult> conditions;
    bool all_pass = true;

    std::string summary() const {
        std::string out;
        for (const auto& c : conditions) {
            if (!out.empty()) out += ", ";
            out += c.name + (c.pass ? ":pass" : ":FAIL");
            if (!c.pass && !c.witnesses.empty()) out += "[" + c.witnesses.front() + "]";
        }
        return out;
    }
};

namespace detail {

struct FreshProfile {
    std::vector<Rational> dw;
    std::vector<int> up_high, down_base, down_first;
    bool weights_in_range = true;
    std::string range_witness;
};

// Recomputed from the raw weights only; the auditor never trusts the
// state's caches.
inline FreshProfile recompute_profile(const WeightState& st) {
    const Graph& g = *st.graph;
    FreshProfile p;
    p.dw.assign(g.num_vertices(), Rational(0));
    p.up_high.assign(g.num_vertices(), 0);
    p.down_base.assign(g.num_vertices(), 0);
    p.down_first.assign(g.num_vertices(), 0);
    for (int e = 0; e < g.num_edges(); ++e) {
        const Rational& w = st.w[e];
        auto [u, v] = g.edge(e);
        p.dw[u] += w;
        p.dw[v] += w;
        if (w == 0) continue;
        if (w == st.up) {
            if (st.layer(v) >= 1) ++p.up_high[u];
            if (st.layer(u) >= 1) ++p.up_high[v];
        } else if (w == -st.down) {
            if (st.layer(v) == 0) ++p.down_base[u];
            if (st.layer(u) == 0) ++p.down_base[v];
            if (st.layer(v) == 1) ++p.down_first[u];
            if (st.layer(u) == 1) ++p.down_first[v];
        } else if (p.weights_in_range) {
            p.weights_in_range = false;
            p.range_witness = "edge " + std::to_string(e) + " carries " + to_fraction_string(w);
        }
    }
    return p;
}

struct ConditionBuilder {
    AuditReport& report;
    ConditionResult current;

    explicit ConditionBuilder(AuditReport& rep, std::string name) : report(rep) {
        current.name = std::move(name);
    }
    void fail(std::string witness) {
        current.pass = false;
        if (current.witnesses.size() < 8) current.witnesses.push_back(std::move(witness));
    }
    ~ConditionBuilder() {
        report.all_pass = report.all_pass && current.pass;
        report.conditions.push_back(std::move(current));
    }
};

inline std::string vertex_witness(int v, const Rational& dw) {
    return "v" + std::to_string(v) + " d_w=" + to_fraction_string(dw);
}

}  // namespace detail

// Stage auditor.  Recomputes all weighted degrees and edge profiles from
// the raw weights and reports, per named condition, pass/fail plus
// witnesses.  Never throws on a failing condition.
inline AuditReport audit(const WeightState& st, AuditStage stage) {
    const Graph& g = *st.graph;
    auto fresh = detail::recompute_profile(st);
    const Rational& down = st.down;
    const Rational& up = st.up;
    int ell = st.partition.last();

    AuditReport report;
    report.stage = stage;

    {
        detail::ConditionBuilder c(report, "state-consistency");
        if (!fresh.weights_in_range) c.fail(fresh.range_witness);
        for (int v = 0; v < g.num_vertices(); ++v)
            if (fresh.dw[v] != st.dw[v])
                c.fail("cached d_w of v" + std::to_string(v) + " is " +
                       to_fraction_string(st.dw[v]) + ", recomputed " +
                       to_fraction_string(fresh.dw[v]));
        for (int e = 0; e < g.num_edges(); ++e) {
            if (st.touched[e] && st.w[e] == 0)
                c.fail("edge " + std::to_string(e) + " touched but zero");
            if (!st.touched[e] && st.w[e] != 0)
                c.fail("edge " + std::to_string(e) + " weighted but untouched");
        }
    }

    auto type_of = [&](int v) {
        return classify_profile(st.layer(v), fresh.dw[v], fresh.up_high[v], fresh.down_base[v],
                                fresh.down_first[v], down, up);
    };

    if (stage == AuditStage::BipartiteBase) {
        detail::ConditionBuilder side1(report, "side1-values");
        if (ell >= 1)
            for (int x : st.partition.layers[1])
                if (fresh.dw[x] != -3 * down && fresh.dw[x] != up)
                    side1.fail(detail::vertex_witness(x, fresh.dw[x]));
        detail::ConditionBuilder side0(report, "side0-range");
        for (int y : st.partition.layers[0])
            if (!(fresh.dw[y] < up - down) || fresh.dw[y] == -3 * down)
                side0.fail(detail::vertex_witness(y, fresh.dw[y]));
        return report;
    }

    if (stage == AuditStage::PostInitial) {
        {
            detail::ConditionBuilder c(report, "layers-typed");
            for (int i = 1; i <= ell; ++i)
                for (int v : st.partition.layers[i]) {
                    auto t = type_of(v);
                    if (t != VertexType::TypeI && t != VertexType::TypeII)
                        c.fail(detail::vertex_witness(v, fresh.dw[v]) + " type=" + to_string(t));
                }
        }
        {
            detail::ConditionBuilder c(report, "base-nonpositive");
            for (int y : st.partition.layers[0])
                if (fresh.dw[y] > 0) c.fail(detail::vertex_witness(y, fresh.dw[y]));
        }
        {
            detail::ConditionBuilder c(report, "no-plain-adjacency");
            if (ell >= 1)
                for (int x : st.partition.layers[1]) {
                    if (type_of(x) != VertexType::TypeI) continue;
                    for (int u : g.neighbors(x))
                        if (st.layer(u) >= 2 && type_of(u) == VertexType::TypeI)
                            c.fail("v" + std::to_string(x) + " ~ v" + std::to_string(u) +
                                   " both TypeI");
                }
        }
        return report;
    }

    // PostResolution: the six final conditions.
    {
        detail::ConditionBuilder c(report, "upper-values");
        for (int i = 2; i <= ell; ++i)
            for (int v : st.partition.layers[i]) {
                const Rational& d = fresh.dw[v];
                if (d != Rational(i - 1) * up && d != Rational(i) * up - 2 * down &&
                    d != Rational(i) * up - down)
                    c.fail(detail::vertex_witness(v, d) + " layer=" + std::to_string(i));
            }
    }
    {
        detail::ConditionBuilder c(report, "layer1-values");
        if (ell >= 1)
            for (int x : st.partition.layers[1]) {
                const Rational& d = fresh.dw[x];
                if (d != -3 * down && d != -down && d != 0 && d != up - down)
                    c.fail(detail::vertex_witness(x, d));
            }
    }
    {
        detail::ConditionBuilder c(report, "base-bound");
        for (int y : st.partition.layers[0])
            if (!(fresh.dw[y] < up - down)) c.fail(detail::vertex_witness(y, fresh.dw[y]));
    }
    {
        detail::ConditionBuilder c(report, "triple-drop-safety");
        if (ell >= 1)
            for (int x : st.partition.layers[1]) {
                if (fresh.dw[x] != -3 * down) continue;
                int base_neighbors = 0;
                for (int y : g.neighbors(x)) {
                    if (st.layer(y) != 0) continue;
                    ++base_neighbors;
                    if (!(fresh.dw[y] < up - down) || fresh.dw[y] == -3 * down)
                        c.fail("v" + std::to_string(x) + " neighbor " +
                               detail::vertex_witness(y, fresh.dw[y]));
                }
                if (base_neighbors < 2)
                    c.fail("v" + std::to_string(x) + " has only " +
                           std::to_string(base_neighbors) + " layer-0 neighbors");
            }
    }
    {
        detail::ConditionBuilder c(report, "single-drop-anchor");
        if (ell >= 1)
            for (int x : st.partition.layers[1]) {
                if (fresh.dw[x] != -down) continue;
                std::vector<int> base_neighbors;
                for (int y : g.neighbors(x))
                    if (st.layer(y) == 0) base_neighbors.push_back(y);
                if (base_neighbors.size() != 1)
                    c.fail("v" + std::to_string(x) + " has " +
                           std::to_string(base_neighbors.size()) + " layer-0 neighbors");
                else if (fresh.dw[base_neighbors[0]] != 0)
                    c.fail("v" + std::to_string(x) + " anchor " +
                           detail::vertex_witness(base_neighbors[0],
                                                  fresh.dw[base_neighbors[0]]));
            }
    }
    {
        detail::ConditionBuilder c(report, "zero-isolation");
        if (ell >= 1)
            for (int x : st.partition.layers[1]) {
                if (fresh.dw[x] != 0) continue;
                for (int y : g.neighbors(x))
                    if (st.layer(y) == 0 &&
                        (fresh.dw[y] == 0 || !(fresh.dw[y] < up - down)))
                        c.fail("v" + std::to_string(x) + " neighbor " +
                               detail::vertex_witness(y, fresh.dw[y]));
            }
    }
    return report;
}

inline void require_audit(const WeightState& st, AuditStage stage) {
    auto report = audit(st, stage);
    if (!report.all_pass)
        throw InternalError(std::string("audit failed at ") + to_string(stage) + ": " +
                            report.summary());
    if (st.trace)
        trace_note(st.trace, std::string("audit.") + to_string(stage), {{"verdict", "pass"}});
}

}  // namespace regw
