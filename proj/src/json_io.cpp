#include "distcol/json_io.hpp"

#include <algorithm>
#include <string>

namespace distcol {

namespace {

const json& need(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
    return *it;
}

}  // namespace

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    json j{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
    if (g.vertex_count() <= 62) j["graph6"] = emit_graph6(g);
    return j;
}

Graph graph_from_json(const json& j) {
    if (j.is_string()) return parse_graph6(j.get<std::string>());
    int n = need(j, "n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const json& e : need(j, "edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edge entries must be [u, v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, edges);
}

json mode_to_json(const Mode& mode) {
    return json{{"target", mode.target == Target::vertex ? "vertex" : "edge"},
                {"properness", mode.proper() ? "proper" : "plain"}};
}

Mode mode_from_json(const json& j) {
    Mode mode;
    std::string target = need(j, "target").get<std::string>();
    if (target == "vertex")
        mode.target = Target::vertex;
    else if (target == "edge")
        mode.target = Target::edge;
    else
        throw ParseError("mode target must be \"vertex\" or \"edge\"");
    std::string properness = need(j, "properness").get<std::string>();
    if (properness == "plain")
        mode.properness = Properness::plain;
    else if (properness == "proper")
        mode.properness = Properness::proper;
    else
        throw ParseError("mode properness must be \"plain\" or \"proper\"");
    return mode;
}

json permutation_to_json(const Permutation& p) { return json(p.images); }

Permutation permutation_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("permutation must be an image array");
    return Permutation(j.get<std::vector<int>>());
}

json colours_to_json(const Graph& g, const Mode& mode, const std::vector<Colour>& colours) {
    if (mode.target == Target::vertex) {
        if (static_cast<int>(colours.size()) != g.vertex_count())
            throw SizeMismatchError("colour vector size != vertex count");
        return json(colours);
    }
    if (static_cast<int>(colours.size()) != g.edge_count())
        throw SizeMismatchError("colour vector size != edge count");
    json out = json::array();
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        out.push_back({e.u, e.v, colours[i]});
    }
    return out;
}

std::vector<Colour> colours_from_json(const Graph& g, const Mode& mode, const json& j) {
    if (!j.is_array()) throw ParseError("colouring must be an array");
    if (mode.target == Target::vertex) {
        for (const json& c : j)
            if (!c.is_number_integer() || c.get<long long>() < 0)
                throw ParseError("vertex colours must be non-negative integers");
        auto out = j.get<std::vector<Colour>>();
        if (static_cast<int>(out.size()) != g.vertex_count())
            throw SizeMismatchError("vertex colouring length != vertex count");
        return out;
    }
    std::vector<Colour> out(g.edge_count(), -1);
    for (const json& t : j) {
        if (!t.is_array() || t.size() != 3) throw ParseError("edge colours must be [u, v, colour] triples");
        int u = t[0].get<int>(), v = t[1].get<int>();
        Colour c = t[2].get<Colour>();
        if (c < 0) throw ParseError("edge colours must be non-negative integers");
        auto idx = g.edge_index(u, v);
        if (!idx) throw ParseError("colour triple names a non-edge");
        if (out[*idx] >= 0) throw ParseError("edge coloured twice");
        out[*idx] = c;
    }
    for (Colour c : out)
        if (c < 0) throw SizeMismatchError("edge colouring does not cover every edge");
    return out;
}

json trace_to_json(const Graph& g, const ReductionTrace& trace) {
    json steps = json::array();
    for (const MergeStep& s : trace.steps) steps.push_back({{"from", s.from}, {"into", s.into}});
    return json{{"mode", mode_to_json(trace.mode)},
                {"initial", colours_to_json(g, trace.mode, trace.initial)},
                {"steps", std::move(steps)},
                {"final", colours_to_json(g, trace.mode, trace.final)},
                {"irreducible", true}};
}

json obstruction_to_json(const EdgeObstruction& o) {
    return json{{"kind", o.kind == Obstruction::isolated_edge ? "isolated-edge" : "isolated-vertices"},
                {"vertices", o.vertices}};
}

namespace {

std::string condition_name(LemmaCondition c) {
    return std::string(1, static_cast<char>('a' + static_cast<int>(c)));
}

LemmaCondition condition_from_name(const std::string& s) {
    if (s.size() == 1 && s[0] >= 'a' && s[0] <= 'd')
        return static_cast<LemmaCondition>(s[0] - 'a');
    throw ParseError("condition must be one of a, b, c, d");
}

}  // namespace

json lemma_colouring_to_json(const LemmaColouring& lc) {
    Graph g = lc.graph();
    return json{{"kind", "lemma-witness"},
                {"graph_kind", lc.kind == GraphKind::DS ? "DS" : "DC"},
                {"m", lc.spec.x_size},
                {"n", lc.spec.y_size},
                {"condition", condition_name(lc.condition)},
                {"payload", colours_to_json(g, lc.mode(), lc.payload)},
                {"verification",
                 json{{"suitable", true}, {"irreducible", true}, {"mode", mode_to_json(lc.mode())}}}};
}

LemmaColouring lemma_colouring_from_json(const json& j) {
    LemmaColouring lc;
    lc.condition = condition_from_name(need(j, "condition").get<std::string>());
    lc.kind = condition_kind(lc.condition);
    std::string kind = need(j, "graph_kind").get<std::string>();
    if ((kind == "DS") != (lc.kind == GraphKind::DS))
        throw ParseError("graph_kind does not match the condition");
    lc.spec = DoubleStarSpec(need(j, "m").get<int>(), need(j, "n").get<int>());
    lc.payload = colours_from_json(lc.graph(), lc.mode(), need(j, "payload"));
    return lc;
}

json lemma_report_to_json(const LemmaReport& report) {
    json conditions;
    for (int i = 0; i < 4; ++i) {
        conditions[condition_name(static_cast<LemmaCondition>(i))] =
            json{{"witnessed", report.conditions[i].witnessed},
                 {"colours", report.conditions[i].colours_used}};
    }
    return json{{"kind", "lemma-report"},
                {"m", report.spec.x_size},
                {"n", report.spec.y_size},
                {"conditions", std::move(conditions)},
                {"oracle_checked", report.oracle_checked}};
}

}  // namespace distcol
