#include "distcol/certificates.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "distcol/automorphism.hpp"

namespace distcol {

namespace {

json subject_json(const Graph& g, const Mode& mode) {
    return json{{"graph", graph_to_json(g)}, {"mode", mode_to_json(mode)}};
}

std::optional<Permutation> preserving_witness(const Graph& g, const Mode& mode,
                                              const std::vector<Colour>& colours) {
    if (mode.target == Target::vertex)
        return find_nontrivial_preserving(AutQuery::with_vertex(g, VertexColouring(colours)));
    return find_nontrivial_preserving(AutQuery::with_edge(g, EdgeColouring(colours)));
}

// Brute-force double check of a "no preserving automorphism" verdict.
void oracle_check_distinguishing(const Graph& g, const Mode& mode,
                                 const std::vector<Colour>& colours, bool expect) {
    bool found = false;
    for (const Permutation& p : all_automorphisms_bruteforce(g)) {
        if (p.is_identity()) continue;
        bool preserved = mode.target == Target::vertex
                             ? preserves_vertex_colouring(p, VertexColouring(colours))
                             : preserves_edge_colouring(p, g, EdgeColouring(colours));
        if (preserved) {
            found = true;
            break;
        }
    }
    if (found == expect)
        throw Error("internal: oracle disagrees with the search kernel");
}

std::optional<std::vector<Edge>> properness_conflict(const Graph& g, const Mode& mode,
                                                     const std::vector<Colour>& c) {
    if (!mode.proper()) return std::nullopt;
    if (mode.target == Target::vertex) {
        for (const Edge& e : g.edges())
            if (c[e.u] == c[e.v]) return std::vector<Edge>{e};
        return std::nullopt;
    }
    int m = g.edge_count();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Edge& a = g.edges()[i];
            const Edge& b = g.edges()[j];
            bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
            if (share && c[i] == c[j]) return std::vector<Edge>{a, b};
        }
    return std::nullopt;
}

json edges_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

json impossible_certificate(const Graph& g, const Mode& mode, const EdgeObstruction& o) {
    return json{{"kind", "impossible"},
                {"subject", subject_json(g, mode)},
                {"verdict", false},
                {"obstruction", obstruction_to_json(o)}};
}

}  // namespace

bool oracle_enabled(OraclePolicy policy, const Graph& g) {
    switch (policy) {
        case OraclePolicy::on:
            if (g.vertex_count() > 8)
                throw TooLargeForOracleError("oracle cross-check requires n <= 8");
            return true;
        case OraclePolicy::off: return false;
        case OraclePolicy::auto_: return g.vertex_count() <= 7;
    }
    return false;
}

json certify_check(const Graph& g, const Mode& mode, const std::vector<Colour>& colours,
                   OraclePolicy oracle) {
    if (mode.target == Target::edge) {
        if (auto o = edge_colouring_obstruction(g)) return impossible_certificate(g, mode, *o);
    }
    json cert{{"kind", "distinguishing"}, {"subject", subject_json(g, mode)}};
    cert["subject"]["colouring"] = colours_to_json(g, mode, colours);
    if (auto conflict = properness_conflict(g, mode, colours)) {
        cert["verdict"] = false;
        cert["evidence"] = json{{"improper", edges_json(*conflict)}};
        return cert;
    }
    auto witness = preserving_witness(g, mode, colours);
    if (oracle_enabled(oracle, g))
        oracle_check_distinguishing(g, mode, colours, !witness.has_value());
    if (witness) {
        cert["verdict"] = false;
        cert["evidence"] = json{{"witness", permutation_to_json(*witness)}};
    } else {
        cert["verdict"] = true;
        cert["evidence"] = json::object();
    }
    return cert;
}

json certify_reduce(const Graph& g, const Mode& mode, const std::vector<Colour>& colours) {
    ReductionTrace trace =
        mode.target == Target::vertex
            ? reduce_to_irreducible(g, VertexColouring(colours), mode)
            : reduce_to_irreducible(g, EdgeColouring(colours), mode);
    IrreducibilityReport report =
        mode.target == Target::vertex
            ? check_irreducible(g, VertexColouring(trace.final), mode)
            : check_irreducible(g, EdgeColouring(trace.final), mode);
    json exhaustion = json::array();
    for (const MergeRejection& r : report.rejections) {
        json row{{"from", r.from}, {"into", r.into}};
        if (r.improper) {
            row["outcome"] = "improper";
            row["edges"] = edges_json(r.conflict);
        } else {
            row["outcome"] = "preserved";
            row["witness"] = permutation_to_json(*r.witness);
        }
        exhaustion.push_back(std::move(row));
    }
    json cert{{"kind", "irreducible"},
              {"subject", subject_json(g, mode)},
              {"verdict", true},
              {"trace", trace_to_json(g, trace)},
              {"exhaustion", std::move(exhaustion)},
              {"guard_triggers", trace.guard_triggers}};
    cert["subject"]["colouring"] = colours_to_json(g, mode, trace.final);
    return cert;
}

json certify_number(const Graph& g, Variant variant, const SearchOptions& opts,
                    OraclePolicy oracle) {
    static const char* names[] = {"d", "dc", "di", "dci"};
    Mode mode = variant_mode(variant);
    bool cross = oracle_enabled(oracle, g);
    SearchOptions primary = opts;
    NumberResult res;
    if (cross) {
        primary.backend = Backend::kernel;
        res = compute_number(g, variant, primary);
        SearchOptions alt = opts;
        alt.backend = Backend::oracle;
        NumberResult check = compute_number(g, variant, alt);
        if (check.value != res.value || check.witness != res.witness)
            throw Error("internal: oracle search disagrees with the kernel search");
    } else {
        res = compute_number(g, variant, primary);
    }
    json cert{{"kind", "minimal-number"},
              {"variant", names[static_cast<int>(variant)]},
              {"subject", subject_json(g, mode)},
              {"oracle_cross_checked", cross}};
    if (res.obstruction) {
        cert["value"] = nullptr;
        cert["obstruction"] = obstruction_to_json(*res.obstruction);
        return cert;
    }
    cert["value"] = *res.value;
    cert["witness"] = colours_to_json(g, mode, res.witness);
    json exhausted = json::array();
    for (const KExhaustion& e : res.exhausted)
        exhausted.push_back({{"colours", e.colours}, {"candidates", e.candidates}});
    cert["exhausted"] = std::move(exhausted);
    return cert;
}

json certify_lemma_witness(const LemmaColouring& lc) { return lemma_colouring_to_json(lc); }

namespace {

bool recheck_distinguishing(const json& cert) {
    const json& subject = cert.at("subject");
    Graph g = graph_from_json(subject.at("graph"));
    Mode mode = mode_from_json(subject.at("mode"));
    std::vector<Colour> colours = colours_from_json(g, mode, subject.at("colouring"));
    bool verdict = cert.at("verdict").get<bool>();
    const json& evidence = cert.at("evidence");
    if (!verdict && evidence.contains("improper")) {
        if (!mode.proper()) return false;
        auto conflict = properness_conflict(g, mode, colours);
        return conflict.has_value();
    }
    if (!verdict && evidence.contains("witness")) {
        Permutation p = permutation_from_json(evidence.at("witness"));
        if (p.is_identity() || !is_automorphism(g, p)) return false;
        return mode.target == Target::vertex
                   ? preserves_vertex_colouring(p, VertexColouring(colours))
                   : preserves_edge_colouring(p, g, EdgeColouring(colours));
    }
    if (!verdict) return false;
    if (mode.target == Target::vertex) return is_suitable(g, VertexColouring(colours), mode);
    return is_suitable(g, EdgeColouring(colours), mode);
}

bool recheck_impossible(const json& cert) {
    Graph g = graph_from_json(cert.at("subject").at("graph"));
    auto o = edge_colouring_obstruction(g);
    if (!o) return false;
    std::string kind = cert.at("obstruction").at("kind").get<std::string>();
    return kind == (o->kind == Obstruction::isolated_edge ? "isolated-edge" : "isolated-vertices");
}

bool recheck_irreducible(const json& cert) {
    const json& subject = cert.at("subject");
    Graph g = graph_from_json(subject.at("graph"));
    Mode mode = mode_from_json(subject.at("mode"));
    const json& trace = cert.at("trace");
    std::vector<Colour> initial = colours_from_json(g, mode, trace.at("initial"));
    std::vector<Colour> final_colours = colours_from_json(g, mode, trace.at("final"));

    auto suitable = [&](const std::vector<Colour>& c) {
        return mode.target == Target::vertex ? is_suitable(g, VertexColouring(c), mode)
                                             : is_suitable(g, EdgeColouring(c), mode);
    };
    if (!suitable(initial)) return false;
    std::vector<MergeStep> steps;
    for (const json& s : trace.at("steps"))
        steps.push_back({s.at("from").get<Colour>(), s.at("into").get<Colour>()});
    std::vector<std::vector<Colour>> intermediates;
    try {
        intermediates = replay(initial, steps);
    } catch (const Error&) {
        return false;
    }
    std::vector<Colour> cur = initial;
    for (const auto& inter : intermediates) {
        if (!suitable(inter)) return false;
        cur = inter;
    }
    if (cur != final_colours) return false;

    // the exhaustion table must cover every ordered pair of used colours,
    // each row re-checked from its own evidence
    std::set<std::pair<Colour, Colour>> covered;
    for (const json& row : cert.at("exhaustion")) {
        Colour from = row.at("from").get<Colour>();
        Colour into = row.at("into").get<Colour>();
        std::vector<Colour> merged = merge_colours(final_colours, into, from);
        std::string outcome = row.at("outcome").get<std::string>();
        if (outcome == "improper") {
            if (!properness_conflict(g, mode, merged)) return false;
        } else if (outcome == "preserved") {
            Permutation p = permutation_from_json(row.at("witness"));
            if (p.is_identity() || !is_automorphism(g, p)) return false;
            bool preserved = mode.target == Target::vertex
                                 ? preserves_vertex_colouring(p, VertexColouring(merged))
                                 : preserves_edge_colouring(p, g, EdgeColouring(merged));
            if (!preserved) return false;
        } else {
            return false;
        }
        covered.emplace(into, from);
    }
    auto used = used_colours(final_colours);
    for (Colour a : used)
        for (Colour b : used)
            if (a != b && !covered.count({a, b})) return false;
    return true;
}

bool recheck_minimal_number(const json& cert) {
    const json& subject = cert.at("subject");
    Graph g = graph_from_json(subject.at("graph"));
    Mode mode = mode_from_json(subject.at("mode"));
    if (cert.at("value").is_null()) {
        auto o = edge_colouring_obstruction(g);
        return mode.target == Target::edge && o.has_value();
    }
    int value = cert.at("value").get<int>();
    if (mode.target == Target::edge && edge_colouring_obstruction(g)) return false;
    std::vector<Colour> witness = colours_from_json(g, mode, cert.at("witness"));
    int len = mode.target == Target::vertex ? g.vertex_count() : g.edge_count();
    if (len == 0) return value == 1 && witness.empty();
    if (static_cast<int>(used_colours(witness).size()) != value) return false;
    return mode.target == Target::vertex ? is_suitable(g, VertexColouring(witness), mode)
                                         : is_suitable(g, EdgeColouring(witness), mode);
}

bool recheck_lemma_witness(const json& cert) {
    LemmaColouring lc = lemma_colouring_from_json(cert);
    try {
        validate_lemma_colouring(lc);
    } catch (const VerificationFailedError&) {
        return false;
    }
    return true;
}

bool recheck_lemma_report(const json& cert) {
    DoubleStarSpec spec(cert.at("m").get<int>(), cert.at("n").get<int>());
    LemmaReport report = verify_lemma_equivalence(spec);
    for (const LemmaConditionReport& c : report.conditions)
        if (!c.witnessed) return false;
    return true;
}

}  // namespace

bool recheck_certificate(const json& cert) {
    std::string kind = cert.at("kind").get<std::string>();
    if (kind == "distinguishing") return recheck_distinguishing(cert);
    if (kind == "impossible") return recheck_impossible(cert);
    if (kind == "irreducible") return recheck_irreducible(cert);
    if (kind == "minimal-number") return recheck_minimal_number(cert);
    if (kind == "lemma-witness") return recheck_lemma_witness(cert);
    if (kind == "lemma-report") return recheck_lemma_report(cert);
    throw ParseError("unknown certificate kind \"" + kind + "\"");
}

}  // namespace distcol
