#include "distcol/colouring.hpp"

#include <algorithm>

#include "distcol/automorphism.hpp"

namespace distcol {

std::string to_string(const Mode& mode) {
    std::string s = mode.target == Target::vertex ? "vertex" : "edge";
    s += mode.proper() ? "/proper" : "/plain";
    return s;
}

bool is_proper_vertex(const Graph& g, const VertexColouring& c) {
    if (c.size() != g.vertex_count()) throw SizeMismatchError("colouring size != vertex count");
    for (const Edge& e : g.edges())
        if (c.colours[e.u] == c.colours[e.v]) return false;
    return true;
}

bool is_proper_edge(const Graph& g, const EdgeColouring& c) {
    if (c.size() != g.edge_count()) throw SizeMismatchError("colouring size != edge count");
    int m = g.edge_count();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Edge& a = g.edges()[i];
            const Edge& b = g.edges()[j];
            bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
            if (share && c.colours[i] == c.colours[j]) return false;
        }
    return true;
}

bool is_distinguishing(const Graph& g, const VertexColouring& c) {
    if (c.size() != g.vertex_count()) throw SizeMismatchError("colouring size != vertex count");
    return !find_nontrivial_preserving(AutQuery::with_vertex(g, c)).has_value();
}

bool is_distinguishing(const Graph& g, const EdgeColouring& c) {
    if (c.size() != g.edge_count()) throw SizeMismatchError("colouring size != edge count");
    return !find_nontrivial_preserving(AutQuery::with_edge(g, c)).has_value();
}

bool is_suitable(const Graph& g, const VertexColouring& c, const Mode& mode) {
    if (mode.target != Target::vertex) throw SizeMismatchError("vertex colouring with edge mode");
    if (mode.proper() && !is_proper_vertex(g, c)) return false;
    return is_distinguishing(g, c);
}

bool is_suitable(const Graph& g, const EdgeColouring& c, const Mode& mode) {
    if (mode.target != Target::edge) throw SizeMismatchError("edge colouring with vertex mode");
    if (mode.proper() && !is_proper_edge(g, c)) return false;
    return is_distinguishing(g, c);
}

std::vector<Colour> used_colours(const std::vector<Colour>& colours) {
    std::vector<Colour> out(colours);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Colour> used_colours(const VertexColouring& c) { return used_colours(c.colours); }
std::vector<Colour> used_colours(const EdgeColouring& c) { return used_colours(c.colours); }

NormalizeResult normalize(const std::vector<Colour>& colours) {
    NormalizeResult res;
    res.colours.reserve(colours.size());
    for (Colour c : colours) {
        auto [it, fresh] = res.relabel.emplace(c, static_cast<Colour>(res.relabel.size()));
        (void)fresh;
        res.colours.push_back(it->second);
    }
    return res;
}

NormalizeResult normalize(const VertexColouring& c) { return normalize(c.colours); }
NormalizeResult normalize(const EdgeColouring& c) { return normalize(c.colours); }

}  // namespace distcol
