#include "distcol/graph.hpp"

#include <algorithm>
#include <sstream>

namespace distcol {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) : n_(vertex_count) {
    if (n_ < 0) throw BadSizeError("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n_) * n_, false);
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n_ || b < 0 || b >= n_)
            throw OutOfRangeError("edge endpoint " + std::to_string(a < 0 || a >= n_ ? a : b) +
                                  " outside 0.." + std::to_string(n_ - 1));
        if (a == b) throw SelfLoopError("self-loop at vertex " + std::to_string(a));
        adj_[static_cast<std::size_t>(a) * n_ + b] = true;
        adj_[static_cast<std::size_t>(b) * n_ + a] = true;
    }
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) edges_.emplace_back(u, v);
    degree_.assign(n_, 0);
    edge_idx_.assign(static_cast<std::size_t>(n_) * n_, -1);
    nbrs_.assign(n_, {});
    for (int i = 0; i < edge_count(); ++i) {
        const Edge& e = edges_[i];
        ++degree_[e.u];
        ++degree_[e.v];
        edge_idx_[static_cast<std::size_t>(e.u) * n_ + e.v] = i;
        edge_idx_[static_cast<std::size_t>(e.v) * n_ + e.u] = i;
        nbrs_[e.u].push_back(e.v);
        nbrs_[e.v].push_back(e.u);
    }
    for (auto& nb : nbrs_) std::sort(nb.begin(), nb.end());
}

std::optional<int> Graph::edge_index(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return std::nullopt;
    int i = edge_idx_[static_cast<std::size_t>(u) * n_ + v];
    if (i < 0) return std::nullopt;
    return i;
}

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    return Graph(vertex_count, edges);
}

Graph gen_standard(StandardFamily family, int n) {
    if (n < 1) throw BadSizeError("need at least one vertex");
    std::vector<std::pair<int, int>> edges;
    switch (family) {
        case StandardFamily::path:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case StandardFamily::cycle:
            if (n < 3) throw BadSizeError("cycle needs at least 3 vertices");
            for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
            break;
        case StandardFamily::complete:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            break;
        case StandardFamily::star:
            for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
            break;
    }
    return Graph(n, edges);
}

Graph gen_double_star(const DoubleStarSpec& spec) {
    std::vector<std::pair<int, int>> edges;
    edges.emplace_back(spec.centre_x(), spec.centre_y());
    for (int i = 0; i < spec.x_size; ++i) edges.emplace_back(spec.x_vertex(i), spec.centre_x());
    for (int j = 0; j < spec.y_size; ++j) edges.emplace_back(spec.centre_y(), spec.y_vertex(j));
    return Graph(spec.total_vertices(), edges);
}

Graph gen_double_clique(const DoubleStarSpec& spec) {
    std::vector<std::pair<int, int>> edges;
    edges.emplace_back(spec.centre_x(), spec.centre_y());
    for (int i = 0; i < spec.x_size; ++i) edges.emplace_back(spec.x_vertex(i), spec.centre_x());
    for (int j = 0; j < spec.y_size; ++j) edges.emplace_back(spec.centre_y(), spec.y_vertex(j));
    for (int i = 0; i < spec.x_size; ++i)
        for (int k = i + 1; k < spec.x_size; ++k) edges.emplace_back(spec.x_vertex(i), spec.x_vertex(k));
    for (int j = 0; j < spec.y_size; ++j)
        for (int k = j + 1; k < spec.y_size; ++k) edges.emplace_back(spec.y_vertex(j), spec.y_vertex(k));
    return Graph(spec.total_vertices(), edges);
}

Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw MalformedGraph6Error("empty graph6 string");
    for (char ch : text)
        if (ch < 63 || ch > 126)
            throw MalformedGraph6Error("character out of graph6 range");
    int n = text[0] - 63;
    if (n > 62) throw MalformedGraph6Error("only short-form graph6 (n <= 62) supported");
    std::size_t pair_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t expected = 1 + (pair_bits + 5) / 6;
    if (text.size() != expected)
        throw MalformedGraph6Error("graph6 body has wrong length for n = " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int value = text[1 + bit / 6] - 63;
            if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    // padding bits must be zero in canonical graph6
    for (; bit < (expected - 1) * 6; ++bit) {
        int value = text[1 + bit / 6] - 63;
        if ((value >> (5 - bit % 6)) & 1) throw MalformedGraph6Error("nonzero padding bits");
    }
    return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw TooLargeError("graph6 short form requires n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int value = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            value = (value << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + 63));
                value = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool have_n = false;
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        if (!have_n) {
            if (fields >> n) {
                int extra;
                if (fields >> extra) throw ParseError("line " + std::to_string(lineno) + ": expected a single vertex count");
                have_n = true;
            }
            continue;
        }
        int u, v;
        if (fields >> u) {
            if (!(fields >> v)) throw ParseError("line " + std::to_string(lineno) + ": expected \"u v\"");
            int extra;
            if (fields >> extra) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens after edge");
            edges.emplace_back(u, v);
        }
    }
    if (!have_n) throw ParseError("edge list is missing the vertex count line");
    return Graph(n, edges);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace distcol
