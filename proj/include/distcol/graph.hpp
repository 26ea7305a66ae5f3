#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distcol/errors.hpp"

namespace distcol {

// Unordered pair of distinct vertex ids, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

// Finite simple undirected graph. Immutable after construction.
class Graph {
  public:
    Graph() = default;

    // Throws OutOfRangeError / SelfLoopError on bad endpoints.
    // Duplicate edges are collapsed; edge order does not matter.
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v]; }
    int degree(int v) const { return degree_[v]; }

    // Edges sorted lexicographically by (u, v); this order indexes edge colourings.
    const std::vector<Edge>& edges() const { return edges_; }

    // Index of {u, v} in edges(), or nullopt when not an edge.
    std::optional<int> edge_index(int u, int v) const;

    const std::vector<int>& neighbours(int v) const { return nbrs_[v]; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    int n_ = 0;
    std::vector<bool> adj_;
    std::vector<Edge> edges_;
    std::vector<int> degree_;
    std::vector<int> edge_idx_;  // n*n, -1 for non-edges
    std::vector<std::vector<int>> nbrs_;
};

// Pendant-set sizes for the double star / double clique builders.
struct DoubleStarSpec {
    int x_size = 1;  // m
    int y_size = 1;  // n

    DoubleStarSpec(int m, int n) : x_size(m), y_size(n) {
        if (m < 1 || n < 1) throw BadSizeError("double star sides must be non-empty");
    }

    int total_vertices() const { return x_size + y_size + 2; }
    int centre_x() const { return x_size; }      // x'
    int centre_y() const { return x_size + 1; }  // y'
    int x_vertex(int i) const { return i; }
    int y_vertex(int j) const { return x_size + 2 + j; }
};

enum class StandardFamily { path, cycle, complete, star };

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);
Graph gen_standard(StandardFamily family, int n);

// Vertices 0..m-1 form X, vertex m is x', vertex m+1 is y', vertices m+2..m+n+1 form Y.
// Edges: x'y', x'x for each x in X, y'y for each y in Y.
Graph gen_double_star(const DoubleStarSpec& spec);

// gen_double_star plus all edges inside X and all edges inside Y.
Graph gen_double_clique(const DoubleStarSpec& spec);

// graph6, short form only (n <= 62): header byte n+63, then the upper triangle
// packed column-major ((0,1),(0,2),(1,2),(0,3),...), 6 bits per character with
// offset 63, zero-padded to a multiple of 6 bits.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

// Edge-list text: comments start with '#', first data line is the vertex
// count, every further line is one "u v" pair (0-based).
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

}  // namespace distcol
