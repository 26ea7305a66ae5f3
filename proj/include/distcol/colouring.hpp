#pragma once

#include <map>
#include <string>
#include <vector>

#include "distcol/graph.hpp"

namespace distcol {

// Colours are non-negative integers; their natural order is the colour order
// used by the merging algorithm.
using Colour = int;

// Vertex colouring: colours[v] is the colour of vertex v.
struct VertexColouring {
    std::vector<Colour> colours;

    VertexColouring() = default;
    explicit VertexColouring(std::vector<Colour> c) : colours(std::move(c)) {}

    int size() const { return static_cast<int>(colours.size()); }
    bool operator==(const VertexColouring&) const = default;
};

// Edge colouring: colours[i] is the colour of g.edges()[i]. Tied to the
// sorted edge order of the graph it colours.
struct EdgeColouring {
    std::vector<Colour> colours;

    EdgeColouring() = default;
    explicit EdgeColouring(std::vector<Colour> c) : colours(std::move(c)) {}

    int size() const { return static_cast<int>(colours.size()); }
    bool operator==(const EdgeColouring&) const = default;
};

enum class Target { vertex, edge };
enum class Properness { plain, proper };

// Which of the four colouring notions is in force.
struct Mode {
    Target target = Target::vertex;
    Properness properness = Properness::plain;

    static Mode vertex_plain() { return {Target::vertex, Properness::plain}; }
    static Mode vertex_proper() { return {Target::vertex, Properness::proper}; }
    static Mode edge_plain() { return {Target::edge, Properness::plain}; }
    static Mode edge_proper() { return {Target::edge, Properness::proper}; }

    bool proper() const { return properness == Properness::proper; }
    bool operator==(const Mode&) const = default;
};

std::string to_string(const Mode& mode);

bool is_proper_vertex(const Graph& g, const VertexColouring& c);
bool is_proper_edge(const Graph& g, const EdgeColouring& c);

// True iff no non-identity automorphism of g preserves c.
bool is_distinguishing(const Graph& g, const VertexColouring& c);
bool is_distinguishing(const Graph& g, const EdgeColouring& c);

// Distinguishing, plus the matching properness predicate in proper modes.
bool is_suitable(const Graph& g, const VertexColouring& c, const Mode& mode);
bool is_suitable(const Graph& g, const EdgeColouring& c, const Mode& mode);

std::vector<Colour> used_colours(const std::vector<Colour>& colours);
std::vector<Colour> used_colours(const VertexColouring& c);
std::vector<Colour> used_colours(const EdgeColouring& c);

struct NormalizeResult {
    std::vector<Colour> colours;
    std::map<Colour, Colour> relabel;  // old colour -> new colour
};

// Relabels colours to 0..k-1 in order of first occurrence. Colour classes
// are unchanged as a partition.
NormalizeResult normalize(const std::vector<Colour>& colours);
NormalizeResult normalize(const VertexColouring& c);
NormalizeResult normalize(const EdgeColouring& c);

}  // namespace distcol
