#pragma once

#include <optional>
#include <vector>

#include "distcol/colouring.hpp"
#include "distcol/graph.hpp"
#include "distcol/permutation.hpp"

namespace distcol {

// A graph together with an optional colouring the automorphism must preserve.
struct AutQuery {
    Graph graph;
    std::optional<VertexColouring> vertex_constraint;
    std::optional<EdgeColouring> edge_constraint;

    static AutQuery plain(Graph g) { return {std::move(g), std::nullopt, std::nullopt}; }
    static AutQuery with_vertex(Graph g, VertexColouring c) {
        return {std::move(g), std::move(c), std::nullopt};
    }
    static AutQuery with_edge(Graph g, EdgeColouring c) {
        return {std::move(g), std::nullopt, std::move(c)};
    }
};

bool is_automorphism(const Graph& g, const Permutation& p);
bool preserves_vertex_colouring(const Permutation& p, const VertexColouring& c);

// Requires p to be an automorphism of g (throws NotAutomorphismError).
bool preserves_edge_colouring(const Permutation& p, const Graph& g, const EdgeColouring& c);

// Backtracking search for a non-identity automorphism preserving the query's
// constraint. Individualization-refinement prunes the search: both sides of
// the partial map are refined by iterated neighbour-label multisets and a
// branch dies when the refined cells disagree. Branches are explored in
// ascending vertex order, so the returned witness is reproducible.
std::optional<Permutation> find_nontrivial_preserving(const AutQuery& q);

// All automorphisms of g by filtering the n! candidate permutations.
// Guarded to n <= 8 (TooLargeForOracleError). Includes the identity;
// lexicographic image order.
std::vector<Permutation> all_automorphisms_bruteforce(const Graph& g);

}  // namespace distcol
