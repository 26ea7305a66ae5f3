#pragma once

#include "json.hpp"

#include "distcol/colouring.hpp"
#include "distcol/doublestar.hpp"
#include "distcol/graph.hpp"
#include "distcol/permutation.hpp"
#include "distcol/reduction.hpp"

namespace distcol {

using nlohmann::json;

// Schemas:
//   graph            {"n": int, "edges": [[u,v],...], "graph6": str when n <= 62}
//   mode             {"target": "vertex"|"edge", "properness": "plain"|"proper"}
//   vertex colours   [c0, c1, ...] indexed by vertex
//   edge colours     [[u, v, c], ...] with u < v, in sorted edge order
//   permutation      [images...]

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json mode_to_json(const Mode& mode);
Mode mode_from_json(const json& j);

json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

// Colour vectors are serialized per mode: a plain array for vertex
// colourings, [u, v, colour] triples for edge colourings.
json colours_to_json(const Graph& g, const Mode& mode, const std::vector<Colour>& colours);
std::vector<Colour> colours_from_json(const Graph& g, const Mode& mode, const json& j);

json trace_to_json(const Graph& g, const ReductionTrace& trace);

json obstruction_to_json(const EdgeObstruction& o);

json lemma_colouring_to_json(const LemmaColouring& lc);
LemmaColouring lemma_colouring_from_json(const json& j);

json lemma_report_to_json(const LemmaReport& report);

}  // namespace distcol
