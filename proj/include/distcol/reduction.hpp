#pragma once

#include <optional>
#include <vector>

#include "distcol/automorphism.hpp"
#include "distcol/colouring.hpp"
#include "distcol/graph.hpp"

namespace distcol {

// One downward merge: every occurrence of from_colour becomes into_colour.
struct MergeStep {
    Colour from = 0;
    Colour into = 0;
    bool operator==(const MergeStep&) const = default;
};

// Why a candidate merge was rejected while certifying irreducibility.
struct MergeRejection {
    Colour from = 0;
    Colour into = 0;
    bool improper = false;                 // merged colouring fails properness
    std::vector<Edge> conflict;            // offending edge (vertex) or edge pair (edge)
    std::optional<Permutation> witness;    // preserving automorphism otherwise
};

struct IrreducibilityReport {
    bool irreducible = false;
    std::vector<MergeRejection> rejections;      // complete table when irreducible
    std::optional<MergeStep> counterexample;     // first suitable merge otherwise
};

struct ReductionTrace {
    Mode mode;
    std::vector<Colour> initial;
    std::vector<MergeStep> steps;
    std::vector<Colour> final;
    int guard_triggers = 0;
};

VertexColouring merge(const VertexColouring& c, Colour into, Colour from);
EdgeColouring merge(const EdgeColouring& c, Colour into, Colour from);
std::vector<Colour> merge_colours(const std::vector<Colour>& c, Colour into, Colour from);

// Requires a suitable input (NotSuitableInputError). True iff no ordered pair
// of distinct used colours merges into a still-suitable colouring.
bool is_irreducible(const Graph& g, const VertexColouring& c, const Mode& mode);
bool is_irreducible(const Graph& g, const EdgeColouring& c, const Mode& mode);

// Same check, but with the full per-pair evidence table.
IrreducibilityReport check_irreducible(const Graph& g, const VertexColouring& c, const Mode& mode);
IrreducibilityReport check_irreducible(const Graph& g, const EdgeColouring& c, const Mode& mode);

// Greedy downward merging: for each used colour a in ascending order, try to
// merge every remaining larger colour b into a, keeping the merge only when
// the result stays suitable. Afterwards irreducibility is asserted; if the
// assertion ever failed the pass would rerun (guard_triggers counts reruns,
// expected to stay 0).
ReductionTrace reduce_to_irreducible(const Graph& g, const VertexColouring& c, const Mode& mode);
ReductionTrace reduce_to_irreducible(const Graph& g, const EdgeColouring& c, const Mode& mode);

// All intermediate colour vectors, including the final one. Throws if a step
// names an unused colour.
std::vector<std::vector<Colour>> replay(const std::vector<Colour>& initial,
                                        const std::vector<MergeStep>& steps);

enum class Backend { auto_, kernel, oracle };

struct SearchOptions {
    int cutoff = 10;                    // refuse minimal-colour searches above this order
    Backend backend = Backend::auto_;   // auto: oracle for n <= 8, kernel above
};

enum class Obstruction { isolated_edge, isolated_vertices };

// Structural reason a graph admits no distinguishing edge colouring, if any:
// a K_2 component, or two or more isolated vertices.
struct EdgeObstruction {
    Obstruction kind;
    std::vector<int> vertices;  // the isolated edge's endpoints, or the isolated vertices
};
std::optional<EdgeObstruction> edge_colouring_obstruction(const Graph& g);

struct KExhaustion {
    int colours = 0;
    long long candidates = 0;  // normalized colourings tested at this colour count
};

struct NumberResult {
    std::optional<int> value;                  // nullopt: no such colouring exists
    std::optional<EdgeObstruction> obstruction;
    std::vector<Colour> witness;               // vertex order, or canonical edge order
    std::vector<KExhaustion> exhausted;        // colour counts ruled out below value
};

// Exact minimal colour counts by exhaustive search over normalized
// colourings (first-occurrence order), ascending; the witness is the
// lexicographically least at the minimal count.
NumberResult distinguishing_number(const Graph& g, const SearchOptions& opts = {});
NumberResult distinguishing_index(const Graph& g, const SearchOptions& opts = {});
NumberResult distinguishing_chromatic_number(const Graph& g, const SearchOptions& opts = {});
NumberResult distinguishing_chromatic_index(const Graph& g, const SearchOptions& opts = {});

enum class Variant { d, dc, di, dci };

NumberResult compute_number(const Graph& g, Variant variant, const SearchOptions& opts = {});
Mode variant_mode(Variant variant);

}  // namespace distcol
