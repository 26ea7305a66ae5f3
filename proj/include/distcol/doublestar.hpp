#pragma once

#include <array>
#include <optional>
#include <vector>

#include "distcol/colouring.hpp"
#include "distcol/graph.hpp"
#include "distcol/reduction.hpp"

namespace distcol {

enum class GraphKind { DS, DC };
enum class LemmaCondition { a, b, c, d };

// a: plain distinguishing vertex colouring of DS
// b: plain distinguishing edge colouring of DS
// c: proper distinguishing vertex colouring of DC
// d: proper distinguishing edge colouring of DS
// Each payload is additionally irreducible in its mode.
Mode condition_mode(LemmaCondition condition);
GraphKind condition_kind(LemmaCondition condition);

// Injective map from the smaller pendant set into the larger one
// (X into Y when x_size <= y_size, otherwise Y into X).
struct InjectionWitness {
    std::vector<int> mapping;

    static InjectionWitness identity(int size) {
        InjectionWitness w;
        w.mapping.resize(size);
        for (int i = 0; i < size; ++i) w.mapping[i] = i;
        return w;
    }
};

struct LemmaColouring {
    GraphKind kind = GraphKind::DS;
    DoubleStarSpec spec{1, 1};
    LemmaCondition condition = LemmaCondition::a;
    std::vector<Colour> payload;  // vertex colours, or colours in canonical edge order

    Graph graph() const;
    Mode mode() const { return condition_mode(condition); }
};

// Re-runs the suitability and irreducibility checks on the payload; throws
// VerificationFailedError when they fail.
void validate_lemma_colouring(const LemmaColouring& lc);

// Condition-a colouring built from an injection between the pendant sets:
// paired pendants share a colour, the rest of the larger side gets fresh
// ones, and the centres take the two smallest large-side colours (equal
// sides) or one shared colour (strict injection). The 1/1 case is found by
// direct search. Output verified before return.
LemmaColouring construct_from_injection(const DoubleStarSpec& spec, const InjectionWitness& f);
LemmaColouring construct_canonical(const DoubleStarSpec& spec);

LemmaColouring transform_a_to_b(const LemmaColouring& lc);
LemmaColouring transform_b_to_a(const LemmaColouring& lc);
LemmaColouring transform_a_to_c(const LemmaColouring& lc);
LemmaColouring transform_c_to_a(const LemmaColouring& lc);
LemmaColouring transform_c_to_d(const LemmaColouring& lc);
LemmaColouring transform_d_to_c(const LemmaColouring& lc);

struct LemmaConditionReport {
    bool witnessed = false;
    int colours_used = 0;
};

struct LemmaReport {
    DoubleStarSpec spec{1, 1};
    std::array<LemmaConditionReport, 4> conditions;  // indexed by LemmaCondition
    bool oracle_checked = false;
};

// Exercises the construction and every transformation for this spec and
// verifies each output; cross-checks against the brute-force automorphism
// list when the graph is small enough.
LemmaReport verify_lemma_equivalence(const DoubleStarSpec& spec);

}  // namespace distcol
