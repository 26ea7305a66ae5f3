#pragma once

#include "distcol/json_io.hpp"

namespace distcol {

enum class OraclePolicy { on, off, auto_ };

// Cross-check searches and verdicts against the brute-force automorphism
// list: `on` always (fails above the oracle bound), `auto_` for n <= 7.
bool oracle_enabled(OraclePolicy policy, const Graph& g);

// Suitability check of one colouring. Edge modes report the structural
// impossibility instead when the graph admits no distinguishing edge
// colouring at all.
json certify_check(const Graph& g, const Mode& mode, const std::vector<Colour>& colours,
                   OraclePolicy oracle = OraclePolicy::auto_);

// Reduction trace plus the merge-exhaustion table for the final colouring.
json certify_reduce(const Graph& g, const Mode& mode, const std::vector<Colour>& colours);

// Minimal colour count for the variant, with witness and per-k candidate
// counts for the exhausted colour counts below it.
json certify_number(const Graph& g, Variant variant, const SearchOptions& opts,
                    OraclePolicy oracle = OraclePolicy::auto_);

json certify_lemma_witness(const LemmaColouring& lc);

// Re-derives a certificate's verdict from its own payload. Witness rows are
// checked directly; universal claims rerun the deterministic checker on the
// embedded subject. Returns false when any claim fails to re-validate.
bool recheck_certificate(const json& cert);

}  // namespace distcol
