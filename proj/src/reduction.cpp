#include "distcol/reduction.hpp"

#include <algorithm>
#include <string>

namespace distcol {

namespace {

bool colour_used(const std::vector<Colour>& c, Colour a) {
    return std::find(c.begin(), c.end(), a) != c.end();
}

bool suitable_vec(const Graph& g, const std::vector<Colour>& c, const Mode& mode) {
    if (mode.target == Target::vertex) return is_suitable(g, VertexColouring(c), mode);
    return is_suitable(g, EdgeColouring(c), mode);
}

// First properness conflict of a colour vector under the mode, if any.
std::optional<std::vector<Edge>> properness_conflict(const Graph& g, const std::vector<Colour>& c,
                                                     const Mode& mode) {
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

std::optional<Permutation> preserving_witness(const Graph& g, const std::vector<Colour>& c,
                                              const Mode& mode) {
    if (mode.target == Target::vertex)
        return find_nontrivial_preserving(AutQuery::with_vertex(g, VertexColouring(c)));
    return find_nontrivial_preserving(AutQuery::with_edge(g, EdgeColouring(c)));
}

IrreducibilityReport check_irreducible_vec(const Graph& g, const std::vector<Colour>& c,
                                           const Mode& mode) {
    if (!suitable_vec(g, c, mode))
        throw NotSuitableInputError("irreducibility is only defined for suitable colourings");
    IrreducibilityReport rep;
    auto used = used_colours(c);
    for (Colour a : used) {
        for (Colour b : used) {
            if (a == b) continue;
            auto cand = merge_colours(c, a, b);
            MergeRejection rej;
            rej.from = b;
            rej.into = a;
            if (auto conflict = properness_conflict(g, cand, mode)) {
                rej.improper = true;
                rej.conflict = *conflict;
            } else if (auto w = preserving_witness(g, cand, mode)) {
                rej.witness = std::move(w);
            } else {
                rep.irreducible = false;
                rep.counterexample = MergeStep{b, a};
                rep.rejections.clear();
                return rep;
            }
            rep.rejections.push_back(std::move(rej));
        }
    }
    rep.irreducible = true;
    return rep;
}

ReductionTrace reduce_vec(const Graph& g, std::vector<Colour> cur, const Mode& mode) {
    if (!suitable_vec(g, cur, mode))
        throw NotSuitableInputError("reduction requires a suitable starting colouring");
    ReductionTrace trace;
    trace.mode = mode;
    trace.initial = cur;

    auto one_pass = [&]() -> int {
        int applied = 0;
        auto outer = used_colours(cur);
        for (Colour a : outer) {
            if (!colour_used(cur, a)) continue;  // consumed by an earlier merge
            for (Colour b : used_colours(cur)) {
                if (b <= a) continue;
                auto cand = merge_colours(cur, a, b);
                if (suitable_vec(g, cand, mode)) {
                    cur = std::move(cand);
                    trace.steps.push_back({b, a});
                    ++applied;
                }
            }
        }
        return applied;
    };

    one_pass();
    // The single pass is expected to reach a fixpoint; rerun if it ever does not.
    while (!check_irreducible_vec(g, cur, mode).irreducible) {
        ++trace.guard_triggers;
        if (one_pass() == 0)
            throw Error("internal: reducible colouring admitted no downward merge");
    }
    trace.final = cur;
    return trace;
}

}  // namespace

std::vector<Colour> merge_colours(const std::vector<Colour>& c, Colour into, Colour from) {
    std::vector<Colour> out(c);
    for (Colour& x : out)
        if (x == from) x = into;
    return out;
}

VertexColouring merge(const VertexColouring& c, Colour into, Colour from) {
    return VertexColouring(merge_colours(c.colours, into, from));
}

EdgeColouring merge(const EdgeColouring& c, Colour into, Colour from) {
    return EdgeColouring(merge_colours(c.colours, into, from));
}

bool is_irreducible(const Graph& g, const VertexColouring& c, const Mode& mode) {
    if (mode.target != Target::vertex) throw SizeMismatchError("vertex colouring with edge mode");
    return check_irreducible_vec(g, c.colours, mode).irreducible;
}

bool is_irreducible(const Graph& g, const EdgeColouring& c, const Mode& mode) {
    if (mode.target != Target::edge) throw SizeMismatchError("edge colouring with vertex mode");
    return check_irreducible_vec(g, c.colours, mode).irreducible;
}

IrreducibilityReport check_irreducible(const Graph& g, const VertexColouring& c, const Mode& mode) {
    if (mode.target != Target::vertex) throw SizeMismatchError("vertex colouring with edge mode");
    return check_irreducible_vec(g, c.colours, mode);
}

IrreducibilityReport check_irreducible(const Graph& g, const EdgeColouring& c, const Mode& mode) {
    if (mode.target != Target::edge) throw SizeMismatchError("edge colouring with vertex mode");
    return check_irreducible_vec(g, c.colours, mode);
}

ReductionTrace reduce_to_irreducible(const Graph& g, const VertexColouring& c, const Mode& mode) {
    if (mode.target != Target::vertex) throw SizeMismatchError("vertex colouring with edge mode");
    if (c.size() != g.vertex_count()) throw SizeMismatchError("colouring size != vertex count");
    return reduce_vec(g, c.colours, mode);
}

ReductionTrace reduce_to_irreducible(const Graph& g, const EdgeColouring& c, const Mode& mode) {
    if (mode.target != Target::edge) throw SizeMismatchError("edge colouring with vertex mode");
    if (c.size() != g.edge_count()) throw SizeMismatchError("colouring size != edge count");
    return reduce_vec(g, c.colours, mode);
}

std::vector<std::vector<Colour>> replay(const std::vector<Colour>& initial,
                                        const std::vector<MergeStep>& steps) {
    std::vector<std::vector<Colour>> out;
    std::vector<Colour> cur = initial;
    for (const MergeStep& s : steps) {
        if (s.into >= s.from) throw Error("trace step must merge downward");
        if (!colour_used(cur, s.from) || !colour_used(cur, s.into))
            throw Error("trace step names an unused colour");
        cur = merge_colours(cur, s.into, s.from);
        out.push_back(cur);
    }
    return out;
}

std::optional<EdgeObstruction> edge_colouring_obstruction(const Graph& g) {
    for (const Edge& e : g.edges())
        if (g.degree(e.u) == 1 && g.degree(e.v) == 1)
            return EdgeObstruction{Obstruction::isolated_edge, {e.u, e.v}};
    std::vector<int> isolated;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) isolated.push_back(v);
    if (isolated.size() >= 2) return EdgeObstruction{Obstruction::isolated_vertices, isolated};
    return std::nullopt;
}

namespace {

// Answers "is this colouring distinguishing" either with the backtracking
// kernel or against the brute-force automorphism list.
class DistinguishingChecker {
  public:
    DistinguishingChecker(const Graph& g, Backend backend) : g_(g) {
        int n = g.vertex_count();
        if (backend == Backend::auto_) backend = n <= 8 ? Backend::oracle : Backend::kernel;
        use_oracle_ = backend == Backend::oracle;
        if (use_oracle_) {
            for (Permutation& p : all_automorphisms_bruteforce(g))
                if (!p.is_identity()) auts_.push_back(std::move(p));
            edge_perms_.reserve(auts_.size());
            for (const Permutation& p : auts_) {
                std::vector<int> ep(g.edge_count());
                for (int i = 0; i < g.edge_count(); ++i) {
                    const Edge& e = g.edges()[i];
                    ep[i] = *g.edge_index(p(e.u), p(e.v));
                }
                edge_perms_.push_back(std::move(ep));
            }
        }
    }

    bool vertex(const std::vector<Colour>& c) const {
        if (!use_oracle_) return is_distinguishing(g_, VertexColouring(c));
        for (const Permutation& p : auts_) {
            bool preserved = true;
            for (int v = 0; v < g_.vertex_count(); ++v)
                if (c[p(v)] != c[v]) {
                    preserved = false;
                    break;
                }
            if (preserved) return false;
        }
        return true;
    }

    bool edge(const std::vector<Colour>& c) const {
        if (!use_oracle_) return is_distinguishing(g_, EdgeColouring(c));
        for (std::size_t a = 0; a < auts_.size(); ++a) {
            bool preserved = true;
            for (int i = 0; i < g_.edge_count(); ++i)
                if (c[edge_perms_[a][i]] != c[i]) {
                    preserved = false;
                    break;
                }
            if (preserved) return false;
        }
        return true;
    }

  private:
    const Graph& g_;
    bool use_oracle_ = false;
    std::vector<Permutation> auts_;
    std::vector<std::vector<int>> edge_perms_;
};

// Lexicographic enumeration of restricted-growth strings of length `len`
// with exactly `want` classes. `ok(buf, pos)` may veto a prefix; `accept`
// sees complete strings and stops the scan by returning true.
template <typename Accept, typename PrefixOk>
bool rgs_scan(int len, int want, std::vector<Colour>& buf, int pos, int next_fresh,
              long long& tried, Accept&& accept, PrefixOk&& ok) {
    if (pos == len) {
        ++tried;
        return accept(buf);
    }
    int cap = std::min(next_fresh, want - 1);
    for (Colour v = 0; v <= cap; ++v) {
        // enough positions must remain to introduce the missing classes
        int classes_after = std::max(next_fresh, v + 1);
        if (classes_after + (len - pos - 1) < want) continue;
        buf[pos] = v;
        if (!ok(buf, pos)) continue;
        if (rgs_scan(len, want, buf, pos + 1, classes_after, tried, accept, ok)) return true;
    }
    return false;
}

NumberResult search_vertex(const Graph& g, const SearchOptions& opts, bool proper) {
    int n = g.vertex_count();
    if (n > opts.cutoff)
        throw TooLargeForSearchError("graph order " + std::to_string(n) + " exceeds search cutoff " +
                                     std::to_string(opts.cutoff));
    NumberResult res;
    if (n == 0) {
        res.value = 1;
        return res;
    }
    DistinguishingChecker check(g, opts.backend);
    auto ok = [&](const std::vector<Colour>& buf, int pos) {
        if (!proper) return true;
        for (int u : g.neighbours(pos))
            if (u < pos && buf[u] == buf[pos]) return false;
        return true;
    };
    for (int k = 1; k <= n; ++k) {
        std::vector<Colour> buf(n);
        long long tried = 0;
        bool found = rgs_scan(n, k, buf, 0, 0, tried,
                              [&](const std::vector<Colour>& c) { return check.vertex(c); }, ok);
        if (found) {
            res.value = k;
            res.witness = buf;
            return res;
        }
        res.exhausted.push_back({k, tried});
    }
    throw Error("internal: the all-distinct vertex colouring must be distinguishing");
}

NumberResult search_edge(const Graph& g, const SearchOptions& opts, bool proper) {
    int n = g.vertex_count();
    if (n > opts.cutoff)
        throw TooLargeForSearchError("graph order " + std::to_string(n) + " exceeds search cutoff " +
                                     std::to_string(opts.cutoff));
    NumberResult res;
    if (auto obstruction = edge_colouring_obstruction(g)) {
        res.obstruction = std::move(obstruction);
        return res;
    }
    int m = g.edge_count();
    if (m == 0) {
        // no obstruction means at most one vertex in total, so every
        // automorphism is the identity and any palette of one colour works
        res.value = 1;
        return res;
    }
    DistinguishingChecker check(g, opts.backend);
    auto ok = [&](const std::vector<Colour>& buf, int pos) {
        if (!proper) return true;
        const Edge& e = g.edges()[pos];
        for (int j = 0; j < pos; ++j) {
            const Edge& f = g.edges()[j];
            bool share = f.u == e.u || f.u == e.v || f.v == e.u || f.v == e.v;
            if (share && buf[j] == buf[pos]) return false;
        }
        return true;
    };
    for (int k = 1; k <= m; ++k) {
        std::vector<Colour> buf(m);
        long long tried = 0;
        bool found = rgs_scan(m, k, buf, 0, 0, tried,
                              [&](const std::vector<Colour>& c) { return check.edge(c); }, ok);
        if (found) {
            res.value = k;
            res.witness = buf;
            return res;
        }
        res.exhausted.push_back({k, tried});
    }
    throw Error("internal: the all-distinct edge colouring must be distinguishing");
}

}  // namespace

NumberResult distinguishing_number(const Graph& g, const SearchOptions& opts) {
    return search_vertex(g, opts, false);
}

NumberResult distinguishing_chromatic_number(const Graph& g, const SearchOptions& opts) {
    return search_vertex(g, opts, true);
}

NumberResult distinguishing_index(const Graph& g, const SearchOptions& opts) {
    return search_edge(g, opts, false);
}

NumberResult distinguishing_chromatic_index(const Graph& g, const SearchOptions& opts) {
    return search_edge(g, opts, true);
}

NumberResult compute_number(const Graph& g, Variant variant, const SearchOptions& opts) {
    switch (variant) {
        case Variant::d: return distinguishing_number(g, opts);
        case Variant::dc: return distinguishing_chromatic_number(g, opts);
        case Variant::di: return distinguishing_index(g, opts);
        case Variant::dci: return distinguishing_chromatic_index(g, opts);
    }
    throw Error("unknown variant");
}

Mode variant_mode(Variant variant) {
    switch (variant) {
        case Variant::d: return Mode::vertex_plain();
        case Variant::dc: return Mode::vertex_proper();
        case Variant::di: return Mode::edge_plain();
        case Variant::dci: return Mode::edge_proper();
    }
    throw Error("unknown variant");
}

}  // namespace distcol
