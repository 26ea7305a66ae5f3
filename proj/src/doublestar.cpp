#include "distcol/doublestar.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "distcol/automorphism.hpp"

namespace distcol {

Mode condition_mode(LemmaCondition condition) {
    switch (condition) {
        case LemmaCondition::a: return Mode::vertex_plain();
        case LemmaCondition::b: return Mode::edge_plain();
        case LemmaCondition::c: return Mode::vertex_proper();
        case LemmaCondition::d: return Mode::edge_proper();
    }
    throw Error("unknown condition");
}

GraphKind condition_kind(LemmaCondition condition) {
    return condition == LemmaCondition::c ? GraphKind::DC : GraphKind::DS;
}

Graph LemmaColouring::graph() const {
    return kind == GraphKind::DS ? gen_double_star(spec) : gen_double_clique(spec);
}

namespace {

char condition_letter(LemmaCondition c) {
    return static_cast<char>('a' + static_cast<int>(c));
}

bool payload_ok(const Graph& g, const Mode& mode, const std::vector<Colour>& payload) {
    if (mode.target == Target::vertex) {
        VertexColouring c(payload);
        return is_suitable(g, c, mode) && is_irreducible(g, c, mode);
    }
    EdgeColouring c(payload);
    return is_suitable(g, c, mode) && is_irreducible(g, c, mode);
}

LemmaColouring verified(const DoubleStarSpec& spec, LemmaCondition condition,
                        std::vector<Colour> payload) {
    LemmaColouring lc{condition_kind(condition), spec, condition, std::move(payload)};
    validate_lemma_colouring(lc);
    return lc;
}

void expect_condition(const LemmaColouring& lc, LemmaCondition want) {
    if (lc.condition != want)
        throw Error(std::string("transform expects a condition-") + condition_letter(want) +
                    " colouring");
    validate_lemma_colouring(lc);
}

Colour fresh_colour(const std::vector<Colour>& payload, int above = 0) {
    Colour mx = -1;
    for (Colour c : payload) mx = std::max(mx, c);
    return mx + 1 + above;
}

std::set<Colour> colour_set(const std::vector<Colour>& payload, const std::vector<int>& positions) {
    std::set<Colour> out;
    for (int p : positions) out.insert(payload[p]);
    return out;
}

std::vector<int> x_vertices(const DoubleStarSpec& s) {
    std::vector<int> out;
    for (int i = 0; i < s.x_size; ++i) out.push_back(s.x_vertex(i));
    return out;
}

std::vector<int> y_vertices(const DoubleStarSpec& s) {
    std::vector<int> out;
    for (int j = 0; j < s.y_size; ++j) out.push_back(s.y_vertex(j));
    return out;
}

// Edge indices on DS(spec) in its canonical edge order.
struct DsEdges {
    std::vector<int> pend_x;  // x_i x'
    std::vector<int> pend_y;  // y' y_j
    int centre;               // x' y'
};

DsEdges ds_edges(const Graph& ds, const DoubleStarSpec& s) {
    DsEdges e;
    for (int i = 0; i < s.x_size; ++i) e.pend_x.push_back(*ds.edge_index(s.x_vertex(i), s.centre_x()));
    for (int j = 0; j < s.y_size; ++j) e.pend_y.push_back(*ds.edge_index(s.centre_y(), s.y_vertex(j)));
    e.centre = *ds.edge_index(s.centre_x(), s.centre_y());
    return e;
}

// Smallest element of lhs \ rhs, if any.
std::optional<Colour> min_difference(const std::set<Colour>& lhs, const std::set<Colour>& rhs) {
    for (Colour c : lhs)
        if (!rhs.count(c)) return c;
    return std::nullopt;
}

// Exhaustive lexicographic hunt for the first suitable irreducible
// colouring; used for the 1/1 double star, whose sides are too small for
// the pairing construction.
std::vector<Colour> smallest_suitable_irreducible(const Graph& g, const Mode& mode) {
    int len = mode.target == Target::vertex ? g.vertex_count() : g.edge_count();
    for (int k = 1; k <= len; ++k) {
        std::vector<Colour> buf(len, 0);
        // restricted-growth strings with exactly k classes
        auto scan = [&](auto&& self, int pos, int classes) -> bool {
            if (pos == len) return classes == k && payload_ok(g, mode, buf);
            int cap = std::min(classes, k - 1);
            for (Colour v = 0; v <= cap; ++v) {
                buf[pos] = v;
                if (self(self, pos + 1, std::max(classes, v + 1))) return true;
            }
            return false;
        };
        if (scan(scan, 0, 0)) return buf;
    }
    throw VerificationFailedError("no suitable irreducible colouring found");
}

}  // namespace

void validate_lemma_colouring(const LemmaColouring& lc) {
    Graph g = lc.graph();
    Mode mode = lc.mode();
    int want = mode.target == Target::vertex ? g.vertex_count() : g.edge_count();
    if (static_cast<int>(lc.payload.size()) != want)
        throw SizeMismatchError("lemma colouring payload has wrong length");
    if (!payload_ok(g, mode, lc.payload))
        throw VerificationFailedError(std::string("condition-") + condition_letter(lc.condition) +
                                      " payload is not a suitable irreducible colouring");
}

LemmaColouring construct_from_injection(const DoubleStarSpec& spec, const InjectionWitness& f) {
    int m = spec.x_size, n = spec.y_size;
    if (m > n) {
        // swap the roles of the two sides and map the result back
        DoubleStarSpec swapped(n, m);
        LemmaColouring inner = construct_from_injection(swapped, f);
        std::vector<Colour> payload(spec.total_vertices());
        for (int i = 0; i < n; ++i) payload[spec.y_vertex(i)] = inner.payload[swapped.x_vertex(i)];
        for (int j = 0; j < m; ++j) payload[spec.x_vertex(j)] = inner.payload[swapped.y_vertex(j)];
        payload[spec.centre_y()] = inner.payload[swapped.centre_x()];
        payload[spec.centre_x()] = inner.payload[swapped.centre_y()];
        return verified(spec, LemmaCondition::a, std::move(payload));
    }
    if (static_cast<int>(f.mapping.size()) != m)
        throw SizeMismatchError("injection must be total on the smaller side");
    std::vector<bool> hit(n, false);
    for (int img : f.mapping) {
        if (img < 0 || img >= n) throw OutOfRangeError("injection image outside the larger side");
        if (hit[img]) throw SizeMismatchError("mapping is not injective");
        hit[img] = true;
    }
    if (m == 1 && n == 1) {
        Graph g = gen_double_star(spec);
        return verified(spec, LemmaCondition::a,
                        smallest_suitable_irreducible(g, Mode::vertex_plain()));
    }
    std::vector<Colour> payload(spec.total_vertices(), -1);
    for (int i = 0; i < m; ++i) {
        payload[spec.x_vertex(i)] = i;
        payload[spec.y_vertex(f.mapping[i])] = i;
    }
    Colour next = m;
    for (int j = 0; j < n; ++j)
        if (payload[spec.y_vertex(j)] < 0) payload[spec.y_vertex(j)] = next++;
    if (m == n) {
        // the two smallest large-side colours, which exist since n >= 2 here
        payload[spec.centre_x()] = 0;
        payload[spec.centre_y()] = 1;
    } else {
        payload[spec.centre_x()] = payload[spec.centre_y()] = 0;
    }
    return verified(spec, LemmaCondition::a, std::move(payload));
}

LemmaColouring construct_canonical(const DoubleStarSpec& spec) {
    return construct_from_injection(spec,
                                    InjectionWitness::identity(std::min(spec.x_size, spec.y_size)));
}

LemmaColouring transform_a_to_b(const LemmaColouring& lc) {
    expect_condition(lc, LemmaCondition::a);
    const DoubleStarSpec& s = lc.spec;
    Graph ds = gen_double_star(s);
    DsEdges idx = ds_edges(ds, s);
    Mode mode = condition_mode(LemmaCondition::b);

    std::vector<Colour> base(ds.edge_count());
    for (int i = 0; i < s.x_size; ++i) base[idx.pend_x[i]] = lc.payload[s.x_vertex(i)];
    for (int j = 0; j < s.y_size; ++j) base[idx.pend_y[j]] = lc.payload[s.y_vertex(j)];

    auto try_centres = [&](std::vector<Colour> edges) -> std::optional<std::vector<Colour>> {
        std::vector<Colour> pendants(edges);
        pendants.erase(pendants.begin() + idx.centre);
        for (Colour g : used_colours(pendants)) {
            edges[idx.centre] = g;
            if (payload_ok(ds, mode, edges)) return edges;
        }
        return std::nullopt;
    };

    if (auto found = try_centres(base)) return verified(s, LemmaCondition::b, std::move(*found));
    // Equal-sized sides can mirror the whole pendant pattern, which no centre
    // colour can break; recolouring one pendant with a fresh colour does.
    for (int i = 0; i < s.x_size; ++i) {
        std::vector<Colour> alt(base);
        alt[idx.pend_x[i]] = fresh_colour(base);
        if (auto found = try_centres(alt)) return verified(s, LemmaCondition::b, std::move(*found));
    }
    throw VerificationFailedError("no verified edge colouring derived from condition a");
}

LemmaColouring transform_b_to_a(const LemmaColouring& lc) {
    expect_condition(lc, LemmaCondition::b);
    const DoubleStarSpec& s = lc.spec;
    Graph ds = gen_double_star(s);
    DsEdges idx = ds_edges(ds, s);
    Mode mode = condition_mode(LemmaCondition::a);

    std::vector<Colour> payload(s.total_vertices());
    for (int i = 0; i < s.x_size; ++i) payload[s.x_vertex(i)] = lc.payload[idx.pend_x[i]];
    for (int j = 0; j < s.y_size; ++j) payload[s.y_vertex(j)] = lc.payload[idx.pend_y[j]];

    bool both_single = s.x_size == 1 && s.y_size == 1;
    auto candidates = used_colours(lc.payload);
    for (Colour cx : candidates) {
        for (Colour cy : candidates) {
            if (both_single ? cx != cy : cx == cy) continue;
            payload[s.centre_x()] = cx;
            payload[s.centre_y()] = cy;
            if (payload_ok(ds, mode, payload)) return verified(s, LemmaCondition::a, payload);
        }
    }
    throw VerificationFailedError("no verified vertex colouring derived from condition b");
}

LemmaColouring transform_a_to_c(const LemmaColouring& lc) {
    expect_condition(lc, LemmaCondition::a);
    const DoubleStarSpec& s = lc.spec;

    std::vector<Colour> payload(lc.payload);
    auto cx = colour_set(payload, x_vertices(s));
    auto cy = colour_set(payload, y_vertices(s));
    if (cx == cy) {
        payload[s.centre_x()] = fresh_colour(lc.payload);
        payload[s.centre_y()] = fresh_colour(lc.payload, 1);
    } else if (auto pink = min_difference(cx, cy)) {
        payload[s.centre_y()] = *pink;
        auto other = min_difference(cy, cx);
        payload[s.centre_x()] = other ? *other : fresh_colour(lc.payload);
    } else {
        // mirrored case: the only difference colours lie on the Y side
        payload[s.centre_x()] = *min_difference(cy, cx);
        payload[s.centre_y()] = fresh_colour(lc.payload);
    }
    return verified(s, LemmaCondition::c, std::move(payload));
}

LemmaColouring transform_c_to_a(const LemmaColouring& lc) {
    expect_condition(lc, LemmaCondition::c);
    const DoubleStarSpec& s = lc.spec;
    Graph ds = gen_double_star(s);
    Mode mode = condition_mode(LemmaCondition::a);

    std::vector<Colour> payload(lc.payload);
    auto cx = colour_set(payload, x_vertices(s));
    auto cy = colour_set(payload, y_vertices(s));

    std::vector<std::pair<Colour, Colour>> attempts;
    if (cx == cy) attempts.emplace_back(*cx.begin(), fresh_colour(lc.payload));
    std::vector<Colour> pool = used_colours(lc.payload);
    pool.push_back(fresh_colour(lc.payload));
    pool.push_back(fresh_colour(lc.payload, 1));
    for (Colour a : pool)
        for (Colour b : pool) attempts.emplace_back(a, b);

    for (auto [vx, vy] : attempts) {
        payload[s.centre_x()] = vx;
        payload[s.centre_y()] = vy;
        if (payload_ok(ds, mode, payload)) return verified(s, LemmaCondition::a, payload);
    }
    throw VerificationFailedError("no verified vertex colouring derived from condition c");
}

LemmaColouring transform_c_to_d(const LemmaColouring& lc) {
    expect_condition(lc, LemmaCondition::c);
    const DoubleStarSpec& s = lc.spec;
    Graph ds = gen_double_star(s);
    DsEdges idx = ds_edges(ds, s);
    Mode mode = condition_mode(LemmaCondition::d);

    std::vector<Colour> edges(ds.edge_count());
    for (int i = 0; i < s.x_size; ++i) edges[idx.pend_x[i]] = lc.payload[s.x_vertex(i)];
    for (int j = 0; j < s.y_size; ++j) edges[idx.pend_y[j]] = lc.payload[s.y_vertex(j)];
    edges[idx.centre] = fresh_colour(lc.payload);

    if (payload_ok(ds, mode, edges)) return verified(s, LemmaCondition::d, std::move(edges));
    if (s.x_size == s.y_size) {
        for (int i = 0; i < s.x_size; ++i) {
            std::vector<Colour> alt(edges);
            alt[idx.pend_x[i]] = fresh_colour(edges);
            if (payload_ok(ds, mode, alt)) return verified(s, LemmaCondition::d, std::move(alt));
        }
    }
    throw VerificationFailedError("no verified edge colouring derived from condition c");
}

LemmaColouring transform_d_to_c(const LemmaColouring& lc) {
    expect_condition(lc, LemmaCondition::d);
    const DoubleStarSpec& s = lc.spec;
    Graph ds = gen_double_star(s);
    DsEdges idx = ds_edges(ds, s);

    std::vector<Colour> payload(s.total_vertices());
    for (int i = 0; i < s.x_size; ++i) payload[s.x_vertex(i)] = lc.payload[idx.pend_x[i]];
    for (int j = 0; j < s.y_size; ++j) payload[s.y_vertex(j)] = lc.payload[idx.pend_y[j]];
    auto cx = colour_set(payload, x_vertices(s));
    auto cy = colour_set(payload, y_vertices(s));

    auto from_y = min_difference(cy, cx);
    payload[s.centre_x()] = from_y ? *from_y : fresh_colour(lc.payload);
    auto from_x = min_difference(cx, cy);
    payload[s.centre_y()] =
        from_x ? *from_x : (from_y ? fresh_colour(lc.payload) : fresh_colour(lc.payload, 1));
    return verified(s, LemmaCondition::c, std::move(payload));
}

LemmaReport verify_lemma_equivalence(const DoubleStarSpec& spec) {
    LemmaReport report;
    report.spec = spec;

    LemmaColouring a = construct_canonical(spec);
    LemmaColouring b = transform_a_to_b(a);
    LemmaColouring a_from_b = transform_b_to_a(b);
    LemmaColouring c = transform_a_to_c(a);
    LemmaColouring a_from_c = transform_c_to_a(c);
    LemmaColouring d = transform_c_to_d(c);
    LemmaColouring c_from_d = transform_d_to_c(d);
    (void)a_from_b;
    (void)a_from_c;
    (void)c_from_d;

    const LemmaColouring* witnesses[4] = {&a, &b, &c, &d};
    for (int i = 0; i < 4; ++i) {
        report.conditions[i].witnessed = true;
        report.conditions[i].colours_used = static_cast<int>(used_colours(witnesses[i]->payload).size());
    }

    if (spec.total_vertices() <= 8) {
        report.oracle_checked = true;
        for (const LemmaColouring* lc : witnesses) {
            Graph g = lc->graph();
            for (const Permutation& p : all_automorphisms_bruteforce(g)) {
                if (p.is_identity()) continue;
                bool preserved = lc->mode().target == Target::vertex
                                     ? preserves_vertex_colouring(p, VertexColouring(lc->payload))
                                     : preserves_edge_colouring(p, g, EdgeColouring(lc->payload));
                if (preserved)
                    throw VerificationFailedError(
                        "oracle found a preserving automorphism the kernel missed");
            }
        }
    }
    return report;
}

}  // namespace distcol
