#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>
#include <vector>

#include "distcol/graph.hpp"
#include "distcol/reduction.hpp"

using namespace distcol;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Colour classes as a partition of positions.
std::set<std::set<int>> partition_of(const std::vector<Colour>& colours) {
    std::map<Colour, std::set<int>> classes;
    for (int i = 0; i < static_cast<int>(colours.size()); ++i) classes[colours[i]].insert(i);
    std::set<std::set<int>> out;
    for (auto& [c, members] : classes) out.insert(members);
    return out;
}

}  // namespace

TEST_CASE("merge substitutes one colour for another") {
    CHECK(merge(VertexColouring({0, 1, 2}), 0, 2).colours == std::vector<Colour>{0, 1, 0});
    CHECK(merge(VertexColouring({0, 1}), 0, 0).colours == std::vector<Colour>{0, 1});
    CHECK(merge(VertexColouring({0, 1, 1}), 0, 1).colours == std::vector<Colour>{0, 0, 0});
    CHECK(merge(EdgeColouring({3, 4, 3}), 4, 3).colours == std::vector<Colour>{4, 4, 4});
}

TEST_CASE("merge unites exactly the two classes") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Colour> colours(4 + rng() % 5);
        for (Colour& c : colours) c = static_cast<int>(rng() % 4);
        auto used = used_colours(colours);
        Colour a = used[rng() % used.size()];
        Colour b = used[rng() % used.size()];
        auto merged = merge_colours(colours, a, b);
        auto before = partition_of(colours);
        auto after = partition_of(merged);
        if (a == b) {
            CHECK(after == before);
        } else {
            std::set<int> united;
            std::set<std::set<int>> expected;
            for (const auto& cls : before) {
                if (colours[*cls.begin()] == a || colours[*cls.begin()] == b)
                    united.insert(cls.begin(), cls.end());
                else
                    expected.insert(cls);
            }
            expected.insert(united);
            CHECK(after == expected);
        }
    }
}

TEST_CASE("is_irreducible on fixed instances") {
    Graph p3 = gen_standard(StandardFamily::path, 3);
    CHECK(is_irreducible(p3, VertexColouring({0, 0, 1}), Mode::vertex_plain()));
    CHECK_FALSE(is_irreducible(p3, VertexColouring({0, 1, 2}), Mode::vertex_plain()));

    Graph k3 = gen_standard(StandardFamily::complete, 3);
    CHECK(is_irreducible(k3, VertexColouring({0, 1, 2}), Mode::vertex_plain()));

    // input must be suitable
    CHECK_THROWS_AS(is_irreducible(p3, VertexColouring({0, 0, 0}), Mode::vertex_plain()),
                    NotSuitableInputError);
}

TEST_CASE("check_irreducible produces a complete evidence table") {
    Graph k3 = gen_standard(StandardFamily::complete, 3);
    auto report = check_irreducible(k3, VertexColouring({0, 1, 2}), Mode::vertex_plain());
    CHECK(report.irreducible);
    CHECK(report.rejections.size() == 6);  // all ordered pairs of 3 used colours
    for (const auto& rej : report.rejections) {
        REQUIRE(rej.witness.has_value());
        auto merged = merge_colours({0, 1, 2}, rej.into, rej.from);
        CHECK(preserves_vertex_colouring(*rej.witness, VertexColouring(merged)));
    }

    Graph p3 = gen_standard(StandardFamily::path, 3);
    auto reducible = check_irreducible(p3, VertexColouring({0, 1, 2}), Mode::vertex_plain());
    CHECK_FALSE(reducible.irreducible);
    REQUIRE(reducible.counterexample.has_value());
    CHECK(reducible.counterexample->into < reducible.counterexample->from);
}

TEST_CASE("reduce_to_irreducible on fixed instances") {
    Graph p3 = gen_standard(StandardFamily::path, 3);
    auto trace = reduce_to_irreducible(p3, VertexColouring({0, 1, 2}), Mode::vertex_plain());
    REQUIRE(trace.steps.size() == 1);
    CHECK(trace.steps[0] == MergeStep{1, 0});
    CHECK(trace.final == std::vector<Colour>{0, 0, 2});
    CHECK(trace.guard_triggers == 0);

    Graph k3 = gen_standard(StandardFamily::complete, 3);
    auto stay = reduce_to_irreducible(k3, VertexColouring({0, 1, 2}), Mode::vertex_plain());
    CHECK(stay.steps.empty());
    CHECK(stay.final == std::vector<Colour>{0, 1, 2});

    Graph star = gen_standard(StandardFamily::star, 4);
    auto estay = reduce_to_irreducible(star, EdgeColouring({0, 1, 2}), Mode::edge_plain());
    CHECK(estay.steps.empty());

    CHECK_THROWS_AS(reduce_to_irreducible(p3, VertexColouring({0, 0, 0}), Mode::vertex_plain()),
                    NotSuitableInputError);
}

TEST_CASE("traces replay and reductions are idempotent") {
    std::mt19937 rng(777);
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);  // 3..7
        Graph g = random_graph(rng, n, 0.5);
        std::vector<Colour> distinct(n);
        for (int v = 0; v < n; ++v) distinct[v] = v;
        for (Mode mode : {Mode::vertex_plain(), Mode::vertex_proper()}) {
            auto trace = reduce_to_irreducible(g, VertexColouring(distinct), mode);
            CHECK(trace.guard_triggers == 0);
            auto inters = replay(trace.initial, trace.steps);
            std::vector<Colour> last = trace.initial;
            for (const auto& inter : inters) {
                CHECK(is_suitable(g, VertexColouring(inter), mode));
                last = inter;
            }
            CHECK(last == trace.final);
            CHECK(used_colours(trace.final).size() <= used_colours(trace.initial).size());
            CHECK(is_irreducible(g, VertexColouring(trace.final), mode));
            auto again = reduce_to_irreducible(g, VertexColouring(trace.final), mode);
            CHECK(again.steps.empty());
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("replay validates steps") {
    CHECK_THROWS_AS(replay({0, 1}, {{0, 1}}), Error);  // upward merge
    CHECK_THROWS_AS(replay({0, 1}, {{5, 0}}), Error);  // unused colour
    auto out = replay({0, 1, 2}, {{2, 0}});
    REQUIRE(out.size() == 1);
    CHECK(out[0] == std::vector<Colour>{0, 1, 0});
}

TEST_CASE("edge obstruction detection") {
    CHECK(edge_colouring_obstruction(gen_standard(StandardFamily::complete, 2)).has_value());
    CHECK(edge_colouring_obstruction(Graph(2, {})).has_value());
    CHECK(edge_colouring_obstruction(Graph(3, {{0, 1}}))->kind == Obstruction::isolated_edge);
    CHECK_FALSE(edge_colouring_obstruction(gen_standard(StandardFamily::path, 3)).has_value());
    CHECK_FALSE(edge_colouring_obstruction(Graph(1, {})).has_value());
    // one isolated vertex next to a triangle is fine
    CHECK_FALSE(edge_colouring_obstruction(Graph(4, {{0, 1}, {1, 2}, {0, 2}})).has_value());
    // two isolated vertices are not
    CHECK(edge_colouring_obstruction(Graph(5, {{0, 1}, {1, 2}, {0, 2}}))->kind ==
          Obstruction::isolated_vertices);
}

TEST_CASE("known distinguishing numbers") {
    for (int n = 2; n <= 4; ++n)
        CHECK(distinguishing_number(gen_standard(StandardFamily::complete, n)).value == n);
    for (int n = 2; n <= 6; ++n)
        CHECK(distinguishing_number(gen_standard(StandardFamily::path, n)).value == 2);
    CHECK(distinguishing_number(gen_standard(StandardFamily::cycle, 4)).value == 3);
    CHECK(distinguishing_number(gen_standard(StandardFamily::cycle, 5)).value == 3);
    CHECK(distinguishing_number(gen_standard(StandardFamily::cycle, 6)).value == 2);
}

TEST_CASE("known distinguishing indices") {
    auto k2 = distinguishing_index(gen_standard(StandardFamily::complete, 2));
    CHECK_FALSE(k2.value.has_value());
    REQUIRE(k2.obstruction.has_value());
    CHECK(k2.obstruction->kind == Obstruction::isolated_edge);

    CHECK(distinguishing_index(gen_standard(StandardFamily::path, 3)).value == 2);
    CHECK(distinguishing_index(gen_standard(StandardFamily::star, 4)).value == 3);
}

TEST_CASE("known chromatic variants") {
    CHECK(distinguishing_chromatic_number(gen_standard(StandardFamily::complete, 2)).value == 2);
    // C_4 = K_{2,2}: the side palettes must be disjoint and rainbow
    CHECK(distinguishing_chromatic_number(gen_standard(StandardFamily::cycle, 4)).value == 4);
    CHECK(distinguishing_chromatic_number(gen_standard(StandardFamily::cycle, 6)).value == 4);

    CHECK_FALSE(distinguishing_chromatic_index(gen_standard(StandardFamily::complete, 2)).value);
    CHECK(distinguishing_chromatic_index(gen_standard(StandardFamily::path, 3)).value == 2);
    CHECK(distinguishing_chromatic_index(gen_standard(StandardFamily::complete, 3)).value == 3);
}

TEST_CASE("witnesses are suitable and minimal counts match both backends") {
    std::mt19937 rng(90125);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);  // 2..6
        Graph g = random_graph(rng, n, 0.5);
        for (Variant variant : {Variant::d, Variant::dc, Variant::di, Variant::dci}) {
            SearchOptions with_oracle{10, Backend::oracle};
            SearchOptions with_kernel{10, Backend::kernel};
            auto a = compute_number(g, variant, with_oracle);
            auto b = compute_number(g, variant, with_kernel);
            CHECK(a.value == b.value);
            CHECK(a.witness == b.witness);
            if (!a.value) continue;
            Mode mode = variant_mode(variant);
            CHECK(static_cast<int>(used_colours(a.witness).size()) == *a.value);
            if (mode.target == Target::vertex)
                CHECK(is_suitable(g, VertexColouring(a.witness), mode));
            else if (!a.witness.empty() || g.edge_count() == 0)
                CHECK((g.edge_count() == 0 ||
                       is_suitable(g, EdgeColouring(a.witness), mode)));
        }
    }
}

TEST_CASE("monotone bounds between plain and chromatic variants") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = random_graph(rng, n, 0.5);
        auto d = distinguishing_number(g);
        auto dc = distinguishing_chromatic_number(g);
        CHECK(*d.value <= *dc.value);
        auto di = distinguishing_index(g);
        auto dci = distinguishing_chromatic_index(g);
        CHECK(di.value.has_value() == dci.value.has_value());
        if (di.value) CHECK(*di.value <= *dci.value);
    }
}

TEST_CASE("search cutoff") {
    CHECK_THROWS_AS(distinguishing_number(Graph(11, {})), TooLargeForSearchError);
    SearchOptions wide;
    wide.cutoff = 12;
    CHECK(distinguishing_number(gen_standard(StandardFamily::path, 11), wide).value == 2);
}
