#include <random>
#include <set>

#include <gtest/gtest.h>

#include "test_graphs.hpp"

using namespace diamkit;
using namespace diamkit::testing;

namespace {

const Problem kAllKinds[] = {Problem::threecol(), Problem::acyclic(), Problem::star(),
                             Problem::nearbip(), Problem::ifvs(std::nullopt), Problem::ioct(std::nullopt)};

void expect_certificate(const Graph& g, const Problem& p, const Answer& a) {
    ASSERT_TRUE(a.yes);
    ASSERT_TRUE(a.colouring);
    EXPECT_TRUE(verify_colouring(g, *a.colouring, p.mode()));
    if (p.is_transversal()) {
        ASSERT_TRUE(a.transversal);
        EXPECT_TRUE(verify_transversal_set(g, *a.transversal, p.transversal()));
    }
}

/// solve against brute force for every kind and every k in 0..n.
void expect_agreement(const Graph& g) {
    int d = std::max(diameter(g), 1);
    for (const Problem& p : kAllKinds) {
        auto expected = oracle::brute_force(g, p);
        auto got = solve(g, d, p);
        ASSERT_EQ(got.yes, expected.yes) << to_string(p.kind) << "\n" << serialize_graph(g);
        if (got.yes)
            expect_certificate(g, p, got);
        if (p.kind == Problem::Kind::ifvs || p.kind == Problem::Kind::ioct) {
            for (int k = 0; k <= g.order(); ++k) {
                Problem pk{p.kind, k};
                bool want = expected.yes && *expected.optimum <= k;
                auto r = solve(g, d, pk);
                ASSERT_EQ(r.yes, want) << to_string(p.kind) << " k=" << k << "\n" << serialize_graph(g);
                if (r.yes)
                    expect_certificate(g, pk, r);
            }
        }
    }
}

Vertex role(const GadgetOutput& out, const std::string& name) {
    Vertex v = out.role_vertex(name);
    EXPECT_GE(v, 0) << name;
    return v;
}

} // namespace

TEST(SizeBound, Values) {
    EXPECT_EQ(size_bound(1), 20u);
    EXPECT_EQ(size_bound(3), 74u);
    EXPECT_EQ(size_bound(100), std::numeric_limits<std::uint64_t>::max());
}

TEST(FindTriangle, CompleteGraphLexicographicallyLeast) {
    Triangle t = find_triangle(complete_graph(4), 1);
    EXPECT_EQ(t.vertices(), (std::array<Vertex, 3>{0, 1, 2}));
}

TEST(FindTriangle, ExtremalGraph) {
    Graph g = generate_Gd(2);
    Triangle t = find_triangle(g, 3);
    EXPECT_TRUE(g.adjacent(t.x, t.y));
    EXPECT_TRUE(g.adjacent(t.x, t.z));
    EXPECT_TRUE(g.adjacent(t.y, t.z));
}

TEST(FindTriangle, BipartiteRejected) { EXPECT_THROW(find_triangle(cycle_graph(6), 3), PreconditionError); }

TEST(FindTriangle, FindsTrianglesInChairFreeCorpus) {
    std::mt19937_64 rng(31);
    auto corpus = random_chair_free_corpus(300, 12, rng);
    for (const Graph& g : corpus) {
        if (bipartition(g).bipartite())
            continue;
        int d = diameter(g);
        if (g.order() < 2 * d + 2)
            continue;
        // Odd holes of length >= 7 are chair-free but triangle-free with n = 2d + 1.
        Triangle t = find_triangle(g, d);
        EXPECT_TRUE(g.adjacent(t.x, t.y) && g.adjacent(t.x, t.z) && g.adjacent(t.y, t.z));
    }
}

TEST(TriangleContext, ExtremalCentralTriangle) {
    GadgetOutput ex = extremal_gadget(2);
    Triangle t{role(ex, "v1_1"), role(ex, "v1_2"), role(ex, "v1_3")};
    auto ctx = triangle_context(ex.graph, t, 3);
    EXPECT_EQ(ctx.s.size(), 6u);
    EXPECT_TRUE(ctx.n1_star.empty());
    EXPECT_EQ(ctx.owners(), 3);
    EXPECT_FALSE(ctx.sees_all_of_t);
}

TEST(TriangleContext, CompleteGraphInfeasible) {
    auto ctx = triangle_context(complete_graph(4), Triangle{0, 1, 2}, 1);
    EXPECT_TRUE(ctx.sees_all_of_t);
}

TEST(TriangleContext, ExtremalInnerTriangleHasPrivateNeighbours) {
    GadgetOutput ex = extremal_gadget(3);
    Vertex parent = role(ex, "v1_1");
    Vertex a = role(ex, "v2_1"), b = role(ex, "v2_2");
    ASSERT_TRUE(ex.graph.adjacent(parent, a) && ex.graph.adjacent(parent, b) && ex.graph.adjacent(a, b));
    auto ctx = triangle_context(ex.graph, Triangle{parent, a, b}, 5);
    std::size_t idx = 0;
    auto tv = ctx.triangle.vertices();
    while (tv[idx] != parent)
        ++idx;
    EXPECT_FALSE(ctx.priv[idx].empty());
}

TEST(TriangleContext, RejectsNonTriangle) {
    EXPECT_THROW(triangle_context(cycle_graph(5), Triangle{0, 1, 2}, 2), PreconditionError);
}

TEST(ColouringFamily, Triangle) {
    auto out = colouring_family(complete_graph(3), 1);
    ASSERT_TRUE(out.three_colourable);
    EXPECT_EQ(out.family.variant, ColouringFamily::Variant::whole_graph);
    EXPECT_EQ(out.family.members.size(), 6u);
}

TEST(ColouringFamily, ExtremalG2) {
    Graph g = generate_Gd(2);
    auto out = colouring_family(g, 3);
    ASSERT_TRUE(out.three_colourable);
    EXPECT_EQ(out.family.variant, ColouringFamily::Variant::whole_graph);
    EXPECT_EQ(out.family.members.size(), 48u);
    EXPECT_EQ(out.family.members.size(), oracle::count_3_colourings(g));
}

TEST(ColouringFamily, K4NotColourable) { EXPECT_FALSE(colouring_family(complete_graph(4), 1).three_colourable); }

TEST(ColouringFamily, CapOverflow) {
    EXPECT_THROW(colouring_family(generate_Gd(3), 5, 10), CapOverflow);
}

TEST(ColouringFamily, SoundAndComplete) {
    std::mt19937_64 rng(37);
    auto corpus = random_chair_free_corpus(250, 11, rng);
    int minus_private = 0;
    for (const Graph& g : corpus) {
        if (bipartition(g).bipartite())
            continue;
        int d = diameter(g);
        auto out = colouring_family(g, d);
        auto all = enumerate_3_colourings(g).colourings;
        ASSERT_EQ(out.three_colourable, !all.empty()) << serialize_graph(g);
        if (!out.three_colourable)
            continue;
        const auto& fam = out.family;
        if (fam.variant == ColouringFamily::Variant::whole_graph) {
            std::set<Colouring> got(fam.members.begin(), fam.members.end());
            EXPECT_EQ(got, std::set<Colouring>(all.begin(), all.end()));
            continue;
        }
        ++minus_private;
        std::vector<char> in_p(g.order(), 0);
        for (Vertex v : fam.private_set())
            in_p[v] = 1;
        std::set<Colouring> restricted;
        for (Colouring c : all) {
            for (Vertex v = 0; v < g.order(); ++v)
                if (in_p[v])
                    c[v] = 0;
            restricted.insert(c);
        }
        EXPECT_EQ(std::set<Colouring>(fam.members.begin(), fam.members.end()), restricted) << serialize_graph(g);
    }
    EXPECT_GT(minus_private, 0);
}

TEST(SolveBipartite, Complexes) {
    Graph k52 = complete_bipartite(5, 2);
    auto star = solve_bipartite(k52, 2, Problem::star());
    expect_certificate(k52, Problem::star(), star);
    const Colouring& c = *star.colouring;
    for (Vertex v = 0; v < 5; ++v)
        EXPECT_EQ(c[v], c[0]);
    EXPECT_NE(c[5], c[6]);

    Graph k53 = complete_bipartite(5, 3);
    EXPECT_FALSE(solve_bipartite(k53, 2, Problem::acyclic()).yes);
    EXPECT_FALSE(solve_bipartite(k53, 2, Problem::star()).yes);
    expect_certificate(k53, Problem::ifvs(2), solve_bipartite(k53, 2, Problem::ifvs(2)));
    EXPECT_FALSE(solve_bipartite(k53, 2, Problem::ifvs(1)).yes);
    expect_certificate(k53, Problem::nearbip(), solve_bipartite(k53, 2, Problem::nearbip()));
    auto ioct = solve_bipartite(k53, 2, Problem::ioct(0));
    expect_certificate(k53, Problem::ioct(0), ioct);
    EXPECT_TRUE(ioct.transversal->empty());
}

TEST(SolveBipartite, LongPathsAndCycles) {
    for (int n : {9, 10, 25, 40}) {
        for (const Graph& g : {path_graph(n), cycle_graph(n % 2 ? n + 1 : n)}) {
            int d = diameter(g);
            for (const Problem& p : kAllKinds) {
                auto a = solve_bipartite(g, d, p);
                bool want = true;
                if (p.kind == Problem::Kind::ifvs || p.kind == Problem::Kind::ioct)
                    want = true;
                ASSERT_EQ(a.yes, want);
                expect_certificate(g, p, a);
            }
            bool cycle = g.size() == static_cast<std::size_t>(g.order());
            EXPECT_EQ(solve_bipartite(g, d, Problem::ifvs(0)).yes, !cycle);
        }
    }
}

TEST(SolveBipartite, RejectsOddCycle) { EXPECT_THROW(solve_bipartite(cycle_graph(5), 2, Problem::star()), PreconditionError); }

TEST(Solve, FiveCycle) {
    Graph c5 = cycle_graph(5);
    auto nb = solve(c5, 2, Problem::nearbip());
    expect_certificate(c5, Problem::nearbip(), nb);
    EXPECT_EQ(nb.transversal->size(), 1u);
    EXPECT_FALSE(solve(c5, 2, Problem::star()).yes);
    expect_certificate(c5, Problem::acyclic(), solve(c5, 2, Problem::acyclic()));
}

TEST(Solve, ExtremalG2AgreesWithOracle) { expect_agreement(generate_Gd(2)); }

TEST(Solve, ExtremalG3AgreesWithOracle) {
    Graph g = generate_Gd(3);
    for (const Problem& p : kAllKinds) {
        auto want = oracle::brute_force(g, p, 21);
        auto got = solve(g, 5, p);
        EXPECT_EQ(got.yes, want.yes) << to_string(p.kind);
        if (got.yes)
            expect_certificate(g, p, got);
    }
}

TEST(Solve, Preconditions) {
    EXPECT_THROW(solve(Graph::from_edges(2, {}), 1, Problem::threecol()), PreconditionError);
    EXPECT_THROW(solve(Graph{}, 1, Problem::threecol()), PreconditionError);
    EXPECT_THROW(solve(cycle_graph(5), 0, Problem::threecol()), PreconditionError);
    EXPECT_THROW(solve(cycle_graph(5), 2, Problem::ifvs(-1)), PreconditionError);
    SolveOptions verify;
    verify.verify_diameter = true;
    EXPECT_THROW(solve(cycle_graph(7), 2, Problem::threecol(), verify), PreconditionError);
    SolveOptions chair;
    chair.verify_chair_free = true;
    EXPECT_THROW(solve(build_pattern(PatternSpec::chair()), 3, Problem::threecol(), chair), PreconditionError);
}

TEST(Solve, SmallCompleteGraphs) {
    EXPECT_TRUE(solve(complete_graph(1), 1, Problem::star()).yes);
    EXPECT_TRUE(solve(complete_graph(3), 1, Problem::ioct(1)).yes);
    EXPECT_FALSE(solve(complete_graph(3), 1, Problem::ioct(0)).yes);
    EXPECT_FALSE(solve(complete_graph(4), 1, Problem::threecol()).yes);
}

TEST(Solve, AgreesWithOracleOnAllSmallChairFreeGraphs) {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n))
            if (is_chair_free(g).chair_free)
                expect_agreement(g);
}

TEST(Solve, AgreesWithOracleOnRandomChairFreeGraphs) {
    std::mt19937_64 rng(41);
    for (const Graph& g : random_chair_free_corpus(120, 12, rng))
        expect_agreement(g);
}

TEST(Solve, LargeComplexIsLinear) {
    Graph g = complex_graph(20000, 3, 2);
    auto nb = solve(g, 3, Problem::nearbip());
    expect_certificate(g, Problem::nearbip(), nb);
    EXPECT_EQ(nb.transversal->size(), 2u);
    EXPECT_FALSE(solve(g, 3, Problem::ifvs(1)).yes);
}
