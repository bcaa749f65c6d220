#include <random>

#include <gtest/gtest.h>

#include "test_graphs.hpp"

using namespace diamkit;
using namespace diamkit::testing;

TEST(ParseGraph, Triangle) {
    Graph g = parse_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    EXPECT_EQ(g, complete_graph(3));
}

TEST(ParseGraph, CommentsAndBlankLines) {
    Graph g = parse_graph("# header\n\np 2 1\n  e 1 2  \n");
    EXPECT_EQ(g.order(), 2);
    EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(ParseGraph, RejectsLoop) { EXPECT_THROW(parse_graph("p 2 1\ne 1 1\n"), ParseError); }

TEST(ParseGraph, RejectsDuplicateEdge) { EXPECT_THROW(parse_graph("p 2 2\ne 1 2\ne 2 1\n"), ParseError); }

TEST(ParseGraph, RejectsOutOfRangeAndCountMismatch) {
    EXPECT_THROW(parse_graph("p 2 1\ne 1 3\n"), ParseError);
    EXPECT_THROW(parse_graph("p 3 2\ne 1 2\n"), ParseError);
    EXPECT_THROW(parse_graph("e 1 2\n"), ParseError);
    EXPECT_THROW(parse_graph("p x 1\n"), ParseError);
}

TEST(ParseGraph, ErrorCarriesLineNumber) {
    try {
        parse_graph("p 2 1\n\ne 1 1\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(ParseGraph, RoundTripRandom) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        int n = std::uniform_int_distribution<int>(1, 30)(rng);
        Graph g = random_connected_graph(n, 0.2, rng);
        EXPECT_EQ(parse_graph(serialize_graph(g)), g);
    }
}

TEST(GraphConstruction, RejectsMalformedEdges) {
    EXPECT_THROW(Graph::from_edges(2, {{0, 0}}), PreconditionError);
    EXPECT_THROW(Graph::from_edges(2, {{0, 2}}), PreconditionError);
    EXPECT_THROW(Graph::from_edges(2, {{0, 1}, {1, 0}}), PreconditionError);
}

TEST(BfsLayering, SeedCoversTriangle) {
    auto l = bfs_layering(complete_graph(3), {0, 1, 2});
    ASSERT_EQ(l.layers.size(), 1u);
    EXPECT_EQ(l.layers[0].size(), 3u);
}

TEST(BfsLayering, PathDistances) {
    auto l = bfs_layering(path_graph(5), {0});
    ASSERT_EQ(l.layers.size(), 5u);
    for (int i = 0; i < 5; ++i)
        EXPECT_EQ(l.layers[i], std::vector<Vertex>{i});
}

TEST(BfsLayering, ExtremalCentralTriangle) {
    Graph g = generate_Gd(2);
    auto l = bfs_layering(g, {0, 1, 2});
    ASSERT_EQ(l.layers.size(), 2u);
    EXPECT_EQ(l.layers[0].size(), 3u);
    EXPECT_EQ(l.layers[1].size(), 6u);
}

TEST(BfsLayering, UnreachableVerticesMarked) {
    Graph g = Graph::from_edges(3, {{0, 1}});
    auto l = bfs_layering(g, {0});
    EXPECT_EQ(l.layer_of[2], -1);
}

TEST(Diameter, Examples) {
    EXPECT_EQ(diameter(path_graph(5)), 4);
    EXPECT_EQ(diameter(generate_Gd(3)), 5);
    EXPECT_EQ(diameter(cycle_graph(6)), 3);
    EXPECT_EQ(diameter(Graph::from_edges(1, {})), 0);
}

TEST(Diameter, DisconnectedThrows) { EXPECT_THROW(diameter(Graph::from_edges(2, {})), PreconditionError); }

TEST(Bipartition, EvenCycle) {
    auto r = bipartition(cycle_graph(6));
    ASSERT_TRUE(r.bipartite());
    EXPECT_EQ(r.parts->larger.size(), 3u);
    EXPECT_EQ(r.parts->smaller.size(), 3u);
}

TEST(Bipartition, OddCycleWitness) {
    Graph c5 = cycle_graph(5);
    auto r = bipartition(c5);
    ASSERT_FALSE(r.bipartite());
    ASSERT_EQ(r.odd_cycle.size(), 5u);
    for (std::size_t i = 0; i < r.odd_cycle.size(); ++i)
        EXPECT_TRUE(c5.adjacent(r.odd_cycle[i], r.odd_cycle[(i + 1) % r.odd_cycle.size()]));
}

TEST(Bipartition, OddCycleWitnessIsClosedWalkOnRandomGraphs) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        Graph g = random_connected_graph(12, 0.3, rng);
        auto r = bipartition(g);
        if (r.bipartite()) {
            for (auto [u, v] : g.edges())
                EXPECT_NE(r.parts->side[u], r.parts->side[v]);
            continue;
        }
        ASSERT_EQ(r.odd_cycle.size() % 2, 1u);
        for (std::size_t i = 0; i < r.odd_cycle.size(); ++i)
            EXPECT_TRUE(g.adjacent(r.odd_cycle[i], r.odd_cycle[(i + 1) % r.odd_cycle.size()]));
    }
}

TEST(Bipartition, CompleteBipartite) {
    auto r = bipartition(complete_bipartite(5, 3));
    ASSERT_TRUE(r.bipartite());
    EXPECT_EQ(r.parts->larger.size(), 5u);
    EXPECT_EQ(r.parts->smaller.size(), 3u);
}

TEST(Forest, Examples) {
    EXPECT_TRUE(is_forest(path_graph(5)));
    EXPECT_FALSE(is_forest(complete_graph(3)));
    Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    EXPECT_TRUE(is_forest(g));
}

TEST(StarForest, Examples) {
    EXPECT_TRUE(is_star_forest(complete_bipartite(1, 4)));
    EXPECT_FALSE(is_star_forest(path_graph(4)));
    Graph g = Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {4, 5}});
    EXPECT_TRUE(is_star_forest(g));
    EXPECT_FALSE(is_star_forest(cycle_graph(4)));
}

TEST(InducedSubgraph, MapsBackToHost) {
    Graph c6 = cycle_graph(6);
    std::vector<Vertex> keep{1, 2, 3, 5};
    auto sub = induced_subgraph(c6, keep);
    EXPECT_EQ(sub.graph.order(), 4);
    EXPECT_EQ(sub.graph.size(), 2u);
    EXPECT_EQ(sub.to_host, keep);
}

TEST(Enumeration, ConnectedGraphCounts) {
    // OEIS A001349.
    const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n)
        EXPECT_EQ(connected_graphs(n).size(), expected[n]) << "n = " << n;
}
