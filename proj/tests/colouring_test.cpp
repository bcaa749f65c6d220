#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "test_graphs.hpp"

using namespace diamkit;
using namespace diamkit::testing;

namespace {

Colouring labels(std::initializer_list<int> l) {
    Colouring c(static_cast<int>(l.size()));
    int i = 0;
    for (int x : l)
        c[i++] = static_cast<Label>(x);
    return c;
}

/// Exhaustive list-respecting search.
bool list_colourable_exhaustive(const Graph& g, const ListAssignment& L) {
    int n = g.order();
    Colouring c(n);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n)
            return true;
        for (Label l = 1; l <= 3; ++l) {
            if (!L.allows(v, l))
                continue;
            bool ok = true;
            for (Vertex w : g.neighbours(v))
                if (w < v && c[w] == l)
                    ok = false;
            if (!ok)
                continue;
            c[v] = l;
            if (self(self, v + 1))
                return true;
        }
        c[v] = 0;
        return false;
    };
    return rec(rec, 0);
}

} // namespace

TEST(VerifyColouring, Examples) {
    Graph edge = Graph::from_edges(2, {{0, 1}});
    EXPECT_TRUE(verify_colouring(edge, labels({1, 2}), ColouringMode::star));
    Graph k33 = complete_bipartite(3, 3);
    EXPECT_FALSE(verify_colouring(k33, labels({1, 1, 1, 2, 2, 2}), ColouringMode::acyclic));
    Graph c5 = cycle_graph(5);
    EXPECT_FALSE(verify_colouring(c5, labels({1, 2, 1, 2, 3}), ColouringMode::star));
    EXPECT_TRUE(verify_colouring(c5, labels({1, 2, 1, 2, 3}), ColouringMode::acyclic));
    EXPECT_FALSE(verify_colouring(c5, labels({1, 1, 2, 1, 3}), ColouringMode::proper));
}

TEST(VerifyColouring, RejectsPartialOrWrongSize) {
    Graph edge = Graph::from_edges(2, {{0, 1}});
    EXPECT_THROW(verify_colouring(edge, labels({1}), ColouringMode::proper), PreconditionError);
    EXPECT_THROW(verify_colouring(edge, labels({1, 0}), ColouringMode::proper), PreconditionError);
}

TEST(VerifyTransversal, Examples) {
    TransversalKind ioct1{TransversalKind::Tag::ioct, 1};
    EXPECT_TRUE(verify_transversal_class(complete_graph(3), labels({1, 2, 3}), 1, ioct1));
    TransversalKind ifvs1{TransversalKind::Tag::ifvs, 1};
    EXPECT_TRUE(verify_transversal_class(cycle_graph(5), labels({1, 2, 1, 2, 3}), 3, ifvs1));
    TransversalKind ifvs0{TransversalKind::Tag::ifvs, 0};
    EXPECT_FALSE(verify_transversal_class(cycle_graph(5), labels({1, 2, 1, 2, 3}), 3, ifvs0));
}

TEST(VerifyTransversal, MatchesForestCheck) {
    Graph k33 = complete_bipartite(3, 3);
    Colouring c = labels({1, 1, 1, 2, 3, 3});
    TransversalKind ifvs{TransversalKind::Tag::ifvs, std::nullopt};
    std::vector<char> keep(6, 1);
    for (Vertex v : c.colour_class(3))
        keep[v] = 0;
    bool forest = is_forest(induced_subgraph_mask(k33, keep).graph);
    EXPECT_EQ(verify_transversal_class(k33, c, 3, ifvs), forest);
    EXPECT_TRUE(forest);
}

TEST(VerifyTransversal, SetForm) {
    TransversalKind ifvs{TransversalKind::Tag::ifvs, std::nullopt};
    EXPECT_TRUE(verify_transversal_set(cycle_graph(5), {0}, ifvs));
    EXPECT_FALSE(verify_transversal_set(cycle_graph(5), {0, 1}, ifvs)); // not independent
    EXPECT_FALSE(verify_transversal_set(cycle_graph(5), {}, ifvs));
    TransversalKind ioct{TransversalKind::Tag::ioct, std::nullopt};
    EXPECT_TRUE(verify_transversal_set(cycle_graph(6), {}, ioct));
}

TEST(TwoListColouring, ForcedPropagation) {
    Graph p3 = path_graph(3);
    ListAssignment L(3);
    L.set(0, {1, 2});
    L.set(1, {1});
    L.set(2, {1, 2});
    auto c = two_list_colouring(p3, L);
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, labels({2, 1, 2}));
}

TEST(TwoListColouring, OddConstraintCycle) {
    ListAssignment L(3);
    for (Vertex v = 0; v < 3; ++v)
        L.set(v, {1, 2});
    EXPECT_FALSE(two_list_colouring(complete_graph(3), L));
}

TEST(TwoListColouring, RejectsLongLists) {
    ListAssignment L(2);
    EXPECT_THROW(two_list_colouring(path_graph(2), L), PreconditionError);
}

TEST(TwoListColouring, AgreesWithExhaustiveSearch) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 500; ++t) {
        int n = std::uniform_int_distribution<int>(1, 10)(rng);
        Graph g = random_connected_graph(n, 0.3, rng);
        ListAssignment L(n);
        for (Vertex v = 0; v < n; ++v) {
            int size = std::uniform_int_distribution<int>(1, 2)(rng);
            std::vector<Label> pool{1, 2, 3};
            std::shuffle(pool.begin(), pool.end(), rng);
            L.mask[v] = 0;
            for (int i = 0; i < size; ++i)
                L.mask[v] |= ListAssignment::bit(pool[i]);
        }
        auto c = two_list_colouring(g, L);
        ASSERT_EQ(c.has_value(), list_colourable_exhaustive(g, L)) << serialize_graph(g);
        if (c) {
            EXPECT_TRUE(verify_colouring(g, *c, ColouringMode::proper));
            for (Vertex v = 0; v < n; ++v)
                EXPECT_TRUE(L.allows(v, (*c)[v]));
        }
    }
}

TEST(Enumerate, Examples) {
    EXPECT_EQ(enumerate_3_colourings(complete_graph(3)).colourings.size(), 6u);
    EXPECT_TRUE(enumerate_3_colourings(complete_graph(4)).colourings.empty());
    EXPECT_EQ(enumerate_3_colourings(cycle_graph(5)).colourings.size(), 30u);
}

TEST(Enumerate, LexicographicAndDistinct) {
    auto e = enumerate_3_colourings(cycle_graph(6));
    EXPECT_EQ(e.colourings.size(), 66u); // (k-1)^6 + (k-1) at k = 3
    EXPECT_TRUE(std::is_sorted(e.colourings.begin(), e.colourings.end()));
    EXPECT_EQ(std::adjacent_find(e.colourings.begin(), e.colourings.end()), e.colourings.end());
}

TEST(Enumerate, OverflowSignalled) {
    auto e = enumerate_3_colourings(path_graph(8), 10);
    EXPECT_TRUE(e.overflow);
}

TEST(ColouringFormat, RoundTrip) {
    Colouring c = labels({1, 3, 2, 2});
    std::ostringstream os;
    write_colouring(os, c);
    std::istringstream is(os.str());
    EXPECT_EQ(parse_colouring(is), c);
}

TEST(ColouringFormat, RejectsBadLabel) {
    std::istringstream is("c 2\nv 1 4\nv 2 1\n");
    EXPECT_THROW(parse_colouring(is), ParseError);
}

TEST(VertexSetFormat, RoundTrip) {
    std::vector<Vertex> s{0, 4, 7};
    std::ostringstream os;
    write_vertex_set(os, s);
    std::istringstream is(os.str());
    EXPECT_EQ(parse_vertex_set(is), s);
}
