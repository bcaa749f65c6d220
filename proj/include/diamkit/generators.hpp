#pragma once

// Instance generators: complexes, line graphs and random connected
// chair-free graphs. Deterministic for a given engine state.

#include <algorithm>
#include <random>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "pattern.hpp"

namespace diamkit {

/// K_{a,b} minus a matching of the given size; side a is 0..a-1.
inline Graph complex_graph(int a, int b, int matching) {
    if (a < 1 || b < 1 || matching < 0 || matching > std::min(a, b))
        throw PreconditionError("complex: need a, b >= 1 and 0 <= matching <= min(a, b)");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(a) * b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v)
            if (!(u == v && u < matching))
                edges.emplace_back(u, a + v);
    return Graph::from_edges(a + b, edges);
}

/// Line graph; vertex i is the i-th edge of g in lexicographic order.
inline Graph line_graph(const Graph& g) {
    auto es = g.edges();
    std::vector<std::vector<int>> incident(g.order());
    for (std::size_t i = 0; i < es.size(); ++i) {
        incident[es[i].first].push_back(static_cast<int>(i));
        incident[es[i].second].push_back(static_cast<int>(i));
    }
    std::vector<Edge> out;
    for (const auto& inc : incident)
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b)
                out.emplace_back(std::min(inc[a], inc[b]), std::max(inc[a], inc[b]));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Graph::from_edges(static_cast<int>(es.size()), out);
}

/// Random connected graph: random spanning tree plus independent extra edges.
template <typename Rng>
Graph random_connected_graph(int n, double p, Rng& rng) {
    std::vector<Edge> edges;
    std::bernoulli_distribution extra(p);
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (extra(rng))
                edges.emplace_back(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edges(n, edges);
}

/// Random connected chair-free graph on n vertices, grown one vertex at a
/// time: each new vertex joins a random non-empty subset of earlier vertices
/// (edge probability p), rejected while it creates an induced chair.
template <typename Rng>
Graph random_chair_free_graph(int n, double p, Rng& rng, int attempts_per_vertex = 200) {
    if (n < 1)
        throw PreconditionError("random chair-free graph: n must be >= 1");
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(p);
    for (Vertex v = 1; v < n; ++v) {
        bool placed = false;
        for (int attempt = 0; attempt < attempts_per_vertex && !placed; ++attempt) {
            std::vector<Edge> trial = edges;
            std::uniform_int_distribution<int> pick(0, v - 1);
            trial.emplace_back(pick(rng), v);
            for (Vertex u = 0; u < v; ++u)
                if (coin(rng))
                    trial.emplace_back(u, v);
            std::sort(trial.begin(), trial.end());
            trial.erase(std::unique(trial.begin(), trial.end()), trial.end());
            Graph g = Graph::from_edges(v + 1, trial);
            if (is_chair_free(g).chair_free) {
                edges = std::move(trial);
                placed = true;
            }
        }
        if (!placed) {
            // A vertex adjacent to everything never creates an induced chair
            // through itself: it would be adjacent to all other four vertices.
            for (Vertex u = 0; u < v; ++u)
                edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

} // namespace diamkit
