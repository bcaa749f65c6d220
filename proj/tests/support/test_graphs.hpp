#pragma once

// Shared graph fixtures: named graphs, isomorphism-free enumeration of small
// connected graphs and seeded random corpora.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <diamkit/diamkit.hpp>

namespace diamkit::testing {

inline Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph::from_edges(n, e);
}

inline Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

inline Graph complete_bipartite(int a, int b) { return complex_graph(a, b, 0); }

inline Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    for (auto& [u, v] : e)
        if (u > v)
            std::swap(u, v);
    return Graph::from_edges(10, e);
}

namespace detail {

/// Adjacency bits of the upper triangle under a relabelling.
inline std::uint64_t code_under(const Graph& g, const std::vector<int>& pos) {
    int n = g.order();
    std::uint64_t code = 0;
    for (auto [u, v] : g.edges()) {
        int a = std::min(pos[u], pos[v]), b = std::max(pos[u], pos[v]);
        int bit = a * n - a * (a + 1) / 2 + (b - a - 1);
        code |= std::uint64_t{1} << bit;
    }
    return code;
}

} // namespace detail

/// Canonical code: maximum adjacency code over relabellings that respect the
/// partition by (degree, sorted neighbour degrees). Needs n <= 11.
inline std::uint64_t canonical_code(const Graph& g) {
    int n = g.order();
    std::vector<std::pair<std::vector<int>, int>> inv(n);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<int> key{g.degree(v)};
        for (Vertex w : g.neighbours(v))
            key.push_back(g.degree(w));
        std::sort(key.begin() + 1, key.end());
        inv[v] = {key, v};
    }
    std::sort(inv.begin(), inv.end());
    std::vector<std::pair<int, int>> cells; // [begin, end) in sorted order
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && inv[j].first == inv[i].first)
            ++j;
        cells.emplace_back(i, j);
        i = j;
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = inv[i].second;
    std::uint64_t best = 0;
    std::vector<int> pos(n);
    auto rec = [&](auto&& self, std::size_t cell) -> void {
        if (cell == cells.size()) {
            for (int i = 0; i < n; ++i)
                pos[order[i]] = i;
            best = std::max(best, detail::code_under(g, pos));
            return;
        }
        auto [b, e] = cells[cell];
        std::sort(order.begin() + b, order.begin() + e);
        do {
            self(self, cell + 1);
        } while (std::next_permutation(order.begin() + b, order.begin() + e));
    };
    rec(rec, 0);
    return best;
}

/// All connected graphs on n vertices up to isomorphism (n <= 8).
inline std::vector<Graph> connected_graphs(int n) {
    if (n <= 0)
        return {};
    std::vector<Graph> level{Graph::from_edges(1, {})};
    for (int m = 2; m <= n; ++m) {
        std::set<std::uint64_t> seen;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            auto base = g.edges();
            for (unsigned mask = 1; mask < (1u << (m - 1)); ++mask) {
                auto e = base;
                for (int v = 0; v < m - 1; ++v)
                    if (mask >> v & 1)
                        e.emplace_back(v, m - 1);
                Graph h = Graph::from_edges(m, e);
                if (seen.insert(canonical_code(h)).second)
                    next.push_back(std::move(h));
            }
        }
        level = std::move(next);
    }
    return level;
}

inline bool has_dominating_vertex(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1)
            return true;
    return false;
}

/// Relabels vertices by a random permutation.
template <typename Rng>
Graph shuffled(const Graph& g, Rng& rng) {
    std::vector<int> perm(g.order());
    for (int i = 0; i < g.order(); ++i)
        perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> e;
    for (auto [u, v] : g.edges())
        e.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
    return Graph::from_edges(g.order(), e);
}

/// Connected chair-free graphs drawn from several generators, 3 <= n <= max_n.
template <typename Rng>
std::vector<Graph> random_chair_free_corpus(std::size_t count, int max_n, Rng& rng) {
    std::vector<Graph> out;
    std::uniform_int_distribution<int> pick_n(3, max_n);
    std::uniform_real_distribution<double> pick_p(0.15, 0.85);
    while (out.size() < count) {
        int kind = static_cast<int>(out.size() % 4);
        int n = pick_n(rng);
        Graph g;
        if (kind == 0 || kind == 1) {
            g = random_chair_free_graph(n, pick_p(rng), rng);
        } else if (kind == 2) {
            // Line graphs are claw-free, hence chair-free.
            int base_n = std::uniform_int_distribution<int>(3, 8)(rng);
            Graph h = random_connected_graph(base_n, pick_p(rng) * 0.6, rng);
            if (h.size() < 2 || h.size() > static_cast<std::size_t>(max_n))
                continue;
            g = line_graph(h);
        } else {
            // Sparse growth favours long paths of triangles and pendant pieces.
            g = random_chair_free_graph(n, 0.2, rng);
        }
        if (g.order() < 3 || !is_connected(g))
            continue;
        out.push_back(shuffled(g, rng));
    }
    return out;
}

} // namespace diamkit::testing
