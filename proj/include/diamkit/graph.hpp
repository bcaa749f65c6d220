#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace diamkit {

/// Vertices are dense 0-based indices internally; files use 1-based ids.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Neighbour lists are sorted ascending, which makes adjacency tests binary
/// searches and gives every graph a canonical edge order.
class Graph {
  public:
    Graph() : offsets_(1, 0) {}

    /// Builds a graph on `n` vertices. Throws PreconditionError on loops,
    /// parallel edges or out-of-range endpoints. Runs in O(n + m).
    static Graph from_edges(int n, std::span<const Edge> edges) {
        if (n < 0)
            throw PreconditionError("negative vertex count");
        std::vector<std::size_t> deg(static_cast<std::size_t>(n) + 1, 0);
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw PreconditionError("edge endpoint out of range");
            if (u == v)
                throw PreconditionError("loop at vertex " + std::to_string(u + 1));
            ++deg[u];
            ++deg[v];
        }
        std::vector<std::size_t> off(static_cast<std::size_t>(n) + 1, 0);
        for (int v = 0; v < n; ++v)
            off[v + 1] = off[v] + deg[v];
        std::vector<Vertex> scratch(off[n]);
        std::vector<std::size_t> pos(off.begin(), off.end() - 1);
        for (auto [u, v] : edges) {
            scratch[pos[u]++] = v;
            scratch[pos[v]++] = u;
        }
        // Second pass in increasing source order yields sorted lists in O(n + m).
        Graph g;
        g.n_ = n;
        g.offsets_ = off;
        g.adj_.resize(off[n]);
        std::copy(off.begin(), off.end() - 1, pos.begin());
        for (int v = 0; v < n; ++v)
            for (std::size_t i = off[v]; i < off[v + 1]; ++i) {
                Vertex u = scratch[i];
                g.adj_[pos[u]++] = v;
            }
        for (int v = 0; v < n; ++v)
            for (std::size_t i = off[v] + 1; i < off[v + 1]; ++i)
                if (g.adj_[i] == g.adj_[i - 1])
                    throw PreconditionError("duplicate edge " + std::to_string(v + 1) + " " +
                                            std::to_string(g.adj_[i] + 1));
        return g;
    }

    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return adj_.size() / 2; }

    std::span<const Vertex> neighbours(Vertex v) const {
        return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

    int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

    bool adjacent(Vertex u, Vertex v) const {
        auto nb = neighbours(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(size());
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : neighbours(u))
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    int max_degree() const {
        int best = 0;
        for (Vertex v = 0; v < n_; ++v)
            best = std::max(best, degree(v));
        return best;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.adj_ == b.adj_;
    }

  private:
    int n_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adj_;
};

// ---------------------------------------------------------------------------
// Text format

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::optional<long long> parse_int(std::string_view s) {
    if (s.empty() || s.size() > 18)
        return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
        if (s.size() == 1)
            return std::nullopt;
    }
    long long v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            return std::nullopt;
        v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
}

/// Iterates the non-comment, non-blank lines of a text stream.
template <typename F>
void for_each_content_line(std::istream& in, F&& f) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view t = trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        f(lineno, t);
    }
}

} // namespace detail

/// Parses the edge-list format: '#'-comments, "p <n> <m>", then m lines "e <u> <v>"
/// with 1 <= u < v <= n.
inline Graph parse_graph(std::istream& in) {
    std::optional<std::pair<long long, long long>> header;
    std::vector<Edge> edges;
    std::size_t last_line = 0;
    detail::for_each_content_line(in, [&](std::size_t ln, std::string_view t) {
        last_line = ln;
        auto tok = detail::split_ws(t);
        if (!header) {
            if (tok.size() != 3 || tok[0] != "p")
                throw ParseError(ln, "malformed header, expected 'p <n> <m>'");
            auto n = detail::parse_int(tok[1]);
            auto m = detail::parse_int(tok[2]);
            if (!n || !m || *n < 0 || *m < 0 || *n > (1LL << 30))
                throw ParseError(ln, "malformed header, expected 'p <n> <m>'");
            header = {*n, *m};
            edges.reserve(static_cast<std::size_t>(std::min<long long>(*m, 1 << 24)));
            return;
        }
        if (tok.size() != 3 || tok[0] != "e")
            throw ParseError(ln, "malformed edge line, expected 'e <u> <v>'");
        auto u = detail::parse_int(tok[1]);
        auto v = detail::parse_int(tok[2]);
        if (!u || !v)
            throw ParseError(ln, "malformed edge line, expected 'e <u> <v>'");
        if (*u < 1 || *v < 1 || *u > header->first || *v > header->first)
            throw ParseError(ln, "vertex index out of range");
        if (*u == *v)
            throw ParseError(ln, "loop at vertex " + std::to_string(*u));
        if (*u > *v)
            throw ParseError(ln, "edge endpoints must satisfy u < v");
        if (static_cast<long long>(edges.size()) >= header->second)
            throw ParseError(ln, "more edges than declared in header");
        edges.emplace_back(static_cast<Vertex>(*u - 1), static_cast<Vertex>(*v - 1));
    });
    if (!header)
        throw ParseError(last_line, "missing header 'p <n> <m>'");
    if (static_cast<long long>(edges.size()) != header->second)
        throw ParseError(last_line, "declared " + std::to_string(header->second) + " edges, found " +
                                        std::to_string(edges.size()));
    try {
        return Graph::from_edges(static_cast<int>(header->first), edges);
    } catch (const PreconditionError& e) {
        throw ParseError(last_line, e.what());
    }
}

inline Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << "p " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

// ---------------------------------------------------------------------------
// Subgraphs

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_host; ///< local index -> host vertex
};

/// Subgraph induced by `vertices` (kept in the given order). O(n + m).
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> local(g.order(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[vertices[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : g.neighbours(vertices[i]))
            if (local[w] > static_cast<Vertex>(i))
                edges.emplace_back(static_cast<Vertex>(i), local[w]);
    return {Graph::from_edges(static_cast<int>(vertices.size()), edges),
            std::vector<Vertex>(vertices.begin(), vertices.end())};
}

/// Subgraph induced by the vertices with `keep[v]` set.
inline InducedSubgraph induced_subgraph_mask(const Graph& g, const std::vector<char>& keep) {
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < g.order(); ++v)
        if (keep[v])
            vs.push_back(v);
    return induced_subgraph(g, vs);
}

// ---------------------------------------------------------------------------
// Breadth-first primitives

struct Components {
    std::vector<int> id; ///< component index per vertex, or -1 if filtered out
    int count = 0;
};

/// Connected components of the subgraph induced by vertices satisfying `keep`.
template <typename Keep>
Components components_where(const Graph& g, Keep&& keep) {
    Components c;
    c.id.assign(g.order(), -1);
    std::vector<Vertex> queue;
    queue.reserve(g.order());
    for (Vertex s = 0; s < g.order(); ++s) {
        if (c.id[s] != -1 || !keep(s))
            continue;
        queue.clear();
        queue.push_back(s);
        c.id[s] = c.count;
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (Vertex w : g.neighbours(queue[h]))
                if (c.id[w] == -1 && keep(w)) {
                    c.id[w] = c.count;
                    queue.push_back(w);
                }
        ++c.count;
    }
    return c;
}

inline Components components(const Graph& g) {
    return components_where(g, [](Vertex) { return true; });
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).count == 1; }

/// Partition of V(G) from a seed set: N_0 = S, N_i = vertices first reached in round i.
struct Layering {
    std::vector<Vertex> seed;
    std::vector<std::vector<Vertex>> layers;
    std::vector<int> layer_of; ///< -1 for vertices unreachable from the seed

    /// Highest non-empty layer index.
    int depth() const { return static_cast<int>(layers.size()) - 1; }

    const std::vector<Vertex>& layer(int i) const {
        static const std::vector<Vertex> empty;
        return i >= 0 && i < static_cast<int>(layers.size()) ? layers[i] : empty;
    }
};

/// One breadth-first search from a virtual source joined to every seed vertex.
inline Layering bfs_layering(const Graph& g, std::span<const Vertex> seeds) {
    if (seeds.empty())
        throw PreconditionError("bfs_layering: empty seed set");
    Layering L;
    L.layer_of.assign(g.order(), -1);
    L.layers.emplace_back();
    for (Vertex s : seeds) {
        if (s < 0 || s >= g.order())
            throw PreconditionError("bfs_layering: seed vertex out of range");
        if (L.layer_of[s] == 0)
            continue;
        L.layer_of[s] = 0;
        L.layers[0].push_back(s);
        L.seed.push_back(s);
    }
    for (int i = 0; !L.layers[i].empty(); ++i) {
        std::vector<Vertex> next;
        for (Vertex u : L.layers[i])
            for (Vertex w : g.neighbours(u))
                if (L.layer_of[w] == -1) {
                    L.layer_of[w] = i + 1;
                    next.push_back(w);
                }
        if (next.empty())
            break;
        L.layers.push_back(std::move(next));
    }
    return L;
}

inline Layering bfs_layering(const Graph& g, std::initializer_list<Vertex> seeds) {
    return bfs_layering(g, std::span<const Vertex>(seeds.begin(), seeds.size()));
}

/// Breadth-first tree from `root`: distance and parent per vertex (-1 if unreached).
struct BfsTree {
    std::vector<int> dist;
    std::vector<Vertex> parent;
    std::vector<Vertex> order;
};

inline BfsTree bfs_tree(const Graph& g, Vertex root) {
    BfsTree t;
    t.dist.assign(g.order(), -1);
    t.parent.assign(g.order(), -1);
    t.order.reserve(g.order());
    t.dist[root] = 0;
    t.order.push_back(root);
    for (std::size_t h = 0; h < t.order.size(); ++h) {
        Vertex u = t.order[h];
        for (Vertex w : g.neighbours(u))
            if (t.dist[w] == -1) {
                t.dist[w] = t.dist[u] + 1;
                t.parent[w] = u;
                t.order.push_back(w);
            }
    }
    return t;
}

/// Largest distance from `v`; throws if some vertex is unreachable.
inline int eccentricity(const Graph& g, Vertex v) {
    auto t = bfs_tree(g, v);
    if (static_cast<int>(t.order.size()) != g.order())
        throw PreconditionError("graph is disconnected");
    return t.dist[t.order.back()];
}

/// Exact diameter by one BFS per vertex. Quadratic; verification only.
inline int diameter(const Graph& g) {
    if (g.order() == 0)
        throw PreconditionError("diameter of the empty graph is undefined");
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::max(best, eccentricity(g, v));
    return best;
}

// ---------------------------------------------------------------------------
// Bipartiteness, forests

/// Two-sided partition with |larger| >= |smaller|; side[v] is 0 for the larger part.
struct Bipartition {
    std::vector<Vertex> larger;
    std::vector<Vertex> smaller;
    std::vector<std::int8_t> side;
};

struct BipartitionResult {
    std::optional<Bipartition> parts;
    /// Odd closed walk v_0 v_1 ... v_{k-1} (v_{k-1} adjacent to v_0) when not bipartite.
    std::vector<Vertex> odd_cycle;

    bool bipartite() const { return parts.has_value(); }
};

/// Linear-time 2-colouring. The odd-cycle witness is the fundamental cycle of
/// the first same-colour edge met in breadth-first order.
inline BipartitionResult bipartition(const Graph& g) {
    BipartitionResult r;
    int n = g.order();
    std::vector<std::int8_t> colour(n, -1);
    std::vector<int> depth(n, 0);
    std::vector<Vertex> parent(n, -1);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex s = 0; s < n; ++s) {
        if (colour[s] != -1)
            continue;
        colour[s] = 0;
        queue.clear();
        queue.push_back(s);
        for (std::size_t h = 0; h < queue.size(); ++h) {
            Vertex u = queue[h];
            for (Vertex w : g.neighbours(u)) {
                if (colour[w] == -1) {
                    colour[w] = static_cast<std::int8_t>(1 - colour[u]);
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (colour[w] == colour[u]) {
                    std::vector<Vertex> left, right;
                    Vertex a = u, b = w;
                    while (a != b) {
                        if (depth[a] >= depth[b]) {
                            left.push_back(a);
                            a = parent[a];
                        } else {
                            right.push_back(b);
                            b = parent[b];
                        }
                    }
                    left.push_back(a);
                    r.odd_cycle = std::move(left);
                    r.odd_cycle.insert(r.odd_cycle.end(), right.rbegin(), right.rend());
                    return r;
                }
            }
        }
    }
    Bipartition b;
    std::vector<Vertex> side0, side1;
    for (Vertex v = 0; v < n; ++v)
        (colour[v] == 0 ? side0 : side1).push_back(v);
    bool flip = side1.size() > side0.size();
    b.side.resize(n);
    for (Vertex v = 0; v < n; ++v)
        b.side[v] = static_cast<std::int8_t>(flip ? 1 - colour[v] : colour[v]);
    b.larger = flip ? std::move(side1) : std::move(side0);
    b.smaller = flip ? std::move(side0) : std::move(side1);
    r.parts = std::move(b);
    return r;
}

/// Forest test on the subgraph induced by `keep`: #components == #vertices - #edges.
template <typename Keep>
bool is_forest_where(const Graph& g, Keep&& keep) {
    long long verts = 0, twice_edges = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!keep(v))
            continue;
        ++verts;
        for (Vertex w : g.neighbours(v))
            if (keep(w))
                ++twice_edges;
    }
    auto comps = components_where(g, keep);
    return comps.count == verts - twice_edges / 2;
}

inline bool is_forest(const Graph& g) {
    return is_forest_where(g, [](Vertex) { return true; });
}

/// Star-forest test on the subgraph induced by `keep`: a forest whose every
/// tree of order t has a vertex of degree t - 1.
template <typename Keep>
bool is_star_forest_where(const Graph& g, Keep&& keep) {
    if (!is_forest_where(g, keep))
        return false;
    auto comps = components_where(g, keep);
    std::vector<int> order(comps.count, 0), max_deg(comps.count, 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (comps.id[v] < 0)
            continue;
        int d = 0;
        for (Vertex w : g.neighbours(v))
            if (keep(w))
                ++d;
        ++order[comps.id[v]];
        max_deg[comps.id[v]] = std::max(max_deg[comps.id[v]], d);
    }
    for (int c = 0; c < comps.count; ++c)
        if (max_deg[c] != order[c] - 1)
            return false;
    return true;
}

inline bool is_star_forest(const Graph& g) {
    return is_star_forest_where(g, [](Vertex) { return true; });
}

/// Disjoint union, second graph renumbered after the first.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    auto edges = a.edges();
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + a.order(), v + a.order());
    return Graph::from_edges(a.order() + b.order(), edges);
}

/// Complement graph (quadratic).
inline Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                edges.emplace_back(u, v);
    return Graph::from_edges(g.order(), edges);
}

} // namespace diamkit
