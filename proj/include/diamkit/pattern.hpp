#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace diamkit {

/// Description of a small pattern graph H.
struct PatternSpec {
    enum class Kind { path, cycle, complete, star, subdivided_claw, subdivided_star, explicit_graph };

    Kind kind = Kind::path;
    int r = 1;     ///< order for path/cycle/complete, leaf count for stars
    int h = 1, i = 1, j = 1; ///< arm lengths of S_{h,i,j}
    int ell = 0;   ///< subdivisions of one star edge in K_{1,r}^ell
    Graph graph;   ///< explicit_graph only

    static PatternSpec path(int r) { return sized(Kind::path, r); }
    static PatternSpec cycle(int r) { return sized(Kind::cycle, r); }
    static PatternSpec complete(int r) { return sized(Kind::complete, r); }
    static PatternSpec star(int r) { return sized(Kind::star, r); }
    static PatternSpec subdivided_claw(int h, int i, int j) {
        PatternSpec s;
        s.kind = Kind::subdivided_claw;
        s.h = h;
        s.i = i;
        s.j = j;
        return s;
    }
    static PatternSpec subdivided_star(int r, int ell) {
        PatternSpec s;
        s.kind = Kind::subdivided_star;
        s.r = r;
        s.ell = ell;
        return s;
    }
    static PatternSpec chair() { return subdivided_claw(1, 1, 2); }
    static PatternSpec explicit_graph(Graph g) {
        PatternSpec s;
        s.kind = Kind::explicit_graph;
        s.graph = std::move(g);
        return s;
    }

  private:
    static PatternSpec sized(Kind k, int r) {
        PatternSpec s;
        s.kind = k;
        s.r = r;
        return s;
    }
};

/// Builds the pattern with centre first, then arms in the order of the
/// PatternSpec parameters. For K_{1,r}^ell the r-1 plain leaves precede the subdivided arm.
inline Graph build_pattern(const PatternSpec& s) {
    using K = PatternSpec::Kind;
    std::vector<Edge> e;
    switch (s.kind) {
    case K::path:
        if (s.r < 1)
            throw PreconditionError("path needs r >= 1");
        for (int v = 0; v + 1 < s.r; ++v)
            e.emplace_back(v, v + 1);
        return Graph::from_edges(s.r, e);
    case K::cycle:
        if (s.r < 3)
            throw PreconditionError("cycle needs r >= 3");
        for (int v = 0; v < s.r; ++v)
            e.emplace_back(std::min(v, (v + 1) % s.r), std::max(v, (v + 1) % s.r));
        return Graph::from_edges(s.r, e);
    case K::complete:
        if (s.r < 1)
            throw PreconditionError("complete graph needs r >= 1");
        for (int u = 0; u < s.r; ++u)
            for (int v = u + 1; v < s.r; ++v)
                e.emplace_back(u, v);
        return Graph::from_edges(s.r, e);
    case K::star:
        if (s.r < 1)
            throw PreconditionError("star needs r >= 1");
        for (int v = 1; v <= s.r; ++v)
            e.emplace_back(0, v);
        return Graph::from_edges(s.r + 1, e);
    case K::subdivided_claw: {
        if (!(1 <= s.h && s.h <= s.i && s.i <= s.j))
            throw PreconditionError("subdivided claw needs 1 <= h <= i <= j");
        int next = 1;
        for (int len : {s.h, s.i, s.j}) {
            Vertex prev = 0;
            for (int k = 0; k < len; ++k, ++next) {
                e.emplace_back(prev, next);
                prev = next;
            }
        }
        return Graph::from_edges(next, e);
    }
    case K::subdivided_star: {
        if (s.r < 1 || s.ell < 0)
            throw PreconditionError("subdivided star needs r >= 1 and ell >= 0");
        int next = 1;
        for (int k = 0; k + 1 < s.r; ++k, ++next)
            e.emplace_back(0, next);
        Vertex prev = 0;
        for (int k = 0; k <= s.ell; ++k, ++next) {
            e.emplace_back(prev, next);
            prev = next;
        }
        return Graph::from_edges(next, e);
    }
    case K::explicit_graph:
        return s.graph;
    }
    throw PreconditionError("unknown pattern kind");
}

/// Injective map pattern vertex -> host vertex whose image induces the pattern.
struct Embedding {
    std::vector<Vertex> image;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// True iff `emb` maps `pattern` onto an induced copy in `host`.
inline bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& emb) {
    if (static_cast<int>(emb.image.size()) != pattern.order())
        return false;
    for (int a = 0; a < pattern.order(); ++a) {
        if (emb.image[a] < 0 || emb.image[a] >= host.order())
            return false;
        for (int b = a + 1; b < pattern.order(); ++b) {
            if (emb.image[a] == emb.image[b])
                return false;
            if (pattern.adjacent(a, b) != host.adjacent(emb.image[a], emb.image[b]))
                return false;
        }
    }
    return true;
}

inline constexpr int default_pattern_cap = 24;

struct InducedSearchOptions {
    int pattern_cap = default_pattern_cap;
    /// Restricts the image of the first pattern vertex (the highest-degree one).
    std::optional<std::vector<Vertex>> root_candidates;
};

namespace detail {

class InducedSearch {
  public:
    InducedSearch(const Graph& host, const Graph& pattern) : host_(host), pat_(pattern) {
        int k = pattern.order();
        // Breadth-first order from the highest-degree vertex of each component,
        // children by decreasing degree: every later vertex has a mapped anchor.
        std::vector<char> placed(k, 0);
        anchor_.assign(k, -1);
        while (static_cast<int>(order_.size()) < k) {
            int root = -1;
            for (int v = 0; v < k; ++v)
                if (!placed[v] && (root == -1 || pattern.degree(v) > pattern.degree(root)))
                    root = v;
            placed[root] = 1;
            std::size_t head = order_.size();
            order_.push_back(root);
            for (; head < order_.size(); ++head) {
                int u = order_[head];
                std::vector<int> kids;
                for (Vertex w : pattern.neighbours(u))
                    if (!placed[w])
                        kids.push_back(w);
                std::stable_sort(kids.begin(), kids.end(),
                                 [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
                for (int w : kids) {
                    placed[w] = 1;
                    anchor_[w] = u;
                    order_.push_back(w);
                }
            }
        }
        // Symmetry breaking among interchangeable pattern vertices (same
        // neighbourhood up to each other): their images must increase.
        twin_before_.assign(k, -1);
        for (int pos = 0; pos < k; ++pos) {
            int v = order_[pos];
            for (int q = pos - 1; q >= 0; --q) {
                int u = order_[q];
                if (are_twins(u, v)) {
                    twin_before_[v] = u;
                    break;
                }
            }
        }
        image_.assign(k, -1);
        used_.assign(host.order(), 0);
    }

    std::optional<Embedding> run(const std::optional<std::vector<Vertex>>& roots) {
        roots_ = roots;
        if (pat_.order() == 0)
            return Embedding{};
        if (extend(0))
            return Embedding{image_};
        return std::nullopt;
    }

  private:
    bool are_twins(int u, int v) const {
        if (pat_.degree(u) != pat_.degree(v))
            return false;
        for (Vertex w : pat_.neighbours(u))
            if (w != v && !pat_.adjacent(v, w))
                return false;
        return true;
    }

    bool consistent(int pos, Vertex x) const {
        int p = order_[pos];
        if (used_[x] || host_.degree(x) < pat_.degree(p))
            return false;
        if (twin_before_[p] != -1 && image_[twin_before_[p]] > x)
            return false;
        for (int q = 0; q < pos; ++q) {
            int pq = order_[q];
            if (pat_.adjacent(p, pq) != host_.adjacent(x, image_[pq]))
                return false;
        }
        return true;
    }

    bool place(std::size_t pos, Vertex x) {
        int p = order_[pos];
        image_[p] = x;
        used_[x] = 1;
        if (extend(pos + 1))
            return true;
        used_[x] = 0;
        image_[p] = -1;
        return false;
    }

    bool extend(std::size_t pos) {
        if (pos == order_.size())
            return true;
        int p = order_[pos];
        if (anchor_[p] == -1) {
            if (pos == 0 && roots_) {
                std::vector<Vertex> cands = *roots_;
                std::sort(cands.begin(), cands.end());
                for (Vertex x : cands)
                    if (x >= 0 && x < host_.order() && consistent(pos, x) && place(pos, x))
                        return true;
                return false;
            }
            for (Vertex x = 0; x < host_.order(); ++x)
                if (consistent(pos, x) && place(pos, x))
                    return true;
            return false;
        }
        for (Vertex x : host_.neighbours(image_[anchor_[p]]))
            if (consistent(pos, x) && place(pos, x))
                return true;
        return false;
    }

    const Graph& host_;
    const Graph& pat_;
    std::vector<int> order_, anchor_, twin_before_;
    std::vector<Vertex> image_;
    std::vector<char> used_;
    std::optional<std::vector<Vertex>> roots_;
};

} // namespace detail

/// Searches for an induced copy of `pattern` in `host` by backtracking with
/// degree and adjacency-consistency pruning. Exponential in the pattern size;
/// intended for verification.
inline std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern,
                                             const InducedSearchOptions& opts = {}) {
    if (pattern.order() > opts.pattern_cap)
        throw CapOverflow("pattern on " + std::to_string(pattern.order()) + " vertices",
                          static_cast<std::uint64_t>(opts.pattern_cap));
    if (pattern.order() > host.order())
        return std::nullopt;
    detail::InducedSearch search(host, pattern);
    return search.run(opts.root_candidates);
}

struct ChairCheck {
    bool chair_free = true;
    std::optional<Embedding> witness; ///< pattern vertices in build_pattern(chair) order
};

inline ChairCheck is_chair_free(const Graph& g) {
    static const Graph chair = build_pattern(PatternSpec::chair());
    auto emb = find_induced(g, chair);
    return {!emb.has_value(), emb};
}

/// Convenience wrapper: true iff `g` has no induced copy of the pattern.
inline bool is_free_of(const Graph& g, const PatternSpec& spec, const InducedSearchOptions& opts = {}) {
    return !find_induced(g, build_pattern(spec), opts).has_value();
}

/// Membership in the class of graphs whose every component is a path or a
/// subdivided claw. Linear time.
inline bool in_class_S(const Graph& h) {
    auto comps = components(h);
    std::vector<long long> verts(comps.count, 0), twice_edges(comps.count, 0);
    std::vector<int> deg3(comps.count, 0);
    for (Vertex v = 0; v < h.order(); ++v) {
        int c = comps.id[v];
        int d = h.degree(v);
        if (d >= 4)
            return false;
        ++verts[c];
        twice_edges[c] += d;
        if (d == 3)
            ++deg3[c];
    }
    for (int c = 0; c < comps.count; ++c) {
        if (twice_edges[c] / 2 != verts[c] - 1)
            return false; // not a tree
        if (deg3[c] > 1)
            return false;
    }
    return true;
}

/// Alekseev's trichotomy for connected bipartite chair-free graphs.
struct BipartiteChairFreeClass {
    enum class Tag { path, cycle, complex };

    Tag tag = Tag::path;
    std::optional<Bipartition> parts;  ///< set for complex
    std::vector<Edge> removed_matching; ///< complex only: missing cross pairs (u < v)
};

inline const char* to_string(BipartiteChairFreeClass::Tag t) {
    switch (t) {
    case BipartiteChairFreeClass::Tag::path:
        return "path";
    case BipartiteChairFreeClass::Tag::cycle:
        return "cycle";
    case BipartiteChairFreeClass::Tag::complex:
        return "complex";
    }
    return "?";
}

/// Classifies a connected bipartite chair-free graph as a path, a cycle or a
/// complex (complete bipartite minus a matching). Path and cycle take
/// precedence for maximum degree <= 2. Throws PreconditionError when none applies.
inline BipartiteChairFreeClass classify_bipartite_chair_free(const Graph& g, bool verify_chair_free = false) {
    if (g.order() == 0 || !is_connected(g))
        throw PreconditionError("classify: graph must be connected and non-empty");
    auto bp = bipartition(g);
    if (!bp.bipartite())
        throw PreconditionError("classify: graph is not bipartite");
    if (verify_chair_free) {
        auto cc = is_chair_free(g);
        if (!cc.chair_free)
            throw PreconditionError("classify: graph contains an induced chair");
    }
    using Tag = BipartiteChairFreeClass::Tag;
    BipartiteChairFreeClass out;
    if (g.max_degree() <= 2) {
        out.tag = g.size() + 1 == static_cast<std::size_t>(g.order()) ? Tag::path : Tag::cycle;
        return out;
    }
    const Bipartition& parts = *bp.parts;
    std::vector<long long> side_sum(2, 0);
    for (Vertex v = 0; v < g.order(); ++v)
        side_sum[parts.side[v]] += v;
    std::size_t side_size[2] = {parts.larger.size(), parts.smaller.size()};
    std::vector<int> missed_count(g.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
        int other = 1 - parts.side[v];
        std::size_t d = static_cast<std::size_t>(g.degree(v));
        if (d + 1 < side_size[other])
            throw PreconditionError("classify: not a path, cycle or complex (vertex " + std::to_string(v + 1) +
                                    " misses two vertices across); input is not chair-free");
        if (d + 1 == side_size[other]) {
            long long s = 0;
            for (Vertex w : g.neighbours(v))
                s += w;
            Vertex missing = static_cast<Vertex>(side_sum[other] - s);
            if (++missed_count[missing] > 1)
                throw PreconditionError("classify: removed pairs do not form a matching");
            if (v < missing)
                out.removed_matching.emplace_back(v, missing);
        }
    }
    std::sort(out.removed_matching.begin(), out.removed_matching.end());
    out.tag = Tag::complex;
    out.parts = parts;
    return out;
}

} // namespace diamkit
