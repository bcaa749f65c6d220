#pragma once

// Linear-time vertex partitioning for chair-free graphs of bounded diameter:
// 3-colouring, acyclic / star 3-colouring, near-bipartiteness, independent
// feedback vertex set and independent odd cycle transversal.
//
// Pipeline for a non-bipartite input G of diameter at most d:
//   1. find a triangle T = {x, y, z} and partition V(G) from V(T);
//   2. enumerate the proper 3-colourings of G - N_1 (bounded in d), extend
//      them to N_1* and filter by 2-list colourability of the private
//      neighbours S;
//   3. either the family covers all of G, or exactly one triangle vertex x
//      owns private neighbours, in which case each member c of G - P(x) is
//      extended deterministically and the remaining free part S_c is handled
//      by bounded case analysis per problem.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "colouring.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "pattern.hpp"
#include "problem.hpp"

namespace diamkit {

struct Triangle {
    Vertex x = -1, y = -1, z = -1;

    std::array<Vertex, 3> vertices() const { return {x, y, z}; }
    friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// 9 * 2^d + 2, saturating.
inline std::uint64_t size_bound(int d) {
    if (d < 0)
        return 2;
    if (d >= 59)
        return std::numeric_limits<std::uint64_t>::max();
    return (std::uint64_t{9} << d) + 2;
}

namespace detail {

/// Shortest odd cycle of a small graph, as a vertex sequence; empty if bipartite.
inline std::vector<Vertex> shortest_odd_cycle(const Graph& h) {
    int best_len = std::numeric_limits<int>::max();
    std::vector<Vertex> best;
    for (Vertex r = 0; r < h.order(); ++r) {
        auto t = bfs_tree(h, r);
        for (Vertex a = 0; a < h.order(); ++a) {
            if (t.dist[a] < 0)
                continue;
            for (Vertex b : h.neighbours(a)) {
                if (b <= a || t.dist[b] != t.dist[a])
                    continue;
                int len = 2 * t.dist[a] + 1;
                if (len >= best_len)
                    continue;
                best_len = len;
                best.clear();
                for (Vertex v = a; v != -1; v = t.parent[v])
                    best.push_back(v);
                std::reverse(best.begin(), best.end()); // r ... a
                std::vector<Vertex> tail;
                for (Vertex v = b; v != r; v = t.parent[v])
                    tail.push_back(v);
                // r ... a, b ... (child of r)
                best.insert(best.end(), tail.begin(), tail.end());
            }
        }
    }
    return best;
}

} // namespace detail

/// Finds a triangle in a connected chair-free non-bipartite graph with at
/// least 2d + 2 vertices in O(n + m): breadth-first tree from vertex 0, the
/// lowest-layer same-layer edge closes an odd cycle of length <= 2d + 1, a
/// shortest odd cycle inside it is induced, and unless it already is a
/// triangle any outside vertex adjacent to it sees two consecutive cycle
/// vertices.
inline Triangle find_triangle(const Graph& g, int d) {
    if (d < 1)
        throw PreconditionError("find_triangle: diameter bound must be >= 1");
    if (g.order() < 2 * d + 2)
        throw PreconditionError("find_triangle: needs at least 2d + 2 vertices");
    auto tree = bfs_tree(g, 0);
    if (static_cast<int>(tree.order.size()) != g.order())
        throw PreconditionError("find_triangle: graph is disconnected");
    int best_layer = std::numeric_limits<int>::max();
    Edge best{-1, -1};
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : g.neighbours(u))
            if (u < v && tree.dist[u] == tree.dist[v] && tree.dist[u] < best_layer) {
                best_layer = tree.dist[u];
                best = {u, v};
            }
    if (best.first == -1)
        throw PreconditionError("find_triangle: graph is bipartite");

    std::vector<Vertex> cycle;
    {
        std::vector<Vertex> left, right;
        Vertex a = best.first, b = best.second;
        while (a != b) {
            left.push_back(a);
            right.push_back(b);
            a = tree.parent[a];
            b = tree.parent[b];
        }
        left.push_back(a);
        cycle = std::move(left);
        cycle.insert(cycle.end(), right.rbegin(), right.rend());
    }
    std::sort(cycle.begin(), cycle.end());
    auto sub = induced_subgraph(g, cycle);
    auto local = detail::shortest_odd_cycle(sub.graph);
    std::vector<Vertex> odd;
    for (Vertex v : local)
        odd.push_back(sub.to_host[v]);

    auto sorted_triangle = [](Vertex a, Vertex b, Vertex c) {
        std::array<Vertex, 3> t{a, b, c};
        std::sort(t.begin(), t.end());
        return Triangle{t[0], t[1], t[2]};
    };
    if (odd.size() == 3)
        return sorted_triangle(odd[0], odd[1], odd[2]);

    std::vector<char> on_cycle(g.order(), 0);
    for (Vertex v : odd)
        on_cycle[v] = 1;
    Vertex outside = -1;
    for (Vertex v : odd)
        for (Vertex w : g.neighbours(v))
            if (!on_cycle[w] && (outside == -1 || w < outside))
                outside = w;
    if (outside == -1)
        throw PreconditionError("find_triangle: no vertex outside the odd cycle");
    for (std::size_t i = 0; i < odd.size(); ++i) {
        Vertex a = odd[i], b = odd[(i + 1) % odd.size()];
        if (g.adjacent(outside, a) && g.adjacent(outside, b))
            return sorted_triangle(outside, a, b);
    }
    throw PreconditionError("find_triangle: no triangle found; the input contains an induced chair");
}

/// Partition from a triangle T together with the private-neighbour structure.
struct TriangleContext {
    Triangle triangle;
    Layering layering;                 ///< partition of V(G) from V(T)
    std::vector<Vertex> n1, n2;        ///< layers N_1, N_2
    std::vector<Vertex> n1_star;       ///< N_1 vertices with exactly two neighbours on T
    std::vector<Vertex> n2_star;       ///< neighbours of N_1* in N_2
    std::array<std::vector<Vertex>, 3> priv; ///< P(x), P(y), P(z)
    std::vector<Vertex> s;             ///< P(x) u P(y) u P(z) = N_1 \ N_1*
    std::vector<std::uint8_t> t_mask;  ///< bit i set iff adjacent to triangle vertex i (0 on T)
    bool sees_all_of_t = false;        ///< some N_1 vertex is adjacent to x, y and z
    std::size_t outside_n1 = 0;        ///< |V(G)| - |N_1|
    bool exceeds_size_bound = false;   ///< outside_n1 > 9 * 2^d + 2

    int owners() const {
        int c = 0;
        for (const auto& p : priv)
            c += !p.empty();
        return c;
    }
};

inline TriangleContext triangle_context(const Graph& g, const Triangle& t, int d) {
    auto tv = t.vertices();
    for (Vertex v : tv)
        if (v < 0 || v >= g.order())
            throw PreconditionError("triangle_context: vertex out of range");
    if (!g.adjacent(t.x, t.y) || !g.adjacent(t.x, t.z) || !g.adjacent(t.y, t.z))
        throw PreconditionError("triangle_context: the given vertices do not form a triangle");
    TriangleContext ctx;
    ctx.triangle = t;
    ctx.layering = bfs_layering(g, std::span<const Vertex>(tv.data(), tv.size()));
    ctx.n1 = ctx.layering.layer(1);
    ctx.n2 = ctx.layering.layer(2);
    std::sort(ctx.n1.begin(), ctx.n1.end());
    std::sort(ctx.n2.begin(), ctx.n2.end());
    ctx.t_mask.assign(g.order(), 0);
    for (int i = 0; i < 3; ++i)
        for (Vertex w : g.neighbours(tv[i]))
            if (ctx.layering.layer_of[w] == 1)
                ctx.t_mask[w] |= static_cast<std::uint8_t>(1u << i);
    std::vector<char> in_n2_star(g.order(), 0);
    for (Vertex v : ctx.n1) {
        int cnt = __builtin_popcount(ctx.t_mask[v]);
        if (cnt == 3) {
            ctx.sees_all_of_t = true;
        } else if (cnt == 2) {
            ctx.n1_star.push_back(v);
            for (Vertex w : g.neighbours(v))
                if (ctx.layering.layer_of[w] == 2 && !in_n2_star[w]) {
                    in_n2_star[w] = 1;
                    ctx.n2_star.push_back(w);
                }
        } else {
            int i = __builtin_ctz(ctx.t_mask[v]);
            ctx.priv[i].push_back(v);
            ctx.s.push_back(v);
        }
    }
    std::sort(ctx.n2_star.begin(), ctx.n2_star.end());
    ctx.outside_n1 = static_cast<std::size_t>(g.order()) - ctx.n1.size();
    ctx.exceeds_size_bound = ctx.outside_n1 > size_bound(d);
    return ctx;
}

/// Bounded family of 3-colourings produced for a non-bipartite input.
struct ColouringFamily {
    enum class Variant { whole_graph, minus_private };

    Variant variant = Variant::whole_graph;
    std::optional<TriangleContext> context; ///< set whenever a triangle was used
    int apex = -1;                          ///< minus_private: index (0..2) in the triangle of x
    /// whole_graph: proper 3-colourings of G. minus_private: 3-colourings of
    /// G - P(x) (P(x) unlabelled) that extend to G.
    std::vector<Colouring> members;

    Vertex apex_vertex() const { return context->triangle.vertices()[apex]; }
    const std::vector<Vertex>& private_set() const { return context->priv[apex]; }
};

struct FamilyOutcome {
    bool three_colourable = false;
    ColouringFamily family;
};

inline constexpr std::uint64_t default_family_cap = default_enumeration_cap;

/// Computes either all 3-colourings of G, or a triangle whose only vertex x
/// with private neighbours is recorded with all extendable 3-colourings of
/// G - P(x). Throws CapOverflow when more than `cap` colourings arise.
inline FamilyOutcome colouring_family(const Graph& g, int d, std::uint64_t cap = default_family_cap) {
    if (d < 1)
        throw PreconditionError("colouring_family: diameter bound must be >= 1");
    if (g.order() == 0 || !is_connected(g))
        throw PreconditionError("colouring_family: graph must be connected and non-empty");
    FamilyOutcome out;
    auto check_cap = [&](std::size_t have) {
        if (have > cap)
            throw CapOverflow("colouring family", cap);
    };

    if (g.order() <= 2 * d + 1) {
        auto all = enumerate_3_colourings(g, cap);
        if (all.overflow)
            throw CapOverflow("colouring family", cap);
        out.family.members = std::move(all.colourings);
        out.three_colourable = !out.family.members.empty();
        return out;
    }

    Triangle t = find_triangle(g, d);
    TriangleContext ctx = triangle_context(g, t, d);
    if (ctx.sees_all_of_t || ctx.exceeds_size_bound) {
        out.family.context = std::move(ctx);
        return out;
    }
    int n = g.order();
    const auto tv = t.vertices();
    std::vector<char> in_n1(n, 0), in_s(n, 0);
    for (Vertex v : ctx.n1)
        in_n1[v] = 1;
    for (Vertex v : ctx.s)
        in_s[v] = 1;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
        if (!in_n1[v])
            rest.push_back(v);
    auto core = induced_subgraph(g, rest);

    // Colourings of G - S that extend to G.
    std::vector<Colouring> extendable;
    for_each_3_colouring(core.graph, [&](const Colouring& local) {
        Colouring c(n);
        for (std::size_t i = 0; i < rest.size(); ++i)
            c[rest[i]] = local[static_cast<Vertex>(i)];
        for (Vertex v : ctx.n1_star) {
            std::uint8_t used = 0;
            for (int i = 0; i < 3; ++i)
                if (ctx.t_mask[v] & (1u << i))
                    used |= ListAssignment::bit(c[tv[i]]);
            c[v] = detail::lowest_label(static_cast<std::uint8_t>(0b1110 & ~used));
        }
        for (Vertex v : ctx.n1_star)
            for (Vertex w : g.neighbours(v))
                if (!in_s[w] && c[w] == c[v])
                    return true;
        ListAssignment lists(n);
        for (Vertex v = 0; v < n; ++v) {
            if (!in_s[v]) {
                lists.mask[v] = ListAssignment::bit(c[v]);
            } else {
                int i = __builtin_ctz(ctx.t_mask[v]);
                lists.mask[v] = static_cast<std::uint8_t>(0b1110 & ~ListAssignment::bit(c[tv[i]]));
            }
        }
        if (two_list_colouring(g, lists)) {
            extendable.push_back(std::move(c));
            check_cap(extendable.size());
        }
        return true;
    });
    out.three_colourable = !extendable.empty();
    if (!out.three_colourable) {
        out.family.context = std::move(ctx);
        return out;
    }

    if (ctx.s.empty()) {
        out.family.members = std::move(extendable);
    } else if (ctx.owners() == 1) {
        out.family.variant = ColouringFamily::Variant::minus_private;
        for (int i = 0; i < 3; ++i)
            if (!ctx.priv[i].empty())
                out.family.apex = i;
        out.family.members = std::move(extendable);
    } else {
        if (ctx.s.size() > 6)
            throw PreconditionError("colouring_family: two triangle vertices own more than six private "
                                    "neighbours in a 3-colourable graph; the input contains an induced chair");
        auto ssub = induced_subgraph(g, ctx.s);
        for (const Colouring& c : extendable) {
            ListAssignment lists(static_cast<int>(ctx.s.size()));
            for (std::size_t i = 0; i < ctx.s.size(); ++i) {
                std::uint8_t used = 0;
                for (Vertex w : g.neighbours(ctx.s[i]))
                    if (c[w] != 0)
                        used |= ListAssignment::bit(c[w]);
                lists.mask[i] = static_cast<std::uint8_t>(0b1110 & ~used);
            }
            for_each_3_colouring(
                ssub.graph,
                [&](const Colouring& ext) {
                    Colouring full = c;
                    for (std::size_t i = 0; i < ctx.s.size(); ++i)
                        full[ctx.s[i]] = ext[static_cast<Vertex>(i)];
                    out.family.members.push_back(std::move(full));
                    check_cap(out.family.members.size());
                    return true;
                },
                &lists);
        }
    }
    out.family.context = std::move(ctx);
    return out;
}

// ---------------------------------------------------------------------------
// Answers

/// Yes/no with a certificate: a colouring for the colouring problems, and for
/// the transversal problems the set I together with a 3-colouring having I as a class.
struct Answer {
    bool yes = false;
    std::optional<Colouring> colouring;
    std::optional<std::vector<Vertex>> transversal;
};

namespace detail {

/// Accepts `c` as a certificate if it solves `p`; for the transversal problems
/// the smallest qualifying class is reported.
inline bool accept_colouring(const Graph& g, const Colouring& c, const Problem& p, Answer& out) {
    if (!c.total() || !proper(g, c))
        return false;
    if (!p.is_transversal()) {
        if (!verify_colouring(g, c, p.mode()))
            return false;
        out = {true, c, std::nullopt};
        return true;
    }
    auto kind = p.transversal();
    Label best = 0;
    for (Label l = 1; l <= 3; ++l)
        if ((!best || c.class_size(l) < c.class_size(best)) && verify_transversal_class(g, c, l, kind))
            best = l;
    if (!best)
        return false;
    out = {true, c, c.colour_class(best)};
    return true;
}

inline Answer solve_by_enumeration(const Graph& g, const Problem& p, std::uint64_t cap) {
    Answer ans;
    bool overflow = false;
    std::uint64_t seen = 0;
    for_each_3_colouring(g, [&](const Colouring& c) {
        if (++seen > cap) {
            overflow = true;
            return false;
        }
        return !accept_colouring(g, c, p, ans);
    });
    if (overflow)
        throw CapOverflow("3-colouring enumeration", cap);
    return ans;
}

/// Star 3-colouring of a path or even cycle from blocks 1 2 3 and 1 2 1 3.
inline Colouring block_star_colouring(const std::vector<Vertex>& walk, int n) {
    int len = static_cast<int>(walk.size());
    std::vector<Label> seq;
    int rest = len;
    // Use as many 4-blocks as possible while the remainder is a multiple of 3.
    int fours = 0;
    while (fours * 4 <= rest && (rest - fours * 4) % 3 != 0)
        ++fours;
    if ((rest - fours * 4) % 3 != 0 || fours * 4 > rest)
        fours = rest / 4; // paths: truncation below handles the remainder
    for (int b = 0; b < fours; ++b)
        seq.insert(seq.end(), {1, 2, 1, 3});
    while (static_cast<int>(seq.size()) < rest)
        seq.insert(seq.end(), {1, 2, 3});
    seq.resize(rest);
    Colouring c(n);
    for (int i = 0; i < len; ++i)
        c[walk[i]] = seq[i];
    return c;
}

/// Vertex order along a path or cycle (maximum degree <= 2, connected).
inline std::vector<Vertex> path_or_cycle_walk(const Graph& g) {
    Vertex start = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) <= 1) {
            start = v;
            break;
        }
    std::vector<Vertex> walk{start};
    std::vector<char> seen(g.order(), 0);
    seen[start] = 1;
    while (true) {
        Vertex next = -1;
        for (Vertex w : g.neighbours(walk.back()))
            if (!seen[w]) {
                next = w;
                break;
            }
        if (next == -1)
            break;
        seen[next] = 1;
        walk.push_back(next);
    }
    return walk;
}

} // namespace detail

/// Closed-form solution on connected chair-free bipartite graphs. Small
/// inputs (n <= 8) are enumerated; longer paths and cycles are solved
/// directly; every other input is a complex with |S_1| >= 5, where
/// star/acyclic 3-colourability holds iff |S_2| <= 2 and the minimum IFVS
/// has size |S_2| - 1.
inline Answer solve_bipartite(const Graph& g, int d, const Problem& p,
                              std::uint64_t cap = default_enumeration_cap) {
    (void)d;
    auto bp = bipartition(g);
    if (!bp.bipartite())
        throw PreconditionError("solve_bipartite: graph is not bipartite");
    if (g.order() == 0 || !is_connected(g))
        throw PreconditionError("solve_bipartite: graph must be connected and non-empty");
    const Bipartition& parts = *bp.parts;
    int n = g.order();
    Colouring two(n);
    for (Vertex v = 0; v < n; ++v)
        two[v] = static_cast<Label>(parts.side[v] + 1);

    using K = Problem::Kind;
    if (p.kind == K::threecol)
        return {true, two, std::nullopt};
    if (p.kind == K::ioct) {
        if (p.k && *p.k < 0)
            return {};
        Colouring c = two;
        return {true, c, std::vector<Vertex>{}};
    }
    if (n <= 8)
        return detail::solve_by_enumeration(g, p, cap);

    auto fits = [&](std::size_t size) { return p.kind == K::nearbip || !p.k || static_cast<long long>(size) <= *p.k; };

    if (g.max_degree() <= 2) {
        bool is_cycle = g.size() == static_cast<std::size_t>(n);
        auto walk = detail::path_or_cycle_walk(g);
        if (p.kind == K::nearbip || p.kind == K::ifvs) {
            if (!is_cycle) {
                if (!fits(0))
                    return {};
                return {true, two, std::vector<Vertex>{}};
            }
            if (!fits(1))
                return {};
            // Class 3 = {walk[0]} leaves a path.
            Colouring c = two;
            c[walk[0]] = 3;
            return {true, c, std::vector<Vertex>{walk[0]}};
        }
        Colouring c = p.kind == K::star3col ? detail::block_star_colouring(walk, n) : two;
        if (p.kind == K::acyclic3col && is_cycle)
            c[walk[0]] = 3;
        Answer ans;
        if (detail::accept_colouring(g, c, p, ans))
            return ans;
        throw PreconditionError("solve_bipartite: failed to colour a path or cycle");
    }

    auto cls = classify_bipartite_chair_free(g);
    const auto& s1 = cls.parts->larger;
    const auto& s2 = cls.parts->smaller;
    Vertex s = s2.front();
    Colouring c(n);
    for (Vertex v : s1)
        c[v] = 1;
    for (Vertex v : s2)
        c[v] = 2;
    c[s] = 3;
    if (p.kind == K::acyclic3col || p.kind == K::star3col) {
        if (s2.size() > 2)
            return {};
        return {true, c, std::nullopt};
    }
    // nearbip / ifvs: I = S_2 \ {s}
    if (!fits(s2.size() - 1))
        return {};
    std::vector<Vertex> iset;
    for (Vertex v : s2)
        if (v != s)
            iset.push_back(v);
    return {true, c, iset};
}

// ---------------------------------------------------------------------------
// Extension of a family member to the private neighbourhood

/// A member c of G - P(x), its forced extension c' to G - S_c, and the free
/// part S_c: the components of G[P(x)] containing no vertex with a single
/// available colour. Each component of G[S_c] admits exactly two colourings,
/// with the two labels other than c(x).
struct ExtensionTriple {
    Colouring c;
    Colouring c_prime;
    std::vector<Vertex> s_c; ///< ascending
    std::vector<Vertex> w;   ///< union of the smaller sides of the components of G[S_c]
    std::vector<std::vector<Vertex>> side_a, side_b; ///< per component; side_a holds its least vertex
    Label low = 0, high = 0; ///< the two labels other than c(x)

    std::size_t components() const { return side_a.size(); }

    /// c' extended with component i coloured (side_a, side_b) = (low, high),
    /// or swapped when flip[i] is set.
    Colouring extend(const std::vector<char>& flip) const {
        Colouring full = c_prime;
        for (std::size_t i = 0; i < side_a.size(); ++i) {
            Label a = flip[i] ? high : low, b = flip[i] ? low : high;
            for (Vertex v : side_a[i])
                full[v] = a;
            for (Vertex v : side_b[i])
                full[v] = b;
        }
        return full;
    }

    /// flip value giving vertex `v` of component `i` the label `target`.
    char flip_for(std::size_t i, Vertex v, Label target) const {
        bool in_a = std::find(side_a[i].begin(), side_a[i].end(), v) != side_a[i].end();
        return static_cast<char>(in_a ? target == high : target == low);
    }

    /// flip value putting the smaller side of component `i` on label `target`.
    char flip_smaller_to(std::size_t i, Label target) const {
        bool a_smaller = side_a[i].size() <= side_b[i].size();
        return static_cast<char>(a_smaller ? target == high : target == low);
    }
};

inline ExtensionTriple build_extension_triple(const Graph& g, const ColouringFamily& fam, const Colouring& member) {
    const TriangleContext& ctx = *fam.context;
    const Vertex x = fam.apex_vertex();
    const auto& px = fam.private_set();
    int n = g.order();
    ExtensionTriple t;
    t.c = member;
    t.c_prime = member;
    Label cx = member[x];
    t.low = cx == 1 ? 2 : 1;
    t.high = cx == 3 ? 2 : 3;

    std::vector<char> in_px(n, 0);
    for (Vertex v : px)
        in_px[v] = 1;
    std::vector<std::uint8_t> avail(n, 0);
    for (Vertex v : px) {
        std::uint8_t used = 0;
        for (Vertex w : g.neighbours(v))
            if (!in_px[w])
                used |= ListAssignment::bit(member[w]);
        avail[v] = static_cast<std::uint8_t>(0b1110 & ~used);
        if (avail[v] == 0)
            throw PreconditionError("extension: member does not extend to the private neighbourhood");
    }
    auto comps = components_where(g, [&](Vertex v) { return in_px[v] != 0; });
    std::vector<char> forced_comp(comps.count, 0);
    for (Vertex v : px)
        if (__builtin_popcount(avail[v]) == 1)
            forced_comp[comps.id[v]] = 1;
    // Propagate forced labels through components meeting S_1.
    std::vector<Vertex> queue;
    for (Vertex v : px) {
        if (__builtin_popcount(avail[v]) != 1 || t.c_prime[v] != 0)
            continue;
        t.c_prime[v] = detail::lowest_label(avail[v]);
        queue.assign(1, v);
        for (std::size_t h = 0; h < queue.size(); ++h) {
            Vertex u = queue[h];
            Label other = t.c_prime[u] == t.low ? t.high : t.low;
            for (Vertex w : g.neighbours(u)) {
                if (!in_px[w])
                    continue;
                if (t.c_prime[w] == 0) {
                    t.c_prime[w] = other;
                    queue.push_back(w);
                } else if (t.c_prime[w] != other) {
                    throw PreconditionError("extension: forced propagation conflict");
                }
            }
        }
    }
    for (Vertex v : px)
        if (t.c_prime[v] != 0 && !(avail[v] & ListAssignment::bit(t.c_prime[v])))
            throw PreconditionError("extension: forced label not available");

    std::vector<int> comp_slot(comps.count, -1);
    std::vector<std::int8_t> side(n, -1);
    for (Vertex v : px) {
        if (forced_comp[comps.id[v]])
            continue;
        t.s_c.push_back(v);
    }
    std::sort(t.s_c.begin(), t.s_c.end());
    for (Vertex v : t.s_c) {
        if (comp_slot[comps.id[v]] != -1)
            continue;
        comp_slot[comps.id[v]] = static_cast<int>(t.side_a.size());
        t.side_a.emplace_back();
        t.side_b.emplace_back();
        std::size_t slot = t.side_a.size() - 1;
        side[v] = 0;
        queue.assign(1, v);
        for (std::size_t h = 0; h < queue.size(); ++h) {
            Vertex u = queue[h];
            (side[u] == 0 ? t.side_a : t.side_b)[slot].push_back(u);
            for (Vertex w : g.neighbours(u)) {
                if (!in_px[w])
                    continue;
                if (side[w] == -1) {
                    side[w] = static_cast<std::int8_t>(1 - side[u]);
                    queue.push_back(w);
                } else if (side[w] == side[u]) {
                    throw PreconditionError("extension: private neighbourhood is not bipartite");
                }
            }
        }
        std::sort(t.side_a[slot].begin(), t.side_a[slot].end());
        std::sort(t.side_b[slot].begin(), t.side_b[slot].end());
    }
    for (std::size_t i = 0; i < t.side_a.size(); ++i) {
        const auto& smaller = t.side_a[i].size() <= t.side_b[i].size() ? t.side_a[i] : t.side_b[i];
        t.w.insert(t.w.end(), smaller.begin(), smaller.end());
    }
    std::sort(t.w.begin(), t.w.end());
    (void)ctx;
    return t;
}

namespace detail {

inline void all_orientations(const ExtensionTriple& t, std::vector<Colouring>& out, std::size_t max_components) {
    std::size_t k = t.components();
    if (k > max_components)
        throw PreconditionError("extension: too many free components; the input contains an induced chair");
    for (std::uint32_t bits = 0; bits < (1u << k); ++bits) {
        std::vector<char> flip(k);
        for (std::size_t i = 0; i < k; ++i)
            flip[i] = static_cast<char>((bits >> i) & 1u);
        out.push_back(t.extend(flip));
    }
}

/// Candidate extensions of one triple for the acyclic / star problems.
inline std::vector<Colouring> acyclic_star_candidates(const Graph& g, const ColouringFamily& fam,
                                                      const ExtensionTriple& t, ColouringMode mode) {
    const TriangleContext& ctx = *fam.context;
    std::vector<Colouring> out;
    int n = g.order();
    std::vector<char> in_sc(n, 0);
    for (Vertex v : t.s_c)
        in_sc[v] = 1;
    auto inside = [&](Vertex v) { return in_sc[v] != 0; };
    if (!is_forest_where(g, inside))
        return out;
    const std::uint8_t yz = static_cast<std::uint8_t>(0b111 & ~(1u << fam.apex));
    for (Vertex s : t.s_c)
        for (Vertex w : g.neighbours(s))
            if (ctx.t_mask[w] == yz)
                return out; // bichromatic 4-cycle through x and y or z
    if (t.s_c.size() <= 2) {
        all_orientations(t, out, 2);
        return out;
    }
    Vertex with_n2 = -1;
    for (Vertex s : t.s_c) {
        for (Vertex w : g.neighbours(s))
            if (ctx.layering.layer_of[w] == 2) {
                with_n2 = s;
                break;
            }
        if (with_n2 != -1)
            break;
    }
    if (with_n2 != -1) {
        std::size_t comp_size = 0;
        for (std::size_t i = 0; i < t.components(); ++i) {
            bool mine = std::binary_search(t.side_a[i].begin(), t.side_a[i].end(), with_n2) ||
                        std::binary_search(t.side_b[i].begin(), t.side_b[i].end(), with_n2);
            if (mine)
                comp_size = t.side_a[i].size() + t.side_b[i].size();
        }
        if (t.s_c.size() - comp_size >= 2)
            return out; // the common N_2 neighbour closes a bichromatic 4-cycle through x
        all_orientations(t, out, 2);
        return out;
    }
    // x separates S_c from the rest of the graph.
    std::size_t k = t.components();
    if (mode == ColouringMode::acyclic) {
        out.push_back(t.extend(std::vector<char>(k, 0)));
        return out;
    }
    if (!is_star_forest_where(g, inside))
        return out;
    out.push_back(t.extend(std::vector<char>(k, 0)));
    out.push_back(t.extend(std::vector<char>(k, 1)));
    return out;
}

/// Candidate extension realising the smallest class among extensions of c'.
inline std::vector<Colouring> ioct_candidates(const ExtensionTriple& t, const ColouringFamily& fam) {
    const auto tv = fam.context->triangle.vertices();
    Vertex y = tv[(fam.apex + 1) % 3], z = tv[(fam.apex + 2) % 3];
    Label cy = t.c_prime[y], cz = t.c_prime[z];
    std::size_t ny = t.c_prime.class_size(cy), nz = t.c_prime.class_size(cz);
    Label target = ny < nz || (ny == nz && cy < cz) ? cy : cz;
    std::vector<char> flip(t.components());
    for (std::size_t i = 0; i < flip.size(); ++i)
        flip[i] = t.flip_smaller_to(i, target);
    return {t.extend(flip)};
}

/// Candidate extensions for near-bipartiteness / IFVS.
inline std::vector<Colouring> ifvs_candidates(const Graph& g, const ColouringFamily& fam, const ExtensionTriple& t) {
    const TriangleContext& ctx = *fam.context;
    std::vector<Colouring> out;
    std::size_t k = t.components();
    out.push_back(t.extend(std::vector<char>(k, 0))); // covers the class of x
    if (k <= 1) {
        out.push_back(t.extend(std::vector<char>(k, 1)));
        return out;
    }
    int n = g.order();
    const Label labels[2] = {t.low, t.high};
    std::vector<int> comp_of(n, -1);
    for (std::size_t i = 0; i < k; ++i) {
        for (Vertex v : t.side_a[i])
            comp_of[v] = static_cast<int>(i);
        for (Vertex v : t.side_b[i])
            comp_of[v] = static_cast<int>(i);
    }
    const std::uint8_t yz = static_cast<std::uint8_t>(0b111 & ~(1u << fam.apex));
    Vertex common = -1;
    for (Vertex v : ctx.n1)
        if (ctx.t_mask[v] == yz) {
            common = v;
            break;
        }
    if (common != -1) {
        // Every S_c neighbour of `common` closes 4-cycles with x and y, z.
        for (Label target : labels) {
            std::vector<int> flip(k, -1);
            bool ok = true;
            for (Vertex s : g.neighbours(common)) {
                if (comp_of[s] < 0)
                    continue;
                int want = t.flip_for(static_cast<std::size_t>(comp_of[s]), s, target);
                int& f = flip[comp_of[s]];
                if (f != -1 && f != want)
                    ok = false;
                f = want;
            }
            if (!ok)
                continue;
            std::vector<std::size_t> free;
            for (std::size_t i = 0; i < k; ++i)
                if (flip[i] == -1)
                    free.push_back(i);
            if (free.size() > 3)
                throw PreconditionError("extension: common neighbour of y and z misses too many private "
                                        "neighbours; the input contains an induced chair");
            for (std::uint32_t bits = 0; bits < (1u << free.size()); ++bits) {
                std::vector<char> f(k);
                for (std::size_t i = 0; i < k; ++i)
                    f[i] = static_cast<char>(flip[i] == 1);
                for (std::size_t j = 0; j < free.size(); ++j)
                    f[free[j]] = static_cast<char>((bits >> j) & 1u);
                out.push_back(t.extend(f));
            }
        }
        return out;
    }
    bool touches_n2 = false;
    for (Vertex s : t.s_c)
        for (Vertex w : g.neighbours(s))
            if (ctx.layering.layer_of[w] == 2)
                touches_n2 = true;
    if (!touches_n2) {
        // x is a cut vertex: put the smaller side of every component in the target class.
        for (Label target : labels) {
            std::vector<char> flip(k);
            for (std::size_t i = 0; i < k; ++i)
                flip[i] = t.flip_smaller_to(i, target);
            out.push_back(t.extend(flip));
        }
        return out;
    }
    // A vertex of N_2 sees all of S_c: at most one S_c vertex stays outside the class.
    std::size_t inner_edges = 0;
    std::vector<char> in_sc(n, 0);
    for (Vertex v : t.s_c)
        in_sc[v] = 1;
    std::vector<int> inner_deg(n, 0);
    for (Vertex v : t.s_c)
        for (Vertex w : g.neighbours(v))
            if (in_sc[w]) {
                ++inner_deg[v];
                if (v < w)
                    ++inner_edges;
            }
    auto colour_all_but = [&](Vertex u, Label rest, Label own) {
        Colouring full = t.c_prime;
        for (Vertex v : t.s_c)
            full[v] = v == u ? own : rest;
        return full;
    };
    if (inner_edges == 0) {
        Vertex s = t.s_c.front();
        for (Label rest : labels)
            for (Label own : labels)
                out.push_back(colour_all_but(s, rest, own));
        return out;
    }
    for (Vertex u : t.s_c) {
        if (static_cast<std::size_t>(inner_deg[u]) != inner_edges)
            continue;
        for (Label rest : labels)
            out.push_back(colour_all_but(u, rest, rest == t.low ? t.high : t.low));
    }
    return out;
}

} // namespace detail

struct SolveOptions {
    std::uint64_t enumeration_cap = default_enumeration_cap;
    bool verify_chair_free = false;
    bool verify_diameter = false;
};

/// Answers `p` on a connected chair-free graph of diameter at most d.
inline Answer solve(const Graph& g, int d, const Problem& p, const SolveOptions& opts = {}) {
    if (d < 1)
        throw PreconditionError("solve: diameter bound must be >= 1");
    if (p.k && *p.k < 0)
        throw PreconditionError("solve: k must be non-negative");
    if (g.order() == 0)
        throw PreconditionError("solve: empty graph");
    if (!is_connected(g))
        throw PreconditionError("solve: graph is disconnected");
    if (opts.verify_diameter && diameter(g) > d)
        throw PreconditionError("solve: diameter exceeds the bound " + std::to_string(d));
    if (opts.verify_chair_free) {
        auto cc = is_chair_free(g);
        if (!cc.chair_free) {
            std::string w;
            for (Vertex v : cc.witness->image)
                w += " " + std::to_string(v + 1);
            throw PreconditionError("solve: induced chair on vertices" + w);
        }
    }
    int n = g.order();
    if (d == 1) {
        if (g.size() != static_cast<std::size_t>(n) * (n - 1) / 2)
            throw PreconditionError("solve: diameter bound 1 requires a complete graph");
        if (n > 3)
            return {};
        return detail::solve_by_enumeration(g, p, opts.enumeration_cap);
    }
    if (bipartition(g).bipartite())
        return solve_bipartite(g, d, p, opts.enumeration_cap);

    auto outcome = colouring_family(g, d, opts.enumeration_cap);
    if (!outcome.three_colourable)
        return {};
    const ColouringFamily& fam = outcome.family;
    Answer ans;
    if (fam.variant == ColouringFamily::Variant::whole_graph) {
        for (const Colouring& c : fam.members)
            if (detail::accept_colouring(g, c, p, ans))
                return ans;
        return {};
    }
    for (const Colouring& member : fam.members) {
        ExtensionTriple t = build_extension_triple(g, fam, member);
        std::vector<Colouring> cands;
        if (t.s_c.empty()) {
            cands.push_back(t.c_prime);
        } else {
            switch (p.kind) {
            case Problem::Kind::threecol:
                cands.push_back(t.extend(std::vector<char>(t.components(), 0)));
                break;
            case Problem::Kind::acyclic3col:
            case Problem::Kind::star3col:
                cands = detail::acyclic_star_candidates(g, fam, t, p.mode());
                break;
            case Problem::Kind::ioct:
                cands = detail::ioct_candidates(t, fam);
                break;
            case Problem::Kind::nearbip:
            case Problem::Kind::ifvs:
                cands = detail::ifvs_candidates(g, fam, t);
                break;
            }
        }
        for (const Colouring& c : cands)
            if (detail::accept_colouring(g, c, p, ans))
                return ans;
    }
    return {};
}

} // namespace diamkit
