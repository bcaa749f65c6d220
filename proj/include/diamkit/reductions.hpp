#pragma once

// Hardness constructions and their verification: the diameter-2 Independent
// Set gadgets, the dominating-vertex reduction, the variant-A NAE transformer,
// edge substitution, the IOCT / acyclic / star 3-colouring gadgets built from
// NAE formulas, and the extremal family G_d.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "colouring.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "nae.hpp"
#include "oracle.hpp"
#include "pattern.hpp"
#include "problem.hpp"

namespace diamkit {

enum class GadgetKind { is_c3_free, is_k14_free, ioct, acyclic, star, extremal };

inline const char* to_string(GadgetKind k) {
    switch (k) {
    case GadgetKind::is_c3_free:
        return "is-c3-free";
    case GadgetKind::is_k14_free:
        return "is-k14-free";
    case GadgetKind::ioct:
        return "ioct";
    case GadgetKind::acyclic:
        return "acyclic";
    case GadgetKind::star:
        return "star";
    case GadgetKind::extremal:
        return "extremal";
    }
    return "?";
}

inline std::optional<GadgetKind> parse_gadget_kind(std::string_view s) {
    for (auto k : {GadgetKind::is_c3_free, GadgetKind::is_k14_free, GadgetKind::ioct, GadgetKind::acyclic,
                   GadgetKind::star, GadgetKind::extremal})
        if (s == to_string(k))
            return k;
    return std::nullopt;
}

struct ForbiddenPattern {
    std::string name;
    PatternSpec spec;
};

/// A constructed instance with its role map and the structural claims the
/// construction guarantees.
struct GadgetOutput {
    GadgetKind kind = GadgetKind::ioct;
    Graph graph;
    std::optional<long long> k;          ///< target transversal size (ioct)
    std::vector<std::string> roles;      ///< one per vertex
    std::optional<int> max_diameter;
    std::optional<int> exact_diameter;
    std::vector<ForbiddenPattern> forbidden;
    std::optional<NaeFormula> formula;   ///< NAE source of the 3-colouring gadgets
    std::optional<Graph> source;         ///< Independent Set source graph
    long long alpha_offset = 0;          ///< alpha(graph) = alpha(source) + alpha_offset

    Vertex role_vertex(std::string_view role) const {
        for (std::size_t i = 0; i < roles.size(); ++i)
            if (roles[i] == role)
                return static_cast<Vertex>(i);
        return -1;
    }
};

namespace detail {

inline std::string literal_role(Literal l) {
    return std::string(l.positive ? "v_x" : "v_-x") + std::to_string(l.var + 1);
}

inline bool triangle_free(const Graph& g) {
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : g.neighbours(u)) {
            if (v <= u)
                continue;
            auto a = g.neighbours(u), b = g.neighbours(v);
            std::size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] == b[j])
                    return false;
                a[i] < b[j] ? ++i : ++j;
            }
        }
    return true;
}

class GraphBuilder {
  public:
    Vertex add(std::string role) {
        roles.push_back(std::move(role));
        return static_cast<Vertex>(roles.size() - 1);
    }
    void edge(Vertex u, Vertex v) { edges.emplace_back(std::min(u, v), std::max(u, v)); }
    Graph graph() const { return Graph::from_edges(static_cast<int>(roles.size()), edges); }

    std::vector<std::string> roles;
    std::vector<Edge> edges;
};

} // namespace detail

// ---------------------------------------------------------------------------
// Independent Set on diameter-2 graphs

/// Triangle-free diameter-2 instance with alpha(G') = alpha(G) + n^2.
inline GadgetOutput build_is_diam2_trianglefree(const Graph& g) {
    int n = g.order();
    if (n < 2)
        throw PreconditionError("C3-free gadget: needs at least two vertices");
    if (!is_connected(g))
        throw PreconditionError("C3-free gadget: graph is disconnected");
    if (!detail::triangle_free(g))
        throw PreconditionError("C3-free gadget: graph contains a triangle");
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == n - 1)
            throw PreconditionError("C3-free gadget: vertex " + std::to_string(v + 1) + " is dominating");
    detail::GraphBuilder b;
    for (Vertex v = 0; v < n; ++v)
        b.add("g" + std::to_string(v + 1));
    for (auto [u, v] : g.edges())
        b.edge(u, v);
    std::vector<Vertex> xs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v))
                continue;
            std::vector<Vertex> iset{u, v};
            for (Vertex w = 0; w < n; ++w) {
                if (w == u || w == v)
                    continue;
                if (std::none_of(iset.begin(), iset.end(), [&](Vertex s) { return g.adjacent(s, w); }))
                    iset.push_back(w);
            }
            Vertex x = b.add("x_" + std::to_string(u + 1) + "_" + std::to_string(v + 1));
            xs.push_back(x);
            for (Vertex s : iset)
                b.edge(x, s);
        }
    for (int i = 0; i < n * n; ++i) {
        Vertex y = b.add("y" + std::to_string(i + 1));
        for (Vertex x : xs)
            b.edge(x, y);
    }
    GadgetOutput out;
    out.kind = GadgetKind::is_c3_free;
    out.graph = b.graph();
    out.roles = std::move(b.roles);
    out.max_diameter = 2;
    out.forbidden.push_back({"C3", PatternSpec::complete(3)});
    out.source = g;
    out.alpha_offset = static_cast<long long>(n) * n;
    return out;
}

/// K_{1,4}-free diameter-2 instance. Degree-1 (and resulting isolated)
/// vertices are taken into the independent set first; the remaining core
/// receives a vertex x_{e,f} per pair of disjoint edges plus an apex y, all
/// forming a clique. alpha(G') = alpha(core) + 1.
inline GadgetOutput build_is_diam2_k14free(const Graph& g) {
    int n = g.order();
    if (n == 0 || !is_connected(g))
        throw PreconditionError("K14-free gadget: graph must be connected and non-empty");
    if (!detail::triangle_free(g))
        throw PreconditionError("K14-free gadget: graph contains a triangle");
    if (g.max_degree() > 3)
        throw PreconditionError("K14-free gadget: a triangle-free graph of maximum degree > 3 contains K_{1,4}");
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n);
    for (Vertex v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    long long picked = 0;
    auto remove = [&](Vertex v) {
        alive[v] = 0;
        for (Vertex w : g.neighbours(v))
            if (alive[w])
                --deg[w];
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[v] || deg[v] > 1)
                continue;
            ++picked;
            Vertex nb = -1;
            for (Vertex w : g.neighbours(v))
                if (alive[w])
                    nb = w;
            remove(v);
            if (nb != -1)
                remove(nb);
            changed = true;
            break;
        }
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
        if (alive[v])
            keep.push_back(v);
    auto core = induced_subgraph(g, keep);

    detail::GraphBuilder b;
    for (Vertex v : core.to_host)
        b.add("g" + std::to_string(v + 1));
    auto edges = core.graph.edges();
    for (auto [u, v] : edges)
        b.edge(u, v);
    std::vector<Vertex> xs;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, bb] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || bb == c || bb == d)
                continue;
            Vertex x = b.add("x_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            xs.push_back(x);
            for (Vertex e : {a, bb, c, d})
                b.edge(x, e);
        }
    xs.push_back(b.add("y"));
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            b.edge(xs[i], xs[j]);
    GadgetOutput out;
    out.kind = GadgetKind::is_k14_free;
    out.graph = b.graph();
    out.roles = std::move(b.roles);
    out.max_diameter = 2;
    out.forbidden.push_back({"K1,4", PatternSpec::star(4)});
    out.source = g;
    out.alpha_offset = 1 - picked;
    return out;
}

inline Graph add_dominating_vertex(const Graph& g) {
    auto edges = g.edges();
    for (Vertex v = 0; v < g.order(); ++v)
        edges.emplace_back(v, g.order());
    return Graph::from_edges(g.order() + 1, edges);
}

// ---------------------------------------------------------------------------
// Variant A of NAE-3-SAT

struct VariantA {
    NaeFormula formula;
    CoveringCollection collection;
};

namespace detail {

/// Adds y, z1, z2 with clauses (y,z1,-z2), (y,-z1,z2), (z,-z1,-z2) and
/// renames two occurrences of z. Returns the indices of the three new clauses.
inline std::array<int, 3> split_literal(NaeFormula& f, Literal z, std::pair<int, int> first,
                                        std::pair<int, int> second) {
    Literal y{f.vars, true}, z1{f.vars + 1, true}, z2{f.vars + 2, true};
    f.vars += 3;
    f.clauses[first.first][first.second] = z1;
    f.clauses[second.first][second.second] = z2;
    int base = f.clause_count();
    f.clauses.push_back({y, z1, z2.negated()});
    f.clauses.push_back({y, z1.negated(), z2});
    f.clauses.push_back({z, z1.negated(), z2.negated()});
    return {base, base + 1, base + 2};
}

inline std::vector<std::pair<int, int>> occurrences_of(const NaeFormula& f, Literal z) {
    std::vector<std::pair<int, int>> pos;
    for (int c = 0; c < f.clause_count(); ++c)
        for (int j = 0; j < 3; ++j)
            if (f.clauses[c][j] == z)
                pos.emplace_back(c, j);
    return pos;
}

} // namespace detail

/// Equivalent formula in which every literal occurs at most twice, with a
/// covering collection.
inline VariantA to_variant_a(const NaeFormula& input) {
    input.validate();
    NaeFormula f = input;
    // Step 1: split literals with three or more occurrences.
    for (;;) {
        auto occ = f.occurrence_counts();
        int heavy = -1;
        for (int i = 0; i < 2 * f.vars; ++i)
            if (occ[i] >= 3) {
                heavy = i;
                break;
            }
        if (heavy == -1)
            break;
        Literal z{heavy / 2, heavy % 2 == 0};
        auto pos = detail::occurrences_of(f, z);
        detail::split_literal(f, z, pos[0], pos[1]);
    }
    // Step 2: first-occurrence collection, then repair uncovered clauses.
    std::map<int, int> pair_of; // literal index -> clause
    for (int c = 0; c < f.clause_count(); ++c)
        for (const auto& l : f.clauses[c])
            pair_of.emplace(l.index(), c);
    auto first_uncovered = [&]() {
        std::vector<char> covered(f.clause_count(), 0);
        for (auto [lit, c] : pair_of)
            covered[c] = 1;
        for (int c = 0; c < f.clause_count(); ++c)
            if (!covered[c])
                return c;
        return -1;
    };
    for (int c1; (c1 = first_uncovered()) != -1;) {
        Literal z = f.clauses[c1][0];
        int c2 = pair_of.at(z.index());
        auto pos = detail::occurrences_of(f, z);
        std::pair<int, int> in_c1{-1, -1}, in_c2{-1, -1};
        for (auto p : pos) {
            if (p.first == c1 && in_c1.first == -1)
                in_c1 = p;
            if (p.first == c2 && in_c2.first == -1)
                in_c2 = p;
        }
        Literal y{f.vars, true}, z1{f.vars + 1, true}, z2{f.vars + 2, true};
        auto [a, bcl, d] = detail::split_literal(f, z, in_c1, in_c2);
        pair_of.erase(z.index());
        pair_of[y.index()] = bcl;
        pair_of[z.index()] = d;
        pair_of[z1.index()] = c1;
        pair_of[z2.index()] = c2;
        pair_of[z1.negated().index()] = d;
        pair_of[z2.negated().index()] = a;
    }
    VariantA out;
    out.formula = std::move(f);
    for (auto [lit, c] : pair_of)
        out.collection.pairs.emplace_back(Literal{lit / 2, lit % 2 == 0}, c);
    return out;
}

// ---------------------------------------------------------------------------
// Edge substitution

enum class SubstitutionPattern { k23, k22 };

struct Substitution {
    Graph graph;
    std::vector<std::vector<Vertex>> inner; ///< new vertices per listed edge, numbered after the originals
};

inline Substitution substitute_edges(const Graph& g, const std::vector<Edge>& edges, SubstitutionPattern pattern) {
    std::set<Edge> chosen;
    std::vector<char> used(g.order(), 0);
    for (auto [u, v] : edges) {
        Edge e{std::min(u, v), std::max(u, v)};
        if (e.first < 0 || e.second >= g.order() || !g.adjacent(e.first, e.second))
            throw PreconditionError("substitute_edges: (" + std::to_string(u + 1) + ", " + std::to_string(v + 1) +
                                    ") is not an edge");
        if (!chosen.insert(e).second)
            throw PreconditionError("substitute_edges: edge listed twice");
        if (pattern == SubstitutionPattern::k23) {
            if (used[e.first] || used[e.second])
                throw PreconditionError("substitute_edges: K_{2,3} substitution needs a matching");
            used[e.first] = used[e.second] = 1;
        }
    }
    int width = pattern == SubstitutionPattern::k23 ? 3 : 2;
    Substitution out;
    std::vector<Edge> result;
    for (auto e : g.edges())
        if (!chosen.count(e))
            result.push_back(e);
    int next = g.order();
    for (auto [u, v] : edges) {
        out.inner.emplace_back();
        for (int i = 0; i < width; ++i) {
            out.inner.back().push_back(next);
            result.emplace_back(u, next);
            result.emplace_back(v, next);
            ++next;
        }
    }
    out.graph = Graph::from_edges(next, result);
    return out;
}

// ---------------------------------------------------------------------------
// NAE gadgets

namespace detail {

struct IoctLayout {
    Graph graph;
    std::vector<std::string> roles;
    Vertex z = -1;
    std::vector<std::array<Vertex, 3>> clause;  ///< c_{i_j}
    Vertex literal_vertex(Literal l) const { return 2 * l.var + (l.positive ? 0 : 1); }
};

inline IoctLayout ioct_layout(const NaeFormula& f) {
    IoctLayout L;
    detail::GraphBuilder b;
    for (int v = 0; v < f.vars; ++v) {
        b.add(literal_role({v, true}));
        b.add(literal_role({v, false}));
        b.edge(2 * v, 2 * v + 1);
    }
    L.z = b.add("z");
    for (int v = 0; v < 2 * f.vars; ++v)
        b.edge(L.z, v);
    for (int i = 0; i < f.clause_count(); ++i) {
        std::array<Vertex, 3> c{};
        for (int j = 0; j < 3; ++j)
            c[j] = b.add("c" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
        b.edge(c[0], c[1]);
        b.edge(c[0], c[2]);
        b.edge(c[1], c[2]);
        for (int j = 0; j < 3; ++j)
            b.edge(L.literal_vertex(f.clauses[i][j]), c[j]);
        L.clause.push_back(c);
    }
    L.graph = b.graph();
    L.roles = std::move(b.roles);
    return L;
}

} // namespace detail

/// 3-colouring gadget of a variant-A formula; k = m + 1.
inline GadgetOutput build_ioct_gadget(const NaeFormula& f) {
    f.validate();
    if (!f.variant_a_valid())
        throw PreconditionError("IOCT gadget: some literal occurs more than twice");
    auto L = detail::ioct_layout(f);
    GadgetOutput out;
    out.kind = GadgetKind::ioct;
    out.graph = std::move(L.graph);
    out.roles = std::move(L.roles);
    out.k = f.clause_count() + 1;
    out.max_diameter = 4;
    out.forbidden.push_back({"K1,4^3", PatternSpec::subdivided_star(4, 3)});
    out.formula = f;
    return out;
}

/// Edges of the IOCT gadget that the acyclic gadget replaces by K_{2,3}:
/// v_l c_{i_j} for the first position j of l in C_i when (l, C_i) is in the
/// collection, and the triangle edge between the two uncovered positions of
/// a clause with exactly one covered position.
inline std::vector<Edge> acyclic_substituted_edges(const NaeFormula& f, const CoveringCollection& col) {
    validate_collection(f, col);
    if (uncovered_count(f, col) > 0)
        throw PreconditionError("acyclic gadget: collection is not covering");
    auto L = detail::ioct_layout(f);
    std::vector<Edge> out;
    for (int i = 0; i < f.clause_count(); ++i) {
        std::array<char, 3> covered{0, 0, 0};
        for (const auto& [lit, c] : col.pairs) {
            if (c != i)
                continue;
            for (int j = 0; j < 3; ++j)
                if (f.clauses[i][j] == lit) {
                    covered[j] = 1;
                    break;
                }
        }
        for (int j = 0; j < 3; ++j)
            if (covered[j])
                out.emplace_back(L.literal_vertex(f.clauses[i][j]), L.clause[i][j]);
        int open = 3 - covered[0] - covered[1] - covered[2];
        if (open == 2) {
            std::vector<Vertex> e;
            for (int j = 0; j < 3; ++j)
                if (!covered[j])
                    e.push_back(L.clause[i][j]);
            out.emplace_back(e[0], e[1]);
        }
    }
    return out;
}

inline GadgetOutput build_acyclic_gadget(const NaeFormula& f, const CoveringCollection& col) {
    f.validate();
    if (!f.variant_a_valid())
        throw PreconditionError("acyclic gadget: some literal occurs more than twice");
    auto edges = acyclic_substituted_edges(f, col);
    auto L = detail::ioct_layout(f);
    auto sub = substitute_edges(L.graph, edges, SubstitutionPattern::k23);
    GadgetOutput out;
    out.kind = GadgetKind::acyclic;
    out.graph = std::move(sub.graph);
    out.roles = std::move(L.roles);
    for (std::size_t e = 0; e < edges.size(); ++e)
        for (std::size_t i = 0; i < sub.inner[e].size(); ++i)
            out.roles.push_back("w_" + out.roles[edges[e].first] + "_" + out.roles[edges[e].second] + "_" +
                                std::to_string(i + 1));
    out.max_diameter = 6;
    out.forbidden.push_back({"K1,6^5", PatternSpec::subdivided_star(6, 5)});
    out.formula = f;
    return out;
}

/// Vertex layout of the star gadget.
struct StarLayout {
    Vertex z = -1, z1 = -1, z2 = -1;
    std::vector<Vertex> v;                      ///< v_x per variable
    std::vector<std::array<Vertex, 4>> p, q;    ///< ladders per variable
    std::vector<std::array<Vertex, 3>> clause;  ///< c_{i_j}
    std::vector<std::array<int, 3>> slot;       ///< ladder index (0..2) of the q-vertex attached to c_{i_j}
};

inline StarLayout star_layout(const NaeFormula& f) {
    StarLayout L;
    int next = 0;
    L.z = next++;
    L.z1 = next++;
    L.z2 = next++;
    for (int x = 0; x < f.vars; ++x) {
        L.v.push_back(next++);
        std::array<Vertex, 4> p{}, q{};
        for (int j = 0; j < 4; ++j)
            p[j] = next++;
        for (int j = 0; j < 4; ++j)
            q[j] = next++;
        L.p.push_back(p);
        L.q.push_back(q);
    }
    std::vector<int> used(f.vars, 0);
    for (int i = 0; i < f.clause_count(); ++i) {
        std::array<Vertex, 3> c{};
        std::array<int, 3> s{};
        for (int j = 0; j < 3; ++j) {
            c[j] = next++;
            int x = f.clauses[i][j].var;
            if (used[x] >= 3)
                throw PreconditionError("star gadget: variable x" + std::to_string(x + 1) +
                                        " occurs more than three times; only q^1..q^3 take clause attachments");
            s[j] = used[x]++;
        }
        L.clause.push_back(c);
        L.slot.push_back(s);
    }
    return L;
}

inline GadgetOutput build_star_gadget(const NaeFormula& f) {
    f.validate();
    if (!f.variant_b_valid())
        throw PreconditionError("star gadget: formula must be all-positive with each literal in at most four clauses");
    StarLayout L = star_layout(f);
    detail::GraphBuilder b;
    b.add("z");
    b.add("z'");
    b.add("z''");
    for (int x = 0; x < f.vars; ++x) {
        std::string s = std::to_string(x + 1);
        b.add("v_x" + s);
        for (int j = 0; j < 4; ++j)
            b.add("p" + std::to_string(j + 1) + "_x" + s);
        for (int j = 0; j < 4; ++j)
            b.add("q" + std::to_string(j + 1) + "_x" + s);
    }
    for (int i = 0; i < f.clause_count(); ++i)
        for (int j = 0; j < 3; ++j)
            b.add("c" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    b.edge(L.z, L.z1);
    b.edge(L.z, L.z2);
    b.edge(L.z1, L.z2);
    std::vector<Edge> doubled;
    for (int x = 0; x < f.vars; ++x) {
        b.edge(L.z, L.v[x]);
        for (int j = 0; j < 4; ++j) {
            b.edge(L.v[x], L.p[x][j]);
            b.edge(L.p[x][j], L.q[x][j]);
            doubled.emplace_back(L.p[x][j], L.q[x][j]);
        }
    }
    for (int i = 0; i < f.clause_count(); ++i) {
        const auto& c = L.clause[i];
        for (auto [a, bb] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
            b.edge(c[a], c[bb]);
            doubled.emplace_back(c[a], c[bb]);
        }
        for (int j = 0; j < 3; ++j) {
            Vertex qv = L.q[f.clauses[i][j].var][L.slot[i][j]];
            b.edge(qv, c[j]);
            doubled.emplace_back(qv, c[j]);
        }
    }
    auto sub = substitute_edges(b.graph(), doubled, SubstitutionPattern::k22);
    GadgetOutput out;
    out.kind = GadgetKind::star;
    out.graph = std::move(sub.graph);
    out.roles = std::move(b.roles);
    for (std::size_t e = 0; e < doubled.size(); ++e)
        for (std::size_t i = 0; i < sub.inner[e].size(); ++i)
            out.roles.push_back("w_" + out.roles[doubled[e].first] + "_" + out.roles[doubled[e].second] + "_" +
                                std::to_string(i + 1));
    out.max_diameter = 14;
    out.forbidden.push_back({"K1,6^14", PatternSpec::subdivided_star(6, 14)});
    out.formula = f;
    return out;
}

/// Star 3-colouring of the star gadget with z = 1, z' = 2, z'' = 3, v_x and
/// its q-ladder in class 2 when x is true (3 otherwise) and its p-ladder in
/// the other class; clause and substitution vertices are completed by search.
inline std::optional<Colouring> star_certificate(const GadgetOutput& out, const std::vector<bool>& assignment) {
    const NaeFormula& f = *out.formula;
    if (static_cast<int>(assignment.size()) != f.vars)
        throw PreconditionError("star certificate: assignment size does not match the formula");
    StarLayout L = star_layout(f);
    std::vector<Label> fixed(out.graph.order(), 0);
    fixed[L.z] = 1;
    fixed[L.z1] = 2;
    fixed[L.z2] = 3;
    for (int x = 0; x < f.vars; ++x) {
        Label t = assignment[x] ? 2 : 3, o = assignment[x] ? 3 : 2;
        fixed[L.v[x]] = t;
        for (int j = 0; j < 4; ++j) {
            fixed[L.p[x][j]] = o;
            fixed[L.q[x][j]] = t;
        }
    }
    oracle::SearchOptions opts;
    opts.fixed = std::move(fixed);
    opts.order = bfs_tree(out.graph, L.z).order;
    if (static_cast<int>(opts.order.size()) != out.graph.order())
        throw PreconditionError("star certificate: gadget is disconnected");
    return oracle::search_3_colouring(out.graph, ColouringMode::star, opts);
}

/// Truth assignment read off a 3-colouring of the star gadget: after
/// swapping labels so that z has label 1, x is true iff q^1_x has label 2.
inline std::vector<bool> star_assignment(const GadgetOutput& out, const Colouring& c) {
    const NaeFormula& f = *out.formula;
    StarLayout L = star_layout(f);
    Label cz = c[L.z];
    auto norm = [&](Label l) -> Label { return l == cz ? 1 : l == 1 ? cz : l; };
    std::vector<bool> a(f.vars);
    for (int x = 0; x < f.vars; ++x)
        a[x] = norm(c[L.q[x][0]]) == 2;
    return a;
}

// ---------------------------------------------------------------------------
// Extremal family

inline constexpr int max_extremal_depth = 22;

/// G_d with vertex v_i^l numbered 3(2^{l-1} - 1) + i - 1.
inline Graph generate_Gd(int d) {
    if (d < 1)
        throw PreconditionError("generate_Gd: d must be >= 1");
    if (d > max_extremal_depth)
        throw PreconditionError("generate_Gd: d must be <= " + std::to_string(max_extremal_depth));
    auto offset = [](int level) { return 3 * ((1 << (level - 1)) - 1); };
    std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
    for (int l = 1; l < d; ++l) {
        int width = 3 << (l - 1);
        for (int i = 0; i < width; ++i) {
            Vertex parent = offset(l) + i;
            Vertex a = offset(l + 1) + 2 * i, b2 = a + 1;
            edges.emplace_back(parent, a);
            edges.emplace_back(parent, b2);
            edges.emplace_back(a, b2);
        }
    }
    return Graph::from_edges(3 * ((1 << d) - 1), edges);
}

inline GadgetOutput extremal_gadget(int d) {
    GadgetOutput out;
    out.kind = GadgetKind::extremal;
    out.graph = generate_Gd(d);
    for (int l = 1; l <= d; ++l)
        for (int i = 1; i <= (3 << (l - 1)); ++i)
            out.roles.push_back("v" + std::to_string(l) + "_" + std::to_string(i));
    out.exact_diameter = 2 * d - 1;
    out.forbidden.push_back({"chair", PatternSpec::chair()});
    return out;
}

/// 6 * 2^{3 (2^{d-1} - 1)}.
inline boost::multiprecision::cpp_int a_formula(int d) {
    if (d < 1)
        throw PreconditionError("a_formula: d must be >= 1");
    if (d > 26) // the value has 3 * 2^{d-1} bits
        throw PreconditionError("a_formula: d must be <= 26");
    boost::multiprecision::cpp_int exponent = 3 * ((boost::multiprecision::cpp_int(1) << (d - 1)) - 1);
    return boost::multiprecision::cpp_int(6) << static_cast<unsigned>(exponent);
}

// ---------------------------------------------------------------------------
// Verification

struct ClaimResult {
    enum class Status { pass, fail, skipped };
    std::string name;
    Status status = Status::skipped;
    std::string detail;
};

inline const char* to_string(ClaimResult::Status s) {
    switch (s) {
    case ClaimResult::Status::pass:
        return "pass";
    case ClaimResult::Status::fail:
        return "fail";
    case ClaimResult::Status::skipped:
        return "skipped";
    }
    return "?";
}

struct GadgetReport {
    std::vector<ClaimResult> claims;

    bool any_failed() const {
        return std::any_of(claims.begin(), claims.end(),
                           [](const ClaimResult& c) { return c.status == ClaimResult::Status::fail; });
    }
    const ClaimResult* find(std::string_view prefix) const {
        for (const auto& c : claims)
            if (c.name.starts_with(prefix))
                return &c;
        return nullptr;
    }
};

struct VerifyOptions {
    int oracle_cap = oracle::default_brute_force_cap; ///< IOCT brute force
    int mis_cap = 128;
    int nae_cap = oracle::default_nae_cap;
    int search_vertex_cap = 400;                       ///< acyclic / star colouring search
    std::uint64_t search_node_cap = 50'000'000;
    int pattern_cap = default_pattern_cap;
};

namespace detail {

inline ClaimResult check_diameter(const GadgetOutput& out) {
    ClaimResult r;
    bool exact = out.exact_diameter.has_value();
    int bound = exact ? *out.exact_diameter : *out.max_diameter;
    r.name = std::string(exact ? "diameter == " : "diameter <= ") + std::to_string(bound);
    if (out.graph.order() == 0 || !is_connected(out.graph)) {
        r.status = ClaimResult::Status::fail;
        r.detail = "graph is disconnected";
        return r;
    }
    int d = diameter(out.graph);
    r.detail = "measured " + std::to_string(d);
    r.status = (exact ? d == bound : d <= bound) ? ClaimResult::Status::pass : ClaimResult::Status::fail;
    return r;
}

inline ClaimResult check_forbidden(const GadgetOutput& out, const ForbiddenPattern& fp, int pattern_cap) {
    ClaimResult r;
    r.name = fp.name + "-free";
    Graph pattern = build_pattern(fp.spec);
    InducedSearchOptions opts;
    opts.pattern_cap = pattern_cap;
    // Seed the search at host vertices able to host the pattern's centre.
    std::vector<Vertex> roots;
    for (Vertex v = 0; v < out.graph.order(); ++v)
        if (out.graph.degree(v) >= pattern.max_degree())
            roots.push_back(v);
    opts.root_candidates = roots;
    auto emb = find_induced(out.graph, pattern, opts);
    if (!emb) {
        r.status = ClaimResult::Status::pass;
        return r;
    }
    r.status = ClaimResult::Status::fail;
    r.detail = "induced copy on";
    for (Vertex v : emb->image)
        r.detail += " " + out.roles[v];
    return r;
}

inline std::string assignment_string(const std::vector<bool>& a) {
    std::string s;
    for (bool b : a)
        s += b ? 'T' : 'F';
    return s;
}

inline std::vector<bool> assignment_from_literals(const GadgetOutput& out, const Colouring& c, Vertex z) {
    const NaeFormula& f = *out.formula;
    Label cz = c[z];
    std::vector<bool> a(f.vars);
    // Normalise z to label 1; literal vertices then use {2, 3}, and 2 means true.
    auto norm = [&](Label l) -> Label { return l == cz ? 1 : l == 1 ? cz : l; };
    for (int x = 0; x < f.vars; ++x)
        a[x] = norm(c[2 * x]) == 2;
    return a;
}

inline ClaimResult check_nae_equivalence(const GadgetOutput& out, const VerifyOptions& opts) {
    ClaimResult r;
    const NaeFormula& f = *out.formula;
    const Graph& g = out.graph;
    switch (out.kind) {
    case GadgetKind::ioct:
        r.name = "IOCT of size k <=> NAE-satisfiable";
        break;
    case GadgetKind::acyclic:
        r.name = "acyclic 3-colourable <=> NAE-satisfiable";
        break;
    default:
        r.name = "star 3-colourable <=> NAE-satisfiable";
        break;
    }
    if (f.vars > opts.nae_cap) {
        r.detail = "formula above NAE cap";
        return r;
    }
    auto sat = oracle::nae_brute(f, opts.nae_cap);
    auto fail = [&](std::string why) {
        r.status = ClaimResult::Status::fail;
        r.detail = std::move(why);
        return r;
    };
    if (out.kind == GadgetKind::ioct) {
        if (g.order() > opts.oracle_cap) {
            r.detail = "graph above oracle cap";
            return r;
        }
        auto res = oracle::brute_force(g, Problem::ioct(out.k), opts.oracle_cap);
        if (res.yes != sat.has_value())
            return fail(std::string("NAE ") + (sat ? "satisfiable" : "unsatisfiable") + ", IOCT " +
                        (res.yes ? "exists" : "absent"));
        if (res.yes) {
            // The IOCT witness colouring reads off a NAE assignment.
            Vertex z = 2 * f.vars;
            auto a = assignment_from_literals(out, *res.witness_colouring, z);
            if (!f.satisfied_by(a))
                return fail("assignment read off the witness is not NAE-satisfying");
        }
        r.status = ClaimResult::Status::pass;
        r.detail = sat ? "both hold" : "neither holds";
        return r;
    }
    if (g.order() > opts.search_vertex_cap) {
        r.detail = "graph above search cap";
        return r;
    }
    Vertex z = out.kind == GadgetKind::acyclic ? 2 * f.vars : 0;
    oracle::SearchOptions so;
    so.order = bfs_tree(g, z).order;
    if (static_cast<int>(so.order.size()) != g.order())
        return fail("graph is disconnected");
    so.fixed.assign(g.order(), 0);
    so.fixed[z] = 1;
    if (out.kind == GadgetKind::star)
        so.fixed[1] = 2; // z' ; z'' is then forced to 3
    so.node_cap = opts.search_node_cap;
    std::optional<Colouring> found;
    try {
        found = oracle::search_3_colouring(g, out.kind == GadgetKind::acyclic ? ColouringMode::acyclic : ColouringMode::star, so);
    } catch (const CapOverflow&) {
        r.detail = "colouring search above node cap";
        return r;
    }
    if (found.has_value() != sat.has_value())
        return fail(std::string("NAE ") + (sat ? "satisfiable" : "unsatisfiable") + ", colouring " +
                    (found ? "exists" : "absent"));
    if (out.kind == GadgetKind::acyclic) {
        if (found && !f.satisfied_by(assignment_from_literals(out, *found, z)))
            return fail("assignment read off the colouring is not NAE-satisfying");
    } else {
        if (found) {
            auto a = star_assignment(out, *found);
            if (!f.satisfied_by(a))
                return fail("assignment " + assignment_string(a) + " read off the star colouring is not NAE-satisfying");
        }
        if (sat) {
            auto cert = star_certificate(out, *sat);
            if (!cert || !verify_colouring(g, *cert, ColouringMode::star))
                return fail("no star colouring extends assignment " + assignment_string(*sat));
        }
    }
    r.status = ClaimResult::Status::pass;
    r.detail = sat ? "both hold" : "neither holds";
    return r;
}

} // namespace detail

/// Checks every recorded claim; equivalences above the configured caps are
/// reported as skipped.
inline GadgetReport verify_gadget(const GadgetOutput& out, const VerifyOptions& opts = {}) {
    GadgetReport rep;
    {
        ClaimResult r;
        r.name = "role map total";
        auto named = std::count_if(out.roles.begin(), out.roles.end(), [](const std::string& s) { return !s.empty(); });
        bool total = out.roles.size() == static_cast<std::size_t>(out.graph.order()) &&
                     named == static_cast<long>(out.roles.size());
        r.status = total ? ClaimResult::Status::pass : ClaimResult::Status::fail;
        r.detail = std::to_string(named) + " roles for " + std::to_string(out.graph.order()) + " vertices";
        rep.claims.push_back(r);
    }
    if (out.max_diameter || out.exact_diameter)
        rep.claims.push_back(detail::check_diameter(out));
    for (const auto& fp : out.forbidden)
        rep.claims.push_back(detail::check_forbidden(out, fp, opts.pattern_cap));
    if (out.source) {
        ClaimResult r;
        r.name = "alpha(G') = alpha(G) + " + std::to_string(out.alpha_offset);
        if (out.source->order() > opts.mis_cap || out.graph.order() > opts.mis_cap) {
            r.detail = "graph above independent set cap";
        } else {
            long long a = *oracle::max_independent_set(*out.source, opts.mis_cap).optimum;
            long long b = *oracle::max_independent_set(out.graph, opts.mis_cap).optimum;
            r.detail = "alpha(G) = " + std::to_string(a) + ", alpha(G') = " + std::to_string(b);
            r.status = b == a + out.alpha_offset ? ClaimResult::Status::pass : ClaimResult::Status::fail;
        }
        rep.claims.push_back(r);
    }
    if (out.formula)
        rep.claims.push_back(detail::check_nae_equivalence(out, opts));
    return rep;
}

// ---------------------------------------------------------------------------
// Gadget file: a graph file whose comment lines carry the metadata.
//   #@ kind <kind>
//   #@ k <k>
//   #@ role <vertex> <name>
//   #@ alpha-offset <offset>
//   #@ source <graph line>      (Independent Set gadgets)
//   #@ nae <formula line>       (3-colouring gadgets)

inline void write_gadget(std::ostream& os, const GadgetOutput& out) {
    os << "#@ kind " << to_string(out.kind) << '\n';
    if (out.k)
        os << "#@ k " << *out.k << '\n';
    if (out.kind == GadgetKind::extremal && out.exact_diameter)
        os << "#@ depth " << (*out.exact_diameter + 1) / 2 << '\n';
    for (std::size_t v = 0; v < out.roles.size(); ++v)
        os << "#@ role " << v + 1 << ' ' << out.roles[v] << '\n';
    if (out.source) {
        os << "#@ alpha-offset " << out.alpha_offset << '\n';
        std::istringstream src(serialize_graph(*out.source));
        for (std::string line; std::getline(src, line);)
            os << "#@ source " << line << '\n';
    }
    if (out.formula) {
        std::ostringstream nae;
        write_nae(nae, *out.formula);
        std::istringstream src(nae.str());
        for (std::string line; std::getline(src, line);)
            os << "#@ nae " << line << '\n';
    }
    write_graph(os, out.graph);
}

/// Reads a gadget file and restores the claims recorded for its kind.
inline GadgetOutput read_gadget(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::istringstream lines(text);
    std::optional<GadgetKind> kind;
    std::optional<long long> k;
    std::optional<int> depth;
    long long offset = 0;
    std::map<int, std::string> roles;
    std::string source, nae;
    std::size_t ln = 0;
    for (std::string line; std::getline(lines, line);) {
        ++ln;
        if (!line.starts_with("#@ "))
            continue;
        std::string_view rest = std::string_view(line).substr(3);
        auto sp = rest.find(' ');
        std::string_view key = rest.substr(0, sp);
        std::string_view value = sp == std::string_view::npos ? std::string_view{} : rest.substr(sp + 1);
        if (key == "kind") {
            kind = parse_gadget_kind(detail::trim(value));
            if (!kind)
                throw ParseError(ln, "unknown gadget kind");
        } else if (key == "k" || key == "alpha-offset" || key == "depth") {
            auto x = detail::parse_int(detail::trim(value));
            if (!x)
                throw ParseError(ln, "malformed integer");
            if (key == "k")
                k = *x;
            else if (key == "depth")
                depth = static_cast<int>(*x);
            else
                offset = *x;
        } else if (key == "role") {
            auto tok = detail::split_ws(value);
            auto v = tok.size() == 2 ? detail::parse_int(tok[0]) : std::nullopt;
            if (!v)
                throw ParseError(ln, "expected 'role <vertex> <name>'");
            roles[static_cast<int>(*v)] = std::string(tok[1]);
        } else if (key == "source") {
            source += std::string(value) + '\n';
        } else if (key == "nae") {
            nae += std::string(value) + '\n';
        } else {
            throw ParseError(ln, "unknown gadget metadata '" + std::string(key) + "'");
        }
    }
    if (!kind)
        throw ParseError(0, "missing '#@ kind' line");
    std::istringstream body(text);
    GadgetOutput out;
    Graph g = parse_graph(body);
    switch (*kind) {
    case GadgetKind::is_c3_free:
    case GadgetKind::is_k14_free: {
        if (source.empty())
            throw ParseError(0, "independent set gadget without source graph");
        Graph src = parse_graph(std::string_view(source));
        out = *kind == GadgetKind::is_c3_free ? build_is_diam2_trianglefree(src) : build_is_diam2_k14free(src);
        out.alpha_offset = offset;
        break;
    }
    case GadgetKind::extremal:
        if (!depth)
            throw ParseError(0, "extremal gadget without depth");
        out = extremal_gadget(*depth);
        break;
    case GadgetKind::ioct:
    case GadgetKind::acyclic:
    case GadgetKind::star: {
        if (nae.empty())
            throw ParseError(0, "gadget without embedded formula");
        NaeFormula f = parse_nae(std::string_view(nae));
        out.formula = f;
        out.kind = *kind;
        if (*kind == GadgetKind::ioct) {
            out.max_diameter = 4;
            out.forbidden.push_back({"K1,4^3", PatternSpec::subdivided_star(4, 3)});
        } else if (*kind == GadgetKind::acyclic) {
            out.max_diameter = 6;
            out.forbidden.push_back({"K1,6^5", PatternSpec::subdivided_star(6, 5)});
        } else {
            out.max_diameter = 14;
            out.forbidden.push_back({"K1,6^14", PatternSpec::subdivided_star(6, 14)});
        }
        break;
    }
    }
    // The file's graph and metadata are authoritative; claims come from the kind.
    out.kind = *kind;
    out.graph = std::move(g);
    out.k = k;
    out.roles.assign(out.graph.order(), "");
    for (auto& [v, name] : roles) {
        if (v < 1 || v > out.graph.order())
            throw ParseError(0, "role for vertex " + std::to_string(v) + " out of range");
        out.roles[v - 1] = name;
    }
    return out;
}

} // namespace diamkit
