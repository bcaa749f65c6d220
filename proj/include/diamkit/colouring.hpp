#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace diamkit {

using Label = std::int8_t;

/// Vertex labelling with labels 1, 2, 3; 0 marks an unlabelled vertex.
struct Colouring {
    std::vector<Label> label;

    Colouring() = default;
    explicit Colouring(int n) : label(n, 0) {}
    explicit Colouring(std::vector<Label> l) : label(std::move(l)) {}

    int order() const { return static_cast<int>(label.size()); }
    Label operator[](Vertex v) const { return label[v]; }
    Label& operator[](Vertex v) { return label[v]; }

    bool total() const {
        for (Label l : label)
            if (l < 1 || l > 3)
                return false;
        return true;
    }

    /// Vertices with label `c`.
    std::vector<Vertex> colour_class(Label c) const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < order(); ++v)
            if (label[v] == c)
                out.push_back(v);
        return out;
    }

    std::size_t class_size(Label c) const {
        std::size_t s = 0;
        for (Label l : label)
            s += l == c;
        return s;
    }

    friend bool operator==(const Colouring&, const Colouring&) = default;
    friend auto operator<=>(const Colouring& a, const Colouring& b) { return a.label <=> b.label; }
};

enum class ColouringMode { proper, acyclic, star };

inline const char* to_string(ColouringMode m) {
    switch (m) {
    case ColouringMode::proper:
        return "proper";
    case ColouringMode::acyclic:
        return "acyclic";
    case ColouringMode::star:
        return "star";
    }
    return "?";
}

/// Independent feedback vertex set or independent odd cycle transversal,
/// with an optional upper bound on its size.
struct TransversalKind {
    enum class Tag { ifvs, ioct };
    Tag tag = Tag::ifvs;
    std::optional<long long> k;
};

namespace detail {

inline void require_total(const Graph& g, const Colouring& c) {
    if (c.order() != g.order())
        throw PreconditionError("colouring has " + std::to_string(c.order()) + " labels for " +
                                std::to_string(g.order()) + " vertices");
    if (!c.total())
        throw PreconditionError("partial labelling: every vertex needs a label in {1,2,3}");
}

inline bool proper(const Graph& g, const Colouring& c) {
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex w : g.neighbours(u))
            if (u < w && c[u] == c[w])
                return false;
    return true;
}

template <typename Keep>
bool is_bipartite_where(const Graph& g, Keep&& keep) {
    std::vector<std::int8_t> side(g.order(), -1);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[s] != -1 || !keep(s))
            continue;
        side[s] = 0;
        queue.assign(1, s);
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (Vertex w : g.neighbours(queue[h])) {
                if (!keep(w))
                    continue;
                if (side[w] == -1) {
                    side[w] = static_cast<std::int8_t>(1 - side[queue[h]]);
                    queue.push_back(w);
                } else if (side[w] == side[queue[h]]) {
                    return false;
                }
            }
    }
    return true;
}

} // namespace detail

/// Checks a total labelling against the proper, acyclic or star 3-colouring
/// definition in O(n + m): every pair of colour classes must induce a forest
/// (acyclic) or a star forest (star).
inline bool verify_colouring(const Graph& g, const Colouring& c, ColouringMode mode) {
    detail::require_total(g, c);
    if (!detail::proper(g, c))
        return false;
    if (mode == ColouringMode::proper)
        return true;
    static constexpr std::array<std::pair<Label, Label>, 3> pairs{{{1, 2}, {1, 3}, {2, 3}}};
    for (auto [a, b] : pairs) {
        auto keep = [&](Vertex v) { return c[v] == a || c[v] == b; };
        bool ok = mode == ColouringMode::acyclic ? is_forest_where(g, keep) : is_star_forest_where(g, keep);
        if (!ok)
            return false;
    }
    return true;
}

/// Checks whether colour class `class_label` of a proper colouring is an
/// independent feedback vertex set (ifvs) or independent odd cycle transversal
/// (ioct), of size at most k when k is given.
inline bool verify_transversal_class(const Graph& g, const Colouring& c, Label class_label,
                                     const TransversalKind& kind) {
    detail::require_total(g, c);
    if (!detail::proper(g, c))
        throw PreconditionError("verify_transversal_class: colouring is not proper");
    if (class_label < 1 || class_label > 3)
        throw PreconditionError("class label must be 1, 2 or 3");
    if (kind.k && static_cast<long long>(c.class_size(class_label)) > *kind.k)
        return false;
    auto rest = [&](Vertex v) { return c[v] != class_label; };
    return kind.tag == TransversalKind::Tag::ifvs ? is_forest_where(g, rest) : detail::is_bipartite_where(g, rest);
}

/// Checks an arbitrary vertex set as IFVS / IOCT (independence included).
inline bool verify_transversal_set(const Graph& g, const std::vector<Vertex>& set, const TransversalKind& kind) {
    std::vector<char> in(g.order(), 0);
    for (Vertex v : set) {
        if (v < 0 || v >= g.order() || in[v])
            return false;
        in[v] = 1;
    }
    if (kind.k && static_cast<long long>(set.size()) > *kind.k)
        return false;
    for (Vertex v : set)
        for (Vertex w : g.neighbours(v))
            if (in[w])
                return false;
    auto rest = [&](Vertex v) { return !in[v]; };
    return kind.tag == TransversalKind::Tag::ifvs ? is_forest_where(g, rest) : detail::is_bipartite_where(g, rest);
}

// ---------------------------------------------------------------------------
// 2-list colouring

/// Admissible labels per vertex as bit masks (bit l set <=> label l allowed).
struct ListAssignment {
    std::vector<std::uint8_t> mask;

    ListAssignment() = default;
    explicit ListAssignment(int n, std::uint8_t all = 0b1110) : mask(n, all) {}

    static constexpr std::uint8_t bit(Label l) { return static_cast<std::uint8_t>(1u << l); }

    void set(Vertex v, std::initializer_list<Label> labels) {
        mask[v] = 0;
        for (Label l : labels)
            mask[v] |= bit(l);
    }
    bool allows(Vertex v, Label l) const { return mask[v] & bit(l); }
    int list_size(Vertex v) const { return __builtin_popcount(mask[v]); }
};

namespace detail {

inline Label lowest_label(std::uint8_t mask) {
    for (Label l = 1; l <= 3; ++l)
        if (mask & ListAssignment::bit(l))
            return l;
    return 0;
}

inline Label highest_label(std::uint8_t mask) {
    for (Label l = 3; l >= 1; --l)
        if (mask & ListAssignment::bit(l))
            return l;
    return 0;
}

/// Strongly connected components of a digraph in CSR form, iterative Tarjan.
/// Component ids are assigned in reverse topological order.
inline std::vector<int> tarjan_scc(int nodes, const std::vector<int>& off, const std::vector<int>& to) {
    std::vector<int> index(nodes, -1), low(nodes, 0), comp(nodes, -1);
    std::vector<int> stack, call;
    std::vector<std::size_t> edge_pos(nodes, 0);
    std::vector<char> on_stack(nodes, 0);
    int counter = 0, comps = 0;
    for (int s = 0; s < nodes; ++s) {
        if (index[s] != -1)
            continue;
        call.push_back(s);
        index[s] = low[s] = counter++;
        edge_pos[s] = off[s];
        stack.push_back(s);
        on_stack[s] = 1;
        while (!call.empty()) {
            int u = call.back();
            if (edge_pos[u] < static_cast<std::size_t>(off[u + 1])) {
                int w = to[edge_pos[u]++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    edge_pos[w] = off[w];
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back(w);
                } else if (on_stack[w]) {
                    low[u] = std::min(low[u], index[w]);
                }
                continue;
            }
            if (low[u] == index[u]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = comps;
                } while (w != u);
                ++comps;
            }
            call.pop_back();
            if (!call.empty())
                low[call.back()] = std::min(low[call.back()], low[u]);
        }
    }
    return comp;
}

} // namespace detail

/// Decides whether `g` has a colouring respecting 2-lists `lists`, in O(n + m).
/// Singleton lists are propagated first; the remaining two-label vertices are
/// encoded as a 2-SAT instance (one boolean per vertex) solved through the
/// strongly connected components of its implication graph.
inline std::optional<Colouring> two_list_colouring(const Graph& g, const ListAssignment& lists) {
    int n = g.order();
    if (static_cast<int>(lists.mask.size()) != n)
        throw PreconditionError("list assignment size does not match the graph");
    std::vector<std::uint8_t> mask = lists.mask;
    for (Vertex v = 0; v < n; ++v) {
        if (mask[v] & ~0b1110)
            throw PreconditionError("lists may only contain labels 1, 2, 3");
        int sz = __builtin_popcount(mask[v]);
        if (sz > 2)
            throw PreconditionError("vertex " + std::to_string(v + 1) + " has a list of size > 2");
        if (sz == 0)
            return std::nullopt;
    }
    // Unit propagation of singleton lists.
    std::vector<Vertex> queue;
    std::vector<char> fixed(n, 0);
    for (Vertex v = 0; v < n; ++v)
        if (__builtin_popcount(mask[v]) == 1) {
            fixed[v] = 1;
            queue.push_back(v);
        }
    for (std::size_t h = 0; h < queue.size(); ++h) {
        Vertex u = queue[h];
        std::uint8_t b = mask[u];
        for (Vertex w : g.neighbours(u)) {
            if (!(mask[w] & b))
                continue;
            mask[w] &= static_cast<std::uint8_t>(~b);
            if (mask[w] == 0)
                return std::nullopt;
            if (!fixed[w]) {
                fixed[w] = 1;
                queue.push_back(w);
            }
        }
    }
    // 2-SAT on the free vertices: variable v true <=> v takes its higher label.
    std::vector<int> var(n, -1);
    int k = 0;
    for (Vertex v = 0; v < n; ++v)
        if (!fixed[v])
            var[v] = k++;
    auto lit = [&](Vertex v, Label l) { // literal "v has label l"
        bool high = l == detail::highest_label(mask[v]);
        return 2 * var[v] + (high ? 0 : 1);
    };
    std::vector<std::pair<int, int>> imp;
    for (Vertex u = 0; u < n; ++u) {
        if (fixed[u])
            continue;
        for (Vertex w : g.neighbours(u)) {
            if (w < u || fixed[w])
                continue;
            std::uint8_t common = mask[u] & mask[w];
            for (Label l = 1; l <= 3; ++l) {
                if (!(common & ListAssignment::bit(l)))
                    continue;
                int a = lit(u, l), b = lit(w, l);
                imp.emplace_back(a, b ^ 1); // u=l -> w!=l
                imp.emplace_back(b, a ^ 1);
            }
        }
    }
    int nodes = 2 * k;
    std::vector<int> off(nodes + 1, 0), to(imp.size());
    for (auto [a, b] : imp)
        ++off[a + 1];
    for (int i = 0; i < nodes; ++i)
        off[i + 1] += off[i];
    std::vector<int> pos(off.begin(), off.end() - 1);
    for (auto [a, b] : imp)
        to[pos[a]++] = b;
    auto comp = detail::tarjan_scc(nodes, off, to);
    Colouring c(n);
    for (Vertex v = 0; v < n; ++v) {
        if (fixed[v]) {
            c[v] = detail::lowest_label(mask[v]);
            continue;
        }
        int t = 2 * var[v], f = t + 1;
        if (comp[t] == comp[f])
            return std::nullopt;
        c[v] = comp[t] < comp[f] ? detail::highest_label(mask[v]) : detail::lowest_label(mask[v]);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Enumeration of proper 3-colourings

inline constexpr std::uint64_t default_enumeration_cap = 10'000'000;

/// Calls `visit(colouring)` for every proper 3-colouring of `g` respecting
/// `lists` (all labels when absent), in lexicographic order of label vectors.
/// `visit` returns false to stop. Returns false iff stopped early.
template <typename Visit>
bool for_each_3_colouring(const Graph& g, Visit&& visit, const ListAssignment* lists = nullptr) {
    int n = g.order();
    Colouring c(n);
    // blocked[v][l]: number of earlier neighbours with label l
    std::vector<std::array<int, 4>> blocked(n, {0, 0, 0, 0});
    std::vector<std::uint8_t> allowed(n, 0b1110);
    if (lists) {
        if (static_cast<int>(lists->mask.size()) != n)
            throw PreconditionError("list assignment size does not match the graph");
        allowed = lists->mask;
    }
    auto options = [&](Vertex v) {
        int cnt = 0;
        for (Label l = 1; l <= 3; ++l)
            cnt += (allowed[v] & ListAssignment::bit(l)) && blocked[v][l] == 0;
        return cnt;
    };
    std::function<bool(Vertex)> rec = [&](Vertex v) -> bool {
        if (v == n)
            return visit(static_cast<const Colouring&>(c));
        for (Label l = 1; l <= 3; ++l) {
            if (!(allowed[v] & ListAssignment::bit(l)) || blocked[v][l])
                continue;
            c[v] = l;
            bool dead = false;
            for (Vertex w : g.neighbours(v))
                if (w > v && blocked[w][l]++ == 0 && options(w) == 0)
                    dead = true;
            bool keep_going = dead || rec(v + 1);
            for (Vertex w : g.neighbours(v))
                if (w > v)
                    --blocked[w][l];
            c[v] = 0;
            if (!keep_going)
                return false;
        }
        return true;
    };
    return rec(0);
}

struct ColouringEnumeration {
    std::vector<Colouring> colourings;
    bool overflow = false;
};

/// All proper 3-colourings of `g` in canonical order, or an overflow signal
/// once more than `cap` have been found.
inline ColouringEnumeration enumerate_3_colourings(const Graph& g, std::uint64_t cap = default_enumeration_cap) {
    ColouringEnumeration out;
    for_each_3_colouring(g, [&](const Colouring& c) {
        if (out.colourings.size() >= cap) {
            out.overflow = true;
            return false;
        }
        out.colourings.push_back(c);
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Text formats

/// Colouring file: "c <n>" then lines "v <vertex> <label>". Missing vertices stay unlabelled.
inline Colouring parse_colouring(std::istream& in) {
    std::optional<long long> n;
    Colouring c;
    std::size_t last = 0;
    detail::for_each_content_line(in, [&](std::size_t ln, std::string_view t) {
        last = ln;
        auto tok = detail::split_ws(t);
        if (!n) {
            if (tok.size() != 2 || tok[0] != "c")
                throw ParseError(ln, "malformed header, expected 'c <n>'");
            n = detail::parse_int(tok[1]);
            if (!n || *n < 0 || *n > (1LL << 30))
                throw ParseError(ln, "malformed header, expected 'c <n>'");
            c = Colouring(static_cast<int>(*n));
            return;
        }
        if (tok.size() != 3 || tok[0] != "v")
            throw ParseError(ln, "malformed line, expected 'v <vertex> <label>'");
        auto v = detail::parse_int(tok[1]);
        auto l = detail::parse_int(tok[2]);
        if (!v || !l)
            throw ParseError(ln, "malformed line, expected 'v <vertex> <label>'");
        if (*v < 1 || *v > *n)
            throw ParseError(ln, "vertex index out of range");
        if (*l < 1 || *l > 3)
            throw ParseError(ln, "label must be 1, 2 or 3");
        if (c[static_cast<Vertex>(*v - 1)] != 0)
            throw ParseError(ln, "vertex labelled twice");
        c[static_cast<Vertex>(*v - 1)] = static_cast<Label>(*l);
    });
    if (!n)
        throw ParseError(last, "missing header 'c <n>'");
    return c;
}

inline void write_colouring(std::ostream& out, const Colouring& c) {
    out << "c " << c.order() << '\n';
    for (Vertex v = 0; v < c.order(); ++v)
        out << "v " << v + 1 << ' ' << static_cast<int>(c[v]) << '\n';
}

/// Vertex-set file: "s <count>" then lines "v <vertex>".
inline std::vector<Vertex> parse_vertex_set(std::istream& in) {
    std::optional<long long> count;
    std::vector<Vertex> out;
    std::size_t last = 0;
    detail::for_each_content_line(in, [&](std::size_t ln, std::string_view t) {
        last = ln;
        auto tok = detail::split_ws(t);
        if (!count) {
            if (tok.size() != 2 || tok[0] != "s" || !(count = detail::parse_int(tok[1])) || *count < 0)
                throw ParseError(ln, "malformed header, expected 's <count>'");
            return;
        }
        std::optional<long long> v;
        if (tok.size() != 2 || tok[0] != "v" || !(v = detail::parse_int(tok[1])) || *v < 1)
            throw ParseError(ln, "malformed line, expected 'v <vertex>'");
        out.push_back(static_cast<Vertex>(*v - 1));
    });
    if (!count)
        throw ParseError(last, "missing header 's <count>'");
    if (static_cast<long long>(out.size()) != *count)
        throw ParseError(last, "declared " + std::to_string(*count) + " vertices, found " + std::to_string(out.size()));
    return out;
}

inline void write_vertex_set(std::ostream& out, const std::vector<Vertex>& set) {
    out << "s " << set.size() << '\n';
    for (Vertex v : set)
        out << "v " << v + 1 << '\n';
}

} // namespace diamkit
