#pragma once

// Exponential-time reference solvers. Exact, deterministic, capped.

#include <algorithm>
#include <bit>
#include <functional>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "colouring.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "nae.hpp"
#include "problem.hpp"

namespace diamkit::oracle {

inline constexpr int default_brute_force_cap = 20;
inline constexpr int default_mis_cap = 40;
inline constexpr std::uint64_t default_count_cap = 100'000'000;
inline constexpr int default_nae_cap = 24;

struct OracleResult {
    bool yes = false;
    std::optional<long long> optimum;              ///< minimum transversal / maximum independent set size
    std::optional<std::vector<Vertex>> witness_set; ///< ascending
    std::optional<Colouring> witness_colouring;
};

// ---------------------------------------------------------------------------
// Backtracking 3-colouring search with acyclic / star pruning

struct SearchOptions {
    std::vector<Vertex> order;  ///< assignment order; index order when empty
    std::vector<Label> fixed;   ///< preassigned labels (0 = free); empty for none
    std::uint64_t node_cap = std::numeric_limits<std::uint64_t>::max();
};

namespace detail {

/// Union-find with rollback (union by size, no path compression).
class RollbackDsu {
  public:
    explicit RollbackDsu(int n) : parent_(n), size_(n, 1) {
        for (int i = 0; i < n; ++i)
            parent_[i] = i;
    }
    int find(int v) const {
        while (parent_[v] != v)
            v = parent_[v];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        history_.push_back(b);
        return true;
    }
    std::size_t mark() const { return history_.size(); }
    void rollback(std::size_t m) {
        while (history_.size() > m) {
            int b = history_.back();
            history_.pop_back();
            size_[parent_[b]] -= size_[b];
            parent_[b] = b;
        }
    }

  private:
    std::vector<int> parent_, size_;
    std::vector<int> history_;
};

class ColouringSearch {
  public:
    ColouringSearch(const Graph& g, ColouringMode mode, const SearchOptions& opts)
        : g_(g), mode_(mode), opts_(opts), c_(g.order()), blocked_(g.order(), {0, 0, 0, 0}),
          dsu_{RollbackDsu(g.order()), RollbackDsu(g.order()), RollbackDsu(g.order())} {
        int n = g.order();
        order_ = opts.order;
        if (order_.empty()) {
            order_.resize(n);
            for (Vertex v = 0; v < n; ++v)
                order_[v] = v;
        }
        if (static_cast<int>(order_.size()) != n)
            throw PreconditionError("search order must list every vertex once");
        std::vector<char> seen(n, 0);
        for (Vertex v : order_) {
            if (v < 0 || v >= n || seen[v])
                throw PreconditionError("search order must list every vertex once");
            seen[v] = 1;
        }
        if (!opts.fixed.empty() && static_cast<int>(opts.fixed.size()) != n)
            throw PreconditionError("fixed labels size does not match the graph");
    }

    std::optional<Colouring> run() {
        if (rec(0))
            return c_;
        return std::nullopt;
    }

  private:
    static int pair_index(Label a, Label b) { return a + b - 3; }

    /// Would the assigned bichromatic subgraph gain a 4-vertex path through v?
    bool creates_bichromatic_p4(Vertex v) const {
        Label l = c_[v];
        for (Vertex w : g_.neighbours(v)) {
            Label lw = c_[w];
            if (lw == 0)
                continue;
            bool v_has_other = false;
            for (Vertex w2 : g_.neighbours(v))
                if (w2 != w && c_[w2] == lw) {
                    v_has_other = true;
                    break;
                }
            for (Vertex u : g_.neighbours(w)) {
                if (u == v || c_[u] != l)
                    continue;
                if (v_has_other)
                    return true;
                for (Vertex t : g_.neighbours(u))
                    if (t != w && c_[t] == lw)
                        return true;
            }
        }
        return false;
    }

    bool rec(std::size_t pos) {
        if (++nodes_ > opts_.node_cap)
            throw CapOverflow("colouring search nodes", opts_.node_cap);
        if (pos == order_.size())
            return true;
        Vertex v = order_[pos];
        Label only = opts_.fixed.empty() ? 0 : opts_.fixed[v];
        for (Label l = 1; l <= 3; ++l) {
            if ((only && l != only) || blocked_[v][l])
                continue;
            c_[v] = l;
            bool ok = true;
            std::size_t marks[3] = {dsu_[0].mark(), dsu_[1].mark(), dsu_[2].mark()};
            if (mode_ == ColouringMode::acyclic) {
                for (Vertex w : g_.neighbours(v)) {
                    if (c_[w] == 0 || c_[w] == l)
                        continue;
                    if (!dsu_[pair_index(l, c_[w])].unite(v, w)) {
                        ok = false;
                        break;
                    }
                }
            } else if (mode_ == ColouringMode::star) {
                ok = !creates_bichromatic_p4(v);
            }
            std::vector<Vertex> touched;
            if (ok) {
                for (Vertex w : g_.neighbours(v)) {
                    if (c_[w] != 0)
                        continue;
                    touched.push_back(w);
                    if (blocked_[w][l]++ == 0 && !options_left(w))
                        ok = false;
                }
            }
            if (ok && rec(pos + 1))
                return true;
            for (Vertex w : touched)
                --blocked_[w][l];
            for (int i = 0; i < 3; ++i)
                dsu_[i].rollback(marks[i]);
            c_[v] = 0;
        }
        return false;
    }

    bool options_left(Vertex w) const {
        Label only = opts_.fixed.empty() ? 0 : opts_.fixed[w];
        for (Label l = 1; l <= 3; ++l)
            if (!blocked_[w][l] && (!only || only == l))
                return true;
        return false;
    }

    const Graph& g_;
    ColouringMode mode_;
    const SearchOptions& opts_;
    std::vector<Vertex> order_;
    Colouring c_;
    std::vector<std::array<int, 4>> blocked_;
    std::array<RollbackDsu, 3> dsu_;
    std::uint64_t nodes_ = 0;
};

} // namespace detail

/// First 3-colouring of the requested kind in the given assignment order
/// (lexicographically least for index order), or nothing.
inline std::optional<Colouring> search_3_colouring(const Graph& g, ColouringMode mode, const SearchOptions& opts = {}) {
    detail::ColouringSearch s(g, mode, opts);
    return s.run();
}

// ---------------------------------------------------------------------------
// Six-problem brute force

namespace detail {

inline void require_cap(const Graph& g, int cap, const char* what) {
    if (g.order() > cap)
        throw CapOverflow(std::string(what) + " on " + std::to_string(g.order()) + " vertices",
                          static_cast<std::uint64_t>(cap));
}

/// Lexicographically least independent set of minimum size whose removal
/// leaves a forest (ifvs) or a bipartite graph (ioct).
inline std::optional<std::vector<Vertex>> min_transversal(const Graph& g, TransversalKind::Tag tag) {
    int n = g.order();
    std::vector<Vertex> chosen;
    std::vector<int> blocked(n, 0);
    std::vector<char> in(n, 0);
    auto remainder_ok = [&] {
        auto rest = [&](Vertex v) { return !in[v]; };
        return tag == TransversalKind::Tag::ifvs ? is_forest_where(g, rest) : diamkit::detail::is_bipartite_where(g, rest);
    };
    std::function<bool(Vertex, int)> rec = [&](Vertex from, int left) -> bool {
        if (left == 0)
            return remainder_ok();
        for (Vertex v = from; v < n; ++v) {
            if (blocked[v])
                continue;
            chosen.push_back(v);
            in[v] = 1;
            for (Vertex w : g.neighbours(v))
                ++blocked[w];
            bool found = rec(v + 1, left - 1);
            for (Vertex w : g.neighbours(v))
                --blocked[w];
            if (found)
                return true;
            in[v] = 0;
            chosen.pop_back();
        }
        return false;
    };
    for (int size = 0; size <= n; ++size)
        if (rec(0, size))
            return chosen;
    return std::nullopt;
}

} // namespace detail

/// Exact answer by exhaustive search. Transversal problems report the minimum
/// transversal size and the lexicographically least minimum witness; colouring
/// problems report the lexicographically least valid colouring.
inline OracleResult brute_force(const Graph& g, const Problem& p, int cap = default_brute_force_cap) {
    detail::require_cap(g, cap, "brute force");
    OracleResult r;
    if (!p.is_transversal()) {
        auto c = search_3_colouring(g, p.mode());
        r.yes = c.has_value();
        r.witness_colouring = c;
        return r;
    }
    auto tag = p.kind == Problem::Kind::ioct ? TransversalKind::Tag::ioct : TransversalKind::Tag::ifvs;
    auto set = detail::min_transversal(g, tag);
    if (!set)
        return r;
    r.optimum = static_cast<long long>(set->size());
    r.yes = p.kind == Problem::Kind::nearbip || !p.k || *r.optimum <= *p.k;
    Colouring c(g.order());
    for (Vertex v : *set)
        c[v] = 3;
    auto rest = induced_subgraph_mask(g, [&] {
        std::vector<char> keep(g.order(), 1);
        for (Vertex v : *set)
            keep[v] = 0;
        return keep;
    }());
    auto bp = bipartition(rest.graph);
    for (Vertex i = 0; i < rest.graph.order(); ++i)
        c[rest.to_host[i]] = static_cast<Label>(bp.parts->side[i] + 1);
    r.witness_set = std::move(set);
    r.witness_colouring = std::move(c);
    return r;
}

// ---------------------------------------------------------------------------
// Maximum independent set

namespace detail {

class Bits {
  public:
    Bits() = default;
    explicit Bits(int n) : w_((n + 63) / 64, 0) {}
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    int count() const {
        int c = 0;
        for (auto x : w_)
            c += std::popcount(x);
        return c;
    }
    bool none() const {
        return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
    }
    int count_and(const Bits& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }
    Bits minus(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < w_.size(); ++i)
            r.w_[i] &= ~o.w_[i];
        return r;
    }
    Bits and_(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < w_.size(); ++i)
            r.w_[i] &= o.w_[i];
        return r;
    }
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            for (std::uint64_t x = w_[i]; x; x &= x - 1)
                f(static_cast<int>(i * 64 + std::countr_zero(x)));
    }

  private:
    std::vector<std::uint64_t> w_;
};

class MisSearch {
  public:
    explicit MisSearch(const Graph& g) : n_(g.order()), adj_(g.order(), Bits(g.order())) {
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex w : g.neighbours(v))
                adj_[v].set(w);
    }

    /// Maximum independent set size inside `p`; stops early once `target` is reached.
    int solve(const Bits& p, int target = std::numeric_limits<int>::max()) {
        best_ = greedy(p);
        target_ = target;
        if (best_ < target_)
            rec(p, 0);
        return best_;
    }

    const std::vector<Bits>& adj() const { return adj_; }

  private:
    int greedy(Bits p) const {
        int size = 0;
        while (!p.none()) {
            int pick = -1, pick_deg = std::numeric_limits<int>::max();
            p.for_each([&](int v) {
                int d = adj_[v].count_and(p);
                if (d < pick_deg) {
                    pick_deg = d;
                    pick = v;
                }
            });
            ++size;
            p.reset(pick);
            p = p.minus(adj_[pick]);
        }
        return size;
    }

    /// Greedy clique cover size of G[p], an upper bound on alpha.
    int clique_cover(const Bits& p) const {
        std::vector<Bits> cliques;
        p.for_each([&](int v) {
            for (auto& c : cliques)
                if (c.minus(adj_[v]).none()) {
                    c.set(v);
                    return;
                }
            Bits c(n_);
            c.set(v);
            cliques.push_back(std::move(c));
        });
        return static_cast<int>(cliques.size());
    }

    void rec(const Bits& p, int size) {
        if (best_ >= target_)
            return;
        int cnt = p.count();
        if (cnt == 0) {
            best_ = std::max(best_, size);
            return;
        }
        int max_deg = -1, branch = -1;
        long long twice_edges = 0;
        int low = -1;
        p.for_each([&](int v) {
            int d = adj_[v].count_and(p);
            twice_edges += d;
            if (d > max_deg) {
                max_deg = d;
                branch = v;
            }
            if (d <= 1 && low == -1)
                low = v;
        });
        if (low != -1) {
            // Vertices of degree <= 1 belong to some maximum independent set.
            Bits q = p.minus(adj_[low]);
            q.reset(low);
            rec(q, size + 1);
            return;
        }
        long long edges = twice_edges / 2;
        int degree_bound = cnt - static_cast<int>((edges + max_deg - 1) / max_deg);
        if (size + degree_bound <= best_)
            return;
        if (size + clique_cover(p) <= best_)
            return;
        Bits with = p.minus(adj_[branch]);
        with.reset(branch);
        rec(with, size + 1);
        Bits without = p;
        without.reset(branch);
        rec(without, size);
    }

    int n_;
    std::vector<Bits> adj_;
    int best_ = 0;
    int target_ = std::numeric_limits<int>::max();
};

} // namespace detail

/// Maximum independent set by branch and bound; the witness is the
/// lexicographically least maximum independent set.
inline OracleResult max_independent_set(const Graph& g, int cap = default_mis_cap) {
    detail::require_cap(g, cap, "maximum independent set");
    int n = g.order();
    detail::MisSearch search(g);
    detail::Bits all(n);
    for (Vertex v = 0; v < n; ++v)
        all.set(v);
    int alpha = search.solve(all);
    std::vector<Vertex> witness;
    detail::Bits p = all;
    int need = alpha;
    for (Vertex v = 0; v < n && need > 0; ++v) {
        if (!p.test(v))
            continue;
        p.reset(v);
        detail::Bits q = p.minus(search.adj()[v]);
        if (need == 1 || search.solve(q, need - 1) >= need - 1) {
            witness.push_back(v);
            p = q;
            --need;
        }
    }
    OracleResult r;
    r.yes = true;
    r.optimum = alpha;
    r.witness_set = std::move(witness);
    return r;
}

// ---------------------------------------------------------------------------
// Counting and NAE-SAT

inline std::uint64_t count_3_colourings(const Graph& g, std::uint64_t cap = default_count_cap) {
    std::uint64_t count = 0;
    bool overflow = false;
    for_each_3_colouring(g, [&](const Colouring&) {
        if (++count > cap) {
            overflow = true;
            return false;
        }
        return true;
    });
    if (overflow)
        throw CapOverflow("3-colouring count", cap);
    return count;
}

/// First NAE-satisfying assignment in the order of the binary number with
/// x_1 as its least significant bit (false = 0), or nothing. Exhaustive
/// search over x_n, ..., x_1 with clause propagation: a clause with two equal
/// assigned literals forces the third, which prunes without reordering.
inline std::optional<std::vector<bool>> nae_brute(const NaeFormula& f, int cap = default_nae_cap) {
    f.validate();
    if (f.vars > cap)
        throw CapOverflow("NAE brute force on " + std::to_string(f.vars) + " variables", static_cast<std::uint64_t>(cap));
    std::vector<std::vector<int>> touching(f.vars);
    for (int i = 0; i < f.clause_count(); ++i)
        for (const auto& l : f.clauses[i])
            if (touching[l.var].empty() || touching[l.var].back() != i)
                touching[l.var].push_back(i);
    std::vector<std::int8_t> val(f.vars, -1); // -1 unassigned, 0 false, 1 true
    std::vector<int> trail;
    auto lit_value = [&](const Literal& l) -> int {
        if (val[l.var] < 0)
            return -1;
        return (val[l.var] == 1) == l.positive ? 1 : 0;
    };
    // Assigns and propagates; returns false on conflict (trail keeps what was set).
    auto assign = [&](int var, bool value) {
        std::vector<int> queue{var};
        val[var] = value;
        trail.push_back(var);
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (int ci : touching[queue[h]]) {
                const auto& c = f.clauses[ci];
                int t[3] = {lit_value(c[0]), lit_value(c[1]), lit_value(c[2])};
                int unassigned = (t[0] < 0) + (t[1] < 0) + (t[2] < 0);
                if (unassigned == 0) {
                    if (t[0] == t[1] && t[1] == t[2])
                        return false;
                } else if (unassigned == 1) {
                    int j = t[0] < 0 ? 0 : t[1] < 0 ? 1 : 2;
                    int a = t[(j + 1) % 3], b = t[(j + 2) % 3];
                    if (a != b)
                        continue;
                    const Literal& l = c[j];
                    if (val[l.var] >= 0)
                        continue; // same variable appears twice in the clause
                    bool want_true = a == 0;
                    val[l.var] = (want_true == l.positive) ? 1 : 0;
                    trail.push_back(l.var);
                    queue.push_back(l.var);
                }
            }
        return true;
    };
    auto undo = [&](std::size_t mark) {
        while (trail.size() > mark) {
            val[trail.back()] = -1;
            trail.pop_back();
        }
    };
    // Clauses repeating a variable can be violated without any propagation trigger
    // firing on an unassigned slot, so every leaf re-checks the formula.
    std::function<bool(int)> rec = [&](int v) -> bool {
        while (v >= 0 && val[v] >= 0)
            --v;
        if (v < 0) {
            std::vector<bool> a(f.vars);
            for (int i = 0; i < f.vars; ++i)
                a[i] = val[i] == 1;
            return f.satisfied_by(a);
        }
        for (bool value : {false, true}) {
            std::size_t mark = trail.size();
            if (assign(v, value) && rec(v - 1))
                return true;
            undo(mark);
        }
        return false;
    };
    // Variables occurring in no clause stay false.
    if (!rec(f.vars - 1))
        return std::nullopt;
    std::vector<bool> a(f.vars);
    for (int i = 0; i < f.vars; ++i)
        a[i] = val[i] == 1;
    return a;
}

} // namespace diamkit::oracle
