#pragma once

// Not-all-equal 3-SAT formulas, covering collections and their text formats.
//
// Formula file:    p nae <vars> <clauses>
//                  <lit> <lit> <lit> 0      (signed 1-based literals)
// Collection file: pair <signed literal> <clause index (1-based)>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace diamkit {

struct Literal {
    int var = 0; ///< 0-based
    bool positive = true;

    /// Index in [0, 2 * vars): 2v for x_v, 2v + 1 for its negation.
    int index() const { return 2 * var + (positive ? 0 : 1); }
    /// Signed 1-based form used by the text formats.
    int signed_code() const { return positive ? var + 1 : -(var + 1); }
    Literal negated() const { return {var, !positive}; }
    bool value(const std::vector<bool>& assignment) const { return assignment[var] == positive; }

    static Literal from_signed(int code) { return {std::abs(code) - 1, code > 0}; }

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal& a, const Literal& b) { return a.index() <=> b.index(); }
};

using Clause = std::array<Literal, 3>;

struct NaeFormula {
    int vars = 0;
    std::vector<Clause> clauses;

    int clause_count() const { return static_cast<int>(clauses.size()); }

    /// Occurrences per literal index, counting repeated positions separately.
    std::vector<int> occurrence_counts() const {
        std::vector<int> occ(2 * vars, 0);
        for (const auto& c : clauses)
            for (const auto& l : c)
                ++occ[l.index()];
        return occ;
    }

    bool variant_a_valid() const {
        auto occ = occurrence_counts();
        return std::all_of(occ.begin(), occ.end(), [](int k) { return k <= 2; });
    }

    bool variant_b_valid() const {
        auto occ = occurrence_counts();
        for (int v = 0; v < vars; ++v)
            if (occ[2 * v + 1] > 0 || occ[2 * v] > 4)
                return false;
        return true;
    }

    bool satisfied_by(const std::vector<bool>& a) const {
        if (static_cast<int>(a.size()) != vars)
            throw PreconditionError("assignment size does not match the formula");
        for (const auto& c : clauses) {
            int t = c[0].value(a) + c[1].value(a) + c[2].value(a);
            if (t == 0 || t == 3)
                return false;
        }
        return true;
    }

    void validate() const {
        if (vars < 0)
            throw PreconditionError("negative variable count");
        for (const auto& c : clauses)
            for (const auto& l : c)
                if (l.var < 0 || l.var >= vars)
                    throw PreconditionError("literal refers to variable " + std::to_string(l.var + 1) +
                                            " of " + std::to_string(vars));
    }
};

inline NaeFormula parse_nae(std::istream& in) {
    NaeFormula f;
    bool header = false;
    std::size_t expected = 0;
    detail::for_each_content_line(in, [&](std::size_t ln, std::string_view t) {
        auto tok = detail::split_ws(t);
        if (!header) {
            if (tok.size() != 4 || tok[0] != "p" || tok[1] != "nae")
                throw ParseError(ln, "expected header 'p nae <vars> <clauses>'");
            auto v = detail::parse_int(tok[2]);
            auto c = detail::parse_int(tok[3]);
            if (!v || !c || *v < 0 || *c < 0 || *v > 10'000'000 || *c > 10'000'000)
                throw ParseError(ln, "malformed header counts");
            f.vars = static_cast<int>(*v);
            expected = static_cast<std::size_t>(*c);
            header = true;
            return;
        }
        if (tok.size() != 4 || tok[3] != "0")
            throw ParseError(ln, "expected three literals terminated by 0");
        Clause c;
        for (int i = 0; i < 3; ++i) {
            auto x = detail::parse_int(tok[i]);
            if (!x || *x == 0 || std::abs(*x) > f.vars)
                throw ParseError(ln, "literal out of range");
            c[i] = Literal::from_signed(static_cast<int>(*x));
        }
        if (f.clauses.size() == expected)
            throw ParseError(ln, "more clauses than declared");
        f.clauses.push_back(c);
    });
    if (!header)
        throw ParseError(0, "missing header");
    if (f.clauses.size() != expected)
        throw ParseError(0, "declared " + std::to_string(expected) + " clauses, found " +
                                std::to_string(f.clauses.size()));
    return f;
}

inline NaeFormula parse_nae(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_nae(in);
}

inline void write_nae(std::ostream& out, const NaeFormula& f) {
    out << "p nae " << f.vars << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses)
        out << c[0].signed_code() << ' ' << c[1].signed_code() << ' ' << c[2].signed_code() << " 0\n";
}

/// One (literal, clause) pair per literal occurring in the formula.
struct CoveringCollection {
    std::vector<std::pair<Literal, int>> pairs; ///< clause index 0-based

    std::optional<int> clause_of(Literal l) const {
        for (const auto& [lit, c] : pairs)
            if (lit == l)
                return c;
        return std::nullopt;
    }
};

/// Throws unless every occurring literal has exactly one pair (lit, C) with lit in C.
inline void validate_collection(const NaeFormula& f, const CoveringCollection& col) {
    auto occ = f.occurrence_counts();
    std::vector<int> seen(2 * f.vars, 0);
    for (const auto& [lit, c] : col.pairs) {
        if (lit.var < 0 || lit.var >= f.vars || c < 0 || c >= f.clause_count())
            throw PreconditionError("collection pair out of range");
        const auto& cl = f.clauses[c];
        if (std::find(cl.begin(), cl.end(), lit) == cl.end())
            throw PreconditionError("collection pair (" + std::to_string(lit.signed_code()) + ", " +
                                    std::to_string(c + 1) + "): literal not in clause");
        if (seen[lit.index()]++)
            throw PreconditionError("literal " + std::to_string(lit.signed_code()) + " has two pairs");
    }
    for (int i = 0; i < 2 * f.vars; ++i)
        if (occ[i] > 0 && !seen[i])
            throw PreconditionError("occurring literal " + std::to_string(Literal{i / 2, i % 2 == 0}.signed_code()) +
                                    " has no pair");
}

/// Number of clauses owning no pair of the collection.
inline int uncovered_count(const NaeFormula& f, const CoveringCollection& col) {
    std::vector<char> covered(f.clause_count(), 0);
    for (const auto& [lit, c] : col.pairs)
        if (c >= 0 && c < f.clause_count())
            covered[c] = 1;
    return static_cast<int>(std::count(covered.begin(), covered.end(), 0));
}

inline CoveringCollection parse_collection(std::istream& in, const NaeFormula& f) {
    CoveringCollection col;
    detail::for_each_content_line(in, [&](std::size_t ln, std::string_view t) {
        auto tok = detail::split_ws(t);
        if (tok.size() != 3 || tok[0] != "pair")
            throw ParseError(ln, "expected 'pair <literal> <clause>'");
        auto l = detail::parse_int(tok[1]);
        auto c = detail::parse_int(tok[2]);
        if (!l || *l == 0 || std::abs(*l) > f.vars)
            throw ParseError(ln, "literal out of range");
        if (!c || *c < 1 || *c > f.clause_count())
            throw ParseError(ln, "clause index out of range");
        col.pairs.emplace_back(Literal::from_signed(static_cast<int>(*l)), static_cast<int>(*c - 1));
    });
    return col;
}

inline void write_collection(std::ostream& out, const CoveringCollection& col) {
    for (const auto& [lit, c] : col.pairs)
        out << "pair " << lit.signed_code() << ' ' << c + 1 << '\n';
}

} // namespace diamkit
