#pragma once

#include <optional>
#include <string_view>

#include "colouring.hpp"

namespace diamkit {

struct Problem {
    enum class Kind { threecol, acyclic3col, star3col, nearbip, ifvs, ioct };

    Kind kind = Kind::threecol;
    std::optional<long long> k; ///< ifvs / ioct size bound; absent means any size

    static Problem threecol() { return {Kind::threecol, std::nullopt}; }
    static Problem acyclic() { return {Kind::acyclic3col, std::nullopt}; }
    static Problem star() { return {Kind::star3col, std::nullopt}; }
    static Problem nearbip() { return {Kind::nearbip, std::nullopt}; }
    static Problem ifvs(std::optional<long long> k) { return {Kind::ifvs, k}; }
    static Problem ioct(std::optional<long long> k) { return {Kind::ioct, k}; }

    bool is_transversal() const { return kind == Kind::nearbip || kind == Kind::ifvs || kind == Kind::ioct; }
    TransversalKind transversal() const {
        return {kind == Kind::ioct ? TransversalKind::Tag::ioct : TransversalKind::Tag::ifvs,
                kind == Kind::nearbip ? std::nullopt : k};
    }
    ColouringMode mode() const {
        return kind == Kind::acyclic3col ? ColouringMode::acyclic
               : kind == Kind::star3col  ? ColouringMode::star
                                         : ColouringMode::proper;
    }
};

inline const char* to_string(Problem::Kind k) {
    switch (k) {
    case Problem::Kind::threecol:
        return "threecol";
    case Problem::Kind::acyclic3col:
        return "acyclic3col";
    case Problem::Kind::star3col:
        return "star3col";
    case Problem::Kind::nearbip:
        return "nearbip";
    case Problem::Kind::ifvs:
        return "ifvs";
    case Problem::Kind::ioct:
        return "ioct";
    }
    return "?";
}

inline std::optional<Problem::Kind> parse_problem_kind(std::string_view s) {
    for (auto k : {Problem::Kind::threecol, Problem::Kind::acyclic3col, Problem::Kind::star3col,
                   Problem::Kind::nearbip, Problem::Kind::ifvs, Problem::Kind::ioct})
        if (s == to_string(k))
            return k;
    return std::nullopt;
}

} // namespace diamkit
