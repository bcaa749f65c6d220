#pragma once

// Resource caps shared by the CLI. Precedence: explicit flag > DIAMKIT_CAPS
// environment variable > built-in default. DIAMKIT_CAPS is a comma-separated
// list of key=value pairs, e.g. "enumeration=1000000,oracle=18".

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

#include "colouring.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "pattern.hpp"

namespace diamkit {

struct Caps {
    std::uint64_t enumeration = default_enumeration_cap; ///< colouring family / enumeration
    int oracle = oracle::default_brute_force_cap;        ///< brute-force vertex count
    int mis = oracle::default_mis_cap;                   ///< independent set vertex count
    int pattern = default_pattern_cap;                   ///< pattern order
    std::uint64_t count = oracle::default_count_cap;     ///< 3-colouring count
    int nae = oracle::default_nae_cap;                   ///< NAE variables

    /// Applies "key=value,key=value"; throws PreconditionError on bad input.
    void apply(std::string_view spec) {
        while (!spec.empty()) {
            auto comma = spec.find(',');
            std::string_view item = detail::trim(spec.substr(0, comma));
            spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
            if (item.empty())
                continue;
            auto eq = item.find('=');
            if (eq == std::string_view::npos)
                throw PreconditionError("caps: expected key=value, got '" + std::string(item) + "'");
            std::string_view key = detail::trim(item.substr(0, eq));
            auto value = detail::parse_int(detail::trim(item.substr(eq + 1)));
            if (!value || *value < 0)
                throw PreconditionError("caps: bad value for '" + std::string(key) + "'");
            set(key, *value);
        }
    }

    void set(std::string_view key, long long value) {
        if (key == "enumeration")
            enumeration = static_cast<std::uint64_t>(value);
        else if (key == "oracle")
            oracle = static_cast<int>(value);
        else if (key == "mis")
            mis = static_cast<int>(value);
        else if (key == "pattern")
            pattern = static_cast<int>(value);
        else if (key == "count")
            count = static_cast<std::uint64_t>(value);
        else if (key == "nae")
            nae = static_cast<int>(value);
        else
            throw PreconditionError("caps: unknown key '" + std::string(key) + "'");
    }

    static Caps from_environment() {
        Caps c;
        if (const char* env = std::getenv("DIAMKIT_CAPS"))
            c.apply(env);
        return c;
    }
};

} // namespace diamkit
