#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace diamkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input (graph, colouring, formula or collection files).
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// An operation was called outside its documented domain, or an algorithm
/// detected that a structural hypothesis (chair-freeness, connectivity, ...)
/// does not hold for its input.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// A configured enumeration or search cap was exceeded.
class CapOverflow : public Error {
  public:
    explicit CapOverflow(const std::string& what, std::uint64_t cap)
        : Error(what + " exceeded cap " + std::to_string(cap)), cap_(cap) {}

    std::uint64_t cap() const noexcept { return cap_; }

  private:
    std::uint64_t cap_;
};

} // namespace diamkit
