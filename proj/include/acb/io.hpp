#pragma once

#include <acb/core.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace acb {

/// Malformed text input. line() is 1-based and refers to the offending input line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

using AnyGraph = std::variant<BipartiteGraph, SplitGraph, GeneralGraph, Hypergraph>;

// Text formats ('#' lines are comments everywhere):
//   bip <x> <y>     then x rows of y '0'/'1' characters
//   split <k> <i>   then k rows of i characters (the K x I cross matrix)
//   graph <n>       then n rows of n characters, symmetric, zero diagonal
//   hyp <n> <m>     then m lines of space-separated 0-based vertices

AnyGraph parse_any(std::string_view text);
BipartiteGraph parse_bipartite(std::string_view text);
SplitGraph parse_split(std::string_view text);
GeneralGraph parse_general(std::string_view text);
Hypergraph parse_hypergraph(std::string_view text);

std::string serialize(const BipartiteGraph& b);
std::string serialize(const SplitGraph& g);
std::string serialize(const GeneralGraph& g);
std::string serialize(const Hypergraph& h);
std::string serialize(const AnyGraph& g);

} // namespace acb
