#pragma once

#include <indtree/graph.hpp>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace indtree {

/// Malformed graph6 or edge-list input. offset() is the byte (graph6) or line (edge list) at fault.
class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string & what, std::size_t offset);

    auto offset() const -> std::size_t { return _offset; }

private:
    std::size_t _offset;
};

/// Standard graph6 encoding, without a trailing newline. Uses the "~" long form for n >= 63.
auto to_graph6(const Graph & g) -> std::string;

/// Parses exactly one graph6 string. A ">>graph6<<" header is accepted; anything after the graph is an error.
auto from_graph6(std::string_view text) -> Graph;

/// One graph6 per non-empty line.
auto read_graph6_stream(std::istream & in) -> std::vector<Graph>;

/// "n m" followed by m lines "u v", 0-indexed.
auto read_edge_list(std::istream & in) -> Graph;
auto write_edge_list(std::ostream & out, const Graph & g) -> void;

/// Reads a file as edge list if its first token line has two integers, graph6 otherwise.
auto read_graph_file(const std::string & path) -> std::vector<Graph>;

} // namespace indtree
