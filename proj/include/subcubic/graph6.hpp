#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "subcubic/graph.hpp"

namespace subcubic {

// graph6 encoding (one graph per line, printable bytes 63..126):
// size prefix N(n) followed by the upper triangle of the adjacency matrix
// in column order, packed six bits per byte, zero-padded.

/// Parses one graph6 line. A trailing newline/CR and a leading ">>graph6<<"
/// marker are accepted. Throws MalformedGraph6 with the byte offset of the
/// first bad byte.
Graph parse_graph6(std::string_view line);

std::string emit_graph6(const Graph& g);

/// One record from a graph6 stream. Exactly one of `graph` / `error` is set.
struct Graph6Record {
    std::size_t line_number = 0;
    std::string text;
    std::optional<Graph> graph;
    std::string error;
};

/// Streams a graph6 file line by line in constant memory. Blank lines and
/// bare ">>graph6<<" header lines are skipped. Malformed lines are returned
/// as records carrying an error rather than thrown.
class Graph6Reader {
public:
    explicit Graph6Reader(std::istream& in) : in_(in) {}

    std::optional<Graph6Record> next();

private:
    std::istream& in_;
    std::size_t line_number_ = 0;
};

}  // namespace subcubic
