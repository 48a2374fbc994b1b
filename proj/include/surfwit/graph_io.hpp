#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "surfwit/cluster.hpp"
#include "surfwit/embedded_graph.hpp"

namespace surfwit {

/// Malformed graph file. `line()` is 1-based; 0 means "whole file".
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Contents of a graph file:
///
///     V <n>
///     E <m>
///     anchor <color>... | anchor vertex <v>     (optional)
///     edge <id> <u> <v> [<color>]
///     rot <v> <edge>.<end> ...
///
/// '#' starts a comment. Edges without a colour get colour 0.
struct GraphFile {
    EmbeddedGraph graph;
    std::vector<int> edge_color;
    std::optional<AnchorSpec> anchor;

    Cluster cluster() const;
};

GraphFile parse_graph(std::istream& in);
GraphFile parse_graph_string(const std::string& text);
GraphFile read_graph_file(const std::string& path);

/// Canonical form: header, edges by id, one rot line per vertex with the
/// least dart first.
std::string serialize_graph(const GraphFile& f);
std::string serialize_cluster(const Cluster& c);
void write_graph_file(const std::string& path, const std::string& text);

}  // namespace surfwit
