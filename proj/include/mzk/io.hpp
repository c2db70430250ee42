#pragma once

#include "mzk/graph.hpp"
#include "mzk/lists.hpp"

#include <iosfwd>
#include <json.hpp>
#include <string>

namespace mzk {

/// Malformed input file. The message carries the location.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

// JSON graph: { "vertices": [...], "edges": [[u,v],...], "layout": {...} }
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& doc);

// { "palette": [...], "lists": { "<vertexid>": [...] } }
Json lists_to_json(const ListAssignment& lists);
ListAssignment lists_from_json(const Json& doc);

/// DIMACS .col. Vertices are numbered 1..n in VertexId order and a
/// `c vertex <i> <id>` comment per vertex records the structured identity.
std::string write_dimacs_col(const Graph& g);

/// Reads a .col document. Structured ids are restored from `c vertex`
/// comments when present (and the canonical layout attached); otherwise
/// vertex i becomes plain:(i-1).
Graph read_dimacs_col(std::istream& in);

/// Graphviz rendering with optional list labels and pinned layout positions.
std::string write_dot(const Graph& g, const ListAssignment* lists = nullptr);

/// Loads a graph by extension: .col/.dimacs as DIMACS, anything else as JSON.
Graph load_graph(const std::string& path);
ListAssignment load_lists(const std::string& path);

Json parse_json_text(const std::string& text, const std::string& origin);

}  // namespace mzk
