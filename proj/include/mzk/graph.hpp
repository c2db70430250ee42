#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mzk {

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structured vertex identity.
///
/// Corners sit on odd grid coordinates, hubs index a cell of the drawing, the
/// apex is the single vertex above the drawing, and plain vertices cover
/// generic test graphs. The declaration order of Kind is the total order used
/// everywhere: Apex < Hub < Corner < Plain, then lexicographic on (a, b).
struct VertexId {
    enum class Kind : std::uint8_t { Apex, Hub, Corner, Plain };

    Kind kind = Kind::Plain;
    int a = 0;
    int b = 0;

    static VertexId apex() { return {Kind::Apex, 0, 0}; }
    static VertexId hub(int x, int y) { return {Kind::Hub, x, y}; }
    static VertexId corner(int a, int b);
    static VertexId plain(int n);

    bool is_apex() const { return kind == Kind::Apex; }
    bool is_hub() const { return kind == Kind::Hub; }
    bool is_corner() const { return kind == Kind::Corner; }
    bool is_plain() const { return kind == Kind::Plain; }

    /// "apex", "hub:x,y", "corner:a,b" or "plain:n".
    std::string str() const;
    static VertexId parse(const std::string& text);

    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

using Edge = std::pair<VertexId, VertexId>;

/// Integer point on the scaled drawing grid.
struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

using Layout = std::map<VertexId, Point>;

/// Immutable simple undirected graph.
///
/// Vertices are stored sorted by the VertexId order and addressed by dense
/// indices; neighbor lists are sorted, so index order and identity order agree.
class Graph {
public:
    Graph() = default;

    /// Builds a simple graph. Duplicate edges collapse; loops, unknown
    /// endpoints and repeated vertices throw GraphError.
    static Graph make(std::vector<VertexId> vertices, const std::vector<Edge>& edges,
                      std::optional<Layout> layout = std::nullopt);

    std::size_t order() const { return vertices_.size(); }
    std::size_t size() const { return edge_count_; }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const VertexId& vertex(int index) const { return vertices_.at(static_cast<std::size_t>(index)); }
    std::optional<int> index_of(const VertexId& v) const;
    int require_index(const VertexId& v) const;
    bool contains(const VertexId& v) const { return index_of(v).has_value(); }

    std::span<const int> neighbors(int index) const { return adjacency_.at(static_cast<std::size_t>(index)); }
    std::size_t degree(int index) const { return neighbors(index).size(); }
    bool adjacent(int i, int j) const;

    /// Edges as index pairs (i < j), sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;
    std::vector<Edge> edge_ids() const;

    bool has_layout() const { return !positions_.empty(); }
    const Point& position(int index) const { return positions_.at(static_cast<std::size_t>(index)); }
    Layout layout() const;

    /// Graph with the same vertices and edges and the given layout.
    Graph with_layout(const Layout& layout) const;

private:
    std::vector<VertexId> vertices_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<Point> positions_;
    std::size_t edge_count_ = 0;
};

/// Induced subgraph on V \ removed. Layout entries of removed vertices drop.
Graph delete_vertices(const Graph& g, const std::set<VertexId>& removed);

/// Induced subgraph on `kept`.
Graph induced_subgraph(const Graph& g, const std::set<VertexId>& kept);

/// Connected components, each sorted, ordered by least element.
std::vector<std::vector<VertexId>> components(const Graph& g);

bool is_connected(const Graph& g);

std::map<std::size_t, std::size_t> degree_histogram(const Graph& g);

struct Bipartition {
    bool bipartite = false;
    /// side[i] in {0,1} when bipartite.
    std::vector<int> side;
    /// Closed odd cycle (first vertex not repeated) when not bipartite.
    std::vector<VertexId> odd_cycle;
};

Bipartition is_bipartite(const Graph& g);

/// Layout implied by structured ids: Corner(a,b) -> (3a,3b), Hub(x,y) -> (6x,6y),
/// Apex -> (33,25). Empty if any vertex is Plain.
std::optional<Layout> canonical_layout(const std::vector<VertexId>& vertices);

}  // namespace mzk
