#pragma once

#include "mzk/graph.hpp"
#include "mzk/lists.hpp"

#include <array>
#include <set>

namespace mzk {

/// A cell of the drawing grid. Cell (x, y) owns Hub(x, y), the four corners
/// Corner(2x +- 1, 2y +- 1), four spokes and the rim 4-cycle on its corners.
struct Cell {
    int x = 0;
    int y = 0;
};

/// Builds the union of the given wheel cells; shared corners and rim edges
/// are identified by coordinate.
Graph build_cells(std::span<const Cell> cells, bool with_apex);

// Corners of the wheel: sw = Corner(-1,-1), se = Corner(1,-1), ne = Corner(1,1), nw = Corner(-1,1).
namespace wheel {
inline const VertexId center = VertexId::hub(0, 0);
inline const VertexId sw = VertexId::corner(-1, -1);
inline const VertexId se = VertexId::corner(1, -1);
inline const VertexId ne = VertexId::corner(1, 1);
inline const VertexId nw = VertexId::corner(-1, 1);
}  // namespace wheel

/// Five-vertex wheel W4: one hub and the 4-cycle of its corners.
Graph wheel4();

/// Lists of the restricted wheel problem: hub {2,3,4,5}, rim corners the
/// four 3-subsets of {2,3,4,5}.
ListAssignment wheel_lists();

struct Gadget {
    Graph graph;
    /// The twelve corners on the outer face.
    std::set<VertexId> outer;
    VertexId central_hub;
};

/// Five overlapping wheels on cells (0,0), (1,-1), (1,0), (1,1), (2,0):
/// 17 vertices, 36 edges.
Gadget gadget();

/// The 63-vertex graph: 20 cells plus an apex joined to every corner.
Graph mirzakhani();

/// Color permutation applied to the first section's lists to obtain section
/// j (1..4). Index 0 is unused; perm[c] is the image of color c.
std::array<Color, 6> section_permutation(int j);

/// Canonical assignment of four-element lists on the 63-vertex graph.
/// Throws std::logic_error if two sections disagree on a shared corner.
ListAssignment canonical_lists();

/// Maps a vertex of gadget() to its translate in section j of the big graph.
VertexId translate_to_section(const VertexId& v, int j);

struct Section {
    int index = 0;
    Graph graph;
    std::set<VertexId> outer;
    VertexId central_hub;
    /// gadget() vertex -> vertex of this section.
    std::map<VertexId, VertexId> from_gadget;
};

/// Induced subgraph of `m` on section j's five hubs and twelve corners.
/// Throws GraphError when j is outside 1..4 or a vertex is missing.
Section section_gadget(const Graph& m, int j);

/// Hub and corner counts, central-hub detection and similar audit counts.
std::vector<VertexId> hubs_of(const Graph& g);
std::vector<VertexId> corners_of(const Graph& g);

/// Hubs all of whose neighbors have degree 7 once the apex is removed.
std::vector<VertexId> central_hubs(const Graph& g);

}  // namespace mzk
