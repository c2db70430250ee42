#include "mzk/construct.hpp"

#include <stdexcept>

namespace mzk {

Graph build_cells(std::span<const Cell> cells, bool with_apex)
{
    std::set<VertexId> vertices;
    std::vector<Edge> edges;
    std::set<VertexId> corners;
    for (const auto& cell : cells) {
        auto hub = VertexId::hub(cell.x, cell.y);
        auto sw = VertexId::corner(2 * cell.x - 1, 2 * cell.y - 1);
        auto se = VertexId::corner(2 * cell.x + 1, 2 * cell.y - 1);
        auto ne = VertexId::corner(2 * cell.x + 1, 2 * cell.y + 1);
        auto nw = VertexId::corner(2 * cell.x - 1, 2 * cell.y + 1);
        vertices.insert({hub, sw, se, ne, nw});
        corners.insert({sw, se, ne, nw});
        for (const auto& c : {sw, se, ne, nw})
            edges.emplace_back(hub, c);
        edges.emplace_back(sw, se);
        edges.emplace_back(se, ne);
        edges.emplace_back(ne, nw);
        edges.emplace_back(nw, sw);
    }
    if (with_apex) {
        vertices.insert(VertexId::apex());
        for (const auto& c : corners)
            edges.emplace_back(VertexId::apex(), c);
    }
    std::vector<VertexId> ids(vertices.begin(), vertices.end());
    auto layout = canonical_layout(ids);
    return Graph::make(std::move(ids), edges, std::move(layout));
}

Graph wheel4()
{
    const Cell cell{0, 0};
    return build_cells(std::span(&cell, 1), false);
}

ListAssignment wheel_lists()
{
    return ListAssignment::make({1, 2, 3, 4, 5}, {
                                                     {wheel::center, {2, 3, 4, 5}},
                                                     {wheel::nw, {2, 3, 5}},
                                                     {wheel::ne, {2, 3, 4}},
                                                     {wheel::sw, {2, 4, 5}},
                                                     {wheel::se, {3, 4, 5}},
                                                 });
}

namespace {

constexpr std::array<Cell, 5> kGadgetCells{{{0, 0}, {1, -1}, {1, 0}, {1, 1}, {2, 0}}};

std::vector<Cell> mirzakhani_cells()
{
    std::vector<Cell> cells;
    for (int x = 0; x <= 11; ++x)
        cells.push_back({x, 0});
    for (int x : {1, 4, 7, 10}) {
        cells.push_back({x, -1});
        cells.push_back({x, 1});
    }
    return cells;
}

// Forbidden color of each first-section corner.
const std::map<VertexId, Color>& first_section_forbidden()
{
    static const std::map<VertexId, Color> table{
        {VertexId::corner(-1, -1), 2}, {VertexId::corner(-1, 1), 4}, {VertexId::corner(1, -1), 5},
        {VertexId::corner(1, 1), 3},   {VertexId::corner(1, -3), 2}, {VertexId::corner(3, -3), 3},
        {VertexId::corner(1, 3), 4},   {VertexId::corner(3, 3), 5},  {VertexId::corner(3, -1), 4},
        {VertexId::corner(3, 1), 2},   {VertexId::corner(5, -1), 3}, {VertexId::corner(5, 1), 5},
    };
    return table;
}

void require_section(int j)
{
    if (j < 1 || j > 4)
        throw GraphError("section index " + std::to_string(j) + " is outside 1..4");
}

}  // namespace

Gadget gadget()
{
    Gadget out{build_cells(kGadgetCells, false), {}, VertexId::hub(1, 0)};
    for (const auto& v : out.graph.vertices())
        if (v.is_corner())
            out.outer.insert(v);
    return out;
}

Graph mirzakhani()
{
    auto cells = mirzakhani_cells();
    return build_cells(cells, true);
}

std::array<Color, 6> section_permutation(int j)
{
    require_section(j);
    switch (j) {
    case 1:
        return {0, 1, 2, 3, 4, 5};
    case 2:  // (1 2 3)(4 5)
        return {0, 2, 3, 1, 5, 4};
    case 3:  // (1 3 2)
        return {0, 3, 1, 2, 4, 5};
    default:  // (1 4 5 3)
        return {0, 4, 2, 1, 5, 3};
    }
}

VertexId translate_to_section(const VertexId& v, int j)
{
    require_section(j);
    switch (v.kind) {
    case VertexId::Kind::Corner:
        return VertexId::corner(v.a + 6 * (j - 1), v.b);
    case VertexId::Kind::Hub:
        return VertexId::hub(v.a + 3 * (j - 1), v.b);
    default:
        throw GraphError("vertex " + v.str() + " is not part of the gadget");
    }
}

ListAssignment canonical_lists()
{
    std::map<VertexId, ColorSet> lists;
    auto assign = [&](const VertexId& v, Color forbidden) {
        auto list = forbidden_list(forbidden);
        auto [it, inserted] = lists.emplace(v, list);
        if (!inserted && it->second != list)
            throw std::logic_error("sections disagree on the list of " + v.str());
    };
    for (int j = 1; j <= 4; ++j) {
        auto perm = section_permutation(j);
        for (const auto& [corner, forbidden] : first_section_forbidden())
            assign(translate_to_section(corner, j), perm[static_cast<std::size_t>(forbidden)]);
        for (const auto& cell : kGadgetCells)
            assign(translate_to_section(VertexId::hub(cell.x, cell.y), j), perm[1]);
    }
    assign(VertexId::apex(), 5);
    return ListAssignment::make({1, 2, 3, 4, 5}, std::move(lists));
}

Section section_gadget(const Graph& m, int j)
{
    require_section(j);
    auto base = gadget();
    Section out;
    out.index = j;
    out.central_hub = translate_to_section(base.central_hub, j);
    std::set<VertexId> kept;
    for (const auto& v : base.graph.vertices()) {
        auto t = translate_to_section(v, j);
        kept.insert(t);
        out.from_gadget.emplace(v, t);
        if (base.outer.count(v))
            out.outer.insert(t);
    }
    out.graph = induced_subgraph(m, kept);
    return out;
}

std::vector<VertexId> hubs_of(const Graph& g)
{
    std::vector<VertexId> out;
    for (const auto& v : g.vertices())
        if (v.is_hub())
            out.push_back(v);
    return out;
}

std::vector<VertexId> corners_of(const Graph& g)
{
    std::vector<VertexId> out;
    for (const auto& v : g.vertices())
        if (v.is_corner())
            out.push_back(v);
    return out;
}

std::vector<VertexId> central_hubs(const Graph& g)
{
    std::set<VertexId> apex;
    if (g.contains(VertexId::apex()))
        apex.insert(VertexId::apex());
    auto rest = delete_vertices(g, apex);
    std::vector<VertexId> out;
    for (int i = 0; i < static_cast<int>(rest.order()); ++i) {
        if (!rest.vertex(i).is_hub() || rest.degree(i) != 4)
            continue;
        bool all_seven = true;
        for (int w : rest.neighbors(i))
            all_seven = all_seven && rest.degree(w) == 7;
        if (all_seven)
            out.push_back(rest.vertex(i));
    }
    return out;
}

}  // namespace mzk
