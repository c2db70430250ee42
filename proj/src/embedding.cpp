#include "mzk/verify.hpp"

#include <algorithm>

namespace mzk {

namespace {

struct Direction {
    std::int64_t dx;
    std::int64_t dy;

    // 0 for angles in [0, pi), 1 for [pi, 2pi)
    int half() const { return (dy < 0 || (dy == 0 && dx < 0)) ? 1 : 0; }
};

std::int64_t cross(const Direction& a, const Direction& b)
{
    return a.dx * b.dy - a.dy * b.dx;
}

// Dart (u, position of v in u's sorted neighbor list) -> dense id.
class Darts {
public:
    explicit Darts(const Graph& g) : graph_(g), offset_(g.order() + 1, 0)
    {
        for (std::size_t i = 0; i < g.order(); ++i)
            offset_[i + 1] = offset_[i] + g.degree(static_cast<int>(i));
    }

    std::size_t count() const { return offset_.back(); }

    std::size_t id(int u, int v) const
    {
        auto nbrs = graph_.neighbors(u);
        auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
        return offset_[static_cast<std::size_t>(u)] + static_cast<std::size_t>(it - nbrs.begin());
    }

private:
    const Graph& graph_;
    std::vector<std::size_t> offset_;
};

int successor(const RotationSystem& rot, int at, int after)
{
    const auto& ring = rot.order[static_cast<std::size_t>(at)];
    auto it = std::find(ring.begin(), ring.end(), after);
    ++it;
    return it == ring.end() ? ring.front() : *it;
}

// Faces as index walks, in dart-id order of their first dart.
std::vector<std::vector<int>> trace_faces(const Graph& g, const RotationSystem& rot)
{
    check_rotation(g, rot);
    Darts darts(g);
    std::vector<bool> used(darts.count(), false);
    std::vector<std::vector<int>> faces;
    for (int u = 0; u < static_cast<int>(g.order()); ++u)
        for (int v : g.neighbors(u)) {
            if (used[darts.id(u, v)])
                continue;
            auto& face = faces.emplace_back();
            int a = u;
            int b = v;
            while (!used[darts.id(a, b)]) {
                used[darts.id(a, b)] = true;
                face.push_back(a);
                int next = successor(rot, b, a);
                a = b;
                b = next;
            }
        }
    return faces;
}

// Twice the signed area of a closed walk.
std::int64_t signed_area2(const Graph& g, const std::vector<int>& walk)
{
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const auto& p = g.position(walk[i]);
        const auto& q = g.position(walk[(i + 1) % walk.size()]);
        sum += p.x * q.y - q.x * p.y;
    }
    return sum;
}

std::vector<int> outer_walk_indices(const Graph& g, const RotationSystem& rot)
{
    if (!g.has_layout())
        throw GraphError("outer walk needs a layout");
    auto faces = trace_faces(g, rot);
    if (faces.empty())
        throw GraphError("graph has no edges, so no outer face");
    auto best = std::max_element(faces.begin(), faces.end(), [&](const auto& x, const auto& y) {
        return signed_area2(g, x) < signed_area2(g, y);
    });
    std::vector<bool> seen(g.order(), false);
    for (int v : *best) {
        if (seen[static_cast<std::size_t>(v)])
            throw GraphError("outer face is not simple: " + g.vertex(v).str() + " repeats");
        seen[static_cast<std::size_t>(v)] = true;
    }
    return *best;
}

}  // namespace

RotationSystem rotation_from_layout(const Graph& g)
{
    if (!g.has_layout())
        throw GraphError("rotation from layout needs a layout");
    RotationSystem rot;
    rot.order.resize(g.order());
    for (int v = 0; v < static_cast<int>(g.order()); ++v) {
        const auto& origin = g.position(v);
        std::vector<std::pair<Direction, int>> dirs;
        for (int w : g.neighbors(v)) {
            Direction d{g.position(w).x - origin.x, g.position(w).y - origin.y};
            if (d.dx == 0 && d.dy == 0)
                throw GraphError("vertices " + g.vertex(v).str() + " and " + g.vertex(w).str() + " coincide");
            dirs.emplace_back(d, w);
        }
        std::sort(dirs.begin(), dirs.end(), [](const auto& x, const auto& y) {
            if (x.first.half() != y.first.half())
                return x.first.half() < y.first.half();
            return cross(x.first, y.first) > 0;
        });
        for (std::size_t i = 1; i < dirs.size(); ++i)
            if (dirs[i - 1].first.half() == dirs[i].first.half() && cross(dirs[i - 1].first, dirs[i].first) == 0)
                throw GraphError("two neighbors of " + g.vertex(v).str() + " lie in the same direction");
        for (const auto& [d, w] : dirs)
            rot.order[static_cast<std::size_t>(v)].push_back(w);
    }
    return rot;
}

void check_rotation(const Graph& g, const RotationSystem& rot)
{
    if (rot.order.size() != g.order())
        throw GraphError("rotation system covers " + std::to_string(rot.order.size()) + " of " +
                         std::to_string(g.order()) + " vertices");
    for (int v = 0; v < static_cast<int>(g.order()); ++v) {
        auto ring = rot.order[static_cast<std::size_t>(v)];
        std::sort(ring.begin(), ring.end());
        auto nbrs = g.neighbors(v);
        if (!std::equal(ring.begin(), ring.end(), nbrs.begin(), nbrs.end()))
            throw GraphError("rotation at " + g.vertex(v).str() + " is not a permutation of its neighbors");
    }
}

std::size_t FaceCensus::length_sum() const
{
    std::size_t sum = 0;
    for (const auto& f : faces)
        sum += f.size();
    return sum;
}

bool FaceCensus::all_triangles() const
{
    return std::all_of(faces.begin(), faces.end(), [](const auto& f) { return f.size() == 3; });
}

FaceCensus face_census(const Graph& g, const RotationSystem& rot)
{
    FaceCensus census;
    for (const auto& face : trace_faces(g, rot)) {
        auto& out = census.faces.emplace_back();
        for (int v : face)
            out.push_back(g.vertex(v));
    }
    census.vertices = g.order();
    census.edges = g.size();
    census.face_count = census.faces.size();
    census.euler = static_cast<long long>(census.vertices) - static_cast<long long>(census.edges) +
                   static_cast<long long>(census.face_count);
    census.connected = is_connected(g);
    return census;
}

std::vector<VertexId> outer_walk(const Graph& g, const RotationSystem& rot)
{
    std::vector<VertexId> out;
    for (int v : outer_walk_indices(g, rot))
        out.push_back(g.vertex(v));
    return out;
}

RotationSystem apex_embed(const Graph& g, const VertexId& apex)
{
    const int top = g.require_index(apex);
    auto rest = delete_vertices(g, {apex});
    auto rest_rot = rotation_from_layout(rest);
    auto walk = outer_walk_indices(rest, rest_rot);

    std::set<VertexId> on_walk;
    for (int v : walk)
        on_walk.insert(rest.vertex(v));
    for (int w : g.neighbors(top))
        if (!on_walk.count(g.vertex(w)))
            throw GraphError(apex.str() + " is adjacent to " + g.vertex(w).str() + ", which is not on the outer walk");
    for (const auto& v : on_walk) {
        auto i = g.require_index(v);
        if (!g.adjacent(top, i))
            throw GraphError(v.str() + " lies on the outer walk but is not adjacent to " + apex.str());
    }

    RotationSystem rot;
    rot.order.resize(g.order());
    for (int v = 0; v < static_cast<int>(rest.order()); ++v) {
        auto& ring = rot.order[static_cast<std::size_t>(g.require_index(rest.vertex(v)))];
        for (int w : rest_rot.order[static_cast<std::size_t>(v)])
            ring.push_back(g.require_index(rest.vertex(w)));
    }
    const auto n = walk.size();
    for (std::size_t i = 0; i < n; ++i) {
        int prev = g.require_index(rest.vertex(walk[(i + n - 1) % n]));
        int here = g.require_index(rest.vertex(walk[i]));
        auto& ring = rot.order[static_cast<std::size_t>(here)];
        auto it = std::find(ring.begin(), ring.end(), prev);
        ring.insert(it + 1, top);
    }
    auto& apex_ring = rot.order[static_cast<std::size_t>(top)];
    for (auto it = walk.rbegin(); it != walk.rend(); ++it)
        apex_ring.push_back(g.require_index(rest.vertex(*it)));
    check_rotation(g, rot);
    return rot;
}

Json face_census_to_json(const FaceCensus& census)
{
    Json out;
    out["V"] = census.vertices;
    out["E"] = census.edges;
    out["F"] = census.face_count;
    out["euler"] = census.euler;
    out["connected"] = census.connected;
    out["length_sum"] = census.length_sum();
    std::map<std::size_t, std::size_t> lengths;
    for (const auto& f : census.faces)
        ++lengths[f.size()];
    Json hist = Json::object();
    for (auto [len, count] : lengths)
        hist[std::to_string(len)] = count;
    out["face_lengths"] = std::move(hist);
    return out;
}

}  // namespace mzk
