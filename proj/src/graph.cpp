#include "mzk/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

namespace mzk {

namespace {

int parse_int(const std::string& text, const std::string& whole)
{
    int value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty())
        throw GraphError("malformed vertex id '" + whole + "'");
    return value;
}

std::pair<int, int> parse_pair(const std::string& body, const std::string& whole)
{
    auto comma = body.find(',');
    if (comma == std::string::npos)
        throw GraphError("malformed vertex id '" + whole + "'");
    return {parse_int(body.substr(0, comma), whole), parse_int(body.substr(comma + 1), whole)};
}

}  // namespace

VertexId VertexId::corner(int a, int b)
{
    if (a % 2 == 0 || b % 2 == 0)
        throw GraphError("corner coordinates must be odd: " + std::to_string(a) + "," + std::to_string(b));
    return {Kind::Corner, a, b};
}

VertexId VertexId::plain(int n)
{
    if (n < 0)
        throw GraphError("plain vertex index must be nonnegative");
    return {Kind::Plain, n, 0};
}

std::string VertexId::str() const
{
    switch (kind) {
    case Kind::Apex:
        return "apex";
    case Kind::Hub:
        return "hub:" + std::to_string(a) + "," + std::to_string(b);
    case Kind::Corner:
        return "corner:" + std::to_string(a) + "," + std::to_string(b);
    case Kind::Plain:
        return "plain:" + std::to_string(a);
    }
    return {};
}

VertexId VertexId::parse(const std::string& text)
{
    if (text == "apex")
        return apex();
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw GraphError("malformed vertex id '" + text + "'");
    auto tag = text.substr(0, colon);
    auto body = text.substr(colon + 1);
    if (tag == "plain")
        return plain(parse_int(body, text));
    if (tag == "hub") {
        auto [x, y] = parse_pair(body, text);
        return hub(x, y);
    }
    if (tag == "corner") {
        auto [a, b] = parse_pair(body, text);
        return corner(a, b);
    }
    throw GraphError("unknown vertex kind in '" + text + "'");
}

Graph Graph::make(std::vector<VertexId> vertices, const std::vector<Edge>& edges,
                  std::optional<Layout> layout)
{
    Graph g;
    std::sort(vertices.begin(), vertices.end());
    if (auto dup = std::adjacent_find(vertices.begin(), vertices.end()); dup != vertices.end())
        throw GraphError("duplicate vertex " + dup->str());
    g.vertices_ = std::move(vertices);
    g.adjacency_.resize(g.vertices_.size());

    for (const auto& [u, v] : edges) {
        auto iu = g.index_of(u);
        auto iv = g.index_of(v);
        if (!iu || !iv)
            throw GraphError("edge " + u.str() + "-" + v.str() + " has an unknown endpoint");
        if (*iu == *iv)
            throw GraphError("edge " + u.str() + "-" + v.str() + " is a loop");
        g.adjacency_[static_cast<std::size_t>(*iu)].push_back(*iv);
        g.adjacency_[static_cast<std::size_t>(*iv)].push_back(*iu);
    }
    std::size_t degree_sum = 0;
    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        degree_sum += nbrs.size();
    }
    g.edge_count_ = degree_sum / 2;

    if (layout) {
        g.positions_.reserve(g.vertices_.size());
        for (const auto& v : g.vertices_) {
            auto it = layout->find(v);
            if (it == layout->end())
                throw GraphError("layout is missing vertex " + v.str());
            g.positions_.push_back(it->second);
        }
    }
    return g;
}

std::optional<int> Graph::index_of(const VertexId& v) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        return std::nullopt;
    return static_cast<int>(it - vertices_.begin());
}

int Graph::require_index(const VertexId& v) const
{
    auto i = index_of(v);
    if (!i)
        throw GraphError("unknown vertex " + v.str());
    return *i;
}

bool Graph::adjacent(int i, int j) const
{
    auto nbrs = neighbors(i);
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int i = 0; i < static_cast<int>(order()); ++i)
        for (int j : neighbors(i))
            if (i < j)
                out.emplace_back(i, j);
    return out;
}

std::vector<Edge> Graph::edge_ids() const
{
    std::vector<Edge> out;
    for (auto [i, j] : edges())
        out.emplace_back(vertex(i), vertex(j));
    return out;
}

Layout Graph::layout() const
{
    Layout out;
    for (std::size_t i = 0; i < positions_.size(); ++i)
        out.emplace(vertices_[i], positions_[i]);
    return out;
}

Graph Graph::with_layout(const Layout& layout) const
{
    return make(vertices_, edge_ids(), layout);
}

Graph induced_subgraph(const Graph& g, const std::set<VertexId>& kept)
{
    for (const auto& v : kept)
        g.require_index(v);
    std::vector<VertexId> vertices(kept.begin(), kept.end());
    std::vector<Edge> edges;
    for (const auto& e : g.edge_ids())
        if (kept.count(e.first) && kept.count(e.second))
            edges.push_back(e);
    std::optional<Layout> layout;
    if (g.has_layout()) {
        layout.emplace();
        for (const auto& v : kept)
            layout->emplace(v, g.position(g.require_index(v)));
    }
    return Graph::make(std::move(vertices), edges, std::move(layout));
}

Graph delete_vertices(const Graph& g, const std::set<VertexId>& removed)
{
    for (const auto& v : removed)
        g.require_index(v);
    std::set<VertexId> kept;
    for (const auto& v : g.vertices())
        if (!removed.count(v))
            kept.insert(v);
    return induced_subgraph(g, kept);
}

std::vector<std::vector<VertexId>> components(const Graph& g)
{
    std::vector<std::vector<VertexId>> out;
    std::vector<bool> seen(g.order(), false);
    for (int start = 0; start < static_cast<int>(g.order()); ++start) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        std::vector<int> members;
        std::vector<int> stack{start};
        seen[static_cast<std::size_t>(start)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        auto& comp = out.emplace_back();
        for (int v : members)
            comp.push_back(g.vertex(v));
    }
    // starts are visited in index order, so components are already ordered by least element
    return out;
}

bool is_connected(const Graph& g)
{
    return components(g).size() <= 1;
}

std::map<std::size_t, std::size_t> degree_histogram(const Graph& g)
{
    std::map<std::size_t, std::size_t> hist;
    for (int i = 0; i < static_cast<int>(g.order()); ++i)
        ++hist[g.degree(i)];
    return hist;
}

Bipartition is_bipartite(const Graph& g)
{
    const auto n = g.order();
    std::vector<int> side(n, -1);
    std::vector<int> parent(n, -1);
    for (int root = 0; root < static_cast<int>(n); ++root) {
        if (side[static_cast<std::size_t>(root)] != -1)
            continue;
        side[static_cast<std::size_t>(root)] = 0;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int w : g.neighbors(v)) {
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw == -1) {
                    sw = 1 - side[static_cast<std::size_t>(v)];
                    parent[static_cast<std::size_t>(w)] = v;
                    queue.push(w);
                } else if (sw == side[static_cast<std::size_t>(v)]) {
                    // same BFS level parity: walk both tree paths up to their meeting point
                    std::vector<int> up_v{v}, up_w{w};
                    while (parent[static_cast<std::size_t>(up_v.back())] != -1)
                        up_v.push_back(parent[static_cast<std::size_t>(up_v.back())]);
                    while (parent[static_cast<std::size_t>(up_w.back())] != -1)
                        up_w.push_back(parent[static_cast<std::size_t>(up_w.back())]);
                    while (up_v.size() > 1 && up_w.size() > 1 &&
                           up_v[up_v.size() - 2] == up_w[up_w.size() - 2]) {
                        up_v.pop_back();
                        up_w.pop_back();
                    }
                    Bipartition result;
                    for (int x : up_v)
                        result.odd_cycle.push_back(g.vertex(x));
                    for (auto it = up_w.rbegin() + 1; it != up_w.rend(); ++it)
                        result.odd_cycle.push_back(g.vertex(*it));
                    std::reverse(result.odd_cycle.begin(), result.odd_cycle.end());
                    return result;
                }
            }
        }
    }
    return {true, std::move(side), {}};
}

std::optional<Layout> canonical_layout(const std::vector<VertexId>& vertices)
{
    Layout layout;
    for (const auto& v : vertices) {
        switch (v.kind) {
        case VertexId::Kind::Apex:
            layout.emplace(v, Point{33, 25});
            break;
        case VertexId::Kind::Hub:
            layout.emplace(v, Point{6LL * v.a, 6LL * v.b});
            break;
        case VertexId::Kind::Corner:
            layout.emplace(v, Point{3LL * v.a, 3LL * v.b});
            break;
        case VertexId::Kind::Plain:
            return std::nullopt;
        }
    }
    return layout;
}

}  // namespace mzk
