#include "mzk/io.hpp"

#include <fstream>
#include <sstream>

namespace mzk {

Json graph_to_json(const Graph& g)
{
    Json doc;
    doc["vertices"] = Json::array();
    for (const auto& v : g.vertices())
        doc["vertices"].push_back(v.str());
    doc["edges"] = Json::array();
    for (const auto& [u, v] : g.edge_ids())
        doc["edges"].push_back(Json::array({u.str(), v.str()}));
    if (g.has_layout()) {
        Json layout = Json::object();
        for (int i = 0; i < static_cast<int>(g.order()); ++i)
            layout[g.vertex(i).str()] = Json::array({g.position(i).x, g.position(i).y});
        doc["layout"] = std::move(layout);
    }
    return doc;
}

namespace {

VertexId id_from_json(const Json& node, const std::string& where)
{
    if (!node.is_string())
        throw ParseError(where + ": vertex id must be a string");
    try {
        return VertexId::parse(node.get<std::string>());
    } catch (const GraphError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

ColorSet colors_from_json(const Json& node, const std::string& where)
{
    if (!node.is_array())
        throw ParseError(where + ": expected an array of colors");
    ColorSet out;
    for (const auto& c : node) {
        if (!c.is_number_integer())
            throw ParseError(where + ": colors must be integers");
        out.push_back(c.get<int>());
    }
    return out;
}

}  // namespace

Graph graph_from_json(const Json& doc)
{
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw ParseError("graph JSON: expected an object with \"vertices\" and \"edges\"");
    const auto& vs = doc.at("vertices");
    const auto& es = doc.at("edges");
    if (!vs.is_array() || !es.is_array())
        throw ParseError("graph JSON: \"vertices\" and \"edges\" must be arrays");

    std::vector<VertexId> vertices;
    for (std::size_t i = 0; i < vs.size(); ++i)
        vertices.push_back(id_from_json(vs[i], "vertices[" + std::to_string(i) + "]"));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < es.size(); ++i) {
        auto where = "edges[" + std::to_string(i) + "]";
        if (!es[i].is_array() || es[i].size() != 2)
            throw ParseError(where + ": expected a pair");
        edges.emplace_back(id_from_json(es[i][0], where), id_from_json(es[i][1], where));
    }
    std::optional<Layout> layout;
    if (doc.contains("layout")) {
        layout.emplace();
        for (const auto& [key, value] : doc.at("layout").items()) {
            auto where = "layout[" + key + "]";
            if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() ||
                !value[1].is_number_integer())
                throw ParseError(where + ": expected [x, y] integers");
            layout->emplace(id_from_json(Json(key), where),
                            Point{value[0].get<std::int64_t>(), value[1].get<std::int64_t>()});
        }
    }
    try {
        return Graph::make(std::move(vertices), edges, std::move(layout));
    } catch (const GraphError& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
}

Json lists_to_json(const ListAssignment& lists)
{
    Json doc;
    doc["palette"] = lists.palette();
    Json body = Json::object();
    for (const auto& [v, list] : lists.lists())
        body[v.str()] = list;
    doc["lists"] = std::move(body);
    return doc;
}

ListAssignment lists_from_json(const Json& doc)
{
    if (!doc.is_object() || !doc.contains("palette") || !doc.contains("lists") || !doc.at("lists").is_object())
        throw ParseError("lists JSON: expected an object with \"palette\" and \"lists\"");
    auto palette = colors_from_json(doc.at("palette"), "palette");
    std::map<VertexId, ColorSet> lists;
    for (const auto& [key, value] : doc.at("lists").items()) {
        auto where = "lists[" + key + "]";
        lists.emplace(id_from_json(Json(key), where), colors_from_json(value, where));
    }
    try {
        return ListAssignment::make(std::move(palette), std::move(lists));
    } catch (const GraphError& e) {
        throw ParseError(std::string("lists JSON: ") + e.what());
    }
}

std::string write_dimacs_col(const Graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (int i = 0; i < static_cast<int>(g.order()); ++i)
        out << "c vertex " << i + 1 << ' ' << g.vertex(i).str() << '\n';
    for (auto [i, j] : g.edges())
        out << "e " << i + 1 << ' ' << j + 1 << '\n';
    return out.str();
}

Graph read_dimacs_col(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    long long n = -1;
    long long m = -1;
    std::map<long long, VertexId> names;
    std::vector<std::pair<long long, long long>> raw_edges;
    auto fail = [&](const std::string& what) {
        throw ParseError("line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag))
            continue;
        if (tag == "c") {
            std::string word;
            long long index = 0;
            std::string id;
            if (fields >> word && word == "vertex" && fields >> index >> id) {
                try {
                    names.emplace(index, VertexId::parse(id));
                } catch (const GraphError& e) {
                    fail(e.what());
                }
            }
        } else if (tag == "p") {
            std::string kind;
            if (!(fields >> kind >> n >> m) || (kind != "edge" && kind != "col") || n < 0 || m < 0)
                fail("malformed problem line");
        } else if (tag == "e") {
            if (n < 0)
                fail("edge before problem line");
            long long u = 0;
            long long v = 0;
            if (!(fields >> u >> v))
                fail("malformed edge line");
            if (u < 1 || v < 1 || u > n || v > n)
                fail("edge endpoint out of range 1.." + std::to_string(n));
            if (u == v)
                fail("loop edge " + std::to_string(u));
            raw_edges.emplace_back(u, v);
        } else {
            fail("unknown line type '" + tag + "'");
        }
    }
    if (n < 0)
        throw ParseError("missing problem line");

    bool structured = !names.empty();
    if (structured && static_cast<long long>(names.size()) != n)
        throw ParseError("vertex comments cover " + std::to_string(names.size()) + " of " + std::to_string(n) +
                         " vertices");
    std::vector<VertexId> ids;
    for (long long i = 1; i <= n; ++i) {
        if (structured) {
            auto it = names.find(i);
            if (it == names.end())
                throw ParseError("no vertex comment for index " + std::to_string(i));
            ids.push_back(it->second);
        } else {
            ids.push_back(VertexId::plain(static_cast<int>(i - 1)));
        }
    }
    std::vector<Edge> edges;
    for (auto [u, v] : raw_edges)
        edges.emplace_back(ids[static_cast<std::size_t>(u - 1)], ids[static_cast<std::size_t>(v - 1)]);
    try {
        return Graph::make(ids, edges, canonical_layout(ids));
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
}

std::string write_dot(const Graph& g, const ListAssignment* lists)
{
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle, fontsize=8];\n";
    for (int i = 0; i < static_cast<int>(g.order()); ++i) {
        const auto& v = g.vertex(i);
        out << "  v" << i << " [label=\"" << v.str();
        if (lists && lists->has(v)) {
            out << "\\n{";
            const auto& list = lists->of(v);
            for (std::size_t k = 0; k < list.size(); ++k)
                out << (k ? "," : "") << list[k];
            out << '}';
        }
        out << '"';
        if (g.has_layout())
            out << ", pos=\"" << g.position(i).x << ',' << g.position(i).y << "!\"";
        out << "];\n";
    }
    for (auto [i, j] : g.edges())
        out << "  v" << i << " -- v" << j << ";\n";
    out << "}\n";
    return out.str();
}

Json parse_json_text(const std::string& text, const std::string& origin)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool ends_with(const std::string& s, const std::string& suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Graph load_graph(const std::string& path)
{
    if (ends_with(path, ".col") || ends_with(path, ".dimacs")) {
        std::ifstream in(path);
        if (!in)
            throw ParseError("cannot open " + path);
        try {
            return read_dimacs_col(in);
        } catch (const ParseError& e) {
            throw ParseError(path + ": " + e.what());
        }
    }
    auto doc = parse_json_text(slurp(path), path);
    try {
        return graph_from_json(doc);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

ListAssignment load_lists(const std::string& path)
{
    auto doc = parse_json_text(slurp(path), path);
    try {
        return lists_from_json(doc);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace mzk
