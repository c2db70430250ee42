#include "mzk/lists.hpp"

#include <algorithm>

namespace mzk {

ListAssignment ListAssignment::make(ColorSet palette, std::map<VertexId, ColorSet> lists)
{
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    if (palette.empty())
        throw GraphError("palette is empty");
    if (palette.size() > static_cast<std::size_t>(kMaxPalette))
        throw GraphError("palette has " + std::to_string(palette.size()) + " colors; at most 64 are supported");
    for (auto& [v, list] : lists) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        if (list.empty())
            throw GraphError("empty list at " + v.str());
        for (Color c : list)
            if (!std::binary_search(palette.begin(), palette.end(), c))
                throw GraphError("color " + std::to_string(c) + " at " + v.str() + " is outside the palette");
    }
    ListAssignment out;
    out.palette_ = std::move(palette);
    out.lists_ = std::move(lists);
    return out;
}

ListAssignment ListAssignment::uniform(const Graph& g, const ColorSet& list)
{
    std::map<VertexId, ColorSet> lists;
    for (const auto& v : g.vertices())
        lists.emplace(v, list);
    return make(list, std::move(lists));
}

const ColorSet& ListAssignment::of(const VertexId& v) const
{
    auto it = lists_.find(v);
    if (it == lists_.end())
        throw GraphError("no list for vertex " + v.str());
    return it->second;
}

void ListAssignment::require_covers(const Graph& g) const
{
    for (const auto& v : g.vertices())
        if (!has(v))
            throw GraphError("no list for vertex " + v.str());
}

ListAssignment ListAssignment::permuted(const std::function<Color(Color)>& perm) const
{
    ColorSet palette;
    for (Color c : palette_)
        palette.push_back(perm(c));
    auto check = palette;
    std::sort(check.begin(), check.end());
    if (check != palette_)
        throw GraphError("color permutation does not map the palette onto itself");
    std::map<VertexId, ColorSet> lists;
    for (const auto& [v, list] : lists_) {
        auto& out = lists[v];
        for (Color c : list)
            out.push_back(perm(c));
    }
    return make(std::move(palette), std::move(lists));
}

ListAssignment ListAssignment::restricted(const Graph& g) const
{
    std::map<VertexId, ColorSet> lists;
    for (const auto& v : g.vertices())
        lists.emplace(v, of(v));
    return make(palette_, std::move(lists));
}

ListAssignment ListAssignment::with_list(const VertexId& v, ColorSet list) const
{
    auto lists = lists_;
    lists[v] = std::move(list);
    return make(palette_, std::move(lists));
}

ListAssignment ListAssignment::without_color(const std::set<VertexId>& where, Color c) const
{
    auto lists = lists_;
    for (const auto& v : where) {
        auto& list = lists.at(v);
        list.erase(std::remove(list.begin(), list.end(), c), list.end());
    }
    return make(palette_, std::move(lists));
}

ColorSet forbidden_list(Color j)
{
    ColorSet out;
    for (Color c = 1; c <= 5; ++c)
        if (c != j)
            out.push_back(c);
    return out;
}

ColorSet color_range(Color lo, Color hi)
{
    ColorSet out;
    for (Color c = lo; c <= hi; ++c)
        out.push_back(c);
    return out;
}

}  // namespace mzk
