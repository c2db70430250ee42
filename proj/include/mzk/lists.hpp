#pragma once

#include "mzk/graph.hpp"

#include <functional>
#include <map>
#include <vector>

namespace mzk {

using Color = int;
using ColorSet = std::vector<Color>;

/// Per-vertex color lists over a finite palette. Lists are sorted, non-empty
/// and contained in the palette.
class ListAssignment {
public:
    ListAssignment() = default;

    /// Throws GraphError on an empty list, a color outside the palette, or a
    /// palette that is empty or larger than 64 colors.
    static ListAssignment make(ColorSet palette, std::map<VertexId, ColorSet> lists);

    /// Same list on every vertex of g.
    static ListAssignment uniform(const Graph& g, const ColorSet& list);

    const ColorSet& palette() const { return palette_; }
    const std::map<VertexId, ColorSet>& lists() const { return lists_; }
    bool has(const VertexId& v) const { return lists_.count(v) != 0; }
    const ColorSet& of(const VertexId& v) const;

    /// Throws GraphError naming the first vertex of g without a list.
    void require_covers(const Graph& g) const;

    /// Relabels every color c as perm(c); perm must map the palette onto itself.
    ListAssignment permuted(const std::function<Color(Color)>& perm) const;

    ListAssignment restricted(const Graph& g) const;
    ListAssignment with_list(const VertexId& v, ColorSet list) const;
    ListAssignment without_color(const std::set<VertexId>& where, Color c) const;

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

private:
    ColorSet palette_;
    std::map<VertexId, ColorSet> lists_;
};

constexpr int kMaxPalette = 64;

/// {1..5} minus j.
ColorSet forbidden_list(Color j);

/// {lo..hi}.
ColorSet color_range(Color lo, Color hi);

}  // namespace mzk
