#include "mzk/verify.hpp"

#include <algorithm>

namespace mzk {

std::string to_string(HamiltonStatus status)
{
    switch (status) {
    case HamiltonStatus::Found:
        return "Found";
    case HamiltonStatus::NoneProved:
        return "NoneProved";
    case HamiltonStatus::Exhausted:
        return "Exhausted";
    }
    return {};
}

namespace {

class HamiltonSearch {
public:
    HamiltonSearch(const Graph& g, std::uint64_t budget)
        : graph_(g), budget_(budget), n_(static_cast<int>(g.order())), visited_(g.order(), false)
    {
    }

    HamiltonResult run()
    {
        HamiltonResult out;
        out.budget = budget_;
        if (n_ >= 3) {
            path_.push_back(0);
            visited_[0] = true;
            extend();
        }
        out.nodes = nodes_;
        if (found_) {
            out.status = HamiltonStatus::Found;
            for (int v : path_)
                out.cycle.push_back(graph_.vertex(v));
        } else {
            out.status = exhausted_ ? HamiltonStatus::Exhausted : HamiltonStatus::NoneProved;
        }
        return out;
    }

private:
    bool free(int v) const { return !visited_[static_cast<std::size_t>(v)]; }

    // Neighbors a free vertex can still use: free vertices and the two path ends.
    int exits(int v) const
    {
        int count = 0;
        for (int w : graph_.neighbors(v))
            if (free(w) || w == path_.front() || w == path_.back())
                ++count;
        return count;
    }

    // False when the remaining free vertices cannot complete the cycle.
    bool feasible() const
    {
        const int head = path_.back();
        const int start = path_.front();
        int remaining = n_ - static_cast<int>(path_.size());
        if (remaining == 0)
            return graph_.adjacent(head, start);

        // every free vertex needs two usable edges
        for (int v = 0; v < n_; ++v)
            if (free(v) && exits(v) < 2)
                return false;

        // component-count bound: the rest of the cycle is a path whose interior
        // is exactly the free set, so the free set must be one component
        std::vector<bool> reached(static_cast<std::size_t>(n_), false);
        std::vector<int> stack;
        for (int v = 0; v < n_ && stack.empty(); ++v)
            if (free(v)) {
                stack.push_back(v);
                reached[static_cast<std::size_t>(v)] = true;
            }
        int count = 0;
        bool touches_head = false;
        bool touches_start = false;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++count;
            for (int w : graph_.neighbors(v)) {
                touches_head = touches_head || w == head;
                touches_start = touches_start || w == start;
                if (free(w) && !reached[static_cast<std::size_t>(w)]) {
                    reached[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        // connectivity cut-off
        return count == remaining && touches_head && touches_start;
    }

    // returns false to stop
    bool extend()
    {
        if (static_cast<int>(path_.size()) == n_) {
            found_ = graph_.adjacent(path_.back(), path_.front());
            return !found_;
        }
        const int head = path_.back();
        std::vector<std::pair<int, int>> moves;
        int forced = -1;
        int forced_count = 0;
        for (int w : graph_.neighbors(head)) {
            if (!free(w))
                continue;
            int e = exits(w);
            moves.emplace_back(e, w);
            // w can only be entered from the head now or never; a lone start
            // vertex still owes the closing edge, so nothing is forced yet
            if (e == 2 && path_.size() >= 2 && static_cast<int>(path_.size()) + 1 < n_) {
                forced = w;
                ++forced_count;
            }
        }
        if (forced_count > 1)
            return true;
        if (forced_count == 1)
            moves = {{0, forced}};
        std::sort(moves.begin(), moves.end());

        for (auto [e, w] : moves) {
            if (nodes_ >= budget_) {
                exhausted_ = true;
                return false;
            }
            ++nodes_;
            path_.push_back(w);
            visited_[static_cast<std::size_t>(w)] = true;
            bool keep_going = true;
            if (feasible())
                keep_going = extend();
            if (!keep_going)
                return false;
            visited_[static_cast<std::size_t>(w)] = false;
            path_.pop_back();
        }
        return true;
    }

    const Graph& graph_;
    std::uint64_t budget_;
    int n_;
    std::vector<bool> visited_;
    std::vector<int> path_;
    std::uint64_t nodes_ = 0;
    bool found_ = false;
    bool exhausted_ = false;
};

}  // namespace

HamiltonResult hamilton(const Graph& g, std::uint64_t budget)
{
    return HamiltonSearch(g, budget).run();
}

std::optional<std::string> check_hamiltonian_cycle(const Graph& g, const std::vector<VertexId>& cycle)
{
    if (cycle.size() != g.order())
        return "cycle has " + std::to_string(cycle.size()) + " vertices, graph has " + std::to_string(g.order());
    if (cycle.size() < 3)
        return std::string("a cycle needs at least three vertices");
    std::set<VertexId> seen;
    for (const auto& v : cycle) {
        if (!g.contains(v))
            return "unknown vertex " + v.str();
        if (!seen.insert(v).second)
            return "vertex " + v.str() + " repeats";
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto& a = cycle[i];
        const auto& b = cycle[(i + 1) % cycle.size()];
        if (!g.adjacent(g.require_index(a), g.require_index(b)))
            return "consecutive vertices " + a.str() + " and " + b.str() + " are not adjacent";
    }
    return std::nullopt;
}

CutCertificate cut_certificate(const Graph& g, const std::set<VertexId>& removed)
{
    CutCertificate out;
    out.removed.assign(removed.begin(), removed.end());
    out.components_after = components(delete_vertices(g, removed)).size();
    out.non_hamiltonian = out.components_after > removed.size();
    return out;
}

Json hamilton_result_to_json(const HamiltonResult& r)
{
    Json out;
    out["status"] = to_string(r.status);
    Json cycle = Json::array();
    for (const auto& v : r.cycle)
        cycle.push_back(v.str());
    out["cycle"] = std::move(cycle);
    out["nodes"] = r.nodes;
    out["budget"] = r.budget;
    return out;
}

Json cut_certificate_to_json(const CutCertificate& c)
{
    Json out;
    Json removed = Json::array();
    for (const auto& v : c.removed)
        removed.push_back(v.str());
    out["S"] = std::move(removed);
    out["size"] = c.removed.size();
    out["components_after"] = c.components_after;
    out["non_hamiltonian"] = c.non_hamiltonian;
    return out;
}

}  // namespace mzk
