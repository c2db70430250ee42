#include "mzk/verify.hpp"

#include <queue>

namespace mzk {

namespace {

// Edmonds' blossom algorithm, O(V^3).
class Blossom {
public:
    explicit Blossom(const Graph& g)
        : graph_(g),
          n_(static_cast<int>(g.order())),
          match_(g.order(), -1),
          parent_(g.order(), -1),
          base_(g.order(), 0),
          used_(g.order(), false),
          in_blossom_(g.order(), false)
    {
    }

    std::vector<int> run()
    {
        for (int root = 0; root < n_; ++root) {
            if (match_[idx(root)] != -1)
                continue;
            int v = find_path(root);
            while (v != -1) {
                int pv = parent_[idx(v)];
                int next = match_[idx(pv)];
                match_[idx(v)] = pv;
                match_[idx(pv)] = v;
                v = next;
            }
        }
        return match_;
    }

private:
    static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

    int lowest_common_ancestor(int a, int b)
    {
        std::vector<bool> seen(idx(n_), false);
        while (true) {
            a = base_[idx(a)];
            seen[idx(a)] = true;
            if (match_[idx(a)] == -1)
                break;
            a = parent_[idx(match_[idx(a)])];
        }
        while (true) {
            b = base_[idx(b)];
            if (seen[idx(b)])
                return b;
            b = parent_[idx(match_[idx(b)])];
        }
    }

    void mark_path(int v, int b, int child)
    {
        while (base_[idx(v)] != b) {
            in_blossom_[idx(base_[idx(v)])] = true;
            in_blossom_[idx(base_[idx(match_[idx(v)])])] = true;
            parent_[idx(v)] = child;
            child = match_[idx(v)];
            v = parent_[idx(match_[idx(v)])];
        }
    }

    int find_path(int root)
    {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i)
            base_[idx(i)] = i;
        used_[idx(root)] = true;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int to : graph_.neighbors(v)) {
                if (base_[idx(v)] == base_[idx(to)] || match_[idx(v)] == to)
                    continue;
                if (to == root || (match_[idx(to)] != -1 && parent_[idx(match_[idx(to)])] != -1)) {
                    int b = lowest_common_ancestor(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom_[idx(base_[idx(i)])]) {
                            base_[idx(i)] = b;
                            if (!used_[idx(i)]) {
                                used_[idx(i)] = true;
                                queue.push(i);
                            }
                        }
                } else if (parent_[idx(to)] == -1) {
                    parent_[idx(to)] = v;
                    if (match_[idx(to)] == -1)
                        return to;
                    used_[idx(match_[idx(to)])] = true;
                    queue.push(match_[idx(to)]);
                }
            }
        }
        return -1;
    }

    const Graph& graph_;
    int n_;
    std::vector<int> match_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<bool> used_;
    std::vector<bool> in_blossom_;
};

}  // namespace

std::vector<Edge> maximum_matching(const Graph& g)
{
    auto match = Blossom(g).run();
    std::vector<Edge> out;
    for (int v = 0; v < static_cast<int>(g.order()); ++v) {
        int w = match[static_cast<std::size_t>(v)];
        if (w > v)
            out.emplace_back(g.vertex(v), g.vertex(w));
    }
    return out;
}

MatchingResult perfect_matching(const Graph& g)
{
    MatchingResult out;
    if (g.order() % 2 == 1) {
        out.evidence = "odd order " + std::to_string(g.order());
        return out;
    }
    out.edges = maximum_matching(g);
    out.maximum = out.edges.size();
    out.perfect = 2 * out.maximum == g.order();
    if (!out.perfect) {
        out.evidence = "maximum matching has " + std::to_string(out.maximum) + " edges, " +
                       std::to_string(g.order() / 2) + " needed";
        out.edges.clear();
    }
    return out;
}

std::optional<std::string> check_perfect_matching(const Graph& g, const std::vector<Edge>& edges)
{
    std::set<VertexId> covered;
    for (const auto& [u, v] : edges) {
        auto iu = g.index_of(u);
        auto iv = g.index_of(v);
        if (!iu || !iv || !g.adjacent(*iu, *iv))
            return u.str() + "-" + v.str() + " is not an edge";
        if (!covered.insert(u).second)
            return u.str() + " is matched twice";
        if (!covered.insert(v).second)
            return v.str() + " is matched twice";
    }
    if (covered.size() != g.order())
        return "matching covers " + std::to_string(covered.size()) + " of " + std::to_string(g.order()) + " vertices";
    return std::nullopt;
}

Json matching_result_to_json(const MatchingResult& m)
{
    Json out;
    out["perfect"] = m.perfect;
    out["maximum"] = m.maximum;
    Json edges = Json::array();
    for (const auto& [u, v] : m.edges)
        edges.push_back(Json::array({u.str(), v.str()}));
    out["edges"] = std::move(edges);
    out["evidence"] = m.evidence;
    return out;
}

}  // namespace mzk
