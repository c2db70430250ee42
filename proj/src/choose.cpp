#include "mzk/choose.hpp"

#include <algorithm>
#include <random>

namespace mzk {

std::string to_string(WitnessStatus status)
{
    switch (status) {
    case WitnessStatus::Confirmed:
        return "WitnessConfirmed";
    case WitnessStatus::Refuted:
        return "WitnessRefuted";
    case WitnessStatus::Exhausted:
        return "Exhausted";
    }
    return {};
}

std::string to_string(ChoosabilityStatus status)
{
    switch (status) {
    case ChoosabilityStatus::Choosable:
        return "Choosable";
    case ChoosabilityStatus::NotChoosable:
        return "NotChoosable";
    case ChoosabilityStatus::Exhausted:
        return "Exhausted";
    }
    return {};
}

WitnessVerdict verify_not_choosable(const Graph& g, const ListAssignment& lists, int k, std::uint64_t budget)
{
    WitnessVerdict out;
    out.k = k;
    lists.require_covers(g);
    for (const auto& v : g.vertices()) {
        auto size = lists.of(v).size();
        if (size != static_cast<std::size_t>(k))
            out.reasons.push_back("list of " + v.str() + " has " + std::to_string(size) + " colors, expected " +
                                  std::to_string(k));
    }
    out.solve = decide(g, lists, budget);
    if (out.solve.status == SolveStatus::Exhausted) {
        out.status = WitnessStatus::Exhausted;
        return out;
    }
    if (out.solve.status == SolveStatus::Sat)
        out.reasons.push_back("a proper list coloring exists");
    out.status = out.reasons.empty() ? WitnessStatus::Confirmed : WitnessStatus::Refuted;
    return out;
}

namespace {

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k)
{
    std::vector<std::vector<int>> out;
    if (k > n || k < 0)
        return out;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

class ExhaustiveSearch {
public:
    ExhaustiveSearch(const Graph& g, int k, const ColorSet& pool, std::uint64_t budget, bool pruning)
        : graph_(g), k_(k), pool_(pool), budget_(budget), pruning_(pruning), chosen_(g.order())
    {
    }

    ExhaustiveVerdict run()
    {
        ExhaustiveVerdict out;
        out.k = k_;
        out.pool = pool_;
        out.budget = budget_;
        out.symmetry_pruning = pruning_;
        walk(0, 0);
        out.assignments = assignments_;
        out.nodes = nodes_;
        if (exhausted_)
            out.status = ChoosabilityStatus::Exhausted;
        else if (bad_)
            out.status = ChoosabilityStatus::NotChoosable;
        else
            out.status = ChoosabilityStatus::Choosable;
        out.witness = std::move(bad_);
        return out;
    }

private:
    // Candidate lists for the next vertex when `used` canonical colors are taken.
    const std::vector<std::vector<int>>& candidates(int used)
    {
        auto it = cache_.find(used);
        if (it != cache_.end())
            return it->second;
        std::vector<std::vector<int>> lists;
        const int pool_size = static_cast<int>(pool_.size());
        if (!pruning_) {
            lists = subsets(pool_size, k_);
        } else {
            for (int fresh = 0; fresh <= k_ && used + fresh <= pool_size; ++fresh)
                for (auto list : subsets(used, k_ - fresh)) {
                    for (int f = 0; f < fresh; ++f)
                        list.push_back(used + f);
                    lists.push_back(std::move(list));
                }
            std::sort(lists.begin(), lists.end());
        }
        return cache_.emplace(used, std::move(lists)).first->second;
    }

    // returns false to stop
    bool walk(std::size_t vertex, int used)
    {
        if (vertex == graph_.order())
            return check();
        for (const auto& list : candidates(used)) {
            chosen_[vertex] = list;
            int next_used = pruning_ ? std::max(used, list.back() + 1) : used;
            if (!walk(vertex + 1, next_used))
                return false;
        }
        return true;
    }

    bool check()
    {
        ++assignments_;
        std::map<VertexId, ColorSet> lists;
        for (std::size_t i = 0; i < graph_.order(); ++i) {
            auto& list = lists[graph_.vertex(static_cast<int>(i))];
            for (int c : chosen_[i])
                list.push_back(pool_[static_cast<std::size_t>(c)]);
        }
        auto assignment = ListAssignment::make(pool_, std::move(lists));
        auto result = decide(graph_, assignment, budget_ - nodes_);
        nodes_ += result.stats.nodes;
        if (result.status == SolveStatus::Exhausted) {
            exhausted_ = true;
            return false;
        }
        if (result.status == SolveStatus::Unsat) {
            bad_ = std::move(assignment);
            return false;
        }
        return true;
    }

    const Graph& graph_;
    int k_;
    ColorSet pool_;
    std::uint64_t budget_;
    bool pruning_;
    std::vector<std::vector<int>> chosen_;
    std::map<int, std::vector<std::vector<int>>> cache_;
    std::uint64_t assignments_ = 0;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::optional<ListAssignment> bad_;
};

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n)
{
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
    std::uint64_t x = rng();
    while (x >= limit)
        x = rng();
    return x % n;
}

}  // namespace

ExhaustiveVerdict choosability_exhaustive(const Graph& g, int k, const ColorSet& pool, std::uint64_t budget,
                                          bool symmetry_pruning)
{
    auto sorted = pool;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (k < 1 || static_cast<int>(sorted.size()) < k)
        throw GraphError("pool must hold at least k >= 1 colors");
    if (sorted.size() > static_cast<std::size_t>(kMaxPalette))
        throw GraphError("pool has more than 64 colors");
    return ExhaustiveSearch(g, k, sorted, budget, symmetry_pruning).run();
}

ListAssignment probe_assignment(const Graph& g, int k, std::uint64_t seed, std::uint64_t trial, const ColorSet& pool)
{
    if (k < 1 || static_cast<std::size_t>(k) > pool.size())
        throw GraphError("pool must hold at least k >= 1 colors");
    std::mt19937_64 rng(seed ^ trial);
    std::map<VertexId, ColorSet> lists;
    for (const auto& v : g.vertices()) {
        auto deck = pool;
        for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
            auto j = i + uniform_below(rng, deck.size() - i);
            std::swap(deck[i], deck[j]);
        }
        lists.emplace(v, ColorSet(deck.begin(), deck.begin() + k));
    }
    return ListAssignment::make(pool, std::move(lists));
}

ProbeReport random_probe(const Graph& g, int k, std::uint64_t trials, std::uint64_t seed, const ColorSet& pool,
                         const std::string& label, std::uint64_t budget)
{
    ProbeReport report;
    report.graph = label;
    report.k = k;
    report.trials = trials;
    report.seed = seed;
    report.pool = pool;
    report.budget = budget;
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto result = decide(g, probe_assignment(g, k, seed, t, pool), budget);
        report.nodes += result.stats.nodes;
        if (result.status == SolveStatus::Exhausted) {
            report.aborted_at = t;
            break;
        }
        if (result.status == SolveStatus::Sat)
            ++report.successes;
        else if (report.failures.size() < 16)
            report.failures.push_back(t);
    }
    return report;
}

Json witness_verdict_to_json(const WitnessVerdict& v)
{
    Json out;
    out["verdict"] = to_string(v.status);
    out["k"] = v.k;
    out["reasons"] = v.reasons;
    out["solve"] = solve_result_to_json(v.solve);
    return out;
}

Json exhaustive_verdict_to_json(const ExhaustiveVerdict& v)
{
    Json out;
    out["verdict"] = to_string(v.status);
    out["k"] = v.k;
    out["pool"] = v.pool;
    out["symmetry_pruning"] = v.symmetry_pruning;
    out["assignments"] = v.assignments;
    out["nodes"] = v.nodes;
    out["budget"] = v.budget;
    out["witness"] = v.witness ? lists_to_json(*v.witness) : Json(nullptr);
    return out;
}

Json probe_report_to_json(const ProbeReport& r)
{
    Json out;
    out["graph"] = r.graph;
    out["k"] = r.k;
    out["trials"] = r.trials;
    out["successes"] = r.successes;
    out["seed"] = r.seed;
    out["pool"] = r.pool;
    out["budget"] = r.budget;
    out["nodes"] = r.nodes;
    out["aborted_at"] = r.aborted_at ? Json(*r.aborted_at) : Json(nullptr);
    out["failures"] = r.failures;
    return out;
}

}  // namespace mzk
