#include "mzk/solve.hpp"

#include <algorithm>
#include <bit>
#include <span>
#include <sstream>
#include <stdexcept>

namespace mzk {

std::string to_string(SolveStatus status)
{
    switch (status) {
    case SolveStatus::Sat:
        return "SAT";
    case SolveStatus::Unsat:
        return "UNSAT";
    case SolveStatus::Exhausted:
        return "EXHAUSTED";
    }
    return {};
}

namespace {

using Domain = std::uint64_t;

// Set of decision levels, one bit per level.
class LevelSet {
public:
    explicit LevelSet(std::size_t words = 0) : words_(words, 0) {}

    void set(int level) { words_[static_cast<std::size_t>(level) / 64] |= std::uint64_t{1} << (level % 64); }
    void reset(int level) { words_[static_cast<std::size_t>(level) / 64] &= ~(std::uint64_t{1} << (level % 64)); }
    bool test(int level) const { return words_[static_cast<std::size_t>(level) / 64] >> (level % 64) & 1; }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    void merge(std::span<const std::uint64_t> other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other[i];
    }
    void merge(const LevelSet& other) { merge(other.words_); }

    /// Highest level in the set, or -1.
    int highest() const
    {
        for (std::size_t i = words_.size(); i-- > 0;)
            if (words_[i])
                return static_cast<int>(i * 64) + 63 - std::countl_zero(words_[i]);
        return -1;
    }

    std::span<const std::uint64_t> words() const { return words_; }

private:
    std::vector<std::uint64_t> words_;
};

// Bit-set domain search. Chronological backtracking serves counting and
// enumeration; decide() uses conflict-directed backjumping, where every
// pruned color remembers the assignment that removed it and every
// assignment remembers the decision levels that caused it.
class Engine {
public:
    enum class Order { MinRemaining, Static };

    Engine(const Graph& g, const ListAssignment& lists, std::uint64_t budget, Order order)
        : graph_(g), palette_(lists.palette()), budget_(budget), order_(order)
    {
        lists.require_covers(g);
        const auto n = g.order();
        words_ = n / 64 + 1;
        domain_.resize(n);
        value_.assign(n, -1);
        reason_.assign(n * words_, 0);
        pruner_.assign(n * palette_.size(), -1);
        for (std::size_t i = 0; i < n; ++i) {
            Domain d = 0;
            for (Color c : lists.of(g.vertex(static_cast<int>(i)))) {
                auto pos = std::lower_bound(palette_.begin(), palette_.end(), c) - palette_.begin();
                d |= Domain{1} << pos;
            }
            domain_[i] = d;
        }
        initial_ = domain_;
    }

    /// Runs a chronological search; on_solution returns false to stop.
    template <typename OnSolution>
    void run(OnSolution&& on_solution)
    {
        if (!propagate_root())
            return;
        search(on_solution);
    }

    /// Runs a backjumping search for the first solution.
    bool run_first()
    {
        if (!propagate_root())
            return false;
        return search_backjump(0).kind == Outcome::Solved;
    }

    bool exhausted() const { return exhausted_; }
    const SolveStats& stats() const { return stats_; }

    Coloring coloring() const
    {
        Coloring out;
        for (std::size_t i = 0; i < value_.size(); ++i)
            out.emplace(graph_.vertex(static_cast<int>(i)), palette_[static_cast<std::size_t>(value_[i])]);
        return out;
    }

private:
    struct TrailEntry {
        int vertex;
        Domain domain;
        bool assignment;
    };

    struct Outcome {
        enum Kind { Solved, Failed, Aborted } kind;
        LevelSet conflict;
    };

    bool propagate_root()
    {
        std::vector<int> units;
        for (int i = 0; i < static_cast<int>(graph_.order()); ++i)
            if (std::popcount(domain_[static_cast<std::size_t>(i)]) == 1)
                units.push_back(i);
        return propagate_units(units);
    }

    bool charge_node()
    {
        if (stats_.nodes >= budget_) {
            exhausted_ = true;
            return false;
        }
        ++stats_.nodes;
        return true;
    }

    // returns true to keep searching
    template <typename OnSolution>
    bool search(OnSolution& on_solution)
    {
        int v = pick();
        if (v < 0)
            return on_solution();
        Domain d = domain_[static_cast<std::size_t>(v)];
        while (d) {
            int bit = std::countr_zero(d);
            d &= d - 1;
            if (!charge_node())
                return false;
            auto mark = trail_.size();
            std::vector<int> units;
            bool keep_going = true;
            if (assign(v, bit, units) && propagate_units(units))
                keep_going = search(on_solution);
            undo(mark);
            if (!keep_going)
                return false;
        }
        return true;
    }

    Outcome search_backjump(int depth)
    {
        int v = pick();
        if (v < 0)
            return {Outcome::Solved, LevelSet(words_)};
        const int level = depth + 1;
        LevelSet conflict = explain(v);
        Domain d = domain_[static_cast<std::size_t>(v)];
        while (d) {
            int bit = std::countr_zero(d);
            d &= d - 1;
            if (!charge_node())
                return {Outcome::Aborted, LevelSet(words_)};
            auto mark = trail_.size();
            std::vector<int> units;
            LevelSet decision(words_);
            decision.set(level);
            LevelSet failure(words_);
            if (assign(v, bit, units, decision.words()) && propagate_units(units)) {
                auto below = search_backjump(level);
                if (below.kind != Outcome::Failed)
                    return below;
                failure = std::move(below.conflict);
            } else {
                failure = explain(wiped_);
            }
            undo(mark);
            if (!failure.test(level))
                return {Outcome::Failed, std::move(failure)};
            failure.reset(level);
            conflict.merge(failure);
        }
        return {Outcome::Failed, std::move(conflict)};
    }

    int pick() const
    {
        int best = -1;
        int best_size = kMaxPalette + 1;
        for (std::size_t i = 0; i < value_.size(); ++i) {
            if (value_[i] >= 0)
                continue;
            if (order_ == Order::Static)
                return static_cast<int>(i);
            int size = std::popcount(domain_[i]);
            if (size < best_size) {
                best = static_cast<int>(i);
                best_size = size;
            }
        }
        return best;
    }

    std::span<std::uint64_t> reason_of(int v)
    {
        return {reason_.data() + static_cast<std::size_t>(v) * words_, words_};
    }

    // Decision levels responsible for the colors already removed from v.
    LevelSet explain(int v)
    {
        LevelSet out(words_);
        Domain removed = initial_[static_cast<std::size_t>(v)] & ~domain_[static_cast<std::size_t>(v)];
        while (removed) {
            int bit = std::countr_zero(removed);
            removed &= removed - 1;
            int by = pruner_[static_cast<std::size_t>(v) * palette_.size() + static_cast<std::size_t>(bit)];
            out.merge(reason_of(by));
        }
        return out;
    }

    bool assign(int v, int bit, std::vector<int>& units, std::span<const std::uint64_t> reason = {})
    {
        const Domain mask = Domain{1} << bit;
        trail_.push_back({v, domain_[static_cast<std::size_t>(v)], true});
        domain_[static_cast<std::size_t>(v)] = mask;
        value_[static_cast<std::size_t>(v)] = bit;
        auto own = reason_of(v);
        if (reason.empty())
            std::fill(own.begin(), own.end(), 0);
        else
            std::copy(reason.begin(), reason.end(), own.begin());
        for (int w : graph_.neighbors(v)) {
            auto& dw = domain_[static_cast<std::size_t>(w)];
            if (value_[static_cast<std::size_t>(w)] >= 0 || !(dw & mask))
                continue;
            trail_.push_back({w, dw, false});
            dw &= ~mask;
            pruner_[static_cast<std::size_t>(w) * palette_.size() + static_cast<std::size_t>(bit)] = v;
            ++stats_.propagations;
            if (dw == 0) {
                wiped_ = w;
                return false;
            }
            if (std::popcount(dw) == 1)
                units.push_back(w);
        }
        return true;
    }

    bool propagate_units(std::vector<int>& units)
    {
        while (!units.empty()) {
            int w = units.back();
            units.pop_back();
            if (value_[static_cast<std::size_t>(w)] >= 0)
                continue;
            auto why = explain(w);
            if (!assign(w, std::countr_zero(domain_[static_cast<std::size_t>(w)]), units, why.words()))
                return false;
        }
        return true;
    }

    void undo(std::size_t mark)
    {
        while (trail_.size() > mark) {
            auto [v, d, assignment] = trail_.back();
            trail_.pop_back();
            if (assignment)
                value_[static_cast<std::size_t>(v)] = -1;
            domain_[static_cast<std::size_t>(v)] = d;
        }
    }

    const Graph& graph_;
    const ColorSet& palette_;
    std::uint64_t budget_;
    Order order_;
    std::size_t words_ = 1;
    std::vector<Domain> initial_;
    std::vector<Domain> domain_;
    std::vector<int> value_;
    std::vector<std::uint64_t> reason_;
    std::vector<int> pruner_;
    std::vector<TrailEntry> trail_;
    int wiped_ = -1;
    SolveStats stats_;
    bool exhausted_ = false;
};

}  // namespace

SolveResult decide(const Graph& g, const ListAssignment& lists, std::uint64_t budget)
{
    Engine engine(g, lists, budget, Engine::Order::MinRemaining);
    std::optional<Coloring> witness;
    if (engine.run_first())
        witness = engine.coloring();
    SolveResult result;
    result.stats = engine.stats();
    result.budget = budget;
    if (witness) {
        auto check = verify_coloring(g, lists, *witness);
        if (!check.ok)
            throw std::logic_error("solver produced an improper coloring: " + check.violations.front().describe());
        result.status = SolveStatus::Sat;
        result.witness = std::move(witness);
    } else {
        result.status = engine.exhausted() ? SolveStatus::Exhausted : SolveStatus::Unsat;
    }
    return result;
}

CountResult count_colorings(const Graph& g, const ListAssignment& lists, std::uint64_t budget)
{
    Engine engine(g, lists, budget, Engine::Order::MinRemaining);
    CountResult result;
    engine.run([&] {
        ++result.count;
        return true;
    });
    result.stats = engine.stats();
    result.budget = budget;
    if (engine.exhausted())
        result.status = SolveStatus::Exhausted;
    else
        result.status = result.count ? SolveStatus::Sat : SolveStatus::Unsat;
    return result;
}

CountResult enumerate_colorings(const Graph& g, const ListAssignment& lists,
                                const std::function<Visit(const Coloring&)>& visitor, std::uint64_t budget)
{
    Engine engine(g, lists, budget, Engine::Order::Static);
    CountResult result;
    bool stopped = false;
    engine.run([&] {
        ++result.count;
        if (visitor(engine.coloring()) == Visit::Stop) {
            stopped = true;
            return false;
        }
        return true;
    });
    result.stats = engine.stats();
    result.budget = budget;
    if (engine.exhausted())
        result.status = SolveStatus::Exhausted;
    else
        result.status = (result.count || stopped) ? SolveStatus::Sat : SolveStatus::Unsat;
    return result;
}

std::string Violation::describe() const
{
    switch (kind) {
    case Kind::Uncolored:
        return u.str() + " is uncolored";
    case Kind::NotInList:
        return u.str() + " has color " + std::to_string(color) + " outside its list";
    case Kind::Conflict:
        return "edge " + u.str() + "-" + v.str() + " is monochromatic in color " + std::to_string(color);
    }
    return {};
}

namespace {

ColoringCheck check_edges_and_lists(const Graph& g, const Coloring& c,
                                    const std::function<bool(const VertexId&, Color)>& allowed)
{
    for (const auto& v : g.vertices())
        if (!c.count(v))
            throw GraphError("coloring is partial: " + v.str() + " is uncolored");
    ColoringCheck out;
    for (const auto& v : g.vertices()) {
        Color color = c.at(v);
        if (!allowed(v, color))
            out.violations.push_back({Violation::Kind::NotInList, v, v, color});
    }
    for (const auto& [u, v] : g.edge_ids())
        if (c.at(u) == c.at(v))
            out.violations.push_back({Violation::Kind::Conflict, u, v, c.at(u)});
    out.ok = out.violations.empty();
    return out;
}

}  // namespace

ColoringCheck verify_coloring(const Graph& g, const ListAssignment& lists, const Coloring& c)
{
    return check_edges_and_lists(g, c, [&](const VertexId& v, Color color) {
        if (!lists.has(v))
            return false;
        const auto& list = lists.of(v);
        return std::find(list.begin(), list.end(), color) != list.end();
    });
}

ColoringCheck verify_coloring(const Graph& g, int k, const Coloring& c)
{
    return check_edges_and_lists(g, c, [k](const VertexId&, Color color) { return color >= 1 && color <= k; });
}

ChromaticResult chromatic_number(const Graph& g, int upper_bound, std::uint64_t budget)
{
    if (g.order() == 0)
        throw GraphError("chromatic number of the empty graph is not defined here");
    if (upper_bound < 1 || upper_bound > kMaxPalette)
        throw GraphError("upper bound must lie in 1..64");
    ChromaticResult out;
    std::optional<SolveResult> previous;
    for (int k = 1; k <= upper_bound; ++k) {
        auto result = decide(g, ListAssignment::uniform(g, color_range(1, k)), budget);
        out.nodes += result.stats.nodes;
        if (result.status == SolveStatus::Exhausted) {
            out.k = k;
            out.status = SolveStatus::Exhausted;
            return out;
        }
        if (result.status == SolveStatus::Sat) {
            out.status = SolveStatus::Sat;
            out.k = k;
            out.witness = *result.witness;
            out.below = std::move(previous);
            return out;
        }
        previous = std::move(result);
    }
    out.k = upper_bound;
    out.status = SolveStatus::Exhausted;
    return out;
}

Cnf to_cnf(const Graph& g, const ListAssignment& lists)
{
    lists.require_covers(g);
    Cnf cnf;
    std::map<std::pair<int, Color>, int> var;
    for (int i = 0; i < static_cast<int>(g.order()); ++i) {
        std::vector<int> at_least_one;
        for (Color c : lists.of(g.vertex(i))) {
            cnf.legend.emplace_back(g.vertex(i), c);
            var.emplace(std::pair{i, c}, ++cnf.variables);
            at_least_one.push_back(cnf.variables);
        }
        cnf.clauses.push_back(std::move(at_least_one));
    }
    for (auto [i, j] : g.edges())
        for (Color c : lists.of(g.vertex(i))) {
            auto other = var.find({j, c});
            if (other != var.end())
                cnf.clauses.push_back({-var.at({i, c}), -other->second});
        }
    return cnf;
}

std::string write_dimacs_cnf(const Cnf& cnf)
{
    std::ostringstream out;
    out << "c list coloring; a model maps each vertex to its least true color\n";
    for (std::size_t i = 0; i < cnf.legend.size(); ++i)
        out << "c v" << i + 1 << " = " << cnf.legend[i].first.str() << ':' << cnf.legend[i].second << '\n';
    out << "p cnf " << cnf.variables << ' ' << cnf.clauses.size() << '\n';
    for (const auto& clause : cnf.clauses) {
        for (int lit : clause)
            out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

Coloring project_model(const Cnf& cnf, const std::vector<bool>& model)
{
    Coloring out;
    for (std::size_t i = 0; i < cnf.legend.size(); ++i) {
        if (i >= model.size() || !model[i])
            continue;
        const auto& [v, c] = cnf.legend[i];
        auto it = out.find(v);
        if (it == out.end() || c < it->second)
            out[v] = c;
    }
    return out;
}

Json coloring_to_json(const Coloring& c)
{
    Json out = Json::object();
    for (const auto& [v, color] : c)
        out[v.str()] = color;
    return out;
}

Json solve_result_to_json(const SolveResult& r)
{
    Json out;
    out["status"] = to_string(r.status);
    out["witness"] = r.witness ? coloring_to_json(*r.witness) : Json(nullptr);
    out["nodes"] = r.stats.nodes;
    out["propagations"] = r.stats.propagations;
    out["budget"] = r.budget;
    return out;
}

Json count_result_to_json(const CountResult& r)
{
    Json out;
    out["status"] = to_string(r.status);
    out["count"] = r.count;
    out["exact"] = r.status != SolveStatus::Exhausted;
    out["nodes"] = r.stats.nodes;
    out["budget"] = r.budget;
    return out;
}

}  // namespace mzk
