#pragma once

#include "mzk/graph.hpp"
#include "mzk/io.hpp"
#include "mzk/lists.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mzk {

using Coloring = std::map<VertexId, Color>;

inline constexpr std::uint64_t kDefaultSolveBudget = 10'000'000;

enum class SolveStatus { Sat, Unsat, Exhausted };

std::string to_string(SolveStatus status);

struct SolveStats {
    /// Branching decisions (one per value tried).
    std::uint64_t nodes = 0;
    /// Colors removed from neighbor domains.
    std::uint64_t propagations = 0;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Exhausted;
    std::optional<Coloring> witness;
    SolveStats stats;
    std::uint64_t budget = 0;
};

/// Decides whether g has a proper coloring from `lists`.
///
/// Forward checking with singleton propagation over bit-set domains. The
/// branching vertex is the one with the fewest remaining colors (ties by
/// VertexId order); colors are tried in ascending order. A SAT witness is
/// re-checked by verify_coloring before it is returned. Throws GraphError if
/// a vertex has no list.
SolveResult decide(const Graph& g, const ListAssignment& lists, std::uint64_t budget = kDefaultSolveBudget);

struct CountResult {
    /// Sat or Unsat reflect count > 0; Exhausted means the count is a lower bound only.
    SolveStatus status = SolveStatus::Exhausted;
    std::uint64_t count = 0;
    SolveStats stats;
    std::uint64_t budget = 0;
};

CountResult count_colorings(const Graph& g, const ListAssignment& lists,
                            std::uint64_t budget = kDefaultSolveBudget);

enum class Visit { Continue, Stop };

/// Visits every proper list coloring in lexicographic order of the color
/// vector indexed by VertexId order. Stopping early reports Sat.
CountResult enumerate_colorings(const Graph& g, const ListAssignment& lists,
                                const std::function<Visit(const Coloring&)>& visitor,
                                std::uint64_t budget = kDefaultSolveBudget);

struct Violation {
    enum class Kind { Uncolored, NotInList, Conflict };
    Kind kind;
    VertexId u;
    VertexId v;  // second endpoint for Conflict
    Color color = 0;

    std::string describe() const;
};

struct ColoringCheck {
    bool ok = false;
    std::vector<Violation> violations;
};

/// Reports every list violation and every monochromatic edge. Throws
/// GraphError when the coloring is partial on g.
ColoringCheck verify_coloring(const Graph& g, const ListAssignment& lists, const Coloring& c);

/// Same with the palette {1..k} on every vertex.
ColoringCheck verify_coloring(const Graph& g, int k, const Coloring& c);

struct ChromaticResult {
    /// Sat when `k` was found; Exhausted when a step ran out of budget or the
    /// upper bound was reached without a coloring.
    SolveStatus status = SolveStatus::Exhausted;
    int k = 0;
    Coloring witness;
    /// The k-1 run (absent when k = 1).
    std::optional<SolveResult> below;
    std::uint64_t nodes = 0;
};

ChromaticResult chromatic_number(const Graph& g, int upper_bound,
                                 std::uint64_t budget = kDefaultSolveBudget);

/// Propositional encoding. Variable i+1 stands for legend[i] = (vertex, color).
struct Cnf {
    int variables = 0;
    std::vector<std::vector<int>> clauses;
    std::vector<std::pair<VertexId, Color>> legend;
};

/// One at-least-one clause per vertex and one conflict clause per edge and
/// shared color. At-most-one clauses are omitted: a model projects to a
/// proper coloring by taking the least true color of each vertex.
Cnf to_cnf(const Graph& g, const ListAssignment& lists);

std::string write_dimacs_cnf(const Cnf& cnf);

/// Least-true-color projection of a CNF model (model[i] is variable i+1).
Coloring project_model(const Cnf& cnf, const std::vector<bool>& model);

Json coloring_to_json(const Coloring& c);
Json solve_result_to_json(const SolveResult& r);
Json count_result_to_json(const CountResult& r);

}  // namespace mzk
