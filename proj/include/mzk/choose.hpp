#pragma once

#include "mzk/solve.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mzk {

enum class WitnessStatus { Confirmed, Refuted, Exhausted };

struct WitnessVerdict {
    WitnessStatus status = WitnessStatus::Exhausted;
    int k = 0;
    /// Why the witness was refuted: wrong list sizes and/or a found coloring.
    std::vector<std::string> reasons;
    SolveResult solve;
};

/// Checks that `lists` certifies that g is not k-choosable: every list has
/// exactly k colors and no proper list coloring exists.
WitnessVerdict verify_not_choosable(const Graph& g, const ListAssignment& lists, int k,
                                    std::uint64_t budget = kDefaultSolveBudget);

enum class ChoosabilityStatus { Choosable, NotChoosable, Exhausted };

struct ExhaustiveVerdict {
    ChoosabilityStatus status = ChoosabilityStatus::Exhausted;
    int k = 0;
    ColorSet pool;
    /// Lexicographically least bad assignment found (NotChoosable only).
    std::optional<ListAssignment> witness;
    std::uint64_t assignments = 0;
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;
    bool symmetry_pruning = true;
};

/// Decides k-choosability of g relative to a finite color pool by trying
/// every assignment of k-subsets of the pool. With symmetry pruning, colors
/// are relabeled in order of first use, so each assignment is examined up to
/// renaming of the pool. `budget` bounds the total solver nodes.
ExhaustiveVerdict choosability_exhaustive(const Graph& g, int k, const ColorSet& pool,
                                          std::uint64_t budget = kDefaultSolveBudget,
                                          bool symmetry_pruning = true);

struct ProbeReport {
    std::string graph;
    int k = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t seed = 0;
    ColorSet pool;
    std::uint64_t budget = 0;
    std::uint64_t nodes = 0;
    /// Set when a trial exhausted its budget; the probe stops there.
    std::optional<std::uint64_t> aborted_at;
    /// Trial indices whose assignment had no coloring (first 16).
    std::vector<std::uint64_t> failures;
};

/// Uniform random k-subset assignments drawn from `pool`. Trial t uses a
/// mt19937_64 generator seeded with seed ^ t and, vertex by vertex in
/// VertexId order, a partial Fisher-Yates shuffle of the pool with unbiased
/// rejection sampling, so reports reproduce exactly.
ProbeReport random_probe(const Graph& g, int k, std::uint64_t trials, std::uint64_t seed, const ColorSet& pool,
                         const std::string& label = "graph", std::uint64_t budget = kDefaultSolveBudget);

/// The assignment a given probe trial draws.
ListAssignment probe_assignment(const Graph& g, int k, std::uint64_t seed, std::uint64_t trial,
                                const ColorSet& pool);

std::string to_string(WitnessStatus status);
std::string to_string(ChoosabilityStatus status);

Json witness_verdict_to_json(const WitnessVerdict& v);
Json exhaustive_verdict_to_json(const ExhaustiveVerdict& v);
Json probe_report_to_json(const ProbeReport& r);

}  // namespace mzk
