#pragma once

#include "mzk/construct.hpp"
#include "mzk/solve.hpp"

#include <array>
#include <set>

namespace mzk {

/// Colorings of a list problem that extend a pin, and the vertices whose
/// color is the same in all of them.
struct ForcingReport {
    Coloring pinned;
    /// Unpinned vertices with a single color across every extension.
    Coloring forced;
    std::uint64_t examined = 0;
    SolveStatus status = SolveStatus::Exhausted;
};

/// Enumerates every proper list coloring extending `pinned` and reports the
/// maximal forced set. Throws GraphError when a pinned color is outside the
/// vertex's list.
ForcingReport forcing(const Graph& g, const ListAssignment& lists, const Coloring& pinned,
                      std::uint64_t budget = kDefaultSolveBudget);

/// forcing() on the restricted wheel problem.
ForcingReport wheel_forcing(const VertexId& v, Color c);

struct GadgetLemma {
    int section = 0;
    /// The color removed from the twelve outer lists (equals the section index).
    Color banned = 0;
    SolveResult reduced;
    SolveResult unreduced;
    bool passed = false;
    std::string failure;
};

/// Section j must use color j on its outer face: with that color removed
/// from the outer lists the section is uncolorable, while the unmodified
/// section is colorable. Vertices in `exempt` keep the banned color.
GadgetLemma gadget_lemma(const Graph& m, const ListAssignment& lists, int j,
                         std::uint64_t budget = kDefaultSolveBudget, const std::set<VertexId>& exempt = {});

/// (c(u), c(v), c(w), c(x)) for the central wheel corners u = Corner(1,1),
/// v = Corner(3,1), w = Corner(3,-1), x = Corner(1,-1).
using CornerPattern = std::array<Color, 4>;

struct FamiliesReport {
    bool passed = false;
    std::uint64_t examined = 0;
    std::set<CornerPattern> patterns;
    /// Every observed pattern covers {2,3,4,5}, so the central hub's list L^1 is empty.
    bool hub_blocked = false;
    /// With color 1 allowed a coloring outside the families exists.
    bool outside_with_color1 = false;
    SolveStatus status = SolveStatus::Exhausted;
    std::string failure;
};

/// The three exhaustive corner patterns of the central wheel once color 1 is
/// banned from the gadget's outer face.
const std::set<CornerPattern>& expected_families();

FamiliesReport forcing_families(std::uint64_t budget = kDefaultSolveBudget);

struct TheoremCertificate {
    std::vector<GadgetLemma> lemmas;
    bool apex_covers_outer = false;
    bool apex_list_ok = false;
    ColorSet forced_on_apex_neighbors;
    bool structured_unsat = false;
    SolveResult direct;
    bool routes_agree = false;
    bool planar = false;
    long long euler = 0;
    std::size_t faces = 0;
    std::optional<Coloring> three_coloring;
    bool three_colorable = false;
    bool certified = false;
    std::string failing_step;
};

/// Replays the argument on (m, lists): the four section lemmas, apex
/// adjacency and list checks, the structured conclusion cross-checked by a
/// direct solve, planarity, and a verified 3-coloring.
TheoremCertificate theorem_replay(const Graph& m, const ListAssignment& lists,
                                  std::uint64_t budget = kDefaultSolveBudget);

Json forcing_report_to_json(const ForcingReport& r);
Json gadget_lemma_to_json(const GadgetLemma& l);
Json families_report_to_json(const FamiliesReport& r);
Json theorem_certificate_to_json(const TheoremCertificate& c);

/// Human-readable proof transcript.
std::string theorem_transcript(const TheoremCertificate& c);

}  // namespace mzk
