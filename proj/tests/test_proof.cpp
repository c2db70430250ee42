#include "doctest.h"
#include "oracle.hpp"

#include "mzk/audit.hpp"
#include "mzk/construct.hpp"
#include "mzk/proof.hpp"

using namespace mzk;

namespace {

// Forced set by raw enumeration of all list assignments.
Coloring brute_forced(const Graph& g, const ListAssignment& lists, const Coloring& pinned)
{
    std::map<VertexId, std::set<Color>> seen;
    oracle::each_proper(g, lists, [&](const Coloring& c) {
        for (const auto& [v, col] : pinned)
            if (c.at(v) != col)
                return;
        for (const auto& [v, col] : c)
            seen[v].insert(col);
    });
    Coloring out;
    for (const auto& [v, cols] : seen)
        if (!pinned.count(v) && cols.size() == 1)
            out[v] = *cols.begin();
    return out;
}

}  // namespace

TEST_CASE("wheel forcing")
{
    auto sw5 = wheel_forcing(wheel::sw, 5);
    CHECK(sw5.forced == Coloring{{wheel::nw, 3}, {wheel::se, 3}});
    auto se4 = wheel_forcing(wheel::se, 4);
    CHECK(se4.forced == Coloring{{wheel::ne, 2}, {wheel::sw, 2}});

    auto w = wheel4();
    auto lists = wheel_lists();
    for (const auto& v : w.vertices())
        for (Color c : lists.of(v)) {
            auto r = forcing(w, lists, {{v, c}});
            CHECK(r.forced == brute_forced(w, lists, {{v, c}}));
        }

    auto center = wheel_forcing(wheel::center, 2);
    int examined = 0;
    enumerate_colorings(w, lists, [&](const Coloring& c) {
        if (c.at(wheel::center) == 2) {
            ++examined;
            for (const auto& v : {wheel::nw, wheel::ne, wheel::sw, wheel::se})
                CHECK(c.at(v) != 2);
        }
        return Visit::Continue;
    });
    CHECK(center.examined == static_cast<std::uint64_t>(examined));
    CHECK_THROWS_AS(wheel_forcing(wheel::sw, 3), GraphError);
}

TEST_CASE("gadget lemma for every section")
{
    auto m = mirzakhani();
    auto lists = canonical_lists();
    for (int j = 1; j <= 4; ++j) {
        auto l = gadget_lemma(m, lists, j);
        CHECK(l.banned == j);
        CHECK(l.reduced.status == SolveStatus::Unsat);
        CHECK(l.unreduced.status == SolveStatus::Sat);
        CHECK(l.passed);
    }
}

TEST_CASE("gadget lemma commutes with the section permutation")
{
    // Section j's lists are section 1's pushed through the permutation, so
    // the reduced problems are color-relabelings of each other.
    auto m = mirzakhani();
    auto lists = canonical_lists();
    for (int j = 2; j <= 4; ++j) {
        auto s = section_gadget(m, j);
        auto p = section_permutation(j);
        for (const auto& [from, to] : s.from_gadget) {
            ColorSet mapped;
            for (Color c : lists.of(from))
                mapped.push_back(p[static_cast<std::size_t>(c)]);
            std::sort(mapped.begin(), mapped.end());
            CHECK(lists.of(to) == mapped);
        }
        CHECK(gadget_lemma(m, lists, j).reduced.status == gadget_lemma(m, lists, 1).reduced.status);
    }
}

TEST_CASE("restoring the banned color to one outer vertex breaks the lemma")
{
    auto m = mirzakhani();
    auto lists = canonical_lists();
    auto broken = gadget_lemma(m, lists, 1, kDefaultSolveBudget, {VertexId::corner(-1, -1)});
    CHECK_FALSE(broken.passed);
    CHECK(broken.reduced.status == SolveStatus::Sat);
    for (int j = 2; j <= 4; ++j)
        CHECK(gadget_lemma(m, lists, j).passed);
}

TEST_CASE("forcing families")
{
    auto r = forcing_families();
    CHECK(r.passed);
    CHECK(r.patterns == expected_families());
    CHECK(r.patterns.size() == 3);
    CHECK(r.hub_blocked);
    CHECK(r.outside_with_color1);
    for (const auto& p : r.patterns)
        CHECK(std::set<Color>(p.begin(), p.end()) == std::set<Color>{2, 3, 4, 5});
    CHECK(expected_families().count({4, 5, 3, 2}) == 1);
}

TEST_CASE("theorem replay")
{
    auto cert = theorem_replay(mirzakhani(), canonical_lists());
    CHECK(cert.certified);
    CHECK(cert.failing_step.empty());
    CHECK(cert.lemmas.size() == 4);
    CHECK(cert.apex_covers_outer);
    CHECK(cert.apex_list_ok);
    CHECK(cert.forced_on_apex_neighbors == ColorSet{1, 2, 3, 4});
    CHECK(cert.structured_unsat);
    CHECK(cert.direct.status == SolveStatus::Unsat);
    CHECK(cert.routes_agree);
    CHECK(cert.planar);
    CHECK(cert.faces == 122);
    CHECK(cert.three_colorable);
    auto text = theorem_transcript(cert);
    CHECK(text.find("planar, 3-colorable, not 4-choosable") != std::string::npos);
    CHECK(text.find("[FAIL]") == std::string::npos);
}

TEST_CASE("theorem replay names the failing step")
{
    auto m = mirzakhani();
    auto lists = canonical_lists().with_list(VertexId::apex(), {1, 2, 3, 5});
    auto cert = theorem_replay(m, lists);
    CHECK_FALSE(cert.certified);
    CHECK_FALSE(cert.failing_step.empty());
}

TEST_CASE("audit")
{
    auto report = audit();
    CHECK(report.all_pass());
    std::vector<std::string> names;
    for (const auto& c : report.claims)
        names.push_back(c.name);
    CHECK(names == std::vector<std::string>{"construction", "planarity", "chromatic_number_3", "not_4_choosable",
                                            "hamiltonian", "apex_deleted_not_hamiltonian",
                                            "apex_deleted_perfect_matching"});
    auto doc = audit_report_to_json(report);
    CHECK(doc["budgets"]["solve_nodes"] == kDefaultSolveBudget);
    CHECK(doc["budgets"]["hamilton_nodes"] == kDefaultHamiltonBudget);
    CHECK(doc["budgets"]["probe_pool"] == "1..2k");
    CHECK(doc.dump() == audit_report_to_json(audit()).dump());
}

TEST_CASE("audit catches a removed apex edge")
{
    auto m = mirzakhani();
    for (int a : {-1, 11, 21}) {
        auto corner = VertexId::corner(a, 1);
        std::vector<Edge> edges;
        for (const auto& e : m.edge_ids())
            if (e != Edge{VertexId::apex(), corner})
                edges.push_back(e);
        auto cut = Graph::make(m.vertices(), edges, m.layout());
        CHECK(cut.size() == 182);
        CHECK_FALSE(audit(cut, canonical_lists()).all_pass());
    }
}
