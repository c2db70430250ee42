#include "mzk/proof.hpp"

#include "mzk/verify.hpp"

#include <algorithm>
#include <sstream>

namespace mzk {

ForcingReport forcing(const Graph& g, const ListAssignment& lists, const Coloring& pinned, std::uint64_t budget)
{
    auto pinned_lists = lists;
    for (const auto& [v, c] : pinned) {
        g.require_index(v);
        const auto& list = lists.of(v);
        if (std::find(list.begin(), list.end(), c) == list.end())
            throw GraphError("pinned color " + std::to_string(c) + " is not in the list of " + v.str());
        pinned_lists = pinned_lists.with_list(v, {c});
    }
    ForcingReport report;
    report.pinned = pinned;
    std::map<VertexId, std::set<Color>> seen;
    auto result = enumerate_colorings(
        g, pinned_lists,
        [&](const Coloring& c) {
            for (const auto& [v, color] : c)
                seen[v].insert(color);
            return Visit::Continue;
        },
        budget);
    report.examined = result.count;
    report.status = result.status;
    if (result.status == SolveStatus::Sat)
        for (const auto& [v, colors] : seen)
            if (!pinned.count(v) && colors.size() == 1)
                report.forced.emplace(v, *colors.begin());
    return report;
}

ForcingReport wheel_forcing(const VertexId& v, Color c)
{
    return forcing(wheel4(), wheel_lists(), {{v, c}});
}

GadgetLemma gadget_lemma(const Graph& m, const ListAssignment& lists, int j, std::uint64_t budget,
                         const std::set<VertexId>& exempt)
{
    auto section = section_gadget(m, j);
    GadgetLemma out;
    out.section = j;
    out.banned = j;
    auto base = lists.restricted(section.graph);
    std::set<VertexId> banned_at;
    for (const auto& v : section.outer)
        if (!exempt.count(v))
            banned_at.insert(v);
    auto reduced = base.without_color(banned_at, out.banned);
    out.reduced = decide(section.graph, reduced, budget);
    out.unreduced = decide(section.graph, base, budget);
    if (out.reduced.status == SolveStatus::Exhausted || out.unreduced.status == SolveStatus::Exhausted)
        out.failure = "budget exhausted before the lemma was certified";
    else if (out.reduced.status != SolveStatus::Unsat)
        out.failure = "section colorable without color " + std::to_string(out.banned) + " on its outer face";
    else if (out.unreduced.status != SolveStatus::Sat)
        out.failure = "section is not colorable at all, so the lemma is vacuous";
    out.passed = out.failure.empty();
    return out;
}

const std::set<CornerPattern>& expected_families()
{
    static const std::set<CornerPattern> families{{5, 3, 2, 4}, {2, 4, 5, 3}, {4, 5, 3, 2}};
    return families;
}

namespace {

const VertexId kU = VertexId::corner(1, 1);
const VertexId kV = VertexId::corner(3, 1);
const VertexId kW = VertexId::corner(3, -1);
const VertexId kX = VertexId::corner(1, -1);

CornerPattern pattern_of(const Coloring& c)
{
    return {c.at(kU), c.at(kV), c.at(kW), c.at(kX)};
}

}  // namespace

FamiliesReport forcing_families(std::uint64_t budget)
{
    auto g = gadget();
    auto lists = canonical_lists().restricted(g.graph);
    auto rim = delete_vertices(g.graph, {g.central_hub});
    auto rim_lists = lists.restricted(rim);
    auto banned = rim_lists.without_color(g.outer, 1);

    FamiliesReport out;
    auto result = enumerate_colorings(
        rim, banned,
        [&](const Coloring& c) {
            out.patterns.insert(pattern_of(c));
            return Visit::Continue;
        },
        budget);
    out.examined = result.count;
    out.status = result.status;
    if (result.status == SolveStatus::Exhausted) {
        out.failure = "enumeration exhausted its budget";
        return out;
    }

    const auto& hub_list = lists.of(g.central_hub);
    out.hub_blocked = !out.patterns.empty();
    for (const auto& p : out.patterns) {
        std::set<Color> used(p.begin(), p.end());
        bool covers = std::all_of(hub_list.begin(), hub_list.end(), [&](Color c) { return used.count(c) != 0; });
        out.hub_blocked = out.hub_blocked && covers;
    }

    auto open = enumerate_colorings(
        rim, rim_lists,
        [&](const Coloring& c) {
            if (expected_families().count(pattern_of(c)))
                return Visit::Continue;
            out.outside_with_color1 = true;
            return Visit::Stop;
        },
        budget);

    if (out.patterns != expected_families())
        out.failure = "observed corner patterns differ from the three families";
    else if (!out.hub_blocked)
        out.failure = "some family leaves a color for the central hub";
    else if (open.status == SolveStatus::Exhausted)
        out.failure = "enumeration with color 1 allowed exhausted its budget";
    else if (!out.outside_with_color1)
        out.failure = "no coloring outside the families even with color 1 allowed";
    out.passed = out.failure.empty();
    return out;
}

TheoremCertificate theorem_replay(const Graph& m, const ListAssignment& lists, std::uint64_t budget)
{
    TheoremCertificate cert;
    auto fail = [&](const std::string& step) {
        if (cert.failing_step.empty())
            cert.failing_step = step;
    };

    // (a) one lemma per section
    std::set<VertexId> outer_union;
    std::set<Color> forced;
    for (int j = 1; j <= 4; ++j) {
        try {
            cert.lemmas.push_back(gadget_lemma(m, lists, j, budget));
            if (cert.lemmas.back().passed) {
                forced.insert(cert.lemmas.back().banned);
                auto section = section_gadget(m, j);
                outer_union.insert(section.outer.begin(), section.outer.end());
            } else {
                fail("gadget lemma " + std::to_string(j) + ": " + cert.lemmas.back().failure);
            }
        } catch (const GraphError& e) {
            fail("gadget lemma " + std::to_string(j) + ": " + e.what());
        }
    }
    cert.forced_on_apex_neighbors.assign(forced.begin(), forced.end());

    // (b) the apex sees every outer vertex
    auto apex = m.index_of(VertexId::apex());
    if (apex) {
        cert.apex_covers_outer = !outer_union.empty();
        for (const auto& v : outer_union)
            cert.apex_covers_outer = cert.apex_covers_outer && m.adjacent(*apex, m.require_index(v));
        for (const auto& v : corners_of(m))
            cert.apex_covers_outer = cert.apex_covers_outer && m.adjacent(*apex, m.require_index(v));
    }
    if (!cert.apex_covers_outer)
        fail("apex is not adjacent to every corner");

    // (c) apex list is exactly the forced colors
    if (apex && lists.has(VertexId::apex())) {
        const auto& list = lists.of(VertexId::apex());
        cert.apex_list_ok = list == ColorSet{1, 2, 3, 4};
    }
    if (!cert.apex_list_ok)
        fail("apex list is not {1,2,3,4}");

    // (d) structured conclusion versus the direct solve
    if (apex && lists.has(VertexId::apex())) {
        const auto& list = lists.of(VertexId::apex());
        cert.structured_unsat = cert.apex_covers_outer &&
                                std::all_of(list.begin(), list.end(), [&](Color c) { return forced.count(c) != 0; });
    }
    cert.direct = decide(m, lists, budget);
    cert.routes_agree = cert.direct.status != SolveStatus::Exhausted &&
                        cert.structured_unsat == (cert.direct.status == SolveStatus::Unsat);
    if (!cert.structured_unsat)
        fail("structured argument does not empty the apex list");
    if (!cert.routes_agree)
        fail("structured conclusion disagrees with the direct solve (" + to_string(cert.direct.status) + ")");

    // planarity
    try {
        auto census = face_census(m, apex_embed(m));
        cert.euler = census.euler;
        cert.faces = census.face_count;
        cert.planar = census.connected && census.euler == 2;
    } catch (const GraphError& e) {
        fail(std::string("planarity: ") + e.what());
    }
    if (!cert.planar)
        fail("planarity certificate failed");

    // (e) rim parity classes get 1 and 2; hubs and apex share 3
    {
        std::set<VertexId> off_rim;
        for (const auto& v : m.vertices())
            if (!v.is_corner())
                off_rim.insert(v);
        auto rim = delete_vertices(m, off_rim);
        auto parts = is_bipartite(rim);
        if (parts.bipartite) {
            Coloring c;
            for (int i = 0; i < static_cast<int>(rim.order()); ++i)
                c[rim.vertex(i)] = 1 + parts.side[static_cast<std::size_t>(i)];
            for (const auto& v : off_rim)
                c[v] = 3;
            cert.three_colorable = verify_coloring(m, 3, c).ok;
            cert.three_coloring = std::move(c);
        }
    }
    if (!cert.three_colorable)
        fail("no verified 3-coloring");

    cert.certified = cert.failing_step.empty();
    return cert;
}

Json forcing_report_to_json(const ForcingReport& r)
{
    Json out;
    out["pinned"] = coloring_to_json(r.pinned);
    out["forced"] = coloring_to_json(r.forced);
    out["examined"] = r.examined;
    out["status"] = to_string(r.status);
    return out;
}

Json gadget_lemma_to_json(const GadgetLemma& l)
{
    Json out;
    out["section"] = l.section;
    out["banned_color"] = l.banned;
    out["reduced"] = to_string(l.reduced.status);
    out["reduced_nodes"] = l.reduced.stats.nodes;
    out["unreduced"] = to_string(l.unreduced.status);
    out["unreduced_nodes"] = l.unreduced.stats.nodes;
    out["passed"] = l.passed;
    out["failure"] = l.failure;
    return out;
}

Json families_report_to_json(const FamiliesReport& r)
{
    Json out;
    out["passed"] = r.passed;
    out["examined"] = r.examined;
    Json patterns = Json::array();
    for (const auto& p : r.patterns)
        patterns.push_back(p);
    out["patterns"] = std::move(patterns);
    out["hub_blocked"] = r.hub_blocked;
    out["outside_with_color1"] = r.outside_with_color1;
    out["status"] = to_string(r.status);
    out["failure"] = r.failure;
    return out;
}

Json theorem_certificate_to_json(const TheoremCertificate& c)
{
    Json out;
    Json lemmas = Json::array();
    for (const auto& l : c.lemmas)
        lemmas.push_back(gadget_lemma_to_json(l));
    out["lemmas"] = std::move(lemmas);
    out["apex_covers_outer"] = c.apex_covers_outer;
    out["apex_list_ok"] = c.apex_list_ok;
    out["forced_on_apex_neighbors"] = c.forced_on_apex_neighbors;
    out["structured_unsat"] = c.structured_unsat;
    out["direct"] = solve_result_to_json(c.direct);
    out["routes_agree"] = c.routes_agree;
    out["planar"] = c.planar;
    out["euler"] = c.euler;
    out["faces"] = c.faces;
    out["three_colorable"] = c.three_colorable;
    out["three_coloring"] = c.three_coloring ? coloring_to_json(*c.three_coloring) : Json(nullptr);
    out["certified"] = c.certified;
    out["verdict"] = c.certified ? "planar, 3-colorable, not 4-choosable" : "not certified";
    out["failing_step"] = c.failing_step;
    return out;
}

std::string theorem_transcript(const TheoremCertificate& c)
{
    std::ostringstream out;
    auto mark = [](bool ok) { return ok ? "ok  " : "FAIL"; };
    for (const auto& l : c.lemmas)
        out << '[' << mark(l.passed) << "] section " << l.section << ": without color " << l.banned
            << " on its 12 outer corners the section is " << to_string(l.reduced.status) << " ("
            << l.reduced.stats.nodes << " nodes); with it, " << to_string(l.unreduced.status) << '\n';
    out << '[' << mark(c.apex_covers_outer) << "] the apex is adjacent to every outer corner\n";
    out << '[' << mark(c.apex_list_ok) << "] the apex list is {1,2,3,4}\n";
    out << '[' << mark(c.structured_unsat) << "] colors {";
    for (std::size_t i = 0; i < c.forced_on_apex_neighbors.size(); ++i)
        out << (i ? "," : "") << c.forced_on_apex_neighbors[i];
    out << "} all appear next to the apex, so it has no color left\n";
    out << '[' << mark(c.routes_agree) << "] direct solve: " << to_string(c.direct.status) << " ("
        << c.direct.stats.nodes << " nodes)\n";
    out << '[' << mark(c.planar) << "] apex embedding: F = " << c.faces << ", V - E + F = " << c.euler << '\n';
    out << '[' << mark(c.three_colorable) << "] rim parity classes plus one color for hubs and apex give a proper "
        << "3-coloring\n";
    out << "verdict: " << (c.certified ? "planar, 3-colorable, not 4-choosable" : "not certified");
    if (!c.failing_step.empty())
        out << " (" << c.failing_step << ')';
    out << '\n';
    return out.str();
}

}  // namespace mzk
