#include "mzk/audit.hpp"

#include "mzk/choose.hpp"
#include "mzk/construct.hpp"

#include <algorithm>

namespace mzk {

namespace {

Json histogram_json(const std::map<std::size_t, std::size_t>& hist)
{
    Json out = Json::object();
    for (auto [degree, count] : hist)
        out[std::to_string(degree)] = count;
    return out;
}

Claim construction_claim(const Graph& g)
{
    Claim claim{"construction", false, {}};
    auto hubs = hubs_of(g);
    auto corners = corners_of(g);
    auto apex = g.index_of(VertexId::apex());
    std::size_t apex_degree = apex ? g.degree(*apex) : 0;
    bool hub_degrees = std::all_of(hubs.begin(), hubs.end(), [&](const VertexId& v) {
        return g.degree(g.require_index(v)) == 4;
    });
    auto hist = degree_histogram(g);
    auto central = central_hubs(g);
    const std::map<std::size_t, std::size_t> expected{{4, 40}, {6, 6}, {8, 16}, {42, 1}};

    auto& cert = claim.certificate;
    cert["vertices"] = g.order();
    cert["edges"] = g.size();
    cert["hubs"] = hubs.size();
    cert["hub_degrees_all_4"] = hub_degrees;
    cert["corners"] = corners.size();
    cert["apex_degree"] = apex_degree;
    cert["degree_histogram"] = histogram_json(hist);
    Json central_ids = Json::array();
    for (const auto& v : central)
        central_ids.push_back(v.str());
    cert["central_hubs"] = std::move(central_ids);

    claim.pass = g.order() == 63 && g.size() == 183 && hubs.size() == 20 && hub_degrees && corners.size() == 42 &&
                 apex_degree == 42 && hist == expected && central.size() == 4;
    return claim;
}

Claim planarity_claim(const Graph& g)
{
    Claim claim{"planarity", false, {}};
    auto census = face_census(g, apex_embed(g));
    claim.certificate = face_census_to_json(census);
    claim.certificate["all_triangles"] = census.all_triangles();
    claim.pass = census.connected && census.euler == 2 && census.length_sum() == 2 * g.size() &&
                 census.face_count == 122 && census.all_triangles();
    return claim;
}

Claim chromatic_claim(const Graph& g, std::uint64_t budget)
{
    Claim claim{"chromatic_number_3", false, {}};
    auto result = chromatic_number(g, 5, budget);
    bool witness_ok = result.status == SolveStatus::Sat && verify_coloring(g, result.k, result.witness).ok;
    bool below_unsat = result.below && result.below->status == SolveStatus::Unsat;
    auto& cert = claim.certificate;
    cert["status"] = to_string(result.status);
    cert["k"] = result.k;
    cert["witness_verified"] = witness_ok;
    cert["below"] = result.below ? to_string(result.below->status) : "none";
    cert["nodes"] = result.nodes;
    cert["witness"] = coloring_to_json(result.witness);
    claim.pass = result.status == SolveStatus::Sat && result.k == 3 && witness_ok && below_unsat;
    return claim;
}

Claim choosability_claim(const Graph& g, const ListAssignment& lists, std::uint64_t budget)
{
    Claim claim{"not_4_choosable", false, {}};
    auto verdict = verify_not_choosable(g, lists, 4, budget);
    claim.certificate = witness_verdict_to_json(verdict);
    claim.pass = verdict.status == WitnessStatus::Confirmed;
    return claim;
}

Claim hamilton_claim(const Graph& g, std::uint64_t budget)
{
    Claim claim{"hamiltonian", false, {}};
    auto result = hamilton(g, budget);
    auto problem = result.status == HamiltonStatus::Found ? check_hamiltonian_cycle(g, result.cycle)
                                                          : std::optional<std::string>("no cycle");
    claim.certificate = hamilton_result_to_json(result);
    claim.certificate["replay"] = problem ? *problem : "ok";
    claim.pass = result.status == HamiltonStatus::Found && !problem;
    return claim;
}

Claim cut_claim(const Graph& rest)
{
    Claim claim{"apex_deleted_not_hamiltonian", false, {}};
    std::set<VertexId> removed;
    for (int i = 0; i < static_cast<int>(rest.order()); ++i)
        if (rest.degree(i) == 7)
            removed.insert(rest.vertex(i));
    auto cert = cut_certificate(rest, removed);
    claim.certificate = cut_certificate_to_json(cert);
    claim.pass = cert.non_hamiltonian;
    return claim;
}

Claim matching_claim(const Graph& rest)
{
    Claim claim{"apex_deleted_perfect_matching", false, {}};
    auto result = perfect_matching(rest);
    auto problem = result.perfect ? check_perfect_matching(rest, result.edges)
                                  : std::optional<std::string>(result.evidence);
    claim.certificate = matching_result_to_json(result);
    claim.certificate["replay"] = problem ? *problem : "ok";
    claim.pass = result.perfect && !problem && result.edges.size() == 31;
    return claim;
}

template <typename Check>
Claim guarded(const std::string& name, Check&& check)
{
    try {
        return check();
    } catch (const std::exception& e) {
        Claim failed{name, false, {}};
        failed.certificate["error"] = e.what();
        return failed;
    }
}

}  // namespace

bool AuditReport::all_pass() const
{
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

const Claim* AuditReport::find(const std::string& name) const
{
    for (const auto& c : claims)
        if (c.name == name)
            return &c;
    return nullptr;
}

AuditReport audit(const Graph& g, const ListAssignment& lists, const AuditOptions& options)
{
    AuditReport report;
    report.options = options;
    auto graph = g;
    if (!graph.has_layout())
        if (auto layout = canonical_layout(graph.vertices()))
            graph = graph.with_layout(*layout);

    report.claims.push_back(guarded("construction", [&] { return construction_claim(graph); }));
    report.claims.push_back(guarded("planarity", [&] { return planarity_claim(graph); }));
    report.claims.push_back(
        guarded("chromatic_number_3", [&] { return chromatic_claim(graph, options.solve_budget); }));
    report.claims.push_back(
        guarded("not_4_choosable", [&] { return choosability_claim(graph, lists, options.solve_budget); }));
    report.claims.push_back(guarded("hamiltonian", [&] { return hamilton_claim(graph, options.hamilton_budget); }));

    std::optional<Graph> rest;
    try {
        rest = delete_vertices(graph, {VertexId::apex()});
    } catch (const GraphError&) {
    }
    report.claims.push_back(guarded("apex_deleted_not_hamiltonian", [&] {
        if (!rest)
            throw GraphError("graph has no apex");
        return cut_claim(*rest);
    }));
    report.claims.push_back(guarded("apex_deleted_perfect_matching", [&] {
        if (!rest)
            throw GraphError("graph has no apex");
        return matching_claim(*rest);
    }));
    return report;
}

AuditReport audit(const AuditOptions& options)
{
    return audit(mirzakhani(), canonical_lists(), options);
}

Json audit_report_to_json(const AuditReport& report)
{
    Json out;
    Json claims = Json::array();
    for (const auto& c : report.claims) {
        Json entry;
        entry["name"] = c.name;
        entry["status"] = c.pass ? "pass" : "fail";
        entry["certificate"] = c.certificate;
        claims.push_back(std::move(entry));
    }
    out["claims"] = std::move(claims);
    out["all_pass"] = report.all_pass();
    out["versions"] = {{"mzk", kVersion}, {"report_format", 1}};
    out["budgets"] = {{"solve_nodes", report.options.solve_budget},
                      {"hamilton_nodes", report.options.hamilton_budget},
                      {"probe_pool", "1..2k"}};
    return out;
}

}  // namespace mzk
