#include "mzk/mzk.h"

#include "mzk/audit.hpp"
#include "mzk/choose.hpp"
#include "mzk/construct.hpp"
#include "mzk/io.hpp"
#include "mzk/proof.hpp"
#include "mzk/solve.hpp"
#include "mzk/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>

struct mzk_graph {
    mzk::Graph graph;
};

struct mzk_lists {
    mzk::ListAssignment lists;
};

namespace {

thread_local std::string last_error;

class ArgumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <typename Body>
mzk_status guarded(Body&& body)
{
    try {
        body();
        last_error.clear();
        return MZK_OK;
    } catch (const ArgumentError& e) {
        last_error = e.what();
        return MZK_E_ARGUMENT;
    } catch (const mzk::ParseError& e) {
        last_error = e.what();
        return MZK_E_PARSE;
    } catch (const mzk::GraphError& e) {
        last_error = e.what();
        return MZK_E_GRAPH;
    } catch (const std::exception& e) {
        last_error = e.what();
        return MZK_E_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return MZK_E_INTERNAL;
    }
}

void require(const void* p, const char* what)
{
    if (!p)
        throw ArgumentError(std::string(what) + " must not be NULL");
}

char* duplicate(const std::string& s)
{
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** out, const mzk::Json& doc)
{
    require(out, "output string");
    *out = duplicate(doc.dump(2) + "\n");
}

void set_outcome(int* outcome, int value)
{
    if (outcome)
        *outcome = value;
}

int outcome_of(mzk::SolveStatus s)
{
    switch (s) {
    case mzk::SolveStatus::Sat:
        return MZK_OUTCOME_POSITIVE;
    case mzk::SolveStatus::Unsat:
        return MZK_OUTCOME_NEGATIVE;
    default:
        return MZK_OUTCOME_EXHAUSTED;
    }
}

mzk::ColorSet colors(const int* data, std::size_t count)
{
    if (count && !data)
        throw ArgumentError("color array must not be NULL");
    return mzk::ColorSet(data, data + count);
}

std::set<mzk::VertexId> ids(const char* const* data, std::size_t count)
{
    if (count && !data)
        throw ArgumentError("id array must not be NULL");
    std::set<mzk::VertexId> out;
    for (std::size_t i = 0; i < count; ++i) {
        require(data[i], "vertex id");
        out.insert(mzk::VertexId::parse(data[i]));
    }
    return out;
}

}  // namespace

extern "C" {

const char* mzk_version(void)
{
    return mzk::kVersion;
}

const char* mzk_last_error(void)
{
    return last_error.c_str();
}

void mzk_string_free(char* s)
{
    std::free(s);
}

mzk_status mzk_graph_build(const char* name, mzk_graph** out)
{
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        std::string which = name;
        mzk::Graph g;
        if (which == "wheel")
            g = mzk::wheel4();
        else if (which == "gadget")
            g = mzk::gadget().graph;
        else if (which == "mirzakhani")
            g = mzk::mirzakhani();
        else
            throw ArgumentError("unknown graph '" + which + "'");
        *out = new mzk_graph{std::move(g)};
    });
}

mzk_status mzk_graph_parse(const char* text, mzk_format format, mzk_graph** out)
{
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        switch (format) {
        case MZK_FORMAT_JSON:
            *out = new mzk_graph{mzk::graph_from_json(mzk::parse_json_text(text, "graph"))};
            break;
        case MZK_FORMAT_DIMACS: {
            std::istringstream in(text);
            *out = new mzk_graph{mzk::read_dimacs_col(in)};
            break;
        }
        default:
            throw ArgumentError("graphs can be parsed from JSON or DIMACS only");
        }
    });
}

mzk_status mzk_graph_load(const char* path, mzk_graph** out)
{
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new mzk_graph{mzk::load_graph(path)};
    });
}

mzk_status mzk_graph_delete_vertices(const mzk_graph* g, const char* const* id_list, size_t count, mzk_graph** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = new mzk_graph{mzk::delete_vertices(g->graph, ids(id_list, count))};
    });
}

mzk_status mzk_graph_write(const mzk_graph* g, mzk_format format, const mzk_lists* labels, char** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        switch (format) {
        case MZK_FORMAT_JSON:
            emit(out, mzk::graph_to_json(g->graph));
            break;
        case MZK_FORMAT_DIMACS:
            *out = duplicate(mzk::write_dimacs_col(g->graph));
            break;
        case MZK_FORMAT_DOT:
            *out = duplicate(mzk::write_dot(g->graph, labels ? &labels->lists : nullptr));
            break;
        default:
            throw ArgumentError("unknown format");
        }
    });
}

size_t mzk_graph_order(const mzk_graph* g)
{
    return g ? g->graph.order() : 0;
}

size_t mzk_graph_size(const mzk_graph* g)
{
    return g ? g->graph.size() : 0;
}

void mzk_graph_free(mzk_graph* g)
{
    delete g;
}

mzk_status mzk_lists_build(const char* name, mzk_lists** out)
{
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        std::string which = name;
        if (which == "canonical")
            *out = new mzk_lists{mzk::canonical_lists()};
        else if (which == "wheel")
            *out = new mzk_lists{mzk::wheel_lists()};
        else
            throw ArgumentError("unknown list assignment '" + which + "'");
    });
}

mzk_status mzk_lists_uniform(const mzk_graph* g, const int* color_list, size_t count, mzk_lists** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = new mzk_lists{mzk::ListAssignment::uniform(g->graph, colors(color_list, count))};
    });
}

mzk_status mzk_lists_restrict(const mzk_lists* lists, const mzk_graph* g, mzk_lists** out)
{
    return guarded([&] {
        require(lists, "lists");
        require(g, "graph");
        require(out, "out");
        *out = new mzk_lists{lists->lists.restricted(g->graph)};
    });
}

mzk_status mzk_lists_parse(const char* json, mzk_lists** out)
{
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        *out = new mzk_lists{mzk::lists_from_json(mzk::parse_json_text(json, "lists"))};
    });
}

mzk_status mzk_lists_load(const char* path, mzk_lists** out)
{
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new mzk_lists{mzk::load_lists(path)};
    });
}

mzk_status mzk_lists_write(const mzk_lists* lists, char** out)
{
    return guarded([&] {
        require(lists, "lists");
        emit(out, mzk::lists_to_json(lists->lists));
    });
}

void mzk_lists_free(mzk_lists* lists)
{
    delete lists;
}

mzk_status mzk_solve(const mzk_graph* g, const mzk_lists* lists, uint64_t budget, char** json, int* outcome)
{
    return guarded([&] {
        require(g, "graph");
        require(lists, "lists");
        auto result = mzk::decide(g->graph, lists->lists, budget);
        emit(json, mzk::solve_result_to_json(result));
        set_outcome(outcome, outcome_of(result.status));
    });
}

mzk_status mzk_count(const mzk_graph* g, const mzk_lists* lists, uint64_t budget, char** json, int* outcome)
{
    return guarded([&] {
        require(g, "graph");
        require(lists, "lists");
        auto result = mzk::count_colorings(g->graph, lists->lists, budget);
        emit(json, mzk::count_result_to_json(result));
        set_outcome(outcome, outcome_of(result.status));
    });
}

mzk_status mzk_cnf(const mzk_graph* g, const mzk_lists* lists, char** dimacs)
{
    return guarded([&] {
        require(g, "graph");
        require(lists, "lists");
        require(dimacs, "out");
        *dimacs = duplicate(mzk::write_dimacs_cnf(mzk::to_cnf(g->graph, lists->lists)));
    });
}

mzk_status mzk_chromatic(const mzk_graph* g, int upper_bound, uint64_t budget, char** json, int* outcome)
{
    return guarded([&] {
        require(g, "graph");
        auto result = mzk::chromatic_number(g->graph, upper_bound, budget);
        mzk::Json doc;
        doc["status"] = mzk::to_string(result.status);
        doc["k"] = result.k;
        doc["witness"] = mzk::coloring_to_json(result.witness);
        doc["below"] = result.below ? mzk::solve_result_to_json(*result.below) : mzk::Json(nullptr);
        doc["nodes"] = result.nodes;
        doc["budget"] = budget;
        emit(json, doc);
        set_outcome(outcome, result.status == mzk::SolveStatus::Sat ? MZK_OUTCOME_POSITIVE : MZK_OUTCOME_EXHAUSTED);
    });
}

mzk_status mzk_verify_coloring(const mzk_graph* g, const mzk_lists* lists, const char* coloring_json, char** json,
                               int* outcome)
{
    return guarded([&] {
        require(g, "graph");
        require(lists, "lists");
        require(coloring_json, "coloring");
        auto doc = mzk::parse_json_text(coloring_json, "coloring");
        if (!doc.is_object())
            throw mzk::ParseError("coloring: expected an object of vertex id to color");
        mzk::Coloring c;
        for (const auto& [key, value] : doc.items()) {
            if (!value.is_number_integer())
                throw mzk::ParseError("coloring[" + key + "]: color must be an integer");
            c[mzk::VertexId::parse(key)] = value.get<int>();
        }
        auto check = mzk::verify_coloring(g->graph, lists->lists, c);
        mzk::Json out;
        out["ok"] = check.ok;
        out["violations"] = mzk::Json::array();
        for (const auto& v : check.violations)
            out["violations"].push_back(v.describe());
        emit(json, out);
        set_outcome(outcome, check.ok ? MZK_OUTCOME_POSITIVE : MZK_OUTCOME_NEGATIVE);
    });
}

mzk_status mzk_verify_not_choosable(const mzk_graph* g, const mzk_lists* lists, int k, uint64_t budget, char** json,
                                    int* outcome)
{
    return guarded([&] {
        require(g, "graph");
        require(lists, "lists");
        auto verdict = mzk::verify_not_choosable(g->graph, lists->lists, k, budget);
        emit(json, mzk::witness_verdict_to_json(verdict));
        set_outcome(outcome, verdict.status == mzk::WitnessStatus::Confirmed ? MZK_OUTCOME_POSITIVE
                             : verdict.status == mzk::WitnessStatus::Refuted ? MZK_OUTCOME_NEGATIVE
                                                                             : MZK_OUTCOME_EXHAUSTED);
    });
}

mzk_status mzk_choosability_exhaustive(const mzk_graph* g, int k, const int* pool, size_t pool_size, uint64_t budget,
                                       char** json, int* outcome)
{
    return guarded([&] {
        require(g, "graph");
        auto verdict = mzk::choosability_exhaustive(g->graph, k, colors(pool, pool_size), budget);
        emit(json, mzk::exhaustive_verdict_to_json(verdict));
        set_outcome(outcome, verdict.status == mzk::ChoosabilityStatus::Choosable      ? MZK_OUTCOME_POSITIVE
                             : verdict.status == mzk::ChoosabilityStatus::NotChoosable ? MZK_OUTCOME_NEGATIVE
                                                                                       : MZK_OUTCOME_EXHAUSTED);
    });
}

mzk_status mzk_random_probe(const mzk_graph* g, int k, uint64_t trials, uint64_t seed, const int* pool,
                            size_t pool_size, uint64_t budget, const char* label, char** json, int* outcome)
{
    return guarded([&] {
        require(g, "graph");
        auto report = mzk::random_probe(g->graph, k, trials, seed, colors(pool, pool_size), label ? label : "graph",
                                        budget);
        emit(json, mzk::probe_report_to_json(report));
        set_outcome(outcome, report.aborted_at ? MZK_OUTCOME_EXHAUSTED : MZK_OUTCOME_POSITIVE);
    });
}

mzk_status mzk_verify(const mzk_graph* g, const char* check, uint64_t budget, char** json, int* outcome)
{
    return guarded([&] {
        require(g, "graph");
        require(check, "check");
        std::string which = check;
        const auto& graph = g->graph;
        mzk::Json doc;
        int result = MZK_OUTCOME_NEGATIVE;
        if (which == "planarity") {
            auto rot = graph.contains(mzk::VertexId::apex()) ? mzk::apex_embed(graph)
                                                             : mzk::rotation_from_layout(graph);
            auto census = mzk::face_census(graph, rot);
            doc = mzk::face_census_to_json(census);
            bool planar = census.connected && census.euler == 2;
            doc["planar"] = planar;
            result = planar ? MZK_OUTCOME_POSITIVE : MZK_OUTCOME_NEGATIVE;
        } else if (which == "hamilton") {
            auto r = mzk::hamilton(graph, budget);
            doc = mzk::hamilton_result_to_json(r);
            if (r.status == mzk::HamiltonStatus::Found) {
                auto problem = mzk::check_hamiltonian_cycle(graph, r.cycle);
                doc["replay"] = problem ? *problem : "ok";
                result = problem ? MZK_OUTCOME_NEGATIVE : MZK_OUTCOME_POSITIVE;
            } else {
                result = r.status == mzk::HamiltonStatus::Exhausted ? MZK_OUTCOME_EXHAUSTED : MZK_OUTCOME_NEGATIVE;
            }
        } else if (which == "matching") {
            auto m = mzk::perfect_matching(graph);
            doc = mzk::matching_result_to_json(m);
            auto problem = m.perfect ? mzk::check_perfect_matching(graph, m.edges) : std::optional<std::string>();
            doc["replay"] = problem ? *problem : (m.perfect ? "ok" : "none");
            result = (m.perfect && !problem) ? MZK_OUTCOME_POSITIVE : MZK_OUTCOME_NEGATIVE;
        } else if (which == "bipartite") {
            auto b = mzk::is_bipartite(graph);
            doc["bipartite"] = b.bipartite;
            mzk::Json cycle = mzk::Json::array();
            for (const auto& v : b.odd_cycle)
                cycle.push_back(v.str());
            doc["odd_cycle"] = std::move(cycle);
            result = b.bipartite ? MZK_OUTCOME_POSITIVE : MZK_OUTCOME_NEGATIVE;
        } else {
            throw ArgumentError("unknown check '" + which + "'");
        }
        emit(json, doc);
        set_outcome(outcome, result);
    });
}

mzk_status mzk_cut_certificate(const mzk_graph* g, const char* const* id_list, size_t count, char** json,
                               int* outcome)
{
    return guarded([&] {
        require(g, "graph");
        auto cert = mzk::cut_certificate(g->graph, ids(id_list, count));
        emit(json, mzk::cut_certificate_to_json(cert));
        set_outcome(outcome, cert.non_hamiltonian ? MZK_OUTCOME_POSITIVE : MZK_OUTCOME_NEGATIVE);
    });
}

mzk_status mzk_prove(const char* part, uint64_t budget, char** json, char** transcript, int* outcome)
{
    return guarded([&] {
        require(part, "part");
        std::string which = part;
        if (which == "theorem") {
            auto cert = mzk::theorem_replay(mzk::mirzakhani(), mzk::canonical_lists(), budget);
            emit(json, mzk::theorem_certificate_to_json(cert));
            if (transcript)
                *transcript = duplicate(mzk::theorem_transcript(cert));
            set_outcome(outcome, cert.certified ? MZK_OUTCOME_POSITIVE : MZK_OUTCOME_NEGATIVE);
        } else if (which == "families") {
            auto r = mzk::forcing_families(budget);
            emit(json, mzk::families_report_to_json(r));
            set_outcome(outcome, r.passed                                   ? MZK_OUTCOME_POSITIVE
                                 : r.status == mzk::SolveStatus::Exhausted ? MZK_OUTCOME_EXHAUSTED
                                                                           : MZK_OUTCOME_NEGATIVE);
        } else if (which.rfind("section:", 0) == 0) {
            int j = 0;
            try {
                j = std::stoi(which.substr(8));
            } catch (const std::exception&) {
                throw ArgumentError("malformed section '" + which + "'");
            }
            auto lemma = mzk::gadget_lemma(mzk::mirzakhani(), mzk::canonical_lists(), j, budget);
            emit(json, mzk::gadget_lemma_to_json(lemma));
            bool exhausted = lemma.reduced.status == mzk::SolveStatus::Exhausted ||
                             lemma.unreduced.status == mzk::SolveStatus::Exhausted;
            set_outcome(outcome, lemma.passed ? MZK_OUTCOME_POSITIVE
                                 : exhausted  ? MZK_OUTCOME_EXHAUSTED
                                              : MZK_OUTCOME_NEGATIVE);
        } else if (which.rfind("wheel:", 0) == 0) {
            auto pin = which.substr(6);
            auto eq = pin.find('=');
            if (eq == std::string::npos)
                throw ArgumentError("expected wheel:<vertexid>=<color>");
            int color = 0;
            try {
                color = std::stoi(pin.substr(eq + 1));
            } catch (const std::exception&) {
                throw ArgumentError("malformed color in '" + which + "'");
            }
            auto r = mzk::forcing(mzk::wheel4(), mzk::wheel_lists(), {{mzk::VertexId::parse(pin.substr(0, eq)), color}},
                                  budget);
            emit(json, mzk::forcing_report_to_json(r));
            set_outcome(outcome, outcome_of(r.status));
        } else {
            throw ArgumentError("unknown proof part '" + which + "'");
        }
    });
}

mzk_status mzk_audit(const mzk_graph* g, const mzk_lists* lists, uint64_t solve_budget, uint64_t hamilton_budget,
                     char** json, int* outcome)
{
    return guarded([&] {
        mzk::AuditOptions options{solve_budget, hamilton_budget};
        auto graph = g ? g->graph : mzk::mirzakhani();
        auto assignment = lists ? lists->lists : mzk::canonical_lists();
        auto report = mzk::audit(graph, assignment, options);
        emit(json, mzk::audit_report_to_json(report));
        set_outcome(outcome, report.all_pass() ? MZK_OUTCOME_POSITIVE : MZK_OUTCOME_NEGATIVE);
    });
}

}  // extern "C"
