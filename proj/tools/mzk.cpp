// mzk: command-line front end over the C API.
//
// Exit codes: 0 success or claims pass, 1 claims fail or UNSAT,
// 2 usage / parse / tool error, 3 budget exhausted.

#include "mzk/mzk.h"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitError = 2;

struct Failure {
    std::string message;
};

struct GraphDeleter {
    void operator()(mzk_graph* g) const { mzk_graph_free(g); }
};
struct ListsDeleter {
    void operator()(mzk_lists* l) const { mzk_lists_free(l); }
};
using GraphPtr = std::unique_ptr<mzk_graph, GraphDeleter>;
using ListsPtr = std::unique_ptr<mzk_lists, ListsDeleter>;

void check(mzk_status s)
{
    if (s != MZK_OK)
        throw Failure{mzk_last_error()};
}

// Takes ownership of a string returned by the library.
std::string take(char* s)
{
    std::string out = s ? s : "";
    mzk_string_free(s);
    return out;
}

GraphPtr open_graph(const std::string& source)
{
    mzk_graph* g = nullptr;
    if (source.rfind("builtin:", 0) == 0)
        check(mzk_graph_build(source.substr(8).c_str(), &g));
    else
        check(mzk_graph_load(source.c_str(), &g));
    return GraphPtr(g);
}

ListsPtr open_lists(const std::string& source, const mzk_graph* g)
{
    mzk_lists* l = nullptr;
    if (source.rfind("builtin:", 0) == 0)
        check(mzk_lists_build(source.substr(8).c_str(), &l));
    else
        check(mzk_lists_load(source.c_str(), &l));
    ListsPtr owned(l);
    if (g) {
        mzk_lists* r = nullptr;
        check(mzk_lists_restrict(owned.get(), g, &r));
        owned.reset(r);
    }
    return owned;
}

std::vector<int> parse_pool(const std::string& text)
{
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("--pool", "expected a..b, got '" + text + "'");
    int lo = 0;
    int hi = 0;
    try {
        lo = std::stoi(text.substr(0, dots));
        hi = std::stoi(text.substr(dots + 2));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--pool", "expected a..b, got '" + text + "'");
    }
    if (lo < 1 || hi < lo)
        throw CLI::ValidationError("--pool", "empty or non-positive range '" + text + "'");
    std::vector<int> out;
    for (int c = lo; c <= hi; ++c)
        out.push_back(c);
    return out;
}

void write_output(const std::optional<std::string>& path, const std::string& text)
{
    if (!path) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out)
        throw Failure{"cannot write " + *path};
    out << text;
    if (!out)
        throw Failure{"error writing " + *path};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Failure{"cannot open " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

mzk_format format_of(const std::string& name)
{
    if (name == "json")
        return MZK_FORMAT_JSON;
    if (name == "dimacs")
        return MZK_FORMAT_DIMACS;
    return MZK_FORMAT_DOT;
}

struct Options {
    std::string name;
    std::string graph = "builtin:mirzakhani";
    std::string lists = "builtin:canonical";
    std::optional<std::string> out;
    std::optional<std::string> lists_out;
    std::string format = "json";
    std::uint64_t budget = 10'000'000;
    std::uint64_t hamilton_budget = 100'000'000;
    bool count = false;
    int k = 0;
    bool exhaustive = false;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    std::optional<std::string> pool;
    std::optional<std::string> witness;
    std::string label;
    std::string check;
    std::vector<std::string> set;
    std::vector<std::string> remove;
    std::optional<std::string> coloring;
    int upper = 8;
    std::optional<int> section;
    bool families = false;
    std::optional<std::string> wheel;
    bool json = false;
    bool with_lists = false;
};

int run_build(const Options& o)
{
    std::string lists_name = o.name == "wheel" ? "wheel" : "canonical";
    GraphPtr g = open_graph("builtin:" + o.name);
    std::string text;
    if (o.lists_out || o.format == "dot") {
        ListsPtr l = open_lists("builtin:" + lists_name, g.get());
        if (o.format == "dot") {
            char* s = nullptr;
            check(mzk_graph_write(g.get(), MZK_FORMAT_DOT, l.get(), &s));
            text = take(s);
        }
        if (o.lists_out) {
            char* s = nullptr;
            check(mzk_lists_write(l.get(), &s));
            write_output(o.lists_out, take(s));
        }
    }
    if (o.format != "dot") {
        char* s = nullptr;
        check(mzk_graph_write(g.get(), format_of(o.format), nullptr, &s));
        text = take(s);
    }
    write_output(o.out, text);
    return 0;
}

int run_solve(const Options& o)
{
    GraphPtr g = open_graph(o.graph);
    ListsPtr l = open_lists(o.lists, g.get());
    char* json = nullptr;
    int outcome = 0;
    if (o.count)
        check(mzk_count(g.get(), l.get(), o.budget, &json, &outcome));
    else
        check(mzk_solve(g.get(), l.get(), o.budget, &json, &outcome));
    write_output(o.out, take(json));
    return outcome;
}

int run_choosability(const Options& o)
{
    GraphPtr g = open_graph(o.graph);
    char* json = nullptr;
    int outcome = 0;
    if (o.witness) {
        ListsPtr l = open_lists(*o.witness, g.get());
        check(mzk_verify_not_choosable(g.get(), l.get(), o.k, o.budget, &json, &outcome));
        write_output(o.out, take(json));
        return outcome;
    }
    std::vector<int> pool = o.pool ? parse_pool(*o.pool) : parse_pool("1.." + std::to_string(2 * o.k));
    if (o.exhaustive) {
        check(mzk_choosability_exhaustive(g.get(), o.k, pool.data(), pool.size(), o.budget, &json, &outcome));
    } else {
        std::string label = o.label.empty() ? o.graph : o.label;
        check(mzk_random_probe(g.get(), o.k, o.trials, o.seed, pool.data(), pool.size(), o.budget, label.c_str(),
                               &json, &outcome));
    }
    write_output(o.out, take(json));
    return outcome;
}

std::vector<const char*> c_strings(const std::vector<std::string>& v)
{
    std::vector<const char*> out;
    for (const auto& s : v)
        out.push_back(s.c_str());
    return out;
}

int run_verify(const Options& o)
{
    GraphPtr g = open_graph(o.graph);
    if (!o.remove.empty()) {
        auto ids = c_strings(o.remove);
        mzk_graph* reduced = nullptr;
        check(mzk_graph_delete_vertices(g.get(), ids.data(), ids.size(), &reduced));
        g.reset(reduced);
    }
    char* json = nullptr;
    int outcome = 0;
    if (o.check == "cut") {
        if (o.set.empty())
            throw CLI::ValidationError("--set", "cut needs a vertex set");
        auto ids = c_strings(o.set);
        check(mzk_cut_certificate(g.get(), ids.data(), ids.size(), &json, &outcome));
    } else if (o.check == "chromatic") {
        check(mzk_chromatic(g.get(), o.upper, o.budget, &json, &outcome));
    } else if (o.check == "coloring") {
        if (!o.coloring)
            throw CLI::ValidationError("--coloring", "coloring needs a coloring file");
        ListsPtr l = open_lists(o.lists, g.get());
        auto text = read_file(*o.coloring);
        check(mzk_verify_coloring(g.get(), l.get(), text.c_str(), &json, &outcome));
    } else {
        std::uint64_t budget = o.check == "hamilton" ? o.hamilton_budget : o.budget;
        check(mzk_verify(g.get(), o.check.c_str(), budget, &json, &outcome));
    }
    write_output(o.out, take(json));
    return outcome;
}

int run_prove(const Options& o)
{
    std::string part = "theorem";
    int chosen = (o.section ? 1 : 0) + (o.families ? 1 : 0) + (o.wheel ? 1 : 0);
    if (chosen > 1)
        throw CLI::ValidationError("prove", "choose at most one of --section, --families, --wheel");
    if (o.section)
        part = "section:" + std::to_string(*o.section);
    else if (o.families)
        part = "families";
    else if (o.wheel)
        part = "wheel:" + *o.wheel;
    char* json = nullptr;
    char* transcript = nullptr;
    int outcome = 0;
    check(mzk_prove(part.c_str(), o.budget, &json, part == "theorem" ? &transcript : nullptr, &outcome));
    auto doc = take(json);
    auto text = take(transcript);
    if (part == "theorem" && !o.json) {
        std::cout << text;
        if (o.out)
            write_output(o.out, doc);
    } else {
        write_output(o.out, doc);
    }
    return outcome;
}

int run_audit(const Options& o)
{
    GraphPtr g = open_graph(o.graph);
    ListsPtr l = open_lists(o.lists, g.get());
    char* json = nullptr;
    int outcome = 0;
    check(mzk_audit(g.get(), l.get(), o.budget, o.hamilton_budget, &json, &outcome));
    write_output(o.out, take(json));
    return outcome;
}

int run_export(const Options& o)
{
    GraphPtr g = open_graph(o.graph);
    char* s = nullptr;
    if (o.format == "cnf") {
        ListsPtr l = open_lists(o.lists, g.get());
        check(mzk_cnf(g.get(), l.get(), &s));
    } else if (o.format == "dot" && o.with_lists) {
        ListsPtr l = open_lists(o.lists, g.get());
        check(mzk_graph_write(g.get(), MZK_FORMAT_DOT, l.get(), &s));
    } else {
        check(mzk_graph_write(g.get(), format_of(o.format), nullptr, &s));
    }
    write_output(o.out, take(s));
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact list-coloring laboratory"};
    app.set_version_flag("--version", std::string(mzk_version()));
    app.require_subcommand(1, 1);
    Options o;

    auto positive = CLI::PositiveNumber;
    auto graph_opt = [&](CLI::App* sub) {
        sub->add_option("--graph", o.graph, "graph file (.json, .col) or builtin:<wheel|gadget|mirzakhani>")
            ->capture_default_str();
    };
    auto lists_opt = [&](CLI::App* sub) {
        sub->add_option("--lists", o.lists, "list file or builtin:<canonical|wheel>")->capture_default_str();
    };
    auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", o.out, "output file (default stdout)"); };
    auto budget_opt = [&](CLI::App* sub) {
        sub->add_option("--budget", o.budget, "search node budget")->check(positive)->capture_default_str();
    };

    auto* build = app.add_subcommand("build", "construct a builtin graph");
    build->add_option("name", o.name, "wheel, gadget or mirzakhani")
        ->required()
        ->check(CLI::IsMember({"wheel", "gadget", "mirzakhani"}));
    out_opt(build);
    build->add_option("--lists", o.lists_out, "also write the builtin list assignment here");
    build->add_option("--format", o.format)->check(CLI::IsMember({"json", "dimacs", "dot"}))->capture_default_str();

    auto* solve = app.add_subcommand("solve", "decide list colorability");
    graph_opt(solve);
    lists_opt(solve);
    out_opt(solve);
    budget_opt(solve);
    solve->add_flag("--count", o.count, "count all proper list colorings");

    auto* choose = app.add_subcommand("choosability", "test k-choosability");
    graph_opt(choose);
    out_opt(choose);
    budget_opt(choose);
    choose->add_option("--k", o.k)->required()->check(positive);
    choose->add_flag("--exhaustive", o.exhaustive, "enumerate every k-list assignment over the pool");
    choose->add_option("--trials", o.trials)->check(positive)->capture_default_str();
    choose->add_option("--seed", o.seed)->check(positive)->capture_default_str();
    choose->add_option("--pool", o.pool, "color pool a..b (default 1..2k)");
    choose->add_option("--label", o.label, "graph name recorded in the probe report");
    choose->add_option("--lists", o.witness, "verify this assignment as a non-choosability witness");

    auto* verify = app.add_subcommand("verify", "check a structural claim");
    verify->add_option("check", o.check)
        ->required()
        ->check(CLI::IsMember({"planarity", "hamilton", "matching", "bipartite", "cut", "chromatic", "coloring"}));
    graph_opt(verify);
    lists_opt(verify);
    out_opt(verify);
    budget_opt(verify);
    verify->add_option("--hamilton-budget", o.hamilton_budget)->check(positive)->capture_default_str();
    verify->add_option("--remove", o.remove, "delete these vertices first");
    verify->add_option("--set", o.set, "vertex set for cut");
    verify->add_option("--coloring", o.coloring, "coloring JSON {\"<vertexid>\": color}");
    verify->add_option("--upper", o.upper, "largest k tried by chromatic")->check(positive)->capture_default_str();

    auto* prove = app.add_subcommand("prove", "replay the non-choosability argument");
    out_opt(prove);
    budget_opt(prove);
    prove->add_option("--section", o.section, "gadget lemma for section J")->check(CLI::Range(1, 4));
    prove->add_flag("--families", o.families, "the three central-wheel forcing families");
    prove->add_option("--wheel", o.wheel, "forcing on the 4-wheel from a pin <vertexid>=<color>");
    prove->add_flag("--json", o.json, "print the certificate instead of the transcript");

    auto* audit = app.add_subcommand("audit", "check every claim about the graph");
    graph_opt(audit);
    lists_opt(audit);
    out_opt(audit);
    budget_opt(audit);
    audit->add_option("--hamilton-budget", o.hamilton_budget)->check(positive)->capture_default_str();

    auto* exp = app.add_subcommand("export", "convert a graph");
    graph_opt(exp);
    lists_opt(exp);
    out_opt(exp);
    exp->add_option("--format", o.format)
        ->required()
        ->check(CLI::IsMember({"json", "dimacs", "dot", "cnf"}));
    exp->add_flag("--labels", o.with_lists, "label DOT vertices with their lists");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*build)
            return run_build(o);
        if (*solve)
            return run_solve(o);
        if (*choose)
            return run_choosability(o);
        if (*verify)
            return run_verify(o);
        if (*prove)
            return run_prove(o);
        if (*audit)
            return run_audit(o);
        return run_export(o);
    } catch (const CLI::ParseError& e) {
        std::cerr << "mzk: " << e.what() << "\n";
        return kExitError;
    } catch (const Failure& f) {
        std::cerr << "mzk: " << f.message << "\n";
        return kExitError;
    }
}
