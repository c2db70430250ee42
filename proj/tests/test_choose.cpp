#include "doctest.h"
#include "oracle.hpp"

#include "mzk/choose.hpp"
#include "mzk/construct.hpp"

using namespace mzk;

TEST_CASE("verify_not_choosable")
{
    auto v = verify_not_choosable(mirzakhani(), canonical_lists(), 4);
    CHECK(v.status == WitnessStatus::Confirmed);

    auto k3 = oracle::complete(3);
    CHECK(verify_not_choosable(k3, ListAssignment::uniform(k3, {1, 2}), 2).status == WitnessStatus::Confirmed);

    auto w = verify_not_choosable(wheel4(), wheel_lists(), 3);
    CHECK(w.status == WitnessStatus::Refuted);
    CHECK_FALSE(w.reasons.empty());

    Coloring c{{wheel::sw, 5}, {wheel::nw, 3}, {wheel::se, 3}, {wheel::ne, 2}, {wheel::center, 4}};
    CHECK(verify_coloring(wheel4(), wheel_lists(), c).ok);

    // Right sizes but colorable.
    CHECK(verify_not_choosable(k3, ListAssignment::uniform(k3, {1, 2, 3}), 3).status == WitnessStatus::Refuted);
}

TEST_CASE("small choosability ground truths")
{
    auto k3 = oracle::complete(3);
    auto r = choosability_exhaustive(k3, 2, color_range(1, 6));
    CHECK(r.status == ChoosabilityStatus::NotChoosable);
    REQUIRE(r.witness);
    for (const auto& v : k3.vertices())
        CHECK(r.witness->of(v) == ColorSet{1, 2});

    auto c4 = oracle::cycle(4);
    CHECK(choosability_exhaustive(c4, 2, color_range(1, 8)).status == ChoosabilityStatus::Choosable);

    auto edge = oracle::from_pairs(2, {{0, 1}});
    auto e = choosability_exhaustive(edge, 1, {1, 2});
    CHECK(e.status == ChoosabilityStatus::NotChoosable);
    REQUIRE(e.witness);
    for (const auto& v : edge.vertices())
        CHECK(e.witness->of(v) == ColorSet{1});
}

TEST_CASE("exhaustive choosability agrees with the unpruned oracle")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        auto g = oracle::random_graph(rng, n, 0.6);
        int k = 1 + static_cast<int>(rng() % 2);
        int pool_size = k + static_cast<int>(rng() % (5 - k));
        auto pool = color_range(1, pool_size);
        bool expected = oracle::choosable(g, k, pool);
        auto pruned = choosability_exhaustive(g, k, pool, kDefaultSolveBudget, true);
        auto plain = choosability_exhaustive(g, k, pool, kDefaultSolveBudget, false);
        CHECK(pruned.status == plain.status);
        CHECK((pruned.status == ChoosabilityStatus::Choosable) == expected);
        if (pruned.witness) {
            CHECK(verify_not_choosable(g, *pruned.witness, k).status == WitnessStatus::Confirmed);
            CHECK(plain.witness);
            CHECK(*pruned.witness == *plain.witness);
        }
        CHECK(pruned.assignments <= plain.assignments);
    }
}

TEST_CASE("choosability is monotone in k")
{
    std::vector<Graph> graphs{oracle::complete(3), oracle::cycle(4), oracle::cycle(5), oracle::complete(4),
                              oracle::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}})};
    for (const auto& g : graphs) {
        bool previous = false;
        for (int k = 1; k <= 3; ++k) {
            auto r = choosability_exhaustive(g, k, color_range(1, 2 * k));
            REQUIRE(r.status != ChoosabilityStatus::Exhausted);
            bool now = r.status == ChoosabilityStatus::Choosable;
            if (previous)
                CHECK(now);
            previous = now;
            if (r.witness)
                CHECK(verify_not_choosable(g, *r.witness, k).status == WitnessStatus::Confirmed);
        }
    }
}

TEST_CASE("exhaustive choosability respects its budget")
{
    auto r = choosability_exhaustive(oracle::cycle(8), 2, color_range(1, 6), 50);
    CHECK(r.status == ChoosabilityStatus::Exhausted);
    CHECK(r.nodes <= 50);
}

TEST_CASE("random probe")
{
    auto m = mirzakhani();
    auto full = random_probe(m, 5, 1000, 1, color_range(1, 5));
    CHECK(full.successes == 1000);
    auto a = probe_assignment(m, 5, 1, 0, color_range(1, 5));
    for (const auto& v : m.vertices())
        CHECK(a.of(v) == ColorSet{1, 2, 3, 4, 5});

    auto r = random_probe(m, 4, 200, 1, color_range(1, 8), "M");
    CHECK(r.successes <= r.trials);
    CHECK(r.trials == 200);
    CHECK(r.failures.size() == r.trials - r.successes);
    CHECK(probe_report_to_json(r).dump() ==
          probe_report_to_json(random_probe(m, 4, 200, 1, color_range(1, 8), "M")).dump());

    auto doc = probe_report_to_json(r);
    CHECK(doc["graph"] == "M");
    CHECK(doc["k"] == 4);
    CHECK(doc["trials"] == 200);
    CHECK(doc["seed"] == 1);
    CHECK(doc["pool"].size() == 8);

    for (std::uint64_t t = 0; t < 20; ++t) {
        auto l = probe_assignment(m, 3, 9, t, color_range(1, 7));
        for (const auto& v : m.vertices()) {
            CHECK(l.of(v).size() == 3);
            CHECK(l.of(v).front() >= 1);
            CHECK(l.of(v).back() <= 7);
        }
    }
    CHECK_FALSE(probe_assignment(m, 3, 9, 0, color_range(1, 7)) == probe_assignment(m, 3, 10, 0, color_range(1, 7)));

    auto aborted = random_probe(m, 4, 10, 1, color_range(1, 8), "M", 2);
    CHECK(aborted.aborted_at.has_value());
}

TEST_CASE("probe subsets are close to uniform")
{
    // Single vertex, 2-subsets of {1..4}: six outcomes.
    auto g = Graph::make({VertexId::plain(0)}, {});
    std::map<ColorSet, int> seen;
    const int trials = 6000;
    for (int t = 0; t < trials; ++t)
        ++seen[probe_assignment(g, 2, 3, static_cast<std::uint64_t>(t), color_range(1, 4)).of(VertexId::plain(0))];
    CHECK(seen.size() == 6);
    for (auto [s, count] : seen) {
        CHECK(count > 850);
        CHECK(count < 1150);
    }
}
