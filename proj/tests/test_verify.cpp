#include "doctest.h"
#include "oracle.hpp"

#include "mzk/construct.hpp"
#include "mzk/verify.hpp"

#include <numeric>

using namespace mzk;

namespace {

bool same_cycle(std::vector<VertexId> a, const std::vector<VertexId>& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t r = 0; r < a.size(); ++r) {
        if (a == b)
            return true;
        std::rotate(a.begin(), a.begin() + 1, a.end());
    }
    return false;
}

std::vector<VertexId> rotation_ids(const Graph& g, const RotationSystem& rot, const VertexId& v)
{
    std::vector<VertexId> out;
    for (int j : rot.order[static_cast<std::size_t>(g.require_index(v))])
        out.push_back(g.vertex(j));
    return out;
}

Graph with_points(const Graph& g, const std::vector<Point>& pts)
{
    Layout layout;
    for (std::size_t i = 0; i < pts.size(); ++i)
        layout[g.vertex(static_cast<int>(i))] = pts[i];
    return g.with_layout(layout);
}

bool brute_hamiltonian(const Graph& g)
{
    int n = static_cast<int>(g.order());
    if (n < 3)
        return false;
    std::vector<int> perm(static_cast<std::size_t>(n - 1));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        int prev = 0;
        bool ok = true;
        for (int v : perm) {
            if (!g.adjacent(prev, v)) {
                ok = false;
                break;
            }
            prev = v;
        }
        if (ok && g.adjacent(prev, 0))
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::size_t brute_matching(const Graph& g, std::vector<bool>& used, int from)
{
    int n = static_cast<int>(g.order());
    while (from < n && used[static_cast<std::size_t>(from)])
        ++from;
    if (from >= n)
        return 0;
    used[static_cast<std::size_t>(from)] = true;
    std::size_t best = brute_matching(g, used, from + 1);
    for (int v = from + 1; v < n; ++v)
        if (!used[static_cast<std::size_t>(v)] && g.adjacent(from, v)) {
            used[static_cast<std::size_t>(v)] = true;
            best = std::max(best, 1 + brute_matching(g, used, from + 1));
            used[static_cast<std::size_t>(v)] = false;
        }
    used[static_cast<std::size_t>(from)] = false;
    return best;
}

std::set<VertexId> degree7_corners()
{
    std::set<VertexId> s;
    for (int a : {1, 3, 7, 9, 13, 15, 19, 21})
        for (int b : {-1, 1})
            s.insert(VertexId::corner(a, b));
    return s;
}

}  // namespace

TEST_CASE("rotation systems from layouts")
{
    auto k3 = with_points(oracle::complete(3), {{0, 0}, {4, 0}, {1, 3}});
    auto r3 = rotation_from_layout(k3);
    for (const auto& o : r3.order)
        CHECK(o.size() == 2);

    auto w = wheel4();
    auto rw = rotation_from_layout(w);
    CHECK(same_cycle(rotation_ids(w, rw, wheel::center), {wheel::sw, wheel::se, wheel::ne, wheel::nw}));
    auto cw = face_census(w, rw);
    CHECK(cw.face_count == 5);
    CHECK(cw.euler == 2);
    std::map<std::size_t, int> lengths;
    for (const auto& f : cw.faces)
        ++lengths[f.size()];
    CHECK(lengths == std::map<std::size_t, int>{{3, 4}, {4, 1}});

    auto minus = delete_vertices(mirzakhani(), {VertexId::apex()});
    auto rm = rotation_from_layout(minus);
    CHECK_NOTHROW(check_rotation(minus, rm));
    std::size_t darts = 0;
    for (const auto& o : rm.order)
        darts += o.size();
    CHECK(darts == 282);

    auto plain = oracle::complete(3);
    CHECK_THROWS_AS(rotation_from_layout(plain), GraphError);
}

TEST_CASE("check_rotation rejects a rotation that is not a permutation of neighbours")
{
    auto c4 = with_points(oracle::cycle(4), {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    auto rot = rotation_from_layout(c4);
    rot.order[0] = {1, 1};
    CHECK_THROWS_AS(check_rotation(c4, rot), GraphError);
}

TEST_CASE("face census")
{
    auto c4 = with_points(oracle::cycle(4), {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    auto cc = face_census(c4, rotation_from_layout(c4));
    CHECK(cc.face_count == 2);
    CHECK(cc.euler == 2);

    auto k4 = with_points(oracle::complete(4), {{0, 0}, {10, 0}, {5, 10}, {5, 3}});
    auto rot = rotation_from_layout(k4);
    CHECK(face_census(k4, rot).euler == 2);
    std::reverse(rot.order[0].begin(), rot.order[0].end());
    CHECK_NOTHROW(check_rotation(k4, rot));
    auto flipped = face_census(k4, rot);
    CHECK(flipped.euler != 2);
    CHECK(flipped.length_sum() == 2 * k4.size());
}

TEST_CASE("outer walks")
{
    auto m = mirzakhani();
    std::set<VertexId> drop{VertexId::apex()};
    for (const auto& h : hubs_of(m))
        drop.insert(h);
    auto rim = delete_vertices(m, drop);
    auto walk = outer_walk(rim, rotation_from_layout(rim));
    CHECK(walk.size() == 42);
    CHECK(std::set(walk.begin(), walk.end()).size() == 42);
    for (std::size_t i = 0; i < walk.size(); ++i)
        CHECK(rim.adjacent(rim.require_index(walk[i]), rim.require_index(walk[(i + 1) % walk.size()])));

    auto c4 = with_points(oracle::cycle(4), {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(outer_walk(c4, rotation_from_layout(c4)).size() == 4);
    auto w = wheel4();
    auto ww = outer_walk(w, rotation_from_layout(w));
    CHECK(ww.size() == 4);
    CHECK(std::find(ww.begin(), ww.end(), wheel::center) == ww.end());

    // Two triangles sharing a vertex: the outer face repeats it.
    auto bow = with_points(oracle::from_pairs(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}),
                           {{0, 0}, {0, 4}, {3, 2}, {6, 4}, {6, 0}});
    CHECK_THROWS_AS(outer_walk(bow, rotation_from_layout(bow)), GraphError);
}

TEST_CASE("apex embedding")
{
    auto m = mirzakhani();
    auto rot = apex_embed(m);
    CHECK_NOTHROW(check_rotation(m, rot));
    auto census = face_census(m, rot);
    CHECK(census.connected);
    CHECK(census.euler == 2);
    CHECK(census.face_count == 122);
    CHECK(census.all_triangles());
    CHECK(census.length_sum() == 2 * m.size());

    Cell one[] = {{0, 0}};
    auto wa = build_cells(one, true);
    CHECK(wa.order() == 6);
    CHECK(wa.size() == 12);
    auto wc = face_census(wa, apex_embed(wa));
    CHECK(wc.euler == 2);
    CHECK(wc.face_count == 8);

    // Apex adjacent to the hub, which is not on the outer walk.
    std::vector<Edge> edges = wa.edge_ids();
    edges.emplace_back(VertexId::apex(), VertexId::hub(0, 0));
    auto bad = Graph::make(wa.vertices(), edges, wa.layout());
    CHECK_THROWS_AS(apex_embed(bad), GraphError);
}

TEST_CASE("hamiltonian cycles")
{
    auto c5 = oracle::cycle(5);
    auto r = hamilton(c5);
    REQUIRE(r.status == HamiltonStatus::Found);
    CHECK(r.cycle.size() == 5);
    CHECK_FALSE(check_hamiltonian_cycle(c5, r.cycle));

    auto m = mirzakhani();
    auto hm = hamilton(m);
    REQUIRE(hm.status == HamiltonStatus::Found);
    CHECK(hm.cycle.size() == 63);
    CHECK_FALSE(check_hamiltonian_cycle(m, hm.cycle));

    CHECK(hamilton(oracle::petersen()).status == HamiltonStatus::NoneProved);

    auto minus = delete_vertices(m, {VertexId::apex()});
    CHECK(hamilton(minus).status == HamiltonStatus::NoneProved);

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 6), 0.5);
        auto h = hamilton(g);
        CHECK((h.status == HamiltonStatus::Found) == brute_hamiltonian(g));
        if (h.status == HamiltonStatus::Found)
            CHECK_FALSE(check_hamiltonian_cycle(g, h.cycle));
    }
}

TEST_CASE("hamiltonian cycle checker")
{
    auto c5 = oracle::cycle(5);
    auto p = [](int i) { return VertexId::plain(i); };
    CHECK(check_hamiltonian_cycle(c5, {p(0), p(1), p(2), p(3)}));
    CHECK(check_hamiltonian_cycle(c5, {p(0), p(2), p(1), p(3), p(4)}));
    CHECK(check_hamiltonian_cycle(c5, {p(0), p(1), p(2), p(3), p(3)}));
    CHECK(check_hamiltonian_cycle(c5, {p(0), p(1), p(2), p(3), p(9)}));
    CHECK_FALSE(check_hamiltonian_cycle(c5, {p(2), p(1), p(0), p(4), p(3)}));
}

TEST_CASE("hamilton search respects its budget")
{
    auto r = hamilton(mirzakhani(), 3);
    CHECK(r.status == HamiltonStatus::Exhausted);
    CHECK(r.nodes <= 3);
}

TEST_CASE("cut certificates")
{
    auto p3 = oracle::from_pairs(3, {{0, 1}, {1, 2}});
    auto a = cut_certificate(p3, {VertexId::plain(1)});
    CHECK(a.components_after == 2);
    CHECK(a.non_hamiltonian);

    auto c4 = oracle::cycle(4);
    auto b = cut_certificate(c4, {VertexId::plain(0)});
    CHECK(b.components_after == 1);
    CHECK_FALSE(b.non_hamiltonian);

    auto minus = delete_vertices(mirzakhani(), {VertexId::apex()});
    auto s = degree7_corners();
    for (const auto& v : s)
        CHECK(minus.degree(minus.require_index(v)) == 7);
    auto cert = cut_certificate(minus, s);
    CHECK(cert.components_after == oracle::component_count(delete_vertices(minus, s)));
    CHECK(cert.components_after == 17);
    CHECK(cert.non_hamiltonian);
    CHECK_THROWS_AS(cut_certificate(c4, {VertexId::plain(7)}), GraphError);
}

TEST_CASE("perfect matchings")
{
    auto c4 = oracle::cycle(4);
    auto a = perfect_matching(c4);
    CHECK(a.perfect);
    CHECK(a.edges.size() == 2);
    CHECK_FALSE(check_perfect_matching(c4, a.edges));

    auto k3 = perfect_matching(oracle::complete(3));
    CHECK_FALSE(k3.perfect);
    CHECK(k3.edges.empty());

    auto minus = delete_vertices(mirzakhani(), {VertexId::apex()});
    auto m = perfect_matching(minus);
    CHECK(m.perfect);
    CHECK(m.edges.size() == 31);
    CHECK_FALSE(check_perfect_matching(minus, m.edges));

    auto star = oracle::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}});
    auto s = perfect_matching(star);
    CHECK_FALSE(s.perfect);
    CHECK(s.maximum == 1);

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 80; ++trial) {
        auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.3);
        std::vector<bool> used(g.order(), false);
        auto expected = brute_matching(g, used, 0);
        auto got = maximum_matching(g);
        CHECK(got.size() == expected);
        std::set<VertexId> touched;
        for (const auto& [u, v] : got) {
            CHECK(g.adjacent(g.require_index(u), g.require_index(v)));
            CHECK(touched.insert(u).second);
            CHECK(touched.insert(v).second);
        }
    }
}

TEST_CASE("matching checker")
{
    auto c4 = oracle::cycle(4);
    auto p = [](int i) { return VertexId::plain(i); };
    CHECK(check_perfect_matching(c4, {{p(0), p(2)}, {p(1), p(3)}}));
    CHECK(check_perfect_matching(c4, {{p(0), p(1)}}));
    CHECK(check_perfect_matching(c4, {{p(0), p(1)}, {p(1), p(2)}}));
    CHECK_FALSE(check_perfect_matching(c4, {{p(0), p(1)}, {p(2), p(3)}}));
}
