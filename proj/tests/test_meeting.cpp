#include <set>

#include "doctest.h"
#include "scs/meeting.hpp"
#include "support.hpp"

using namespace scs;

TEST_CASE("two-circle tree has the single prevention edge") {
    MeetingGraph g = build_meeting_graph(testing::path_of(2));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}});
    auto answer = prevention_test(g, 0, 1);
    CHECK(answer.prevents);
    REQUIRE(answer.certificate.has_value());
    CHECK(answer.certificate->kind == PreventionCertificate::Kind::SameRing);
    CHECK(answer.certificate->tie_slots == 1);
}

TEST_CASE("nine-slot ring with ties {2,4,5,7} is the circulant with jumps {2,4}") {
    auto edges = circulant_same_ring_adjacency(9, {2, 4, 5, 7});
    std::set<std::pair<int, int>> expected;
    for (int i = 0; i < 9; ++i) {
        for (int jump : {2, 4}) {
            int j = (i + jump) % 9;
            expected.insert(std::minmax(i, j));
        }
    }
    CHECK(std::set<std::pair<int, int>>(edges.begin(), edges.end()) == expected);
}

TEST_CASE("tree meeting graphs are circulant in the ring numbering") {
    for (int n : {3, 4, 6, 9}) {
        Decomposition d = decompose(testing::path_of(n));
        MeetingGraph g = build_meeting_graph(d);
        const auto& L = d.ties.distinct_per_ring[0];
        const auto& robots = d.ring_robots[0];
        // Shift invariance: i ~ i+l exactly when j ~ j+l.
        for (int l : L)
            for (int i = 0; i < n; ++i)
                CHECK(g.adjacent(robots[i], robots[(i + l) % n]));
        for (int i = 0; i < n; ++i) CHECK(g.degree(i) == (int)L.size());
    }
}

TEST_CASE("per-ring and per-crossing edge sets") {
    Decomposition pair = decompose(testing::path_of(2));
    CHECK(same_ring_edges(pair, 0) == std::vector<std::pair<int, int>>{{0, 1}});

    Decomposition sq = decompose(testing::square_cycle());
    for (int c = 0; c < (int)sq.system.crossings.size(); ++c) {
        auto edges = cross_ring_edges(sq, c);
        CHECK(edges.size() == 2);  // gcd(2,2)=2 pairs half the robot combinations
        for (auto [u, v] : edges) {
            CHECK(sq.placements[u].ring != sq.placements[v].ring);
            CHECK(brute_force_meet(sq, u, v));
        }
    }
    // Same-ring ties do not exist on the square, so those sets are empty.
    CHECK(same_ring_edges(sq, 0).empty());
}

TEST_CASE("square cycle meeting graph is the 4-cycle") {
    MeetingGraph g = build_meeting_graph(testing::square_cycle());
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 3));
    CHECK(g.adjacent(0, 3));
    CHECK(!g.adjacent(0, 2));
    CHECK(!g.adjacent(1, 3));
    auto cert = prevention_test(g, 0, 1).certificate;
    REQUIRE(cert.has_value());
    CHECK(cert->kind == PreventionCertificate::Kind::CrossRing);
    CHECK(cert->g == 2);
    CHECK(cert->s % 2 == 0);
}

TEST_CASE("meeting graph is symmetric and irreflexive") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Instance inst = testing::random_lattice_instance(seed, 4 + (int)(seed % 7));
        MeetingGraph g = build_meeting_graph(inst);
        for (int u = 0; u < g.n; ++u) {
            for (int v : g.adjacency[u]) {
                CHECK(v != u);
                CHECK(g.adjacent(v, u));
            }
        }
    }
}

TEST_CASE("gcd test agrees with the brute-force meeting oracle") {
    std::vector<Instance> instances;
    instances.push_back(testing::path_of(2));
    instances.push_back(testing::path_of(5));
    instances.push_back(testing::square_cycle());
    instances.push_back(testing::star_of(4));
    for (uint64_t seed = 0; seed < 12; ++seed)
        instances.push_back(testing::random_lattice_instance(seed, 4 + (int)(seed % 9)));

    for (const Instance& inst : instances) {
        Decomposition d = decompose(inst);
        MeetingGraph g = build_meeting_graph(d);
        for (int u = 0; u < inst.n(); ++u)
            for (int v = u + 1; v < inst.n(); ++v)
                CHECK(prevention_test(g, u, v).prevents == brute_force_meet(d, u, v));
    }
}

TEST_CASE("starvation counting") {
    MeetingGraph pair = build_meeting_graph(testing::path_of(2));
    CHECK(count_starving(pair, {}).empty());
    CHECK(count_starving(pair, {1}) == std::set<int>{0});

    MeetingGraph square = build_meeting_graph(testing::square_cycle());
    CHECK(count_starving(square, {}).empty());
    CHECK(count_starving(square, {1, 3}) == std::set<int>{0, 2});
    CHECK(count_starving(square, {0, 2}) == std::set<int>{1, 3});
    CHECK(count_starving(square, {1}).empty());
}
