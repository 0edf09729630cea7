#include <set>

#include "doctest.h"
#include "scs/rings.hpp"
#include "support.hpp"

using namespace scs;

TEST_CASE("single circle decomposes to one ring of one slot") {
    Decomposition d = decompose(make_instance(0.3, {{0, 0}}));
    REQUIRE(d.system.rings.size() == 1);
    CHECK(d.system.rings[0].length_slots == 1);
    CHECK(d.system.crossings.empty());
    CHECK(d.placements[0].offset_slots == doctest::Approx(0.0));
}

TEST_CASE("two-circle tree: one ring, two slots, complementary unit ties") {
    Decomposition d = decompose(testing::path_of(2));
    REQUIRE(d.system.rings.size() == 1);
    CHECK(d.system.rings[0].length_slots == 2);

    REQUIRE(d.ties.ties.size() == 2);
    std::multiset<int> lengths{d.ties.ties[0].length_slots, d.ties.ties[1].length_slots};
    CHECK(lengths == std::multiset<int>{1, 1});
    CHECK(d.ties.distinct_per_ring[0] == std::vector<int>{1});

    CHECK(d.placements[0].offset_slots == doctest::Approx(0.0));
    CHECK(d.placements[1].offset_slots == doctest::Approx(1.0));
}

TEST_CASE("three-circle path: distinct tie lengths {1,2}") {
    Decomposition d = decompose(testing::path_of(3));
    REQUIRE(d.system.rings.size() == 1);
    CHECK(d.system.rings[0].length_slots == 3);
    CHECK(d.ties.distinct_per_ring[0] == std::vector<int>{1, 2});
    // Each crossing splits the ring into complementary ties.
    for (const CrossingPoint& c : d.system.crossings) CHECK(c.self_crossing());
}

TEST_CASE("trees always form a single ring of n slots") {
    for (int n : {2, 3, 5, 8}) {
        Decomposition d = decompose(testing::path_of(n));
        REQUIRE(d.system.rings.size() == 1);
        CHECK(d.system.rings[0].length_slots == n);
        // Circular numbering covers every robot exactly once.
        std::set<int> ids(d.ring_robots[0].begin(), d.ring_robots[0].end());
        CHECK((int)ids.size() == n);
    }
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Decomposition d =
            decompose(testing::random_lattice_instance(seed, 4 + (int)(seed % 7), false));
        CHECK(d.system.rings.size() == 1);
    }
    Decomposition star = decompose(testing::star_of(4));
    CHECK(star.system.rings.size() == 1);
    CHECK(star.system.rings[0].length_slots == 5);
}

TEST_CASE("square cycle: two rings of two slots, no self-crossings") {
    Decomposition d = decompose(testing::square_cycle());
    REQUIRE(d.system.rings.size() == 2);
    CHECK(d.system.rings[0].length_slots == 2);
    CHECK(d.system.rings[1].length_slots == 2);
    for (const CrossingPoint& c : d.system.crossings) CHECK(!c.self_crossing());
    CHECK(d.ties.ties.empty());
}

TEST_CASE("arc partition and slot accounting invariants") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        Instance inst = testing::random_lattice_instance(seed, 4 + (int)(seed % 8));
        Decomposition d = decompose(inst);

        std::vector<int> arc_seen(d.system.arcs.size(), 0);
        for (const Ring& ring : d.system.rings)
            for (int arc : ring.arc_ids) arc_seen[arc]++;
        for (int count : arc_seen) CHECK(count == 1);

        CHECK(d.system.slot_sum() == inst.n());

        for (const Ring& ring : d.system.rings) {
            int robots = 0;
            for (const RobotPlacement& p : d.placements)
                if (p.ring == ring.id) ++robots;
            CHECK(robots == ring.length_slots);
        }

        // Complementary ties of one crossing sum to the ring length.
        for (size_t t = 0; t + 1 < d.ties.ties.size(); t += 2) {
            const Tie& a = d.ties.ties[t];
            const Tie& b = d.ties.ties[t + 1];
            CHECK(a.crossing_id == b.crossing_id);
            CHECK(a.length_slots + b.length_slots == d.system.rings[a.ring].length_slots);
        }
    }
}

TEST_CASE("distances to crossings") {
    Decomposition d = decompose(testing::path_of(2));
    const CrossingPoint& c = d.system.crossings[0];

    double d0_ji = distance_to_crossing(d.system, d.placements[0], c, false);
    double d0_ij = distance_to_crossing(d.system, d.placements[0], c, true);
    CHECK(d0_ji == doctest::Approx(0.0));  // robot 0 starts at the link
    CHECK(d0_ij == doctest::Approx(1.0));

    Decomposition sq = decompose(testing::square_cycle());
    const CrossingPoint& first = sq.system.crossings[0];
    // The two traversals lie on different rings; asking from the wrong ring throws.
    const RobotPlacement& on_other =
        sq.placements[sq.ring_robots[first.dir_ji.ring][0]];
    CHECK_THROWS_AS(distance_to_crossing(sq.system, on_other, first, true), DirectionNotOnRing);

    // Across rings, arrival offsets are integral.
    for (const CrossingPoint& crossing : sq.system.crossings) {
        for (int u : sq.ring_robots[crossing.dir_ij.ring]) {
            for (int v : sq.ring_robots[crossing.dir_ji.ring]) {
                double du = distance_to_crossing(sq.system, sq.placements[u], crossing, true);
                double dv = distance_to_crossing(sq.system, sq.placements[v], crossing, false);
                CHECK(std::abs(du - dv - std::round(du - dv)) < 1e-9);
            }
        }
    }
}
