#include "scs/rings.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace scs {

namespace {

long long round_slots(double slots, double tol, const char* what, const auto& thrower) {
    double nearest = std::round(slots);
    if (std::abs(slots - nearest) > tol) thrower(slots, what);
    return (long long)nearest;
}

double cyclic_slot_distance(double from, double to, double length) {
    double d = std::fmod(to - from, length);
    if (d < 0) d += length;
    if (d >= length - kSlotTol) d = 0.0;  // snap positions that wrapped onto the start
    return d;
}

}  // namespace

int RingSystem::slot_sum() const {
    int total = 0;
    for (const Ring& r : rings) total += r.length_slots;
    return total;
}

long long RingSystem::slot_lcm() const {
    const long long cap = (long long)2e18;
    long long result = 1;
    for (const Ring& r : rings) {
        long long l = r.length_slots;
        long long g = std::gcd(result, l);
        if (result / g > cap / l) return cap;
        result = result / g * l;
    }
    return result;
}

RingSystem decompose_rings(const Instance& instance) {
    const int n = instance.n();
    RingSystem system;

    // (circle, neighbor at start link) -> arc id, for the successor lookup.
    std::map<std::pair<int, int>, int> arc_starting_toward;

    for (int c = 0; c < n; ++c) {
        int g = instance.schedule.direction[c];
        struct LinkPos {
            double angle;
            int neighbor;
        };
        std::vector<LinkPos> links;
        for (int j : instance.graph.adjacency[c])
            links.push_back({direction_angle(instance.center(c), instance.center(j)), j});

        if (links.empty()) {
            DirectedArc arc{c, 0.0, 0.0, g, kTwoPi, -1, -1};
            arc_starting_toward[{c, -1}] = (int)system.arcs.size();
            system.arcs.push_back(arc);
            continue;
        }

        std::sort(links.begin(), links.end(), [&](const LinkPos& a, const LinkPos& b) {
            return g > 0 ? a.angle < b.angle : a.angle > b.angle;
        });
        for (size_t k = 0; k + 1 < links.size(); ++k)
            if (std::abs(std::remainder(links[k].angle - links[k + 1].angle, kTwoPi)) < kAngleTol)
                throw ValidationError("coincident link positions on circle " + std::to_string(c));

        const size_t m = links.size();
        for (size_t k = 0; k < m; ++k) {
            const LinkPos& a = links[k];
            const LinkPos& b = links[(k + 1) % m];
            double length = norm_angle((b.angle - a.angle) * g);
            if (m == 1) length = kTwoPi;
            DirectedArc arc{c, a.angle, b.angle, g, length, a.neighbor, b.neighbor};
            arc_starting_toward[{c, a.neighbor}] = (int)system.arcs.size();
            system.arcs.push_back(arc);
        }
    }

    // Chain arcs: the arc ending toward j continues on circle j with the arc
    // that starts toward the circle we came from.
    const int arc_count = (int)system.arcs.size();
    std::vector<int> successor(arc_count, -1);
    for (int a = 0; a < arc_count; ++a) {
        const DirectedArc& arc = system.arcs[a];
        if (arc.end_neighbor < 0) {
            successor[a] = a;
        } else {
            auto it = arc_starting_toward.find({arc.end_neighbor, arc.circle});
            if (it == arc_starting_toward.end())
                throw Error("missing return arc for edge {" + std::to_string(arc.circle) + "," +
                            std::to_string(arc.end_neighbor) + "}");
            successor[a] = it->second;
        }
    }

    system.arc_ring.assign(arc_count, -1);
    for (int a = 0; a < arc_count; ++a) {
        if (system.arc_ring[a] >= 0) continue;
        std::vector<int> cycle;
        for (int cur = a; system.arc_ring[cur] < 0; cur = successor[cur]) {
            system.arc_ring[cur] = (int)system.rings.size();
            cycle.push_back(cur);
        }
        // Deterministic origin: rotate the cycle to the arc with the
        // lexicographically smallest (circle id, start angle).
        size_t origin = 0;
        for (size_t k = 1; k < cycle.size(); ++k) {
            const DirectedArc& best = system.arcs[cycle[origin]];
            const DirectedArc& cand = system.arcs[cycle[k]];
            if (std::make_pair(cand.circle, cand.from_angle) <
                std::make_pair(best.circle, best.from_angle))
                origin = k;
        }
        std::rotate(cycle.begin(), cycle.begin() + origin, cycle.end());

        Ring ring;
        ring.id = (int)system.rings.size();
        ring.arc_ids = cycle;
        for (int arc_id : cycle) ring.length_radians += system.arcs[arc_id].length;
        double slots = ring.length_radians / kTwoPi;
        ring.length_slots = (int)round_slots(slots, kSlotTol, "ring", [](double v, const char*) {
            throw NonIntegralRingLength("ring length " + std::to_string(v) +
                                        " slots is not integral");
        });
        system.rings.push_back(ring);
    }

    system.ring_arc_offset.resize(system.rings.size());
    std::map<std::pair<int, int>, CrossingTraversal> traversal_by_end;  // (circle, end neighbor)
    for (const Ring& ring : system.rings) {
        double at = 0.0;
        auto& offsets = system.ring_arc_offset[ring.id];
        for (int arc_id : ring.arc_ids) {
            offsets.push_back(at / kTwoPi);
            const DirectedArc& arc = system.arcs[arc_id];
            at += arc.length;
            if (arc.end_neighbor >= 0) {
                double boundary = std::fmod(at / kTwoPi, (double)ring.length_slots);
                traversal_by_end[{arc.circle, arc.end_neighbor}] = {ring.id, boundary};
            }
        }
    }

    for (int e = 0; e < (int)instance.graph.edges.size(); ++e) {
        auto [i, j] = instance.graph.edges[e];
        CrossingPoint crossing;
        crossing.id = e;
        crossing.edge = {i, j};
        crossing.dir_ij = traversal_by_end.at({i, j});
        crossing.dir_ji = traversal_by_end.at({j, i});
        system.crossings.push_back(crossing);
    }
    return system;
}

TieReport compute_ties(const RingSystem& system) {
    TieReport report;
    report.distinct_per_ring.assign(system.rings.size(), {});
    for (const CrossingPoint& crossing : system.crossings) {
        if (!crossing.self_crossing()) continue;
        const int ring = crossing.dir_ij.ring;
        const int l = system.rings[ring].length_slots;
        // Entering via one traversal, the walk returns to the crossing at the
        // other traversal; the two complementary ties split the ring.
        double ij_to_ji =
            cyclic_slot_distance(crossing.dir_ij.offset_slots, crossing.dir_ji.offset_slots, l);
        auto tie_slots = [&](double v) {
            long long s = round_slots(v, kSlotTol, "tie", [](double bad, const char*) {
                throw NonIntegralTieLength("tie length " + std::to_string(bad) +
                                           " slots is not integral");
            });
            if (s < 1 || s >= (long long)0 + l)
                throw NonIntegralTieLength("tie length " + std::to_string(s) +
                                           " out of range for ring of " + std::to_string(l) +
                                           " slots");
            return (int)s;
        };
        int first = tie_slots(ij_to_ji);
        report.ties.push_back({crossing.id, ring, first, true});
        report.ties.push_back({crossing.id, ring, l - first, false});
    }
    for (const Tie& tie : report.ties) {
        auto& distinct = report.distinct_per_ring[tie.ring];
        if (std::find(distinct.begin(), distinct.end(), tie.length_slots) == distinct.end())
            distinct.push_back(tie.length_slots);
    }
    for (auto& distinct : report.distinct_per_ring) std::sort(distinct.begin(), distinct.end());
    return report;
}

std::vector<RobotPlacement> place_robots(const Instance& instance, const RingSystem& system) {
    const int n = instance.n();
    std::vector<RobotPlacement> placements(n);

    // Arc position of every arc within its ring, for offset lookup.
    std::vector<int> arc_pos(system.arcs.size(), -1);
    for (const Ring& ring : system.rings)
        for (int k = 0; k < (int)ring.arc_ids.size(); ++k) arc_pos[ring.arc_ids[k]] = k;

    std::vector<std::vector<int>> circle_arcs(n);
    for (int a = 0; a < (int)system.arcs.size(); ++a)
        circle_arcs[system.arcs[a].circle].push_back(a);

    for (int robot = 0; robot < n; ++robot) {
        double f = instance.schedule.start[robot];
        int g = instance.schedule.direction[robot];
        int best_arc = -1;
        double best_s = 0.0;
        for (int a : circle_arcs[robot]) {
            const DirectedArc& arc = system.arcs[a];
            double s = norm_angle((f - arc.from_angle) * g);
            if (s >= arc.length) continue;
            if (best_arc < 0 || s < best_s) {
                best_arc = a;
                best_s = s;
            }
        }
        if (best_arc < 0)
            throw Error("cannot locate robot " + std::to_string(robot) + " on its circle");
        const int ring = system.arc_ring[best_arc];
        const int l = system.rings[ring].length_slots;
        double offset =
            std::fmod(system.ring_arc_offset[ring][arc_pos[best_arc]] + best_s / kTwoPi, (double)l);
        placements[robot] = {robot, ring, offset, 0};
    }

    // Ring capacity and unit spacing checks, then index robots along travel.
    std::vector<std::vector<int>> by_ring(system.rings.size());
    for (const RobotPlacement& p : placements) by_ring[p.ring].push_back(p.robot);
    for (const Ring& ring : system.rings) {
        auto& robots = by_ring[ring.id];
        if ((int)robots.size() != ring.length_slots)
            throw PlacementSpacingViolation(
                "ring " + std::to_string(ring.id) + " holds " + std::to_string(robots.size()) +
                " robots but has " + std::to_string(ring.length_slots) + " slots");
        std::sort(robots.begin(), robots.end(), [&](int a, int b) {
            return placements[a].offset_slots < placements[b].offset_slots;
        });
        for (int k = 0; k < (int)robots.size(); ++k) {
            placements[robots[k]].ring_index = k;
            double gap = placements[robots[k]].offset_slots - placements[robots[0]].offset_slots;
            if (std::abs(gap - std::round(gap)) > kSlotTol)
                throw PlacementSpacingViolation("robots " + std::to_string(robots[0]) + " and " +
                                                std::to_string(robots[k]) +
                                                " are not integrally spaced on their ring");
        }
    }
    return placements;
}

double distance_to_crossing(const RingSystem& system, const RobotPlacement& placement,
                            const CrossingPoint& crossing, bool via_ij) {
    const CrossingTraversal& traversal = via_ij ? crossing.dir_ij : crossing.dir_ji;
    if (traversal.ring != placement.ring)
        throw DirectionNotOnRing("crossing direction lies on ring " +
                                 std::to_string(traversal.ring) + ", robot is on ring " +
                                 std::to_string(placement.ring));
    const int l = system.rings[placement.ring].length_slots;
    return cyclic_slot_distance(placement.offset_slots, traversal.offset_slots, l);
}

Decomposition decompose(const Instance& instance) {
    Decomposition d;
    d.instance = instance;
    d.system = decompose_rings(instance);
    d.ties = compute_ties(d.system);
    d.placements = place_robots(instance, d.system);
    d.ring_robots.assign(d.system.rings.size(), {});
    for (const Ring& ring : d.system.rings)
        d.ring_robots[ring.id].resize(ring.length_slots, -1);
    for (const RobotPlacement& p : d.placements) d.ring_robots[p.ring][p.ring_index] = p.robot;
    return d;
}

}  // namespace scs
