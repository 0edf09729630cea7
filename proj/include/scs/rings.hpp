#pragma once

#include <utility>
#include <vector>

#include "scs/geometry.hpp"

namespace scs {

// Section of one circle between two consecutive link positions, oriented
// along the circle's movement direction. A circle with no links contributes
// a single full revolution.
struct DirectedArc {
    int circle = 0;
    double from_angle = 0.0;  // start link position (travel begins here)
    double to_angle = 0.0;    // end link position
    int direction = 1;
    double length = 0.0;      // radians, in (0, 2pi]
    int start_neighbor = -1;  // circle the start link points to, -1 for none
    int end_neighbor = -1;
};

struct Ring {
    int id = 0;
    std::vector<int> arc_ids;  // cyclic order of travel
    int length_slots = 0;
    double length_radians = 0.0;
};

// One traversal of a crossing point: the boundary between the arc arriving
// at the link and the arc leaving on the neighboring circle.
struct CrossingTraversal {
    int ring = -1;
    double offset_slots = 0.0;  // position of the boundary along the ring
};

// Midpoint of a communication edge, traversed in two directions.
struct CrossingPoint {
    int id = 0;
    std::pair<int, int> edge;
    CrossingTraversal dir_ij;  // entering via the arc ending at phi_ij
    CrossingTraversal dir_ji;
    bool self_crossing() const { return dir_ij.ring == dir_ji.ring; }
};

struct RingSystem {
    std::vector<DirectedArc> arcs;
    std::vector<int> arc_ring;                 // arc id -> ring id
    std::vector<Ring> rings;
    std::vector<CrossingPoint> crossings;      // one per communication edge
    std::vector<std::vector<double>> ring_arc_offset;  // per ring, slots at arc start

    int slot_sum() const;
    long long slot_lcm() const;
};

// Closed subpath of a ring between the two traversals of a self-crossing.
struct Tie {
    int crossing_id = 0;
    int ring = 0;
    int length_slots = 0;
    bool entry_is_ij = true;  // tie walked when entering via dir_ij
};

struct TieReport {
    std::vector<Tie> ties;
    std::vector<std::vector<int>> distinct_per_ring;  // sorted distinct slot lengths
};

struct RobotPlacement {
    int robot = 0;  // home trajectory id
    int ring = 0;
    double offset_slots = 0.0;  // from the ring origin arc
    int ring_index = 0;         // 0..l-1 along the travel direction
};

// Builds all directed arcs and chains them: the arc ending at phi_ij
// continues on circle j with the arc starting at phi_ji. Rings are the
// cycles of that successor map.
RingSystem decompose_rings(const Instance& instance);

TieReport compute_ties(const RingSystem& system);

// Robot i starts at angle f(C_i) on its own circle; each ring of l slots
// must carry exactly l robots at unit spacing.
std::vector<RobotPlacement> place_robots(const Instance& instance, const RingSystem& system);

// Simple-path length in slots from the robot forward along its ring to the
// chosen traversal of the crossing; in [0, ring length).
double distance_to_crossing(const RingSystem& system, const RobotPlacement& placement,
                            const CrossingPoint& crossing, bool via_ij);

// Everything the downstream analyses need, computed once.
struct Decomposition {
    Instance instance;
    RingSystem system;
    TieReport ties;
    std::vector<RobotPlacement> placements;        // by robot id
    std::vector<std::vector<int>> ring_robots;     // ring -> robot ids by ring index
};

Decomposition decompose(const Instance& instance);

}  // namespace scs
