#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "scs/errors.hpp"

namespace scs {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Tolerance for angle congruences and link-angle comparisons (radians).
// Mutable so the CLI can expose it; set once at startup.
inline double kAngleTol = 1e-9;

// Tolerance for slot-valued quantities that the model guarantees integral.
inline double kSlotTol = 1e-6;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Angle of the vector a->b, normalized to [0, 2pi).
double direction_angle(const Point& a, const Point& b);

// Normalize an angle into [0, 2pi).
double norm_angle(double a);

// True if a == b modulo 2pi within tol.
bool angles_congruent(double a, double b, double tol = kAngleTol);

// Unit circle trajectory. Ids are dense 0..n-1.
struct Trajectory {
    int id = 0;
    Point center;
    static constexpr double radius = 1.0;
};

struct CommunicationGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;    // normalized (i < j), sorted
    std::vector<std::vector<int>> adjacency;   // sorted neighbor lists

    static CommunicationGraph from_edges(int n, std::vector<std::pair<int, int>> edges);

    bool has_edge(int i, int j) const;
    int edge_index(int i, int j) const;        // -1 if absent
    bool connected() const;
    bool is_tree() const { return connected() && (int)edges.size() == n - 1; }
};

// Link positions of one communication edge: phi_ij is the angle on circle i
// of the point closest to circle j, and vice versa.
struct Link {
    std::pair<int, int> edge;
    double phi_ij = 0.0;
    double phi_ji = 0.0;
};

// Start angles f and movement directions g (+1 CCW, -1 CW), indexed by circle id.
struct Schedule {
    std::vector<double> start;
    std::vector<int> direction;
    bool empty() const { return start.empty(); }
};

struct Instance {
    double epsilon = 0.3;
    std::vector<Trajectory> trajectories;
    CommunicationGraph graph;
    Schedule schedule;

    int n() const { return (int)trajectories.size(); }
    const Point& center(int id) const { return trajectories[id].center; }
};

// All pairs of circle centers within communication range (2, 2+epsilon].
// Throws OverlappingCircles if any pair is at distance <= 2.
std::vector<std::pair<int, int>> potential_links(const std::vector<Point>& centers,
                                                 double epsilon);

Link link_angles(const Instance& instance, std::pair<int, int> edge);

// Proper 2-coloring by movement direction; node 0 is CCW (+1).
// Throws NotBipartite with an odd-cycle witness.
std::vector<int> two_color_directions(const CommunicationGraph& graph);

// Time-of-arrival congruence at the link of `edge`: the two robots reach
// their link positions simultaneously (mod one revolution).
bool is_synchronized(const Instance& instance, std::pair<int, int> edge);

// Directions from the two-coloring; starts propagated over a BFS tree from
// node 0 and verified on every non-tree edge.
Schedule synthesize_schedule(const std::vector<Trajectory>& trajectories,
                             const CommunicationGraph& graph);

// Validated construction. Optional fields receive defaults: edges -> all
// potential links, directions -> two-coloring, starts -> synthesized.
Instance make_instance(double epsilon,
                       const std::vector<Point>& centers,
                       std::optional<std::vector<std::pair<int, int>>> edges = std::nullopt,
                       std::optional<std::vector<int>> directions = std::nullopt,
                       std::optional<std::vector<double>> starts = std::nullopt);

// Re-checks every instance invariant; throws on violation.
void validate_instance(const Instance& instance);

}  // namespace scs
