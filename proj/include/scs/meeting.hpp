#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "scs/rings.hpp"

namespace scs {

// Evidence for one "prevents from starving" edge.
struct PreventionCertificate {
    enum class Kind { SameRing, CrossRing };
    Kind kind = Kind::SameRing;
    int ring = -1;        // same-ring: the shared ring
    int tie_slots = 0;    // same-ring: matching tie length
    int crossing_id = -1; // cross-ring: the shared crossing point
    long long s = 0;      // cross-ring: integer arrival offset d - d'
    long long g = 0;      // cross-ring: gcd of the two ring slot lengths
};

struct MeetingGraph {
    int n = 0;
    std::vector<std::vector<int>> adjacency;  // sorted
    std::map<std::pair<int, int>, std::vector<PreventionCertificate>> certificates;

    void add_edge(int u, int v, const PreventionCertificate& cert);
    bool adjacent(int u, int v) const;
    int degree(int u) const { return (int)adjacency[u].size(); }
    int min_degree() const;
    std::vector<std::pair<int, int>> edges() const;
};

// Circulant adjacency of one ring: index i is adjacent to i + l (mod slots)
// for every distinct tie slot length l.
std::vector<std::pair<int, int>> circulant_same_ring_adjacency(int length_slots,
                                                               const std::vector<int>& tie_lengths);

// Same-ring edges of one ring, as robot-id pairs.
std::vector<std::pair<int, int>> same_ring_edges(const Decomposition& d, int ring);

// Cross-ring edges induced by one crossing point between distinct rings:
// robots u, u' meet there iff gcd(l, l') divides their arrival offset s.
std::vector<std::pair<int, int>> cross_ring_edges(const Decomposition& d, int crossing_id);

MeetingGraph build_meeting_graph(const Decomposition& d);
MeetingGraph build_meeting_graph(const Instance& instance);

struct PreventionAnswer {
    bool prevents = false;
    std::optional<PreventionCertificate> certificate;
};

PreventionAnswer prevention_test(const MeetingGraph& graph, int u, int v);

// Independent oracle: enumerates bounded arrival-time pairs at every shared
// crossing instead of reasoning about divisibility. Meetings recur with
// period lcm(l, l'), so i <= l' and j <= l laps suffice.
bool brute_force_meet(const Decomposition& d, int u, int v);

// Live robots all of whose neighbors have been removed.
std::set<int> count_starving(const MeetingGraph& graph, const std::set<int>& removed);
std::set<int> count_starving(const Instance& instance, const std::set<int>& removed);

}  // namespace scs
