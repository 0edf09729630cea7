#include "scs/meeting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace scs {

void MeetingGraph::add_edge(int u, int v, const PreventionCertificate& cert) {
    if (u == v) throw Error("meeting graph edges are irreflexive");
    auto key = std::minmax(u, v);
    auto& certs = certificates[{key.first, key.second}];
    certs.push_back(cert);
    if (certs.size() == 1) {
        adjacency[u].push_back(v);
        adjacency[v].push_back(u);
    }
}

bool MeetingGraph::adjacent(int u, int v) const {
    auto key = std::minmax(u, v);
    return certificates.count({key.first, key.second}) > 0;
}

int MeetingGraph::min_degree() const {
    int best = n == 0 ? 0 : (int)adjacency[0].size();
    for (const auto& a : adjacency) best = std::min(best, (int)a.size());
    return best;
}

std::vector<std::pair<int, int>> MeetingGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [edge, certs] : certificates) out.push_back(edge);
    return out;
}

std::vector<std::pair<int, int>> circulant_same_ring_adjacency(
    int length_slots, const std::vector<int>& tie_lengths) {
    std::set<std::pair<int, int>> edges;
    for (int l : tie_lengths) {
        for (int i = 0; i < length_slots; ++i) {
            int j = (i + l) % length_slots;
            if (i == j) continue;
            edges.insert(std::minmax(i, j));
        }
    }
    return {edges.begin(), edges.end()};
}

std::vector<std::pair<int, int>> same_ring_edges(const Decomposition& d, int ring) {
    std::vector<std::pair<int, int>> out;
    const auto& robots = d.ring_robots[ring];
    const int l = d.system.rings[ring].length_slots;
    for (auto [a, b] : circulant_same_ring_adjacency(l, d.ties.distinct_per_ring[ring]))
        out.push_back(std::minmax(robots[a], robots[b]));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

long long integral_offset(double da, double db) {
    double diff = da - db;
    double nearest = std::round(diff);
    if (std::abs(diff - nearest) > kSlotTol)
        throw NonIntegralOffset("arrival offset " + std::to_string(diff) +
                                " between rings is not integral");
    return (long long)nearest;
}

}  // namespace

std::vector<std::pair<int, int>> cross_ring_edges(const Decomposition& d, int crossing_id) {
    const CrossingPoint& crossing = d.system.crossings[crossing_id];
    std::vector<std::pair<int, int>> out;
    if (crossing.self_crossing()) return out;
    const int ra = crossing.dir_ij.ring;
    const int rb = crossing.dir_ji.ring;
    const long long la = d.system.rings[ra].length_slots;
    const long long lb = d.system.rings[rb].length_slots;
    const long long g = std::gcd(la, lb);
    for (int u : d.ring_robots[ra]) {
        double du = distance_to_crossing(d.system, d.placements[u], crossing, true);
        for (int v : d.ring_robots[rb]) {
            double dv = distance_to_crossing(d.system, d.placements[v], crossing, false);
            long long s = integral_offset(du, dv);
            if (s % g == 0) out.push_back(std::minmax(u, v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

MeetingGraph build_meeting_graph(const Decomposition& d) {
    MeetingGraph graph;
    graph.n = d.instance.n();
    graph.adjacency.assign(graph.n, {});

    for (const Ring& ring : d.system.rings) {
        const auto& robots = d.ring_robots[ring.id];
        for (int l : d.ties.distinct_per_ring[ring.id]) {
            for (int i = 0; i < ring.length_slots; ++i) {
                int j = (i + l) % ring.length_slots;
                if (i == j) continue;
                // A half-length tie generates each pair from both endpoints.
                if ((2 * l) % ring.length_slots == 0 && i > j) continue;
                PreventionCertificate cert;
                cert.kind = PreventionCertificate::Kind::SameRing;
                cert.ring = ring.id;
                cert.tie_slots = l;
                graph.add_edge(robots[i], robots[j], cert);
            }
        }
    }

    for (const CrossingPoint& crossing : d.system.crossings) {
        if (crossing.self_crossing()) continue;
        const int ra = crossing.dir_ij.ring;
        const int rb = crossing.dir_ji.ring;
        const long long la = d.system.rings[ra].length_slots;
        const long long lb = d.system.rings[rb].length_slots;
        const long long g = std::gcd(la, lb);
        for (int u : d.ring_robots[ra]) {
            double du = distance_to_crossing(d.system, d.placements[u], crossing, true);
            for (int v : d.ring_robots[rb]) {
                double dv = distance_to_crossing(d.system, d.placements[v], crossing, false);
                long long s = integral_offset(du, dv);
                if (s % g != 0) continue;
                PreventionCertificate cert;
                cert.kind = PreventionCertificate::Kind::CrossRing;
                cert.crossing_id = crossing.id;
                cert.s = s;
                cert.g = g;
                graph.add_edge(u, v, cert);
            }
        }
    }

    for (auto& a : graph.adjacency) std::sort(a.begin(), a.end());
    return graph;
}

MeetingGraph build_meeting_graph(const Instance& instance) {
    return build_meeting_graph(decompose(instance));
}

PreventionAnswer prevention_test(const MeetingGraph& graph, int u, int v) {
    if (u == v) throw Error("prevention test requires two distinct robots");
    PreventionAnswer answer;
    auto key = std::minmax(u, v);
    auto it = graph.certificates.find({key.first, key.second});
    if (it != graph.certificates.end()) {
        answer.prevents = true;
        answer.certificate = it->second.front();
    }
    return answer;
}

bool brute_force_meet(const Decomposition& d, int u, int v) {
    if (u == v) throw Error("brute-force meet requires two distinct robots");
    const RobotPlacement& pu = d.placements[u];
    const RobotPlacement& pv = d.placements[v];
    const long long lu = d.system.rings[pu.ring].length_slots;
    const long long lv = d.system.rings[pv.ring].length_slots;

    for (const CrossingPoint& crossing : d.system.crossings) {
        // Try every assignment of the two traversals to the two robots.
        for (bool u_via_ij : {true, false}) {
            const CrossingTraversal& tu = u_via_ij ? crossing.dir_ij : crossing.dir_ji;
            const CrossingTraversal& tv = u_via_ij ? crossing.dir_ji : crossing.dir_ij;
            if (tu.ring != pu.ring || tv.ring != pv.ring) continue;
            double du = distance_to_crossing(d.system, pu, crossing, u_via_ij);
            double dv = distance_to_crossing(d.system, pv, crossing, !u_via_ij);
            for (long long i = 0; i <= lv; ++i)
                for (long long j = 0; j <= lu; ++j)
                    if (std::abs((du + (double)(i * lu)) - (dv + (double)(j * lv))) < kSlotTol)
                        return true;
        }
    }
    return false;
}

std::set<int> count_starving(const MeetingGraph& graph, const std::set<int>& removed) {
    std::set<int> starving;
    for (int u = 0; u < graph.n; ++u) {
        if (removed.count(u)) continue;
        bool all_gone = true;
        for (int v : graph.adjacency[u]) {
            if (!removed.count(v)) {
                all_gone = false;
                break;
            }
        }
        if (all_gone) starving.insert(u);
    }
    return starving;
}

std::set<int> count_starving(const Instance& instance, const std::set<int>& removed) {
    return count_starving(build_meeting_graph(instance), removed);
}

}  // namespace scs
