#include "scs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace scs {

double norm_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;  // fmod can land exactly on 2pi after the add
    return a;
}

double direction_angle(const Point& a, const Point& b) {
    return norm_angle(std::atan2(b.y - a.y, b.x - a.x));
}

bool angles_congruent(double a, double b, double tol) {
    return std::abs(std::remainder(a - b, kTwoPi)) <= tol;
}

CommunicationGraph CommunicationGraph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    CommunicationGraph g;
    g.n = n;
    for (auto& [i, j] : edges) {
        if (i == j) throw ValidationError("self-loop edge on node " + std::to_string(i));
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw ValidationError("edge endpoint out of range");
        if (i > j) std::swap(i, j);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = std::move(edges);
    g.adjacency.assign(n, {});
    for (auto [i, j] : g.edges) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
    }
    for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
    return g;
}

bool CommunicationGraph::has_edge(int i, int j) const {
    return edge_index(i, j) >= 0;
}

int CommunicationGraph::edge_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(i, j));
    if (it == edges.end() || *it != std::make_pair(i, j)) return -1;
    return (int)(it - edges.begin());
}

bool CommunicationGraph::connected() const {
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int count = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adjacency[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                queue.push_back(v);
            }
        }
    }
    return count == n;
}

std::vector<std::pair<int, int>> potential_links(const std::vector<Point>& centers,
                                                 double epsilon) {
    const int n = (int)centers.size();
    std::vector<std::pair<int, int>> links;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double d = distance(centers[i], centers[j]);
            if (d <= 2.0)
                throw OverlappingCircles("circles " + std::to_string(i) + " and " +
                                         std::to_string(j) + " are at center distance " +
                                         std::to_string(d) + " <= 2");
            if (d <= 2.0 + epsilon) links.emplace_back(i, j);
        }
    }
    return links;
}

Link link_angles(const Instance& instance, std::pair<int, int> edge) {
    auto [i, j] = edge;
    if (i > j) std::swap(i, j);
    if (!instance.graph.has_edge(i, j))
        throw UnknownEdge("edge {" + std::to_string(i) + "," + std::to_string(j) +
                          "} is not in the communication graph");
    Link link;
    link.edge = {i, j};
    link.phi_ij = direction_angle(instance.center(i), instance.center(j));
    link.phi_ji = direction_angle(instance.center(j), instance.center(i));
    return link;
}

namespace {

std::vector<int> odd_cycle_witness(const std::vector<int>& parent, int u, int v) {
    // Path u->root and v->root, trimmed at the lowest common ancestor.
    auto chain = [&](int x) {
        std::vector<int> c;
        for (; x != -1; x = parent[x]) c.push_back(x);
        return c;
    };
    std::vector<int> cu = chain(u), cv = chain(v);
    std::set<int> on_cu(cu.begin(), cu.end());
    int anc = -1;
    for (int x : cv) {
        if (on_cu.count(x)) {
            anc = x;
            break;
        }
    }
    std::vector<int> cycle;
    for (int x : cu) {
        cycle.push_back(x);
        if (x == anc) break;
    }
    std::vector<int> tail;
    for (int x : cv) {
        if (x == anc) break;
        tail.push_back(x);
    }
    std::reverse(tail.begin(), tail.end());
    cycle.insert(cycle.end(), tail.begin(), tail.end());
    return cycle;
}

}  // namespace

std::vector<int> two_color_directions(const CommunicationGraph& graph) {
    std::vector<int> color(graph.n, 0);
    std::vector<int> parent(graph.n, -1);
    std::deque<int> queue;
    if (graph.n == 0) return color;
    color[0] = 1;
    queue.push_back(0);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : graph.adjacency[u]) {
            if (color[v] == 0) {
                color[v] = -color[u];
                parent[v] = u;
                queue.push_back(v);
            } else if (color[v] == color[u]) {
                throw NotBipartite("communication graph has an odd cycle",
                                   odd_cycle_witness(parent, u, v));
            }
        }
    }
    for (int u = 0; u < graph.n; ++u)
        if (color[u] == 0) throw ValidationError("communication graph is not connected");
    return color;
}

bool is_synchronized(const Instance& instance, std::pair<int, int> edge) {
    Link link = link_angles(instance, edge);
    auto [i, j] = link.edge;
    const Schedule& s = instance.schedule;
    double lhs = s.direction[i] * (link.phi_ij - s.start[i]);
    double rhs = s.direction[j] * (link.phi_ji - s.start[j]);
    return angles_congruent(lhs, rhs);
}

Schedule synthesize_schedule(const std::vector<Trajectory>& trajectories,
                             const CommunicationGraph& graph) {
    const int n = (int)trajectories.size();
    Schedule schedule;
    schedule.direction = two_color_directions(graph);
    schedule.start.assign(n, 0.0);

    Instance scratch;
    scratch.trajectories = trajectories;
    scratch.graph = graph;
    scratch.schedule = schedule;

    std::vector<char> assigned(n, 0);
    std::vector<char> tree_edge(graph.edges.size(), 0);
    std::deque<int> queue;
    assigned[0] = 1;
    queue.push_back(0);
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (int j : graph.adjacency[i]) {
            if (assigned[j]) continue;
            // Solve the arrival congruence for the child: with opposite
            // directions it reduces to f_j = phi_ji + (phi_ij - f_i).
            Link link = link_angles(scratch, {std::min(i, j), std::max(i, j)});
            double phi_ij = (i < j) ? link.phi_ij : link.phi_ji;
            double phi_ji = (i < j) ? link.phi_ji : link.phi_ij;
            scratch.schedule.start[j] = norm_angle(phi_ji + phi_ij - scratch.schedule.start[i]);
            assigned[j] = 1;
            tree_edge[graph.edge_index(i, j)] = 1;
            queue.push_back(j);
        }
    }
    for (int u = 0; u < n; ++u)
        if (!assigned[u]) throw ValidationError("communication graph is not connected");

    for (size_t e = 0; e < graph.edges.size(); ++e) {
        if (tree_edge[e]) continue;
        if (!is_synchronized(scratch, graph.edges[e]))
            throw NotSynchronizable("edge {" + std::to_string(graph.edges[e].first) + "," +
                                        std::to_string(graph.edges[e].second) +
                                        "} cannot be synchronized with the propagated schedule",
                                    graph.edges[e]);
    }
    return scratch.schedule;
}

Instance make_instance(double epsilon,
                       const std::vector<Point>& centers,
                       std::optional<std::vector<std::pair<int, int>>> edges,
                       std::optional<std::vector<int>> directions,
                       std::optional<std::vector<double>> starts) {
    if (!(epsilon > 0.0 && epsilon < 0.5))
        throw ValidationError("epsilon must be in (0, 0.5), got " + std::to_string(epsilon));
    if (centers.empty()) throw ValidationError("instance needs at least one circle");
    for (const Point& p : centers)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw ValidationError("circle center coordinates must be finite");

    Instance instance;
    instance.epsilon = epsilon;
    for (int i = 0; i < (int)centers.size(); ++i)
        instance.trajectories.push_back({i, centers[i]});

    auto links = potential_links(centers, epsilon);
    if (edges) {
        std::set<std::pair<int, int>> in_range(links.begin(), links.end());
        for (auto [i, j] : *edges) {
            auto key = std::minmax(i, j);
            if (i < 0 || j < 0 || i >= (int)centers.size() || j >= (int)centers.size() || i == j)
                throw ValidationError("edge endpoints invalid");
            if (!in_range.count({key.first, key.second}))
                throw ValidationError("supplied edge {" + std::to_string(i) + "," +
                                      std::to_string(j) + "} is not within communication range");
        }
        instance.graph = CommunicationGraph::from_edges((int)centers.size(), *edges);
    } else {
        instance.graph = CommunicationGraph::from_edges((int)centers.size(), links);
    }
    if (!instance.graph.connected())
        throw ValidationError("communication graph is not connected");

    if (directions) {
        if ((int)directions->size() != instance.n())
            throw ValidationError("directions must cover every circle");
        for (int g : *directions)
            if (g != 1 && g != -1) throw ValidationError("directions must be +1 or -1");
        for (auto [i, j] : instance.graph.edges)
            if ((*directions)[i] != -(*directions)[j])
                throw ValidationError("neighboring circles must have opposite directions");
        instance.schedule.direction = *directions;
    } else {
        instance.schedule.direction = two_color_directions(instance.graph);
    }

    if (starts) {
        if ((int)starts->size() != instance.n())
            throw ValidationError("starts must cover every circle");
        instance.schedule.start.clear();
        for (double f : *starts) instance.schedule.start.push_back(norm_angle(f));
        for (auto e : instance.graph.edges)
            if (!is_synchronized(instance, e))
                throw NotSynchronizable("supplied schedule is not synchronized on edge {" +
                                            std::to_string(e.first) + "," +
                                            std::to_string(e.second) + "}",
                                        e);
    } else {
        Schedule synth = synthesize_schedule(instance.trajectories, instance.graph);
        if (directions) {
            // Keep the caller's directions; re-synthesize starts against them.
            // The BFS propagation only used direction opposition, which any
            // valid assignment satisfies, so flipping all signs is the only
            // possible difference and the congruence is sign-symmetric.
            instance.schedule.start = synth.start;
            for (auto e : instance.graph.edges)
                if (!is_synchronized(instance, e))
                    throw NotSynchronizable("cannot synchronize supplied directions", e);
        } else {
            instance.schedule = synth;
        }
    }
    return instance;
}

void validate_instance(const Instance& instance) {
    std::vector<Point> centers;
    for (const auto& t : instance.trajectories) centers.push_back(t.center);
    std::vector<std::pair<int, int>> edges = instance.graph.edges;
    std::vector<double> starts = instance.schedule.start;
    make_instance(instance.epsilon, centers, edges, instance.schedule.direction, starts);
}

}  // namespace scs
