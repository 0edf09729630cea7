#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "scs/geometry.hpp"
#include "scs/meeting.hpp"

namespace scs::testing {

inline constexpr double kSpacing = 2.15;

inline Instance path_of(int n) {
    std::vector<Point> centers;
    for (int i = 0; i < n; ++i) centers.push_back({i * kSpacing, 0.0});
    return make_instance(0.3, centers);
}

inline Instance square_cycle() {
    const double s = kSpacing;
    std::vector<Point> centers{{0, 0}, {s, 0}, {s, s}, {0, s}};
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return make_instance(0.3, centers, edges);
}

inline Instance star_of(int leaves) {
    // Six or more leaves at communication range would link to each other;
    // five is the geometric limit for unit circles at epsilon 0.3.
    if (leaves < 1 || leaves > 5) throw InvalidParams("star supports 1..5 leaves");
    std::vector<Point> centers{{0, 0}};
    for (int k = 0; k < leaves; ++k) {
        double angle = kTwoPi * k / leaves;
        centers.push_back({kSpacing * std::cos(angle), kSpacing * std::sin(angle)});
    }
    return make_instance(0.3, centers);
}

// Random connected subgraph of the unit lattice (spacing kSpacing): a random
// lattice tree plus, optionally, some of the remaining lattice adjacencies.
// Always a valid synchronizable instance.
inline Instance random_lattice_instance(uint64_t seed, int n, bool allow_extra_edges = true) {
    std::mt19937_64 rng(seed);
    std::map<std::pair<int, int>, int> cell_of;  // lattice cell -> circle id
    std::vector<std::pair<int, int>> cells{{0, 0}};
    cell_of[{0, 0}] = 0;
    const int dx[4] = {1, -1, 0, 0};
    const int dy[4] = {0, 0, 1, -1};
    std::vector<std::pair<int, int>> tree_edges;
    while ((int)cells.size() < n) {
        int base = (int)(rng() % cells.size());
        int dir = (int)(rng() % 4);
        std::pair<int, int> next{cells[base].first + dx[dir], cells[base].second + dy[dir]};
        if (cell_of.count(next)) continue;
        int id = (int)cells.size();
        cell_of[next] = id;
        cells.push_back(next);
        tree_edges.push_back({base, id});
    }
    std::vector<std::pair<int, int>> edges = tree_edges;
    if (allow_extra_edges) {
        for (const auto& [cell, id] : cell_of) {
            for (int d = 0; d < 4; ++d) {
                auto it = cell_of.find({cell.first + dx[d], cell.second + dy[d]});
                if (it == cell_of.end() || it->second <= id) continue;
                bool in_tree = false;
                for (auto [a, b] : tree_edges)
                    if (std::minmax(a, b) == std::minmax(id, it->second)) in_tree = true;
                if (!in_tree && rng() % 2 == 0) edges.push_back({id, it->second});
            }
        }
    }
    std::vector<Point> centers;
    for (auto [x, y] : cells) centers.push_back({x * kSpacing, y * kSpacing});
    return make_instance(0.3, centers, edges);
}

// Random tree with irregular geometry: every edge gets its own length in
// (2.02, 2 + epsilon] and direction, rejecting placements that collide with
// or link to unrelated circles. Exercises fractional arrival offsets that
// the uniform lattice never produces.
inline Instance random_irregular_tree(uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> length(2.02, 2.3);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::vector<Point> centers{{0.0, 0.0}};
    std::vector<std::pair<int, int>> edges;
    while ((int)centers.size() < n) {
        int base = (int)(rng() % centers.size());
        double r = length(rng);
        double a = angle(rng);
        Point candidate{centers[base].x + r * std::cos(a), centers[base].y + r * std::sin(a)};
        bool ok = true;
        for (int i = 0; i < (int)centers.size(); ++i) {
            if (i == base) continue;
            if (distance(centers[i], candidate) <= 2.31) ok = false;
        }
        if (!ok) continue;
        edges.push_back({base, (int)centers.size()});
        centers.push_back(candidate);
    }
    return make_instance(0.3, centers, edges);
}

// Resilience straight from the definition: smallest removal set whose
// survivors include at least k starving robots. Exponential; n <= ~16.
inline std::optional<int> exhaustive_resilience(const MeetingGraph& graph, int k) {
    const int n = graph.n;
    std::optional<int> best;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::set<int> removed;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) removed.insert(i);
        if (best && (int)removed.size() >= *best) continue;
        if ((int)count_starving(graph, removed).size() >= k)
            best = (int)removed.size();
    }
    return best;
}

}  // namespace scs::testing
