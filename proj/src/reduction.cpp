#include "scs/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "scs/meeting.hpp"
#include "scs/rings.hpp"

namespace scs {

CirculantGraph CirculantGraph::make(int n, std::vector<int> jumps) {
    if (n < 1) throw InvalidParams("circulant graph needs at least one node");
    std::sort(jumps.begin(), jumps.end());
    jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
    for (int d : jumps)
        if (d < 1 || d > n / 2)
            throw InvalidParams("jump " + std::to_string(d) + " outside [1, " +
                                std::to_string(n / 2) + "]");
    return CirculantGraph{n, std::move(jumps)};
}

std::vector<std::pair<int, int>> CirculantGraph::edge_list() const {
    std::set<std::pair<int, int>> edges;
    for (int d : jumps)
        for (int i = 0; i < n; ++i) edges.insert(std::minmax(i, (i + d) % n));
    return {edges.begin(), edges.end()};
}

bool CirculantGraph::adjacent(int i, int j) const {
    int diff = ((j - i) % n + n) % n;
    int jump = std::min(diff, n - diff);
    return std::binary_search(jumps.begin(), jumps.end(), jump);
}

std::string CirculantGraph::to_string() const {
    std::ostringstream out;
    out << n << ';';
    for (size_t i = 0; i < jumps.size(); ++i) {
        if (i) out << ',';
        out << jumps[i];
    }
    return out.str();
}

CirculantGraph CirculantGraph::parse(const std::string& text) {
    auto semi = text.find(';');
    std::string head = text.substr(0, semi);
    std::string tail = semi == std::string::npos ? "" : text.substr(semi + 1);
    try {
        size_t used = 0;
        int n = std::stoi(head, &used);
        if (used != head.size()) throw ParseError("trailing characters after node count");
        std::vector<int> jumps;
        std::stringstream parts(tail);
        std::string token;
        while (std::getline(parts, token, ',')) {
            if (token.empty()) continue;
            int d = std::stoi(token, &used);
            if (used != token.size()) throw ParseError("bad jump value '" + token + "'");
            jumps.push_back(d);
        }
        return make(n, std::move(jumps));
    } catch (const std::invalid_argument&) {
        throw ParseError("cannot parse circulant description '" + text + "'");
    } catch (const std::out_of_range&) {
        throw ParseError("circulant description out of range: '" + text + "'");
    }
}

CirculantGraph knn_augmentation(const CirculantGraph& g) {
    if (g.n < 2) throw InvalidParams("augmentation needs at least two nodes");
    std::vector<int> jumps;
    for (int d : g.jumps) jumps.push_back(2 * d);
    for (int i = 1; 2 * i - 1 <= g.n; ++i) jumps.push_back(2 * i - 1);
    return CirculantGraph::make(2 * g.n, std::move(jumps));
}

MisResult circulant_mis(const CirculantGraph& g, const SearchOptions& options) {
    std::vector<std::vector<int>> adjacency(g.n);
    for (auto [a, b] : g.edge_list()) {
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    }
    return max_independent_set(adjacency, options);
}

namespace {

void require_augmented(const CirculantGraph& augmented) {
    if (augmented.n < 4 || augmented.n % 2 != 0)
        throw InvalidParams("augmented circulant must have an even node count >= 4");
    const int half = augmented.n / 2;
    for (int odd = 1; odd <= half; odd += 2)
        if (!std::binary_search(augmented.jumps.begin(), augmented.jumps.end(), odd))
            throw InvalidParams("augmented jump set must contain every odd value up to " +
                                std::to_string(half) + "; missing " + std::to_string(odd));
}

int find_circle_at(const std::vector<Point>& centers, const Point& p) {
    for (int i = 0; i < (int)centers.size(); ++i)
        if (std::abs(centers[i].x - p.x) < 1e-6 && std::abs(centers[i].y - p.y) < 1e-6) return i;
    return -1;
}

}  // namespace

CaterpillarLayout build_caterpillar_layout(const CirculantGraph& augmented,
                                           const CaterpillarParams& params) {
    require_augmented(augmented);
    if (!(params.spacing > 2.0 && params.spacing <= 2.0 + params.epsilon))
        throw InvalidParams("spine spacing must lie in (2, 2+epsilon]");
    if (!(params.leaf_height > 2.0 && params.leaf_height <= 2.0 + params.epsilon))
        throw InvalidParams("leaf height must lie in (2, 2+epsilon]");

    const int half = augmented.n / 2;
    auto in_jump_set = [&](int v) {
        return std::binary_search(augmented.jumps.begin(), augmented.jumps.end(), v);
    };

    CaterpillarLayout layout;
    layout.params = params;
    layout.centers.push_back({0.0, 0.0});
    layout.line.push_back(0);
    int last_spine = 0;
    int last_leaf_line = -1;  // the first leaf goes above

    for (int i = 1; i <= half; ++i) {
        if (in_jump_set(i)) {
            layout.centers.push_back({layout.centers[last_spine].x + params.spacing, 0.0});
            layout.line.push_back(0);
            layout.edges.push_back({last_spine, i});
            last_spine = i;
        } else {
            int side = -last_leaf_line;
            layout.centers.push_back(
                {layout.centers[last_spine].x, side * params.leaf_height});
            layout.line.push_back(side);
            layout.edges.push_back({last_spine, i});
            last_leaf_line = side;
        }
    }

    // Mirror step: reflect the placed chain so the tie of every spine edge
    // keeps its circle count while the total reaches 2*half.
    bool point_reflection = false;
    double axis_x = 0.0;
    Point pivot{0.0, 0.0};
    if (half % 2 == 0) {
        if (in_jump_set(half)) {
            axis_x = 0.5 * (layout.centers[half - 1].x + layout.centers[half].x);
        } else {
            axis_x = layout.centers[half - 1].x;
        }
    } else {
        if (in_jump_set(half - 1)) {
            axis_x = 0.5 * (layout.centers[half - 1].x + layout.centers[half].x);
        } else {
            point_reflection = true;
            pivot = {0.5 * (layout.centers[half - 2].x + layout.centers[half].x),
                     0.5 * (layout.centers[half - 2].y + layout.centers[half].y)};
        }
    }

    const int placed = (int)layout.centers.size();
    std::vector<int> image(placed, -1);
    for (int c = 0; c < placed; ++c) {
        Point reflected = point_reflection
                              ? Point{2 * pivot.x - layout.centers[c].x,
                                      2 * pivot.y - layout.centers[c].y}
                              : Point{2 * axis_x - layout.centers[c].x, layout.centers[c].y};
        int existing = find_circle_at(layout.centers, reflected);
        if (existing >= 0) {
            image[c] = existing;
        } else {
            image[c] = (int)layout.centers.size();
            layout.centers.push_back(reflected);
            int side = layout.line[c];
            layout.line.push_back(point_reflection ? -side : side);
        }
    }
    std::set<std::pair<int, int>> edge_set(layout.edges.begin(), layout.edges.end());
    for (auto [a, b] : std::vector<std::pair<int, int>>(layout.edges)) {
        auto mirrored = std::minmax(image[a], image[b]);
        edge_set.insert({mirrored.first, mirrored.second});
    }
    layout.edges.assign(edge_set.begin(), edge_set.end());

    if ((int)layout.centers.size() != augmented.n)
        throw LayoutCollision("mirror step produced " + std::to_string(layout.centers.size()) +
                              " circles, expected " + std::to_string(augmented.n));
    return layout;
}

Instance build_caterpillar_scs(const CirculantGraph& augmented, const CaterpillarParams& params) {
    CaterpillarLayout layout = build_caterpillar_layout(augmented, params);
    // Never trust the constants: the induced link set must be exactly the
    // intended caterpillar.
    auto induced = potential_links(layout.centers, params.epsilon);
    std::set<std::pair<int, int>> intended(layout.edges.begin(), layout.edges.end());
    if (std::set<std::pair<int, int>>(induced.begin(), induced.end()) != intended)
        throw LayoutCollision("placement induces links outside the intended caterpillar");
    return make_instance(params.epsilon, layout.centers, layout.edges);
}

CirculantGraph circulant_from_ring(int length_slots, const std::vector<int>& tie_lengths) {
    std::vector<int> jumps;
    for (int l : tie_lengths) {
        if (l < 1 || l >= length_slots)
            throw InvalidParams("tie length " + std::to_string(l) + " outside the ring");
        jumps.push_back(std::min(l, length_slots - l));
    }
    return CirculantGraph::make(length_slots, std::move(jumps));
}

ReductionReport verify_reduction(const CirculantGraph& original, const Instance& scs,
                                 const SearchOptions& options) {
    ReductionReport report;
    report.expected_jumps = knn_augmentation(original).jumps;

    Decomposition d = decompose(scs);
    if (d.system.rings.size() != 1)
        throw ReductionMismatch("constructed instance does not form a single ring", {},
                                report.expected_jumps);
    report.tie_jumps =
        circulant_from_ring(d.system.rings[0].length_slots, d.ties.distinct_per_ring[0]).jumps;

    report.starvation_number = starvation_number(build_meeting_graph(d), options).size;
    report.original_mis = circulant_mis(original, options).size;

    if (report.tie_jumps != report.expected_jumps)
        throw ReductionMismatch("tie lengths do not realize the augmented jump set",
                                report.tie_jumps, report.expected_jumps);
    if (report.starvation_number != report.original_mis)
        throw ReductionMismatch("starvation number differs from the original independent set",
                                {report.starvation_number}, {report.original_mis});
    report.ok = true;
    return report;
}

}  // namespace scs
