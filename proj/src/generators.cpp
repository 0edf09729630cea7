#include "scs/generators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace scs {

namespace {

constexpr double kSpacing = 2.15;

int parse_int_param(const std::vector<std::string>& params, size_t index, const char* what) {
    if (index >= params.size()) throw InvalidParams(std::string("missing parameter: ") + what);
    try {
        size_t used = 0;
        int value = std::stoi(params[index], &used);
        if (used != params[index].size()) throw std::invalid_argument("trailing");
        return value;
    } catch (const std::exception&) {
        throw InvalidParams("parameter '" + params[index] + "' is not an integer");
    }
}

}  // namespace

GeneratedInstance generate_path(int n) {
    if (n < 1) throw InvalidParams("path needs at least one circle");
    GeneratedInstance out;
    for (int i = 0; i < n; ++i) out.centers.push_back({i * kSpacing, 0.0});
    return out;
}

GeneratedInstance generate_cycle(int n) {
    if (n < 4 || n % 2 != 0)
        throw InvalidParams("cycle needs an even circle count of at least 4");
    GeneratedInstance out;
    double radius = kSpacing / (2.0 * std::sin(kTwoPi / (2.0 * n)));
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < n; ++k) {
        double angle = kTwoPi * k / n;
        out.centers.push_back({radius * std::cos(angle), radius * std::sin(angle)});
        edges.push_back({k, (k + 1) % n});
    }
    out.edges = std::move(edges);
    return out;
}

GeneratedInstance generate_grid_tree(int a) {
    if (a < 1) throw InvalidParams("grid-tree needs a >= 1");
    GeneratedInstance out;
    std::vector<std::pair<int, int>> edges;
    auto id = [a](int column, int depth) { return column * a + depth; };
    for (int column = 0; column < a; ++column) {
        for (int depth = 0; depth < a; ++depth) {
            out.centers.push_back({column * kSpacing, -depth * kSpacing});
            if (depth > 0) edges.push_back({id(column, depth - 1), id(column, depth)});
        }
        if (column > 0) edges.push_back({id(column - 1, 0), id(column, 0)});
    }
    if (!edges.empty()) out.edges = std::move(edges);
    return out;
}

GeneratedInstance generate_caterpillar(const std::vector<int>& jumps) {
    if (jumps.empty()) throw InvalidParams("caterpillar needs a nonempty jump set");
    // The half size is the largest jump; the set must then be a valid
    // augmented jump set (every odd value up to the half present).
    int half = *std::max_element(jumps.begin(), jumps.end());
    CirculantGraph augmented = CirculantGraph::make(2 * half, jumps);
    CaterpillarLayout layout = build_caterpillar_layout(augmented);
    GeneratedInstance out;
    out.epsilon = layout.params.epsilon;
    out.centers = layout.centers;
    out.edges = layout.edges;
    return out;
}

GeneratedInstance generate(const std::string& kind, const std::vector<std::string>& params) {
    if (kind == "path") return generate_path(parse_int_param(params, 0, "n"));
    if (kind == "cycle") return generate_cycle(parse_int_param(params, 0, "n"));
    if (kind == "grid-tree") return generate_grid_tree(parse_int_param(params, 0, "a"));
    if (kind == "caterpillar") {
        if (params.empty()) throw InvalidParams("caterpillar needs a jump list");
        std::vector<int> jumps;
        std::string token;
        std::stringstream parts(params[0]);
        while (std::getline(parts, token, ',')) {
            if (token.empty()) continue;
            try {
                jumps.push_back(std::stoi(token));
            } catch (const std::exception&) {
                throw InvalidParams("bad jump '" + token + "'");
            }
        }
        return generate_caterpillar(jumps);
    }
    throw InvalidParams("unknown generator kind '" + kind +
                        "' (expected path, cycle, grid-tree, caterpillar)");
}

}  // namespace scs
