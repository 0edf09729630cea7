#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scs/geometry.hpp"
#include "scs/reduction.hpp"

namespace scs {

// A generated layout: centers plus, when the layout sits on a lattice whose
// potential links exceed the intended graph, an explicit edge list.
struct GeneratedInstance {
    double epsilon = 0.3;
    std::vector<Point> centers;
    std::optional<std::vector<std::pair<int, int>>> edges;

    Instance instantiate() const { return make_instance(epsilon, centers, edges); }
};

// n collinear circles.
GeneratedInstance generate_path(int n);

// Regular polygon of n circles, n even and >= 4.
GeneratedInstance generate_cycle(int n);

// The comb family for n = a*a: `a` vertical paths of `a` circles whose top
// circles form the spine. Rich in distinct tie lengths.
GeneratedInstance generate_grid_tree(int a);

// Caterpillar realizing the given augmented jump set through its ties.
GeneratedInstance generate_caterpillar(const std::vector<int>& jumps);

// Dispatch by kind name: path(n), cycle(n), grid-tree(a), caterpillar(jumps).
GeneratedInstance generate(const std::string& kind, const std::vector<std::string>& params);

}  // namespace scs
