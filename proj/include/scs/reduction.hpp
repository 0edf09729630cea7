#pragma once

#include <string>
#include <vector>

#include "scs/geometry.hpp"
#include "scs/resilience.hpp"

namespace scs {

// Graph on nodes 0..n-1 with i adjacent to i +- d (mod n) for each jump d.
struct CirculantGraph {
    int n = 0;
    std::vector<int> jumps;  // sorted distinct, within [1, n/2]

    std::vector<std::pair<int, int>> edge_list() const;
    bool adjacent(int i, int j) const;

    // Compact text form "n;d1,d2,..."; an empty jump set is "n;" or "n".
    std::string to_string() const;
    static CirculantGraph parse(const std::string& text);
    static CirculantGraph make(int n, std::vector<int> jumps);
};

// Join with a disjoint clone: C_{2n} whose jumps double the original ones
// and add every odd value up to n. Preserves the maximum independent set.
CirculantGraph knn_augmentation(const CirculantGraph& g);

// Exact maximum independent set of a circulant graph.
MisResult circulant_mis(const CirculantGraph& g, const SearchOptions& options = {});

// Geometry parameters of the constructed caterpillar. Spine circles sit on
// y = 0 at the given spacing; leaves sit directly above or below their spine
// circle at distance `leaf_height`, which must stay within (2, 2+epsilon].
struct CaterpillarParams {
    double epsilon = 0.3;
    double spacing = 2.15;
    double leaf_height = 2.15;
};

struct CaterpillarLayout {
    CaterpillarParams params;
    std::vector<Point> centers;
    std::vector<std::pair<int, int>> edges;  // intended caterpillar
    std::vector<int> line;                   // per circle: -1, 0, +1
};

// Circle placement for an augmented circulant C_{2n}O: spine circles for
// jump values, alternating leaves otherwise, then one mirror step doubles
// the chain so the single ring's ties realize exactly the jump set.
CaterpillarLayout build_caterpillar_layout(const CirculantGraph& augmented,
                                           const CaterpillarParams& params = {});

// Layout turned into a validated instance. Throws LayoutCollision if the
// geometry induces any link outside the intended caterpillar.
Instance build_caterpillar_scs(const CirculantGraph& augmented,
                               const CaterpillarParams& params = {});

struct ReductionReport {
    std::vector<int> tie_jumps;       // jumps realized by the ring's ties
    std::vector<int> expected_jumps;  // the augmented jump set
    int starvation_number = 0;
    int original_mis = 0;
    bool ok = false;
};

// End-to-end check of one reduction: the constructed instance must realize
// the augmented jump set through its ties and have starvation number equal
// to the original graph's maximum independent set. Throws ReductionMismatch
// if either check fails.
ReductionReport verify_reduction(const CirculantGraph& original, const Instance& scs,
                                 const SearchOptions& options = {});

// Jump set realized by a ring: each tie of length l meets robots l apart.
CirculantGraph circulant_from_ring(int length_slots, const std::vector<int>& tie_lengths);

}  // namespace scs
