#pragma once

#include <optional>
#include <vector>

#include "scs/meeting.hpp"
#include "scs/rings.hpp"

namespace scs {

struct SearchOptions {
    long long budget = 100'000'000;  // node expansions before BudgetExceeded
    bool parallel = true;            // split the top search level across threads
};

// Value of a k-resilience query. An absent value means no set of removals
// can starve k survivors.
struct ResilienceResult {
    int k = 1;
    std::optional<int> value;
    std::vector<int> starving;  // witness S_k, robot ids, sorted
    std::vector<int> removed;   // witness Q, robot ids, sorted
    bool infinite() const { return !value.has_value(); }
};

// Exact search over independent k-subsets via an availability list:
// selecting a robot discards its neighbors; the removal cost of a selection
// is everything touched but not selected. Deterministic lexicographic-least
// witness. O(k n^{k+1}).
ResilienceResult k_resilience_general(const MeetingGraph& graph, int k,
                                      const SearchOptions& options = {});

// Near-linear 1-resilience: per ring, count preventers of one representative
// robot from the distinct tie lengths plus, per crossing ring, the distinct
// crossing-distance residues modulo gcd(l, l_i) times l_i/gcd.
ResilienceResult one_resilience_fast(const Decomposition& d);
ResilienceResult one_resilience_fast(const Instance& instance);

struct MisResult {
    int size = 0;
    std::vector<int> witness;
};

// Exact maximum independent set by branch and bound with a greedy lower
// bound; deterministic witness.
MisResult max_independent_set(const std::vector<std::vector<int>>& adjacency,
                              const SearchOptions& options = {});

// Largest set of robots that can starve simultaneously: the maximum
// independent set of the meeting graph.
MisResult starvation_number(const MeetingGraph& graph, const SearchOptions& options = {});

// Single-ring summary of a tree instance: the distinct tie slot lengths L,
// t = |L|, and the circular robot numbering.
struct TieSummary {
    int n = 0;
    std::vector<int> lengths;         // sorted distinct, closed under l -> n-l
    int t = 0;
    std::vector<int> robot_of_index;  // ring position -> robot id
};

TieSummary tree_tie_summary(const Decomposition& d);
TieSummary tree_tie_summary(const Instance& instance);

// 1-resilience of a tree is t.
int tree_one_resilience(const TieSummary& summary);

// 2-resilience of a tree is 2t - f, where f is the peak frequency in the
// sum/difference multisets of L over valid separations; infinite when every
// separation is a tie length.
ResilienceResult tree_two_resilience(const TieSummary& summary);

// k >= 3: fix a starving robot at position 0, enumerate the next k-2 via the
// availability list, and close with the cheapest k-th robot from the
// frequency tables. O(t n^{k-1}).
ResilienceResult tree_k_resilience(const TieSummary& summary, int k,
                                   const SearchOptions& options = {});

struct ModeResult {
    int value = 0;            // a candidate attaining the peak multiplicity
    int frequency = 0;        // 0 when the multisets are empty
    long long plus_size = 0;  // |S_+| (sums), 0 for the pure difference mode
    long long minus_size = 0; // |S_-| (differences)
};

// Naive quadratic mode of pairwise differences of a sorted integer set.
ModeResult mode_of_differences(const std::vector<int>& values, int n);

}  // namespace scs
