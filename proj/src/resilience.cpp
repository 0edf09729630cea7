#include "scs/resilience.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "scs/bitset.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace scs {

namespace {

std::vector<DynBitset> neighbor_masks(const MeetingGraph& graph) {
    std::vector<DynBitset> masks(graph.n, DynBitset(graph.n));
    for (int u = 0; u < graph.n; ++u)
        for (int v : graph.adjacency[u]) masks[u].set(v);
    return masks;
}

struct SearchBest {
    bool found = false;
    int cost = 0;
    std::vector<int> starving;
    std::vector<int> removed;

    void offer(int new_cost, const std::vector<int>& sk, std::vector<int>&& q) {
        if (found && new_cost >= cost) return;  // strict: keeps the lex-least optimum
        found = true;
        cost = new_cost;
        starving = sk;
        removed = std::move(q);
    }

    void merge(const SearchBest& other) {
        if (!other.found) return;
        if (!found || other.cost < cost) *this = other;
    }
};

struct BudgetGate {
    std::atomic<long long> used{0};
    long long cap;
    std::atomic<bool> exceeded{false};

    explicit BudgetGate(long long c) : cap(c) {}
    bool spend() {
        if (used.fetch_add(1, std::memory_order_relaxed) >= cap) {
            exceeded.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }
    bool dead() const { return exceeded.load(std::memory_order_relaxed); }
};

void general_search(const std::vector<DynBitset>& nbr, int n, int k, int from, int depth,
                    const DynBitset& available, std::vector<int>& chosen, BudgetGate& budget,
                    SearchBest& best) {
    if (budget.dead()) return;
    if (depth == k) {
        // Removals: everything touched but not selected.
        std::vector<int> removed;
        for (int v = 0; v < n; ++v)
            if (!available.test(v) && !std::binary_search(chosen.begin(), chosen.end(), v))
                removed.push_back(v);
        best.offer(n - k - available.count(), chosen, std::move(removed));
        return;
    }
    for (int c = available.next(from); c >= 0; c = available.next(c + 1)) {
        if (!budget.spend()) return;
        DynBitset next = available;
        next.reset(c);
        next.remove(nbr[c]);
        chosen.push_back(c);
        general_search(nbr, n, k, c + 1, depth + 1, next, chosen, budget, best);
        chosen.pop_back();
        if (budget.dead()) return;
    }
}

ResilienceResult finish(int k, const SearchBest& best) {
    ResilienceResult result;
    result.k = k;
    if (best.found) {
        result.value = best.cost;
        result.starving = best.starving;
        result.removed = best.removed;
        std::sort(result.starving.begin(), result.starving.end());
        std::sort(result.removed.begin(), result.removed.end());
    }
    return result;
}

}  // namespace

ResilienceResult k_resilience_general(const MeetingGraph& graph, int k,
                                      const SearchOptions& options) {
    if (k < 1) throw InvalidParams("k must be at least 1");
    const int n = graph.n;
    if (k > n) return finish(k, {});
    auto nbr = neighbor_masks(graph);
    BudgetGate budget(options.budget);
    const DynBitset all = DynBitset::full(n);

    SearchBest best;
#ifdef _OPENMP
    if (options.parallel && n > 1) {
        std::vector<SearchBest> branch(n);
#pragma omp parallel for schedule(dynamic, 1)
        for (int c = 0; c < n; ++c) {
            if (budget.dead()) continue;
            if (!budget.spend()) continue;
            DynBitset next = all;
            next.reset(c);
            next.remove(nbr[c]);
            std::vector<int> chosen{c};
            general_search(nbr, n, k, c + 1, 1, next, chosen, budget, branch[c]);
        }
        for (int c = 0; c < n; ++c) best.merge(branch[c]);
    } else
#endif
    {
        std::vector<int> chosen;
        general_search(nbr, n, k, 0, 0, all, chosen, budget, best);
    }

    if (budget.dead())
        throw BudgetExceeded("k-resilience search exceeded " + std::to_string(options.budget) +
                             " expansions");
    return finish(k, best);
}

MisResult max_independent_set(const std::vector<std::vector<int>>& adjacency,
                              const SearchOptions& options) {
    const int n = (int)adjacency.size();
    // Static order: high degree first so early branching kills dense parts.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return adjacency[a].size() > adjacency[b].size();
    });
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;

    std::vector<DynBitset> nbr(n, DynBitset(n));
    for (int u = 0; u < n; ++u)
        for (int v : adjacency[u]) nbr[rank[u]].set(rank[v]);

    // Greedy lower bound: sparse vertices first.
    int best = 0;
    std::vector<int> best_set;
    {
        DynBitset taken(n);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            bool ok = true;
            for (int v : adjacency[*it])
                if (taken.test(rank[v])) ok = false;
            if (ok) {
                taken.set(rank[*it]);
                best_set.push_back(rank[*it]);
            }
        }
        best = (int)best_set.size();
        std::sort(best_set.begin(), best_set.end());
    }

    BudgetGate budget(options.budget);
    std::vector<int> current;
    auto rec = [&](auto&& self, DynBitset candidates, int count) -> void {
        if (budget.dead() || !budget.spend()) return;
        if (candidates.empty()) {
            if (count > best) {
                best = count;
                best_set = current;
            }
            return;
        }
        if (count + candidates.count() <= best) return;
        int v = candidates.next(0);
        DynBitset with = candidates;
        with.reset(v);
        with.remove(nbr[v]);
        current.push_back(v);
        self(self, with, count + 1);
        current.pop_back();
        DynBitset without = candidates;
        without.reset(v);
        self(self, without, count);
    };
    rec(rec, DynBitset::full(n), 0);
    if (budget.dead())
        throw BudgetExceeded("independent-set search exceeded " + std::to_string(options.budget) +
                             " expansions");

    MisResult result;
    result.size = best;
    for (int r : best_set) result.witness.push_back(order[r]);
    std::sort(result.witness.begin(), result.witness.end());
    return result;
}

MisResult starvation_number(const MeetingGraph& graph, const SearchOptions& options) {
    return max_independent_set(graph.adjacency, options);
}

namespace {

// Distinct residues of real-valued distances modulo g, with circular
// tolerance (a residue just below g wraps onto 0).
int distinct_residues(std::vector<double> distances, long long g) {
    for (double& d : distances) {
        d = std::fmod(d, (double)g);
        if (d >= (double)g - kSlotTol) d = 0.0;
    }
    std::sort(distances.begin(), distances.end());
    int count = 0;
    for (size_t i = 0; i < distances.size(); ++i)
        if (i == 0 || distances[i] - distances[i - 1] > kSlotTol) ++count;
    return count;
}

}  // namespace

ResilienceResult one_resilience_fast(const Decomposition& d) {
    const auto& system = d.system;
    long long best_rho = -1;
    int best_ring = -1;

    for (const Ring& ring : system.rings) {
        const int u = d.ring_robots[ring.id][0];
        long long rho = (long long)d.ties.distinct_per_ring[ring.id].size();

        // The robots of another ring matched through a crossing c form one
        // residue class mod gcd: those at ring offset (p_c - d_c(u)) mod gcd,
        // where p_c is the crossing's offset on the other ring. Crossings
        // with equal keys match the same class, so distinct keys count the
        // union exactly.
        std::map<int, std::vector<double>> class_keys;  // other ring -> keys
        for (const CrossingPoint& crossing : system.crossings) {
            if (crossing.self_crossing()) continue;
            bool ij_here = crossing.dir_ij.ring == ring.id;
            bool ji_here = crossing.dir_ji.ring == ring.id;
            if (!ij_here && !ji_here) continue;
            int other = ij_here ? crossing.dir_ji.ring : crossing.dir_ij.ring;
            double du = distance_to_crossing(system, d.placements[u], crossing, ij_here);
            double p_other =
                ij_here ? crossing.dir_ji.offset_slots : crossing.dir_ij.offset_slots;
            long long g = std::gcd((long long)ring.length_slots,
                                   (long long)system.rings[other].length_slots);
            double key = std::fmod(p_other - du, (double)g);
            if (key < 0) key += (double)g;
            class_keys[other].push_back(key);
        }
        for (auto& [other, keys] : class_keys) {
            long long g = std::gcd((long long)ring.length_slots,
                                   (long long)system.rings[other].length_slots);
            rho += (long long)distinct_residues(keys, g) * (system.rings[other].length_slots / g);
        }
        if (best_ring < 0 || rho < best_rho) {
            best_rho = rho;
            best_ring = ring.id;
        }
    }

    // Witness: the representative of the cheapest ring and its preventers,
    // rebuilt locally from ties and crossings.
    const int u = d.ring_robots[best_ring][0];
    const Ring& ring = system.rings[best_ring];
    std::set<int> preventers;
    for (int l : d.ties.distinct_per_ring[best_ring])
        preventers.insert(
            d.ring_robots[best_ring][(d.placements[u].ring_index + l) % ring.length_slots]);
    for (const CrossingPoint& crossing : system.crossings) {
        if (crossing.self_crossing()) continue;
        bool ij_here = crossing.dir_ij.ring == best_ring;
        bool ji_here = crossing.dir_ji.ring == best_ring;
        if (!ij_here && !ji_here) continue;
        int other = ij_here ? crossing.dir_ji.ring : crossing.dir_ij.ring;
        long long g =
            std::gcd((long long)ring.length_slots, (long long)system.rings[other].length_slots);
        double du = distance_to_crossing(system, d.placements[u], crossing, ij_here);
        for (int v : d.ring_robots[other]) {
            double dv = distance_to_crossing(system, d.placements[v], crossing, !ij_here);
            double diff = du - dv;
            long long s = std::llround(diff);
            if (std::abs(diff - (double)s) > kSlotTol)
                throw NonIntegralOffset("arrival offset between rings is not integral");
            if (s % g == 0) preventers.insert(v);
        }
    }

    ResilienceResult result;
    result.k = 1;
    result.value = (int)best_rho;
    result.starving = {u};
    result.removed.assign(preventers.begin(), preventers.end());
    return result;
}

ResilienceResult one_resilience_fast(const Instance& instance) {
    return one_resilience_fast(decompose(instance));
}

TieSummary tree_tie_summary(const Decomposition& d) {
    if (!d.instance.graph.is_tree())
        throw NotATree("instance communication graph is not a tree");
    if (d.system.rings.size() != 1)
        throw NotATree("tree instance did not decompose to a single ring");
    TieSummary summary;
    summary.n = d.instance.n();
    summary.lengths = d.ties.distinct_per_ring[0];
    summary.t = (int)summary.lengths.size();
    summary.robot_of_index = d.ring_robots[0];
    return summary;
}

TieSummary tree_tie_summary(const Instance& instance) {
    return tree_tie_summary(decompose(instance));
}

int tree_one_resilience(const TieSummary& summary) {
    return summary.t;
}

namespace {

bool is_tie_length(const TieSummary& summary, int d) {
    return std::binary_search(summary.lengths.begin(), summary.lengths.end(), d);
}

std::vector<DynBitset> position_neighbors(const TieSummary& summary) {
    std::vector<DynBitset> nbr(summary.n, DynBitset(summary.n));
    for (int p = 0; p < summary.n; ++p) {
        for (int l : summary.lengths) {
            nbr[p].set((p + l) % summary.n);
            nbr[p].set(((p - l) % summary.n + summary.n) % summary.n);
        }
    }
    return nbr;
}

std::vector<int> positions_to_robots(const TieSummary& summary, const std::vector<int>& positions) {
    std::vector<int> out;
    for (int p : positions) out.push_back(summary.robot_of_index[p]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ResilienceResult tree_two_resilience(const TieSummary& summary) {
    const int n = summary.n;
    const auto& L = summary.lengths;
    const int t = summary.t;
    ResilienceResult result;
    result.k = 2;

    int smallest_valid = -1;
    for (int d = 1; d < n && smallest_valid < 0; ++d)
        if (!is_tie_length(summary, d)) smallest_valid = d;
    if (smallest_valid < 0) return result;  // every separation meets: infinite

    // Preventers shared by positions 0 and d: sums over all ordered pairs (a
    // tie may pair with itself), positive differences over ordered pairs.
    std::vector<long long> count(n, 0);
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < t; ++j) {
            int sum = L[i] + L[j];
            if (sum < n && !is_tie_length(summary, sum)) count[sum]++;
            int diff = L[i] - L[j];
            if (diff > 0 && !is_tie_length(summary, diff)) count[diff]++;
        }
    }
    long long f = 0;
    int separation = smallest_valid;
    for (int v = 1; v < n; ++v) {
        if (count[v] > f) {
            f = count[v];
            separation = v;
        }
    }

    result.value = (int)(2 * t - f);
    result.starving = positions_to_robots(summary, {0, separation});
    std::set<int> q;
    for (int l : L) {
        q.insert(l % n);
        q.insert((separation + l) % n);
    }
    q.erase(0);
    q.erase(separation);
    result.removed = positions_to_robots(summary, {q.begin(), q.end()});
    return result;
}

namespace {

struct TreeEval {
    const TieSummary& summary;
    const std::vector<DynBitset>& nbr;

    // Close the selection with the cheapest k-th robot from the availability
    // list: the one most of whose preventers were already paid for.
    void close(const std::vector<int>& selected, const DynBitset& available,
               SearchBest& best) const {
        const int n = summary.n;
        if (available.empty()) return;
        DynBitset selected_mask(n);
        for (int p : selected) selected_mask.set(p);
        std::vector<int> in_F;
        for (int p = 0; p < n; ++p)
            if (!available.test(p) && !selected_mask.test(p)) in_F.push_back(p);

        std::vector<long long> count(n, 0);
        for (int fi : in_F) {
            for (int l : summary.lengths) {
                int sum = fi + l;
                if (sum < n && available.test(sum)) count[sum]++;
                int diff = fi - l;
                if (diff > 0 && available.test(diff)) count[diff]++;
            }
        }
        long long peak = -1;
        int vstar = -1;
        available.for_each([&](int v) {
            if (count[v] > peak) {
                peak = count[v];
                vstar = v;
            }
        });
        long long cost = (long long)in_F.size() + summary.t - peak;

        std::vector<int> sk = selected;
        sk.push_back(vstar);
        std::sort(sk.begin(), sk.end());
        std::set<int> q(in_F.begin(), in_F.end());
        nbr[vstar].for_each([&](int w) {
            if (available.test(w)) q.insert(w);
        });
        best.offer((int)cost, sk, std::vector<int>(q.begin(), q.end()));
    }

    void search(int from, int depth, int target, const DynBitset& available,
                std::vector<int>& selected, BudgetGate& budget, SearchBest& best) const {
        if (budget.dead()) return;
        if (depth == target) {
            close(selected, available, best);
            return;
        }
        for (int c = available.next(from); c >= 0; c = available.next(c + 1)) {
            if (!budget.spend()) return;
            DynBitset next = available;
            next.reset(c);
            next.remove(nbr[c]);
            selected.push_back(c);
            search(c + 1, depth + 1, target, next, selected, budget, best);
            selected.pop_back();
            if (budget.dead()) return;
        }
    }
};

}  // namespace

ResilienceResult tree_k_resilience(const TieSummary& summary, int k,
                                   const SearchOptions& options) {
    if (k < 3) throw InvalidParams("tree_k_resilience handles k >= 3");
    const int n = summary.n;
    ResilienceResult result;
    result.k = k;
    if (k > n) return result;

    auto nbr = position_neighbors(summary);
    // One starving robot is pinned at position 0; the circulant numbering is
    // rotation-invariant so this loses nothing.
    DynBitset base = DynBitset::full(n);
    base.reset(0);
    base.remove(nbr[0]);

    TreeEval eval{summary, nbr};
    BudgetGate budget(options.budget);
    SearchBest best;

#ifdef _OPENMP
    if (options.parallel && n > 1) {
        std::vector<SearchBest> branch(n);
#pragma omp parallel for schedule(dynamic, 1)
        for (int c = 1; c < n; ++c) {
            if (!base.test(c) || budget.dead()) continue;
            if (!budget.spend()) continue;
            DynBitset next = base;
            next.reset(c);
            next.remove(nbr[c]);
            std::vector<int> selected{0, c};
            eval.search(c + 1, 2, k - 1, next, selected, budget, branch[c]);
        }
        for (int c = 1; c < n; ++c) best.merge(branch[c]);
    } else
#endif
    {
        std::vector<int> selected{0};
        eval.search(1, 1, k - 1, base, selected, budget, best);
    }

    if (budget.dead())
        throw BudgetExceeded("tree k-resilience search exceeded " +
                             std::to_string(options.budget) + " expansions");
    if (!best.found) return result;
    result.value = best.cost;
    result.starving = positions_to_robots(summary, best.starving);
    result.removed = positions_to_robots(summary, best.removed);
    return result;
}

ModeResult mode_of_differences(const std::vector<int>& values, int n) {
    for (size_t i = 0; i < values.size(); ++i) {
        if (values[i] <= 0 || values[i] >= n)
            throw InvalidParams("values must lie strictly between 0 and n");
        if (i > 0 && values[i] <= values[i - 1])
            throw InvalidParams("values must be strictly increasing");
    }
    ModeResult mode;
    std::vector<long long> count(n, 0);
    for (size_t i = 0; i < values.size(); ++i)
        for (size_t j = 0; j < i; ++j) count[values[i] - values[j]]++;
    mode.minus_size = (long long)values.size() * ((long long)values.size() - 1) / 2;
    for (int d = 1; d < n; ++d) {
        if (count[d] > mode.frequency) {
            mode.frequency = (int)count[d];
            mode.value = d;
        }
    }
    return mode;
}

}  // namespace scs
