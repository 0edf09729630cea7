// Timing comparison of the serial and OpenMP resilience search kernels on
// comb-tree instances. The parallel kernels must return identical results.

#include <chrono>
#include <cstdio>
#include <string>

#include "scs/generators.hpp"
#include "scs/meeting.hpp"
#include "scs/resilience.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace scs;

namespace {

template <typename F>
double run_ms(F&& work) {
    auto start = std::chrono::steady_clock::now();
    work();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int a = argc > 1 ? std::stoi(argv[1]) : 10;
    int k = argc > 2 ? std::stoi(argv[2]) : 4;
    int reps = argc > 3 ? std::stoi(argv[3]) : 3;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    Instance instance = generate_grid_tree(a).instantiate();
    Decomposition d = decompose(instance);
    MeetingGraph graph = build_meeting_graph(d);
    TieSummary summary = tree_tie_summary(d);
    std::printf("instance: grid-tree(%d), %d robots, %d distinct tie lengths, k=%d\n", a,
                instance.n(), summary.t, k);

    SearchOptions serial;
    serial.parallel = false;
    SearchOptions parallel;
    parallel.parallel = true;

    ResilienceResult serial_general, parallel_general;
    ResilienceResult serial_tree, parallel_tree;

    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial ms", "omp ms", "speedup");
    for (int rep = 0; rep < reps; ++rep) {
        double ts = run_ms([&] { serial_general = k_resilience_general(graph, k, serial); });
        double tp = run_ms([&] { parallel_general = k_resilience_general(graph, k, parallel); });
        std::printf("%-28s %10.2f %10.2f %7.2fx\n", "k_resilience_general", ts, tp, ts / tp);
    }
    for (int rep = 0; rep < reps; ++rep) {
        double ts = run_ms([&] { serial_tree = tree_k_resilience(summary, k, serial); });
        double tp = run_ms([&] { parallel_tree = tree_k_resilience(summary, k, parallel); });
        std::printf("%-28s %10.2f %10.2f %7.2fx\n", "tree_k_resilience", ts, tp, ts / tp);
    }

    bool consistent = serial_general.value == parallel_general.value &&
                      serial_general.starving == parallel_general.starving &&
                      serial_tree.value == parallel_tree.value &&
                      serial_tree.starving == parallel_tree.starving &&
                      serial_general.value == serial_tree.value;
    auto show = [](const ResilienceResult& r) {
        return r.infinite() ? std::string("infinite") : std::to_string(*r.value);
    };
    std::printf("results: general=%s tree=%s consistent=%s\n", show(serial_general).c_str(),
                show(serial_tree).c_str(), consistent ? "yes" : "NO");
    return consistent ? 0 : 1;
}
