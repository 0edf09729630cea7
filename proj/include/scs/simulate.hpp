#pragma once

#include <optional>
#include <set>
#include <vector>

#include "scs/rings.hpp"

namespace scs {

struct SimConfig {
    std::set<int> removed;
    std::optional<long long> horizon_slots;  // absent = one full period (ring lcm)
    long long event_cap = 1'000'000;
    long long horizon_cap = 1'000'000;
};

struct SimEvent {
    enum class Outcome { Met, Shifted };
    double time = 0.0;  // slots
    int crossing_id = 0;
    std::vector<int> robots;  // one (shifted) or two (met)
    Outcome outcome = Outcome::Shifted;
};

struct SimReport {
    std::vector<SimEvent> events;
    std::vector<int> meetings_per_robot;  // zero for removed robots
    std::set<int> removed;
    std::set<int> starving;  // live robots with no meeting within the horizon
    long long horizon_slots = 0;
    long long lcm_slots = 0;
    int ring_count = 0;
    // Per-ring live robot counts, recorded after every event batch.
    std::vector<std::pair<double, std::vector<int>>> occupancy_trace;
};

// Event-driven run of the shifting protocol: live robots advance along
// rings; co-arrivals at a crossing swap the two robots' rings (each keeps
// its trajectory), lone arrivals shift trajectory and keep the ring.
SimReport simulate(const Decomposition& d, const SimConfig& config = {});
SimReport simulate(const Instance& instance, const SimConfig& config = {});

// Permanently starving robots: those with no meeting during one full period.
// Requires the report horizon to cover the ring lcm.
std::set<int> detect_starving(const SimReport& report);

// True iff per-ring live robot counts never change.
bool occupancy_invariant_check(const SimReport& report);

}  // namespace scs
