#include "scs/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace scs {

namespace {

struct Passage {
    double offset = 0.0;
    int crossing_id = 0;
    bool via_ij = true;
};

struct RobotState {
    bool alive = true;
    int ring = 0;
    double offset = 0.0;
    double state_time = 0.0;
};

struct NextArrival {
    double time = std::numeric_limits<double>::infinity();
    Passage passage;
};

// First passage strictly ahead of the robot; a robot sitting exactly on a
// passage reaches it again after a full lap.
NextArrival next_arrival(const std::vector<Passage>& passages, const RobotState& robot,
                         int ring_slots) {
    NextArrival next;
    if (passages.empty()) return next;
    double best = std::numeric_limits<double>::infinity();
    for (const Passage& p : passages) {
        double dist = std::fmod(p.offset - robot.offset, (double)ring_slots);
        if (dist < 0) dist += ring_slots;
        if (dist <= kSlotTol) dist += ring_slots;  // not an arrival, we start here
        if (dist < best) {
            best = dist;
            next.passage = p;
        }
    }
    next.time = robot.state_time + best;
    return next;
}

}  // namespace

SimReport simulate(const Decomposition& d, const SimConfig& config) {
    const RingSystem& system = d.system;
    const int n = d.instance.n();
    for (int r : config.removed)
        if (r < 0 || r >= n) throw ValidationError("removed robot id out of range");
    if ((int)config.removed.size() >= n)
        throw ValidationError("removed set must leave at least one robot");

    SimReport report;
    report.removed = config.removed;
    report.lcm_slots = system.slot_lcm();
    report.ring_count = (int)system.rings.size();
    if (config.horizon_slots) {
        if (*config.horizon_slots < 1) throw ValidationError("horizon must be positive");
        report.horizon_slots = *config.horizon_slots;
    } else {
        if (report.lcm_slots > config.horizon_cap)
            throw HorizonOverflow("ring period " + std::to_string(report.lcm_slots) +
                                  " slots exceeds the horizon cap " +
                                  std::to_string(config.horizon_cap));
        report.horizon_slots = report.lcm_slots;
    }

    std::vector<std::vector<Passage>> ring_passages(system.rings.size());
    for (const CrossingPoint& crossing : system.crossings) {
        ring_passages[crossing.dir_ij.ring].push_back(
            {crossing.dir_ij.offset_slots, crossing.id, true});
        ring_passages[crossing.dir_ji.ring].push_back(
            {crossing.dir_ji.offset_slots, crossing.id, false});
    }

    std::vector<RobotState> robots(n);
    for (int u = 0; u < n; ++u) {
        robots[u].alive = config.removed.count(u) == 0;
        robots[u].ring = d.placements[u].ring;
        robots[u].offset = d.placements[u].offset_slots;
    }

    report.meetings_per_robot.assign(n, 0);
    auto occupancy = [&]() {
        std::vector<int> counts(system.rings.size(), 0);
        for (const RobotState& r : robots)
            if (r.alive) counts[r.ring]++;
        return counts;
    };
    report.occupancy_trace.push_back({0.0, occupancy()});

    // Robots placed exactly on a crossing boundary meet (or shift) at t=0.
    // The placement already encodes the outcome state, so only the event is
    // recorded; skipping it would push the pair's first meeting to t=lcm,
    // one tick past the horizon.
    {
        std::map<int, std::vector<std::pair<int, bool>>> at_zero;  // crossing -> (robot, via)
        for (int u = 0; u < n; ++u) {
            if (!robots[u].alive) continue;
            const int l = system.rings[robots[u].ring].length_slots;
            for (const Passage& p : ring_passages[robots[u].ring]) {
                double dist = std::fmod(p.offset - robots[u].offset, (double)l);
                if (dist < 0) dist += l;
                if (dist <= kSlotTol || dist >= l - kSlotTol)
                    at_zero[p.crossing_id].push_back({u, p.via_ij});
            }
        }
        for (auto& [crossing_id, group] : at_zero) {
            SimEvent event;
            event.time = 0.0;
            event.crossing_id = crossing_id;
            if (group.size() == 2) {
                if (group[0].second == group[1].second)
                    throw Error("two robots share one crossing direction at t=0");
                event.outcome = SimEvent::Outcome::Met;
                for (auto& [robot, via] : group) {
                    event.robots.push_back(robot);
                    report.meetings_per_robot[robot]++;
                }
            } else if (group.size() == 1) {
                event.outcome = SimEvent::Outcome::Shifted;
                event.robots.push_back(group[0].first);
            } else {
                throw Error("more than two robots at one crossing at t=0");
            }
            std::sort(event.robots.begin(), event.robots.end());
            report.events.push_back(event);
        }
    }

    const double horizon = (double)report.horizon_slots;
    while (true) {
        double batch_time = std::numeric_limits<double>::infinity();
        std::vector<std::pair<int, NextArrival>> due;  // robot, arrival
        for (int u = 0; u < n; ++u) {
            if (!robots[u].alive) continue;
            NextArrival arrival =
                next_arrival(ring_passages[robots[u].ring], robots[u],
                             system.rings[robots[u].ring].length_slots);
            if (arrival.time < batch_time - kSlotTol) {
                batch_time = arrival.time;
                due.clear();
            }
            if (arrival.time <= batch_time + kSlotTol) due.push_back({u, arrival});
        }
        if (due.empty() || batch_time >= horizon - kSlotTol) break;

        std::map<int, std::vector<std::pair<int, NextArrival>>> by_crossing;
        for (auto& entry : due) by_crossing[entry.second.passage.crossing_id].push_back(entry);

        for (auto& [crossing_id, group] : by_crossing) {
            if ((long long)report.events.size() >= config.event_cap)
                throw EventCapExceeded("simulation exceeded " +
                                       std::to_string(config.event_cap) + " events");
            const CrossingPoint& crossing = system.crossings[crossing_id];
            SimEvent event;
            event.time = batch_time;
            event.crossing_id = crossing_id;
            if (group.size() == 2) {
                // Co-arrival: both keep their trajectory, which continues on
                // the other ring of the crossing.
                if (group[0].second.passage.via_ij == group[1].second.passage.via_ij)
                    throw Error("two robots arrived via the same crossing direction");
                event.outcome = SimEvent::Outcome::Met;
                for (auto& [robot, arrival] : group) {
                    const CrossingTraversal& continuation =
                        arrival.passage.via_ij ? crossing.dir_ji : crossing.dir_ij;
                    robots[robot].ring = continuation.ring;
                    robots[robot].offset = continuation.offset_slots;
                    robots[robot].state_time = batch_time;
                    event.robots.push_back(robot);
                    report.meetings_per_robot[robot]++;
                }
            } else if (group.size() == 1) {
                // Nobody on the other side: shift trajectory, stay on the ring.
                auto& [robot, arrival] = group[0];
                event.outcome = SimEvent::Outcome::Shifted;
                robots[robot].ring = arrival.passage.via_ij ? crossing.dir_ij.ring
                                                            : crossing.dir_ji.ring;
                robots[robot].offset = arrival.passage.offset;
                robots[robot].state_time = batch_time;
                event.robots.push_back(robot);
            } else {
                throw Error("more than two arrivals at one crossing");
            }
            std::sort(event.robots.begin(), event.robots.end());
            report.events.push_back(event);
        }
        report.occupancy_trace.push_back({batch_time, occupancy()});
    }

    for (int u = 0; u < n; ++u)
        if (robots[u].alive && report.meetings_per_robot[u] == 0) report.starving.insert(u);
    return report;
}

SimReport simulate(const Instance& instance, const SimConfig& config) {
    return simulate(decompose(instance), config);
}

std::set<int> detect_starving(const SimReport& report) {
    if (report.horizon_slots < report.lcm_slots)
        throw InsufficientHorizon("horizon " + std::to_string(report.horizon_slots) +
                                  " slots is below the ring period " +
                                  std::to_string(report.lcm_slots));
    const double period = (double)report.lcm_slots;
    std::vector<double> last_met;
    std::vector<int> met_in_period;
    std::set<int> live;
    {
        int n = (int)report.meetings_per_robot.size();
        last_met.assign(n, -1.0);
        met_in_period.assign(n, 0);
        for (int u = 0; u < n; ++u)
            if (!report.removed.count(u)) live.insert(u);
    }
    for (const SimEvent& event : report.events) {
        if (event.outcome != SimEvent::Outcome::Met) continue;
        for (int u : event.robots) {
            last_met[u] = event.time;
            if (event.time < period - kSlotTol) met_in_period[u]++;
        }
    }
    // Meetings recur with the ring period; a robot that met early but fell
    // silent for a whole trailing period indicates an engine defect.
    double window_start = (double)report.horizon_slots - period;
    for (int u : live)
        if (met_in_period[u] > 0 && last_met[u] < window_start - kSlotTol)
            throw Error("robot " + std::to_string(u) +
                        " met only in a strict prefix of the period");
    std::set<int> starving;
    for (int u : live)
        if (met_in_period[u] == 0) starving.insert(u);
    return starving;
}

bool occupancy_invariant_check(const SimReport& report) {
    if (report.occupancy_trace.empty()) return true;
    const auto& baseline = report.occupancy_trace.front().second;
    for (const auto& [time, counts] : report.occupancy_trace)
        if (counts != baseline) return false;
    return true;
}

}  // namespace scs
