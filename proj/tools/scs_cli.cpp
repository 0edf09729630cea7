#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "scs/generators.hpp"
#include "scs/json_io.hpp"
#include "scs/meeting.hpp"
#include "scs/reduction.hpp"
#include "scs/resilience.hpp"
#include "scs/simulate.hpp"

using nlohmann::json;
using namespace scs;

namespace {

struct GlobalOptions {
    long long budget = 100'000'000;
    bool serial = false;
    long long event_cap = 1'000'000;
    long long horizon_cap = 1'000'000;
};

SearchOptions search_options(const GlobalOptions& global) {
    SearchOptions options;
    options.budget = global.budget;
    options.parallel = !global.serial;
    return options;
}

json provenance(const GlobalOptions& global) {
    return json{{"angle_tolerance", kAngleTol}, {"slot_tolerance", kSlotTol},
                {"budget", global.budget},      {"event_cap", global.event_cap},
                {"horizon_cap", global.horizon_cap}, {"seed", 0}};
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

json edge_json(std::pair<int, int> edge) {
    return json::array({edge.first, edge.second});
}

json certificate_json(const Instance& instance, const PreventionCertificate& cert) {
    if (cert.kind == PreventionCertificate::Kind::SameRing)
        return json{{"kind", "same-ring"}, {"ring", cert.ring}, {"tie_slots", cert.tie_slots}};
    return json{{"kind", "cross-ring"},
                {"crossing", edge_json(instance.graph.edges[cert.crossing_id])},
                {"s", cert.s},
                {"gcd", cert.g}};
}

json rings_payload(const Decomposition& d) {
    json rings = json::array();
    for (const Ring& ring : d.system.rings) {
        json arcs = json::array();
        for (int arc_id : ring.arc_ids) {
            const DirectedArc& arc = d.system.arcs[arc_id];
            arcs.push_back({{"circle", arc.circle},
                            {"from_angle", round_sig(arc.from_angle)},
                            {"to_angle", round_sig(arc.to_angle)},
                            {"direction", arc.direction},
                            {"length_slots", round_sig(arc.length / kTwoPi)}});
        }
        rings.push_back({{"id", ring.id}, {"length_slots", ring.length_slots}, {"arcs", arcs}});
    }
    json placements = json::array();
    for (const RobotPlacement& p : d.placements)
        placements.push_back({{"robot", p.robot},
                              {"ring", p.ring},
                              {"offset_slots", round_sig(p.offset_slots)},
                              {"ring_index", p.ring_index}});
    return json{{"rings", rings}, {"placements", placements}};
}

json ties_payload(const Decomposition& d) {
    json ties = json::array();
    for (const Tie& tie : d.ties.ties)
        ties.push_back({{"crossing", edge_json(d.instance.graph.edges[tie.crossing_id])},
                        {"ring", tie.ring},
                        {"length_slots", tie.length_slots},
                        {"entry", tie.entry_is_ij ? "ij" : "ji"}});
    json distinct = json::object();
    for (int r = 0; r < (int)d.ties.distinct_per_ring.size(); ++r)
        distinct[std::to_string(r)] = d.ties.distinct_per_ring[r];
    return json{{"ties", ties}, {"distinct_per_ring", distinct}};
}

json meeting_payload(const Instance& instance, const MeetingGraph& graph) {
    json adjacency = json::array();
    for (const auto& row : graph.adjacency) adjacency.push_back(row);
    json edges = json::array();
    for (const auto& [edge, certs] : graph.certificates) {
        json list = json::array();
        for (const PreventionCertificate& cert : certs)
            list.push_back(certificate_json(instance, cert));
        edges.push_back({{"u", edge.first}, {"v", edge.second}, {"certificates", list}});
    }
    return json{{"n", graph.n}, {"adjacency", adjacency}, {"edges", edges}};
}

json resilience_payload(const Instance& instance, const MeetingGraph& graph,
                        const ResilienceResult& result, const std::string& method) {
    json payload{{"k", result.k}, {"method", method}};
    if (result.infinite()) {
        payload["value"] = "infinite";
    } else {
        payload["value"] = *result.value;
        payload["witness"] = {{"starving", result.starving}, {"removed", result.removed}};
        json certificates = json::array();
        for (int u : result.starving) {
            for (int v : result.removed) {
                auto key = std::minmax(u, v);
                auto it = graph.certificates.find({key.first, key.second});
                if (it == graph.certificates.end()) continue;
                certificates.push_back({{"starving", u},
                                        {"removed", v},
                                        {"certificate",
                                         certificate_json(instance, it->second.front())}});
            }
        }
        payload["certificates"] = certificates;
    }
    return payload;
}

json simulate_payload(const Instance& instance, const SimReport& report) {
    json events = json::array();
    for (const SimEvent& event : report.events)
        events.push_back({{"time", round_sig(event.time)},
                          {"crossing", edge_json(instance.graph.edges[event.crossing_id])},
                          {"robots", event.robots},
                          {"outcome", event.outcome == SimEvent::Outcome::Met ? "met" : "shifted"}});
    return json{{"horizon_slots", report.horizon_slots},
                {"lcm_slots", report.lcm_slots},
                {"events", events},
                {"meetings_per_robot", report.meetings_per_robot},
                {"starving", std::vector<int>(report.starving.begin(), report.starving.end())},
                {"occupancy_constant", occupancy_invariant_check(report)}};
}

void emit(const std::string& command, json payload, const GlobalOptions& global) {
    json document{{"command", command}, {"result", std::move(payload)},
                  {"provenance", provenance(global)}};
    std::cout << document.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synchronized multi-robot communication systems: rings, ties, meeting graphs, "
                 "resilience, simulation and circulant reductions"};
    app.require_subcommand(1);

    GlobalOptions global;
    if (const char* env = std::getenv("RESILIENCE_BUDGET")) {
        try {
            global.budget = std::stoll(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring unparsable RESILIENCE_BUDGET\n";
        }
    }
    app.add_option("--budget", global.budget, "Search node budget")->capture_default_str();
    app.add_flag("--serial", global.serial, "Disable the parallel search kernels");
    app.add_option("--event-cap", global.event_cap, "Simulation event cap")
        ->capture_default_str();
    app.add_option("--horizon-cap", global.horizon_cap, "Cap for the automatic horizon")
        ->capture_default_str();
    app.add_option("--angle-tol", kAngleTol, "Angle comparison tolerance (radians)")
        ->capture_default_str();
    app.add_option("--slot-tol", kSlotTol, "Slot integrality tolerance")
        ->capture_default_str();

    std::string instance_path;
    auto add_instance_arg = [&](CLI::App* cmd) {
        cmd->add_option("instance", instance_path, "Instance JSON file, or - for stdin")
            ->required();
    };

    CLI::App* cmd_validate = app.add_subcommand("validate", "Check an instance document");
    add_instance_arg(cmd_validate);
    CLI::App* cmd_rings = app.add_subcommand("rings", "Ring decomposition");
    add_instance_arg(cmd_rings);
    CLI::App* cmd_ties = app.add_subcommand("ties", "Crossing points and tie lengths");
    add_instance_arg(cmd_ties);
    CLI::App* cmd_meeting = app.add_subcommand("meeting-graph", "Starvation-prevention graph");
    add_instance_arg(cmd_meeting);

    CLI::App* cmd_resilience = app.add_subcommand("resilience", "k-resilience");
    add_instance_arg(cmd_resilience);
    int k = 1;
    std::string method = "general";
    cmd_resilience->add_option("--k", k, "Number of starving robots")->required();
    cmd_resilience->add_option("--method", method, "general, tree or fast1")
        ->check(CLI::IsMember({"general", "tree", "fast1"}))
        ->capture_default_str();

    CLI::App* cmd_starvation = app.add_subcommand("starvation", "Starvation number");
    add_instance_arg(cmd_starvation);

    CLI::App* cmd_simulate = app.add_subcommand("simulate", "Shifting-protocol simulation");
    add_instance_arg(cmd_simulate);
    std::string remove_csv;
    long long horizon = -1;
    std::string event_log;
    cmd_simulate->add_option("--remove", remove_csv, "Comma-separated robot ids to remove");
    cmd_simulate->add_option("--horizon", horizon, "Horizon in slots (default: ring lcm)");
    cmd_simulate->add_option("--event-log", event_log, "Write events as JSON lines to this file");

    std::string circulant_text;
    CLI::App* cmd_reduce = app.add_subcommand("reduce", "Circulant-to-caterpillar reduction");
    cmd_reduce->add_option("--circulant", circulant_text, "Circulant as n;d1,d2,...")->required();
    CLI::App* cmd_augment = app.add_subcommand("augment", "Clone-join augmentation");
    cmd_augment->add_option("--circulant", circulant_text, "Circulant as n;d1,d2,...")->required();
    CLI::App* cmd_mis = app.add_subcommand("mis", "Maximum independent set of a circulant");
    cmd_mis->add_option("--circulant", circulant_text, "Circulant as n;d1,d2,...")->required();

    CLI::App* cmd_gen = app.add_subcommand("gen", "Generate an instance document");
    std::string gen_kind;
    std::vector<std::string> gen_params;
    cmd_gen->add_option("kind", gen_kind, "path, cycle, grid-tree or caterpillar")->required();
    cmd_gen->add_option("params", gen_params, "Generator parameters");

    CLI11_PARSE(app, argc, argv);

    std::string command;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) command += ' ';
        command += argv[i];
    }

    try {
        if (*cmd_validate) {
            Instance instance = parse_instance_text(read_input(instance_path));
            emit(command,
                 json{{"valid", true},
                      {"n", instance.n()},
                      {"edges", (int)instance.graph.edges.size()}},
                 global);
        } else if (*cmd_rings) {
            Instance instance = parse_instance_text(read_input(instance_path));
            emit(command, rings_payload(decompose(instance)), global);
        } else if (*cmd_ties) {
            Instance instance = parse_instance_text(read_input(instance_path));
            emit(command, ties_payload(decompose(instance)), global);
        } else if (*cmd_meeting) {
            Instance instance = parse_instance_text(read_input(instance_path));
            Decomposition d = decompose(instance);
            emit(command, meeting_payload(instance, build_meeting_graph(d)), global);
        } else if (*cmd_resilience) {
            Instance instance = parse_instance_text(read_input(instance_path));
            Decomposition d = decompose(instance);
            MeetingGraph graph = build_meeting_graph(d);
            ResilienceResult result;
            if (method == "general") {
                result = k_resilience_general(graph, k, search_options(global));
            } else if (method == "fast1") {
                if (k != 1) throw InvalidParams("--method fast1 requires --k 1");
                result = one_resilience_fast(d);
            } else {
                TieSummary summary = tree_tie_summary(d);
                if (k == 1) {
                    result.k = 1;
                    result.value = tree_one_resilience(summary);
                    result.starving = {summary.robot_of_index[0]};
                    std::vector<int> q;
                    for (int l : summary.lengths)
                        q.push_back(summary.robot_of_index[l % summary.n]);
                    std::sort(q.begin(), q.end());
                    result.removed = q;
                } else if (k == 2) {
                    result = tree_two_resilience(summary);
                } else {
                    result = tree_k_resilience(summary, k, search_options(global));
                }
            }
            emit(command, resilience_payload(instance, graph, result, method), global);
        } else if (*cmd_starvation) {
            Instance instance = parse_instance_text(read_input(instance_path));
            MisResult mis = starvation_number(build_meeting_graph(instance),
                                              search_options(global));
            emit(command, json{{"value", mis.size}, {"witness", mis.witness}}, global);
        } else if (*cmd_simulate) {
            Instance instance = parse_instance_text(read_input(instance_path));
            SimConfig config;
            config.event_cap = global.event_cap;
            config.horizon_cap = global.horizon_cap;
            if (horizon >= 0) config.horizon_slots = horizon;
            if (!remove_csv.empty()) {
                std::stringstream parts(remove_csv);
                std::string token;
                while (std::getline(parts, token, ',')) {
                    if (token.empty()) continue;
                    try {
                        config.removed.insert(std::stoi(token));
                    } catch (const std::exception&) {
                        throw InvalidParams("bad robot id '" + token + "' in --remove");
                    }
                }
            }
            SimReport report = simulate(instance, config);
            if (!event_log.empty()) {
                std::ofstream log(event_log);
                if (!log) throw Error("cannot open event log '" + event_log + "'");
                for (const SimEvent& event : report.events) {
                    json line{{"time", round_sig(event.time)},
                              {"crossing", edge_json(instance.graph.edges[event.crossing_id])},
                              {"robots", event.robots},
                              {"outcome",
                               event.outcome == SimEvent::Outcome::Met ? "met" : "shifted"}};
                    log << line.dump() << "\n";
                }
            }
            emit(command, simulate_payload(instance, report), global);
        } else if (*cmd_reduce) {
            CirculantGraph original = CirculantGraph::parse(circulant_text);
            CirculantGraph augmented = knn_augmentation(original);
            Instance scs = build_caterpillar_scs(augmented);
            ReductionReport report = verify_reduction(original, scs, search_options(global));
            emit(command,
                 json{{"original", original.to_string()},
                      {"augmented", augmented.to_string()},
                      {"instance", instance_to_document(scs)},
                      {"verification",
                       {{"tie_jumps", report.tie_jumps},
                        {"expected_jumps", report.expected_jumps},
                        {"starvation_number", report.starvation_number},
                        {"original_mis", report.original_mis},
                        {"ok", report.ok}}}},
                 global);
        } else if (*cmd_augment) {
            CirculantGraph original = CirculantGraph::parse(circulant_text);
            emit(command,
                 json{{"original", original.to_string()},
                      {"augmented", knn_augmentation(original).to_string()}},
                 global);
        } else if (*cmd_mis) {
            CirculantGraph graph = CirculantGraph::parse(circulant_text);
            MisResult mis = circulant_mis(graph, search_options(global));
            emit(command,
                 json{{"circulant", graph.to_string()},
                      {"value", mis.size},
                      {"witness", mis.witness}},
                 global);
        } else if (*cmd_gen) {
            GeneratedInstance generated = generate(gen_kind, gen_params);
            generated.instantiate();  // never emit a document that fails validation
            std::cout << generated_to_document(generated).dump(2) << "\n";
        }
    } catch (const BudgetError& e) {
        std::cerr << json{{"error", {{"type", "budget"}, {"message", e.what()}}}}.dump() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << json{{"error", {{"type", "input"}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"type", "internal"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return 1;
    }
    return 0;
}
