#include "scs/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace scs {

using nlohmann::json;

double round_sig(double value) {
    if (value == 0.0 || !std::isfinite(value)) return value;
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return std::strtod(buffer, nullptr);
}

namespace {

int require_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

double require_number(const json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
    return j.get<double>();
}

// Per-id maps arrive as JSON objects keyed by the id's decimal string.
std::vector<double> id_keyed_doubles(const json& obj, int n, const char* what) {
    if (!obj.is_object()) throw ParseError(std::string(what) + " must be an object keyed by id");
    std::vector<double> values(n, 0.0);
    std::vector<char> seen(n, 0);
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        int id;
        try {
            size_t used = 0;
            id = std::stoi(it.key(), &used);
            if (used != it.key().size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ParseError(std::string(what) + " has a non-integer key '" + it.key() + "'");
        }
        if (id < 0 || id >= n)
            throw ValidationError(std::string(what) + " references unknown circle " + it.key());
        values[id] = require_number(it.value(), what);
        seen[id] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (!seen[i])
            throw ValidationError(std::string(what) + " is missing circle " + std::to_string(i));
    return values;
}

}  // namespace

Instance parse_instance(const json& document) {
    if (!document.is_object()) throw ParseError("instance document must be a JSON object");
    if (!document.contains("epsilon")) throw ParseError("missing field 'epsilon'");
    if (!document.contains("circles")) throw ParseError("missing field 'circles'");
    double epsilon = require_number(document["epsilon"], "epsilon");

    const json& circles = document["circles"];
    if (!circles.is_array() || circles.empty())
        throw ParseError("'circles' must be a non-empty array");
    std::vector<Point> centers(circles.size());
    std::vector<char> seen(circles.size(), 0);
    for (const json& c : circles) {
        if (!c.is_object()) throw ParseError("each circle must be an object");
        int id = require_int(c.value("id", json()), "circle id");
        if (id < 0 || id >= (int)circles.size())
            throw ValidationError("circle ids must be 0..n-1, got " + std::to_string(id));
        if (seen[id]) throw ValidationError("duplicate circle id " + std::to_string(id));
        seen[id] = 1;
        centers[id] = {require_number(c.value("x", json()), "circle x"),
                       require_number(c.value("y", json()), "circle y")};
    }

    std::optional<std::vector<std::pair<int, int>>> edges;
    if (document.contains("edges") && !document["edges"].is_null()) {
        if (!document["edges"].is_array()) throw ParseError("'edges' must be an array of pairs");
        std::vector<std::pair<int, int>> list;
        for (const json& e : document["edges"]) {
            if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair");
            list.push_back({require_int(e[0], "edge endpoint"), require_int(e[1], "edge endpoint")});
        }
        edges = std::move(list);
    }

    std::optional<std::vector<int>> directions;
    if (document.contains("directions") && !document["directions"].is_null()) {
        auto raw = id_keyed_doubles(document["directions"], (int)centers.size(), "directions");
        std::vector<int> dirs;
        for (double v : raw) {
            if (v != 1.0 && v != -1.0)
                throw ValidationError("directions must be +1 or -1");
            dirs.push_back((int)v);
        }
        directions = std::move(dirs);
    }

    std::optional<std::vector<double>> starts;
    if (document.contains("starts") && !document["starts"].is_null())
        starts = id_keyed_doubles(document["starts"], (int)centers.size(), "starts");

    return make_instance(epsilon, centers, edges, directions, starts);
}

Instance parse_instance_text(const std::string& text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return parse_instance(document);
}

nlohmann::json instance_to_document(const Instance& instance) {
    json document;
    document["epsilon"] = round_sig(instance.epsilon);
    json circles = json::array();
    for (const Trajectory& t : instance.trajectories)
        circles.push_back({{"id", t.id}, {"x", round_sig(t.center.x)}, {"y", round_sig(t.center.y)}});
    document["circles"] = circles;
    json edges = json::array();
    for (auto [i, j] : instance.graph.edges) edges.push_back({i, j});
    document["edges"] = edges;
    json directions = json::object();
    json starts = json::object();
    for (int i = 0; i < instance.n(); ++i) {
        directions[std::to_string(i)] = instance.schedule.direction[i];
        starts[std::to_string(i)] = round_sig(instance.schedule.start[i]);
    }
    document["directions"] = directions;
    document["starts"] = starts;
    return document;
}

nlohmann::json generated_to_document(const GeneratedInstance& generated) {
    json document;
    document["epsilon"] = round_sig(generated.epsilon);
    json circles = json::array();
    for (int i = 0; i < (int)generated.centers.size(); ++i)
        circles.push_back({{"id", i},
                           {"x", round_sig(generated.centers[i].x)},
                           {"y", round_sig(generated.centers[i].y)}});
    document["circles"] = circles;
    if (generated.edges) {
        json edges = json::array();
        for (auto [i, j] : *generated.edges) edges.push_back({i, j});
        document["edges"] = edges;
    }
    return document;
}

}  // namespace scs
