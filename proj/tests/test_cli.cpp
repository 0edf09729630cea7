// End-to-end checks of the command-line tool. The binary path comes from the
// SCS_CLI environment variable set by CTest.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_path() {
    const char* path = std::getenv("SCS_CLI");
    REQUIRE_MESSAGE(path != nullptr, "SCS_CLI must point at the scs binary");
    return path;
}

std::string scratch_file(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("scs_" + name)).string();
}

CliResult run_cli(const std::string& args) {
    std::string command = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buffer[4096];
    while (size_t got = fread(buffer, 1, sizeof(buffer), pipe)) result.output.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WEXITSTATUS(status);
    return result;
}

std::string write_instance(const std::string& name, const std::string& gen_args) {
    std::string path = scratch_file(name + ".json");
    CliResult gen = run_cli("gen " + gen_args + " > " + path + " && cat " + path);
    REQUIRE(gen.exit_code == 0);
    return path;
}

}  // namespace

TEST_CASE("cli: generate + validate round trip") {
    std::string path = write_instance("path3", "path 3");
    CliResult result = run_cli("validate " + path);
    CHECK(result.exit_code == 0);
    json document = json::parse(result.output);
    CHECK(document["result"]["valid"] == true);
    CHECK(document["result"]["n"] == 3);
}

TEST_CASE("cli: resilience values and methods agree on trees") {
    std::string path = write_instance("grid3", "grid-tree 3");
    for (int k = 1; k <= 3; ++k) {
        CliResult general =
            run_cli("resilience " + path + " --k " + std::to_string(k) + " --method general");
        CliResult tree =
            run_cli("resilience " + path + " --k " + std::to_string(k) + " --method tree");
        REQUIRE(general.exit_code == 0);
        REQUIRE(tree.exit_code == 0);
        json g = json::parse(general.output);
        json t = json::parse(tree.output);
        CHECK(g["result"]["value"] == t["result"]["value"]);
    }
    CliResult fast = run_cli("resilience " + path + " --k 1 --method fast1");
    json f = json::parse(fast.output);
    json g = json::parse(run_cli("resilience " + path + " --k 1").output);
    CHECK(f["result"]["value"] == g["result"]["value"]);
}

TEST_CASE("cli: documented examples") {
    std::string path3 = write_instance("p3", "path 3");
    json one = json::parse(run_cli("resilience " + path3 + " --k 1").output);
    CHECK(one["result"]["value"] == 2);
    json two = json::parse(run_cli("resilience " + path3 + " --k 2").output);
    CHECK(two["result"]["value"] == "infinite");

    json reduce = json::parse(run_cli("reduce --circulant \"6;2\"").output);
    CHECK(reduce["result"]["augmented"] == "12;1,3,4,5");
    CHECK(reduce["result"]["verification"]["ok"] == true);
    CHECK(reduce["result"]["verification"]["tie_jumps"] == json::array({1, 3, 4, 5}));

    json mis = json::parse(run_cli("mis --circulant \"6;2\"").output);
    CHECK(mis["result"]["value"] == 2);

    // The emitted caterpillar instance is itself a valid instance document.
    std::string emitted = scratch_file("reduced.json");
    std::ofstream out(emitted);
    out << reduce["result"]["instance"].dump();
    out.close();
    json validated = json::parse(run_cli("validate " + emitted).output);
    CHECK(validated["result"]["valid"] == true);
    CHECK(validated["result"]["n"] == 12);
}

TEST_CASE("cli: simulation with removals and event log") {
    std::string path = write_instance("cycle4", "cycle 4");
    CliResult result =
        run_cli("simulate " + path + " --remove 1,3 --event-log " + scratch_file("events.jsonl") + "");
    REQUIRE(result.exit_code == 0);
    json document = json::parse(result.output);
    CHECK(document["result"]["starving"] == json::array({0, 2}));
    CHECK(document["result"]["occupancy_constant"] == true);

    std::ifstream log(scratch_file("events.jsonl"));
    REQUIRE(log.good());
    std::string line;
    int lines = 0;
    while (std::getline(log, line)) {
        json event = json::parse(line);
        CHECK(event.contains("time"));
        CHECK(event.contains("crossing"));
        CHECK(event.contains("outcome"));
        ++lines;
    }
    CHECK(lines == (int)document["result"]["events"].size());
}

TEST_CASE("cli: byte-identical output across repeated runs") {
    std::string path = write_instance("det", "caterpillar 1,3,4");
    CliResult first = run_cli("meeting-graph " + path);
    CliResult second = run_cli("meeting-graph " + path);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
}

TEST_CASE("cli: exit codes") {
    CHECK(run_cli("validate /nonexistent.json").exit_code == 1);

    std::ofstream bad(scratch_file("bad.json"));
    bad << R"({"epsilon": 0.6, "circles": [{"id":0,"x":0,"y":0}]})";
    bad.close();
    CHECK(run_cli("validate " + scratch_file("bad.json")).exit_code == 1);

    std::string path = write_instance("budget", "grid-tree 3");
    CHECK(run_cli("--budget 2 resilience " + path + " --k 3").exit_code == 2);

    CHECK(run_cli("gen cycle 5").exit_code == 1);
}

TEST_CASE("cli: RESILIENCE_BUDGET environment override") {
    std::string path = write_instance("envbudget", "grid-tree 3");
    std::string command = "RESILIENCE_BUDGET=2 " + cli_path() + " resilience " + path +
                          " --k 3 >/dev/null 2>/dev/null";
    int status = std::system(command.c_str());
    CHECK(WEXITSTATUS(status) == 2);
    // An explicit flag wins over the environment.
    command = "RESILIENCE_BUDGET=2 " + cli_path() + " --budget 100000000 resilience " + path +
              " --k 3 >/dev/null 2>/dev/null";
    status = std::system(command.c_str());
    CHECK(WEXITSTATUS(status) == 0);
}
