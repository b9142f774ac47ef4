#include <doctest.h>

#include "cli.hpp"
#include "parahex/io.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "parahex");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = parahex::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "parahex_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("hexagon subcommand") {
    Result r = run({"hexagon", "--n", "11"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["rounded"]["A"] == "32.73");
    CHECK(doc["rounded"]["B"] == "163.64");

    r = run({"hexagon", "--n", "5", "--b", "134"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["angles"]["C"] == "154/1");
    CHECK(nlohmann::json::parse(r.out)["symmetry"] == "C2");

    r = run({"hexagon", "--n", "7", "--b", "1005/7"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["angles"]["C"] == "165/1");

    r = run({"hexagon", "--hole-m", "13"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["rounded"]["A"] == "55.38");
}

TEST_CASE("usage and domain errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"hexagon"}).code == 2);
    CHECK(run({"hexagon", "--n", "2"}).code == 2);
    CHECK(run({"hexagon", "--n", "5", "--hole-m", "10"}).code == 2);
    CHECK(run({"hexagon", "--n", "5", "--b", "30"}).code == 2);
    CHECK(run({"hexagon", "--n", "5", "--b", "abc"}).code == 2);
    CHECK(run({"tile", "--n", "7", "--depth", "1", "--bisect", "IV:0.3", "--out", scratch("x.svg").string()}).code == 2);
    CHECK(run({"hole", "--m", "9", "--a", "80", "--b", "120", "--depth", "2", "--out", scratch("x.svg").string()})
              .code == 2);
    CHECK(run({"validate", "--in", scratch("does-not-exist.json").string()}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"tile", "--help"}).code == 0);
}

TEST_CASE("tile, validate and symmetry") {
    const auto svg = scratch("tile.svg"), json = scratch("tile.json");
    Result r = run({"tile", "--n", "5", "--depth", "2", "--out", svg.string(), "--json", json.string()});
    REQUIRE(r.code == 0);
    CHECK(slurp(svg).find("<svg") != std::string::npos);
    Result v = run({"validate", "--in", json.string()});
    CHECK(v.code == 0);
    CHECK(v.out.find("passed: yes") != std::string::npos);
    CHECK(v.out.find("edge contact: edge-to-edge") != std::string::npos);
    CHECK(run({"symmetry", "--in", json.string()}).out == "D5\n");

    r = run({"tile", "--n", "5", "--depth", "2", "--bisect", "II:0.3", "--out", svg.string(), "--json",
             json.string()});
    REQUIRE(r.code == 0);
    CHECK(run({"symmetry", "--in", json.string()}).out == "C5\n");

    r = run({"tile", "--n", "5", "--depth", "2", "--bisect", "I:0.3", "--random-seed", "42", "--out", svg.string(),
             "--json", json.string()});
    REQUIRE(r.code == 0);
    CHECK(run({"validate", "--in", json.string()}).code == 0);
}

TEST_CASE("validate reports failure with exit code 1") {
    const auto json = scratch("broken.json");
    auto doc = nlohmann::json::parse(parahex::to_json(
        parahex::build_rotational_tiling(parahex::hexagon_for_n(5), 5, 2)));
    doc["tiles"][3]["translation"][0] = doc["tiles"][3]["translation"][0].get<double>() + 0.1;
    std::ofstream(json) << doc.dump();
    Result v = run({"validate", "--in", json.string()});
    CHECK(v.code == 1);
    CHECK(v.out.find("passed: no") != std::string::npos);

    std::ofstream(json) << "{ not json";
    Result bad = run({"validate", "--in", json.string()});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 1") != std::string::npos);
}

TEST_CASE("hole subcommand") {
    const auto svg = scratch("hole.svg"), json = scratch("hole.json");
    REQUIRE(run({"hole", "--m", "10", "--depth", "2", "--out", svg.string(), "--json", json.string()}).code == 0);
    CHECK(run({"symmetry", "--in", json.string()}).out == "C10\n");
    REQUIRE(run({"hole", "--m", "10", "--a", "72", "--b", "134", "--depth", "2", "--out", svg.string(), "--json",
                 json.string()})
                .code == 0);
    CHECK(run({"symmetry", "--in", json.string()}).out == "C5\n");
    CHECK(run({"hole", "--m", "10", "--a", "72", "--depth", "2", "--out", svg.string()}).code == 2);
}

TEST_CASE("tables") {
    Result r = run({"tables"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("n-fold rotational tilings") != std::string::npos);
    CHECK(r.out.find(" 11   32.73  163.64") != std::string::npos);
    CHECK(r.out.find(" 25   28.80  165.60") != std::string::npos);
    Result small = run({"tables", "--max", "5"});
    CHECK(small.out.find("  6   60.00") == std::string::npos);
}
