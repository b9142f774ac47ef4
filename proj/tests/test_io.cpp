#include <doctest.h>

#include "parahex/errors.hpp"
#include "parahex/io.hpp"

#include <json.hpp>

#include <regex>
#include <string>

using namespace parahex;

namespace {

std::size_t count_of(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("JSON round trip is exact") {
    std::vector<Patch> patches = {
        build_rotational_tiling(hexagon_for_n(5), 5, 1),
        build_rotational_tiling(make_hexagon(AngleDeg(360, 7), AngleDeg(1005, 7)), 7, 2),
        bisect_patch(build_rotational_tiling(hexagon_for_n(5), 5, 2), {BisectCase::I, 0.3},
                     ReflectionChoices::seeded(42)),
        build_hole_tiling(make_hexagon(AngleDeg(72), AngleDeg(134)), 10, 2),
        build_hole_tiling(hexagon_for_hole(11), 11, 3),
    };
    for (const auto& p : patches) {
        const std::string text = to_json(p);
        CHECK(from_json(text) == p);
        CHECK(to_json(from_json(text)) == text);
    }
}

TEST_CASE("angles are exact strings") {
    const Patch p = build_rotational_tiling(hexagon_for_n(7), 7, 1);
    auto doc = nlohmann::json::parse(to_json(p));
    CHECK(doc["format"] == "parahextile/1");
    CHECK(doc["prototype"]["A"] == "360/7");
    CHECK(from_json(to_json(p)).prototype.A() == AngleDeg(360, 7));
}

TEST_CASE("schema errors") {
    auto doc = nlohmann::json::parse(to_json(build_rotational_tiling(hexagon_for_n(5), 5, 1)));
    auto missing = doc;
    missing.erase("prototype");
    CHECK_THROWS_AS(from_json(missing.dump()), SchemaError);
    auto version = doc;
    version["format"] = "parahextile/2";
    CHECK_THROWS_AS(from_json(version.dump()), SchemaError);
    auto untagged = doc;
    untagged.erase("format");
    CHECK_THROWS_AS(from_json(untagged.dump()), SchemaError);
    auto inconsistent = doc;
    inconsistent["prototype"]["C"] = "100/1";
    CHECK_THROWS_AS(from_json(inconsistent.dump()), SchemaError);
}

TEST_CASE("parse errors carry a location") {
    const std::string text = "{\n  \"format\": \"parahextile/1\",\n  \"prototype\": {\n    \"A\": 72,,\n";
    try {
        from_json(text);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }

    auto doc = nlohmann::json::parse(to_json(build_rotational_tiling(hexagon_for_n(5), 5, 1)));
    doc["tiles"][1]["rotation"] = 72;
    try {
        from_json(doc.dump());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("tiles[1].rotation") != std::string::npos);
    }
    auto dup = nlohmann::json::parse(to_json(build_rotational_tiling(hexagon_for_n(5), 5, 1)));
    dup["tiles"][2]["id"] = 0;
    CHECK_THROWS_AS(from_json(dup.dump()), ParseError);
    CHECK_THROWS_AS(from_json("[1, 2]"), ParseError);
}

TEST_CASE("SVG has one path per tile and a padded viewBox") {
    const Patch p = build_rotational_tiling(hexagon_for_n(5), 5, 2);
    const std::string svg = to_svg(p);
    CHECK(count_of(svg, "<path ") == 30);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(to_svg(p) == svg);

    std::smatch m;
    REQUIRE(std::regex_search(svg, m, std::regex("viewBox=\"([-0-9.]+) ([-0-9.]+) ([-0-9.]+) ([-0-9.]+)\"")));
    double min_x = 1e9, max_x = -1e9;
    for (const auto& t : realize(p)) {
        for (Point q : t.vertices()) {
            min_x = std::min(min_x, q.x);
            max_x = std::max(max_x, q.x);
        }
    }
    CHECK(std::stod(m[1]) < min_x);
    CHECK(std::stod(m[1]) + std::stod(m[3]) > max_x);
}

TEST_CASE("SVG fills") {
    const Patch c2 = build_rotational_tiling(make_hexagon(AngleDeg(72), AngleDeg(134)), 5, 1);
    const std::string chiral = to_svg(c2);
    CHECK(count_of(chiral, "fill=\"#8fb3d9\"") == 5);
    CHECK(count_of(chiral, "fill=\"#f2d49b\"") == 5);
    const std::string wedges = to_svg(c2, {0.02, FillMode::ByWedge, 0.05});
    CHECK(count_of(wedges, "fill=\"#b0b0b0\"") == 5);
    const std::string bare = to_svg(c2, {0.05, FillMode::None, 0.0});
    CHECK(count_of(bare, "fill=\"none\"") == 10);
    CHECK(bare.find("stroke-width=\"0.050000\"") != std::string::npos);
    CHECK_THROWS_AS(to_svg(c2, {0.0, FillMode::None, 0.05}), DomainError);
    CHECK(parse_fill_mode("by-wedge") == FillMode::ByWedge);
    CHECK_THROWS_AS(parse_fill_mode("rainbow"), DomainError);
}

TEST_CASE("empty patch renders an empty canvas") {
    const Patch empty{hexagon_for_n(5), std::nullopt, {}, PatchMeta{PatchKind::Rotational, 5, 1, HoleMode::None}};
    const std::string svg = to_svg(empty);
    CHECK(count_of(svg, "<path ") == 0);
    CHECK(svg.find("viewBox=\"0.000000 0.000000 1.000000 1.000000\"") != std::string::npos);
    CHECK(from_json(to_json(empty)) == empty);
}

TEST_CASE("hexagon JSON") {
    auto doc = nlohmann::json::parse(hexagon_to_json(hexagon_for_n(7)));
    CHECK(doc["angles"]["A"] == "360/7");
    CHECK(doc["rounded"]["B"] == "154.29");
    CHECK(doc["symmetry"] == "D2");
    CHECK(doc["rotation_orders"] == nlohmann::json::array({7}));
}
