#include <doctest.h>

#include "parahex/bisect.hpp"
#include "parahex/errors.hpp"
#include "parahex/hexagon.hpp"

#include <cmath>

using namespace parahex;

namespace {

std::vector<double> sample_ts() {
    std::vector<double> ts;
    for (int k = 1; k <= 19; ++k) ts.push_back(0.05 * k);
    return ts;
}

std::vector<Point> pts(const ConvexPolygon& p) { return {p.vertices().begin(), p.vertices().end()}; }

std::vector<Point> half_turn_about(const ConvexPolygon& p, Point c) {
    std::vector<Point> out;
    for (Point q : p.vertices()) out.push_back(2.0 * c - q);
    return out;
}

bool strictly_convex_ccw(const ConvexPolygon& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        Point a = p.vertex(i), b = p.vertex(i + 1), c = p.vertex(i + 2);
        if (cross(b - a, c - b) <= 1e-12) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("spec parsing") {
    auto s = parse_bisection("II:0.3");
    CHECK(s.kase == BisectCase::II);
    CHECK(s.t == 0.3);
    CHECK(to_string(s) == "II:0.3");
    CHECK(parse_bisection("I:0").vertex_to_vertex());
    CHECK(parse_bisection("III:1").vertex_to_vertex());
    CHECK_FALSE(parse_bisection("III:0.5").vertex_to_vertex());
    CHECK_THROWS_AS(parse_bisection("IV:0.3"), DomainError);
    CHECK_THROWS_AS(parse_bisection("I"), DomainError);
    CHECK_THROWS_AS(parse_bisection("I:x"), DomainError);
}

TEST_CASE("t outside [0, 1] is rejected") {
    CHECK_THROWS_AS(bisect(hexagon_for_n(5), {BisectCase::I, 1.5}), DomainError);
    CHECK_THROWS_AS(bisect(hexagon_for_n(5), {BisectCase::II, -0.1}), DomainError);
}

TEST_CASE("case I at one half cuts along a mirror axis") {
    const HexagonSpec hex = hexagon_for_n(5);
    TilePair pair = bisect(hex, {BisectCase::I, 0.5});
    CHECK(pair.kind == PairKind::Pentagons);
    auto [x, y] = cut_points(hex, {BisectCase::I, 0.5});
    const Point d = (1.0 / distance(x, y)) * (y - x);
    auto cut_mirror = [&](Point p) {
        const Point r = p - x;
        return x + 2.0 * dot(r, d) * d - r;
    };
    std::vector<Point> mirrored;
    for (Point p : pair.left.vertices()) mirrored.push_back(cut_mirror(p));
    CHECK(same_vertex_set(mirrored, pts(pair.right)));
    const ConvexPolygon poly = vertices(hex);
    std::vector<Point> hex_mirrored;
    for (Point p : poly.vertices()) hex_mirrored.push_back(cut_mirror(p));
    CHECK(same_vertex_set(hex_mirrored, pts(poly)));
}

TEST_CASE("vertex-to-vertex cuts give quadrangles") {
    for (auto kase : {BisectCase::I, BisectCase::II, BisectCase::III}) {
        for (double t : {0.0, 1.0}) {
            TilePair pair = bisect(make_hexagon(AngleDeg(72), AngleDeg(134)), {kase, t});
            CHECK(pair.kind == PairKind::Quadrangles);
            CHECK(pair.left.size() == 4);
            CHECK(pair.right.size() == 4);
            CHECK(std::abs(pair.left.angle_sum_deg() - 360.0) < 1e-9);
            CHECK(std::abs(pair.right.angle_sum_deg() - 360.0) < 1e-9);
        }
    }
}

TEST_CASE("case III at 0.3 halves the area") {
    const HexagonSpec hex = hexagon_for_n(5);
    TilePair pair = bisect(hex, {BisectCase::III, 0.3});
    const double half = area(vertices(hex)) / 2.0;
    CHECK(std::abs(area(pair.left) - half) < 1e-9);
    CHECK(std::abs(area(pair.right) - half) < 1e-9);
    CHECK(same_vertex_set(half_turn_about(pair.left, hexagon_center(hex)), pts(pair.right)));
}

TEST_CASE("property sweep: congruence, convexity, areas, chord through centre") {
    for (int n = 3; n <= 12; ++n) {
        for (auto hex : {hexagon_for_n(n), make_hexagon(turn_fraction(n), AngleDeg(180) - turn_fraction(n) / 2 - AngleDeg(5))}) {
            const ConvexPolygon poly = vertices(hex);
            const Point c = hexagon_center(hex);
            CHECK(distance(c, poly.centroid()) < 1e-9);
            for (auto kase : {BisectCase::I, BisectCase::II, BisectCase::III}) {
                for (double t : sample_ts()) {
                    CAPTURE(n);
                    CAPTURE(t);
                    const BisectionSpec spec{kase, t};
                    TilePair pair = bisect(hex, spec);
                    CHECK(pair.kind == PairKind::Pentagons);
                    CHECK(pair.left.size() == 5);
                    CHECK(strictly_convex_ccw(pair.left));
                    CHECK(strictly_convex_ccw(pair.right));
                    CHECK(std::abs(pair.left.angle_sum_deg() - 540.0) < 1e-9);
                    CHECK(same_vertex_set(half_turn_about(pair.left, c), pts(pair.right)));
                    CHECK(std::abs(area(pair.left) + area(pair.right) - area(poly)) < 1e-9);
                    auto [x, y] = cut_points(hex, spec);
                    CHECK(distance(0.5 * (x + y), poly.centroid()) < 1e-9);
                    CHECK(is_type1_pentagon(pair.left));
                    CHECK(is_type1_pentagon(pair.right));
                }
            }
        }
    }
}

TEST_CASE("cases II and III are mirror images for D2 hexagons") {
    for (int n = 3; n <= 12; ++n) {
        const HexagonSpec hex = hexagon_for_n(n);
        const auto mirror = outline_mirror(hex);
        REQUIRE(mirror.has_value());
        for (double t : sample_ts()) {
            CAPTURE(n);
            CAPTURE(t);
            TilePair two = bisect(hex, {BisectCase::II, t});
            TilePair three = bisect(hex, {BisectCase::III, 1.0 - t});
            std::vector<Point> img;
            for (Point p : two.left.vertices()) img.push_back((*mirror)(p));
            CHECK((same_vertex_set(img, pts(three.left)) || same_vertex_set(img, pts(three.right))));
        }
    }
}

TEST_CASE("is_type1_pentagon") {
    CHECK(is_type1_pentagon(bisect(hexagon_for_n(4), {BisectCase::I, 0.25}).left));
    std::vector<Point> regular;
    for (int k = 0; k < 5; ++k) regular.push_back(unit(AngleDeg(72 * k)));
    CHECK_FALSE(is_type1_pentagon(ConvexPolygon::from_points(regular)));
    CHECK_THROWS_AS(is_type1_pentagon(vertices(hexagon_for_n(5))), DomainError);
}

TEST_CASE("inherited corners stay exact") {
    TilePair pair = bisect(hexagon_for_n(5), {BisectCase::II, 0.3});
    int exact = 0;
    for (auto c : pair.left.corners()) exact += c.exact ? 1 : 0;
    CHECK(exact == 3);
}
