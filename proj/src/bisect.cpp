#include "parahex/bisect.hpp"

#include "parahex/errors.hpp"

#include <charconv>
#include <cmath>

#include <fmt/format.h>

namespace parahex {

std::string_view to_string(BisectCase c) {
    switch (c) {
        case BisectCase::I: return "I";
        case BisectCase::II: return "II";
        case BisectCase::III: return "III";
    }
    return "?";
}

BisectCase parse_bisect_case(std::string_view text) {
    if (text == "I") return BisectCase::I;
    if (text == "II") return BisectCase::II;
    if (text == "III") return BisectCase::III;
    throw DomainError(fmt::format("unknown bisection case '{}' (expected I, II or III)", text));
}

BisectionSpec parse_bisection(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw DomainError(fmt::format("bisection '{}' must look like CASE:t", text));
    }
    BisectionSpec spec;
    spec.kase = parse_bisect_case(text.substr(0, colon));
    std::string t_text(text.substr(colon + 1));
    std::size_t used = 0;
    try {
        spec.t = std::stod(t_text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != t_text.size()) {
        throw DomainError(fmt::format("bisection parameter '{}' is not a number", t_text));
    }
    if (!(spec.t >= 0.0 && spec.t <= 1.0)) {
        throw DomainError(fmt::format("bisection parameter {} is outside [0, 1]", spec.t));
    }
    return spec;
}

std::string to_string(const BisectionSpec& spec) {
    return fmt::format("{}:{}", to_string(spec.kase), spec.t);
}

namespace {

// Vertex index where the first-named edge starts.
std::size_t first_edge_start(BisectCase c) {
    switch (c) {
        case BisectCase::I: return 1;    // c = BC
        case BisectCase::II: return 5;   // a = FA
        case BisectCase::III: return 0;  // b = AB
    }
    return 0;
}

struct LoopEntry {
    Point p;
    std::optional<AngleDeg> exact;
    bool cut = false;
};

ConvexPolygon make_piece(const std::vector<LoopEntry>& loop, std::size_t from, std::size_t to) {
    std::vector<Point> pts;
    std::vector<bool> cut;
    std::vector<std::optional<AngleDeg>> exact;
    const std::size_t n = loop.size();
    for (std::size_t i = from;; i = (i + 1) % n) {
        pts.push_back(loop[i].p);
        cut.push_back(loop[i].cut);
        exact.push_back(loop[i].exact);
        if (i == to) break;
    }
    auto measured = measured_angles(pts);
    std::vector<CornerAngle> corners;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!cut[i] && exact[i]) {
            corners.push_back(CornerAngle::of(*exact[i]));
        } else {
            corners.push_back(CornerAngle::measured(measured[i]));
        }
    }
    return ConvexPolygon::make(std::move(pts), std::move(corners));
}

}  // namespace

Point hexagon_center(const HexagonSpec& hex) {
    auto poly = vertices(hex);
    return 0.5 * (poly.vertex(0) + poly.vertex(3));
}

std::pair<Point, Point> cut_points(const HexagonSpec& hex, const BisectionSpec& spec) {
    if (!(spec.t >= 0.0 && spec.t <= 1.0)) {
        throw DomainError(fmt::format("bisection parameter {} is outside [0, 1]", spec.t));
    }
    auto poly = vertices(hex);
    const std::size_t s = first_edge_start(spec.kase);
    const Point c = 0.5 * (poly.vertex(0) + poly.vertex(3));
    Point x = poly.vertex(s) + spec.t * (poly.vertex(s + 1) - poly.vertex(s));
    if (spec.t == 0.0) x = poly.vertex(s);
    if (spec.t == 1.0) x = poly.vertex(s + 1);
    return {x, 2.0 * c - x};
}

TilePair bisect(const HexagonSpec& hex, const BisectionSpec& spec) {
    const auto [x, y] = cut_points(hex, spec);
    const auto poly = vertices(hex);
    const std::size_t s = first_edge_start(spec.kase);

    std::vector<LoopEntry> loop;
    std::size_t ix = 0, iy = 0;
    for (std::size_t i = 0; i < 6; ++i) {
        const bool is_x = (spec.t == 0.0 && i == s) || (spec.t == 1.0 && i == (s + 1) % 6);
        const bool is_y = (spec.t == 0.0 && i == (s + 3) % 6) || (spec.t == 1.0 && i == (s + 4) % 6);
        if (is_x) ix = loop.size();
        if (is_y) iy = loop.size();
        loop.push_back({poly.vertex(i), hex.angle(i), is_x || is_y});
        if (!spec.vertex_to_vertex()) {
            if (i == s) {
                ix = loop.size();
                loop.push_back({x, std::nullopt, true});
            } else if (i == (s + 3) % 6) {
                iy = loop.size();
                loop.push_back({y, std::nullopt, true});
            }
        }
    }

    TilePair pair;
    pair.kind = spec.vertex_to_vertex() ? PairKind::Quadrangles : PairKind::Pentagons;
    pair.left = make_piece(loop, ix, iy);
    pair.right = make_piece(loop, iy, ix);
    return pair;
}

bool is_type1_pentagon(const ConvexPolygon& p) {
    if (p.size() != 5) {
        throw DomainError(fmt::format("Type 1 test needs a pentagon, got {} vertices", p.size()));
    }
    auto corners = p.corners();
    for (std::size_t i = 0; i < 5; ++i) {
        double s = corners[i].deg + corners[(i + 1) % 5].deg + corners[(i + 2) % 5].deg;
        if (std::abs(s - 360.0) <= 1e-9) return true;
    }
    return false;
}

}  // namespace parahex
