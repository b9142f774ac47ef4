#pragma once

#include "parahex/geom.hpp"
#include "parahex/hexagon.hpp"

#include <string>
#include <string_view>

namespace parahex {

/// Which pair of opposite edges the dividing line crosses.
///   I   - edges c (BC) and f (EF)
///   II  - edges a (FA) and d (CD)
///   III - edges b (AB) and e (DE)
enum class BisectCase { I, II, III };

std::string_view to_string(BisectCase c);
BisectCase parse_bisect_case(std::string_view text);

/// Dividing line through the hexagon center. `t` is the fractional position
/// on the first-named edge in its own (counterclockwise) direction; the
/// other crossing is the point reflection of that point. t = 0 or 1 puts
/// the line through two opposite vertices.
struct BisectionSpec {
    BisectCase kase = BisectCase::I;
    double t = 0.5;

    bool vertex_to_vertex() const { return t == 0.0 || t == 1.0; }
    friend bool operator==(const BisectionSpec&, const BisectionSpec&) = default;
};

/// "II:0.3"
BisectionSpec parse_bisection(std::string_view text);
std::string to_string(const BisectionSpec& spec);

enum class PairKind { Pentagons, Quadrangles };

struct TilePair {
    ConvexPolygon left;   // from the first cut point counterclockwise to the second
    ConvexPolygon right;  // point reflection of `left`
    PairKind kind = PairKind::Pentagons;
};

/// Center of two-fold rotation of the canonical outline (midpoint of AD).
Point hexagon_center(const HexagonSpec& hex);

/// Endpoints of the dividing chord in canonical hexagon coordinates.
std::pair<Point, Point> cut_points(const HexagonSpec& hex, const BisectionSpec& spec);

/// Splits the canonical hexagon. Inherited corners keep their exact angle;
/// the corners at the cut points carry measured values.
TilePair bisect(const HexagonSpec& hex, const BisectionSpec& spec);

/// Some three cyclically consecutive angles sum to 360 (within 1e-9 deg).
bool is_type1_pentagon(const ConvexPolygon& p);

}  // namespace parahex
