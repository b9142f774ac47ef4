#pragma once

#include "parahex/angle.hpp"
#include "parahex/geom.hpp"

#include <array>
#include <optional>
#include <set>
#include <string_view>

namespace parahex {

/// Equilateral convex parallelohexagon with unit edges. Vertices A..F run
/// counterclockwise; opposite angles are equal (A = D, B = E, C = F) and
/// A + B + C = 360.
///
/// Edge names: a = FA, b = AB, c = BC, d = CD, e = DE, f = EF, so edge `x`
/// ends at vertex `X`. Opposite pairs are (a, d), (b, e), (c, f).
class HexagonSpec {
public:
    AngleDeg A() const { return a_; }
    AngleDeg B() const { return b_; }
    AngleDeg C() const { return c_; }
    AngleDeg D() const { return a_; }
    AngleDeg E() const { return b_; }
    AngleDeg F() const { return c_; }

    /// Angle at vertex i (0 = A ... 5 = F).
    AngleDeg angle(std::size_t i) const;
    std::array<AngleDeg, 6> angles() const;

    friend bool operator==(const HexagonSpec&, const HexagonSpec&) = default;

private:
    friend HexagonSpec make_hexagon(const AngleDeg& a, const AngleDeg& b);
    HexagonSpec(AngleDeg a, AngleDeg b, AngleDeg c) : a_(a), b_(b), c_(c) {}

    AngleDeg a_, b_, c_;
};

enum class SymmetryClass { D6, D2, C2 };

std::string_view to_string(SymmetryClass s);

/// C = F = 360 - A - B. Throws DomainError unless all three lie in (0, 180).
HexagonSpec make_hexagon(const AngleDeg& a, const AngleDeg& b);

/// A = D = 360/n; B = C = 180 - 180/n unless `b` is given.
HexagonSpec hexagon_for_n(int n, std::optional<AngleDeg> b = std::nullopt);

/// A = D = 720/m, B = C = E = F = 180 - 360/m; m >= 5.
HexagonSpec hexagon_for_hole(int m);

/// Vertex walk from A at the origin heading +x, turning left by 180 - angle
/// at each vertex. Vertex order A..F.
ConvexPolygon vertices(const HexagonSpec& hex);

/// Closure residual of the vertex walk (distance from the sixth step back to A).
double closure_residual(const HexagonSpec& hex);

/// Exact heading of the edge leaving vertex i (i = 0 is AB).
AngleDeg edge_heading(const HexagonSpec& hex, std::size_t i);

/// D6 when regular; D2 when exactly two of A, B, C coincide; C2 otherwise.
SymmetryClass classify_hexagon(const HexagonSpec& hex);

/// All n >= 3 for which some interior angle is exactly 360/n.
std::set<int> rotation_orders(const HexagonSpec& hex);

/// Restart the vertex symbol `shift` places later: shift 1 maps (A,B,C) to
/// (B,C,A). The outline is congruent by a rotation.
HexagonSpec relabel(const HexagonSpec& hex, int shift);

/// Shift that brings an angle equal to `target` to vertex A, if any.
std::optional<int> relabel_shift_for(const HexagonSpec& hex, const AngleDeg& target);

/// A mirror of the canonical outline onto itself, if one exists. For
/// B = C this is the axis through A and D.
std::optional<Isometry> outline_mirror(const HexagonSpec& hex);

/// Informative family flags: Type 1 always; Type 2 for the B = C family;
/// Type 3 only for the regular hexagon.
struct HexagonFamilies {
    bool type1 = true;
    bool type2 = false;
    bool type3 = false;
};
HexagonFamilies families(const HexagonSpec& hex);

}  // namespace parahex
