#include "parahex/hexagon.hpp"

#include "parahex/errors.hpp"

#include <fmt/format.h>

namespace parahex {

AngleDeg HexagonSpec::angle(std::size_t i) const {
    switch (i % 3) {
        case 0: return a_;
        case 1: return b_;
        default: return c_;
    }
}

std::array<AngleDeg, 6> HexagonSpec::angles() const { return {a_, b_, c_, a_, b_, c_}; }

std::string_view to_string(SymmetryClass s) {
    switch (s) {
        case SymmetryClass::D6: return "D6";
        case SymmetryClass::D2: return "D2";
        case SymmetryClass::C2: return "C2";
    }
    return "?";
}

HexagonSpec make_hexagon(const AngleDeg& a, const AngleDeg& b) {
    const AngleDeg zero;
    const AngleDeg half = AngleDeg::half_turn();
    AngleDeg c = AngleDeg::full_turn() - a - b;
    auto check = [&](const AngleDeg& v, char name) {
        if (v <= zero || v >= half) {
            throw DomainError(fmt::format("angle {} = {} is outside (0, 180)", name, v.to_string()));
        }
    };
    check(a, 'A');
    check(b, 'B');
    check(c, 'C');
    return HexagonSpec(a, b, c);
}

HexagonSpec hexagon_for_n(int n, std::optional<AngleDeg> b) {
    if (n < 3) throw DomainError(fmt::format("rotation order n = {} must be at least 3", n));
    AngleDeg a = turn_fraction(n);
    if (!b) b = AngleDeg::half_turn() - a / 2;
    return make_hexagon(a, *b);
}

HexagonSpec hexagon_for_hole(int m) {
    if (m < 5) throw DomainError(fmt::format("hole order m = {} must be at least 5", m));
    AngleDeg a(720, m);
    return make_hexagon(a, AngleDeg::half_turn() - a / 2);
}

AngleDeg edge_heading(const HexagonSpec& hex, std::size_t i) {
    // leaving A heads 0; each vertex turns left by 180 - interior
    AngleDeg h;
    for (std::size_t k = 1; k <= i % 6; ++k) h += AngleDeg::half_turn() - hex.angle(k);
    return h.normalized();
}

ConvexPolygon vertices(const HexagonSpec& hex) {
    std::vector<Point> pts;
    std::vector<CornerAngle> corners;
    Point p{0.0, 0.0};
    for (std::size_t i = 0; i < 6; ++i) {
        pts.push_back(p);
        corners.push_back(CornerAngle::of(hex.angle(i)));
        p = p + unit(edge_heading(hex, i));
    }
    if (norm(p) > 1e-12) {
        throw std::logic_error(fmt::format("hexagon walk failed to close (residual {})", norm(p)));
    }
    return ConvexPolygon::make(std::move(pts), std::move(corners));
}

double closure_residual(const HexagonSpec& hex) {
    Point p{0.0, 0.0};
    for (std::size_t i = 0; i < 6; ++i) p = p + unit(edge_heading(hex, i));
    return norm(p);
}

SymmetryClass classify_hexagon(const HexagonSpec& hex) {
    const bool ab = hex.A() == hex.B();
    const bool bc = hex.B() == hex.C();
    const bool ca = hex.C() == hex.A();
    if (ab && bc) return SymmetryClass::D6;
    if (ab || bc || ca) return SymmetryClass::D2;
    return SymmetryClass::C2;
}

std::set<int> rotation_orders(const HexagonSpec& hex) {
    std::set<int> out;
    for (const auto& a : {hex.A(), hex.B(), hex.C()}) {
        // a = 360/n  <=>  n = 360 * den / num
        const std::int64_t top = 360 * a.den();
        if (top % a.num() == 0) {
            const std::int64_t n = top / a.num();
            if (n >= 3) out.insert(static_cast<int>(n));
        }
    }
    return out;
}

HexagonSpec relabel(const HexagonSpec& hex, int shift) {
    const int s = ((shift % 3) + 3) % 3;
    return make_hexagon(hex.angle(s), hex.angle(s + 1));
}

std::optional<int> relabel_shift_for(const HexagonSpec& hex, const AngleDeg& target) {
    for (int s = 0; s < 3; ++s) {
        if (hex.angle(s) == target) return s;
    }
    return std::nullopt;
}

std::optional<Isometry> outline_mirror(const HexagonSpec& hex) {
    // Vertex i maps to vertex (k - i) mod 6; valid iff the angle sequence is
    // palindromic about that pairing.
    for (std::size_t k = 0; k < 6; ++k) {
        bool ok = true;
        for (std::size_t i = 0; i < 6 && ok; ++i) {
            ok = hex.angle(i) == hex.angle((k + 6 - i) % 6);
        }
        if (!ok) continue;
        // Edge A->B (heading 0) maps onto edge k -> k-1, whose heading is the
        // heading of edge (k-1) -> k reversed.
        const AngleDeg line2 = edge_heading(hex, (k + 5) % 6) + AngleDeg::half_turn();
        const ConvexPolygon poly = vertices(hex);
        Isometry m{true, line2.normalized(), {}};
        m.translation = poly.vertex(k) - m(poly.vertex(0));
        return m;
    }
    return std::nullopt;
}

HexagonFamilies families(const HexagonSpec& hex) {
    HexagonFamilies f;
    const auto cls = classify_hexagon(hex);
    f.type2 = cls != SymmetryClass::C2;
    f.type3 = cls == SymmetryClass::D6;
    return f;
}

}  // namespace parahex
