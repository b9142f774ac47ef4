#include "parahex/assemble.hpp"

#include "parahex/errors.hpp"

#include <fmt/format.h>

namespace parahex {

std::string_view to_string(ProtoKind k) {
    switch (k) {
        case ProtoKind::Hexagon: return "hexagon";
        case ProtoKind::PentLeft: return "pent-left";
        case ProtoKind::PentRight: return "pent-right";
        case ProtoKind::QuadLeft: return "quad-left";
        case ProtoKind::QuadRight: return "quad-right";
    }
    return "?";
}

ProtoKind parse_proto_kind(std::string_view text) {
    for (auto k : {ProtoKind::Hexagon, ProtoKind::PentLeft, ProtoKind::PentRight, ProtoKind::QuadLeft,
                   ProtoKind::QuadRight}) {
        if (to_string(k) == text) return k;
    }
    throw DomainError(fmt::format("unknown tile prototype '{}'", text));
}

std::string_view to_string(PatchKind k) { return k == PatchKind::Rotational ? "rotational" : "hole"; }

std::string_view to_string(HoleMode m) {
    switch (m) {
        case HoleMode::None: return "none";
        case HoleMode::Regular: return "regular";
        case HoleMode::Equilateral: return "equilateral";
    }
    return "?";
}

ConvexPolygon prototile(const Patch& patch, ProtoKind kind) {
    if (kind == ProtoKind::Hexagon) return vertices(patch.prototype);
    if (!patch.bisection) throw DomainError("patch has piece tiles but no bisection");
    TilePair pair = bisect(patch.prototype, *patch.bisection);
    const bool quad = pair.kind == PairKind::Quadrangles;
    const bool want_quad = kind == ProtoKind::QuadLeft || kind == ProtoKind::QuadRight;
    if (quad != want_quad) throw DomainError(fmt::format("tile kind {} does not match the bisection", to_string(kind)));
    return (kind == ProtoKind::PentLeft || kind == ProtoKind::QuadLeft) ? pair.left : pair.right;
}

std::vector<ConvexPolygon> realize(const Patch& patch) {
    std::optional<ConvexPolygon> hex, left, right;
    std::vector<ConvexPolygon> out;
    out.reserve(patch.tiles.size());
    for (const auto& tile : patch.tiles) {
        std::optional<ConvexPolygon>* slot = &hex;
        if (tile.proto == ProtoKind::PentLeft || tile.proto == ProtoKind::QuadLeft) slot = &left;
        if (tile.proto == ProtoKind::PentRight || tile.proto == ProtoKind::QuadRight) slot = &right;
        if (!*slot) *slot = prototile(patch, tile.proto);
        out.push_back(apply(tile.placement, **slot));
    }
    return out;
}

namespace {

// Mirror that swaps the AB/BC boundary zigzag of a unit with its reverse.
Isometry unit_mirror(const HexagonSpec& hex) {
    return Isometry::mirror((AngleDeg::half_turn() - hex.B()) / 2);
}

// For B = C prototypes a mirrored placement equals a plain one composed
// with the A-D mirror of the outline.
Isometry plain_equivalent(const Isometry& iso, const HexagonSpec& hex) {
    if (!iso.reflect) return iso;
    auto m = outline_mirror(hex);
    if (!m) throw std::logic_error("prototype has no outline mirror");
    return compose(iso, *m);
}

void renumber(Patch& patch) {
    for (std::size_t i = 0; i < patch.tiles.size(); ++i) patch.tiles[i].id = static_cast<int>(i);
}

void check_depth(int depth) {
    if (depth < 1) throw DomainError(fmt::format("depth {} must be at least 1", depth));
}

}  // namespace

std::vector<PlacedTile> build_unit(const HexagonSpec& hex, int depth, bool reflected) {
    check_depth(depth);
    const auto poly = vertices(hex);
    const Point step_c = poly.vertex(2);                      // A -> C
    const Point step_db = poly.vertex(3) - poly.vertex(1);    // B -> D
    const Isometry mirror = unit_mirror(hex);

    std::vector<PlacedTile> out;
    for (int row = 0; row < depth; ++row) {
        for (int j = 0; j <= row; ++j) {
            const int i = row - j;
            Isometry iso = Isometry::translate(static_cast<double>(i) * step_c + static_cast<double>(j) * step_db);
            if (reflected) iso = compose(mirror, iso);
            out.push_back(PlacedTile{static_cast<int>(out.size()), ProtoKind::Hexagon, iso, 0});
        }
    }
    return out;
}

Patch build_rotational_tiling(const HexagonSpec& hex, int n, int depth) {
    check_depth(depth);
    if (n < 3) throw DomainError(fmt::format("rotation order n = {} must be at least 3", n));
    const AngleDeg sector = turn_fraction(n);
    auto shift = relabel_shift_for(hex, sector);
    if (!shift) {
        throw OrderError(fmt::format("no interior angle equals 360/{} = {}", n, sector.to_string()));
    }
    const HexagonSpec proto = relabel(hex, *shift);
    const bool plain_only = proto.B() == proto.C();

    Patch patch{proto, std::nullopt, {}, PatchMeta{PatchKind::Rotational, n, depth, HoleMode::None}};
    const auto first = build_unit(proto, depth, false);
    auto second = build_unit(proto, depth, true);
    const Isometry to_b = Isometry::translate({1.0, 0.0});
    for (auto& t : second) {
        t.placement = compose(to_b, t.placement);
        if (plain_only) t.placement = plain_equivalent(t.placement, proto);
    }

    for (int k = 0; k < n; ++k) {
        const Isometry rot = Isometry::rotation_about_origin(sector * k);
        for (const auto& t : first) {
            patch.tiles.push_back(PlacedTile{0, ProtoKind::Hexagon, compose(rot, t.placement), 2 * k});
        }
        for (const auto& t : second) {
            patch.tiles.push_back(PlacedTile{0, ProtoKind::Hexagon, compose(rot, t.placement), 2 * k + 1});
        }
    }
    renumber(patch);
    return patch;
}

namespace {

// Vertices of a closed walk with unit steps at the given headings, shifted
// so the vertex centroid is the origin.
std::vector<Point> centered_walk(const std::vector<AngleDeg>& headings) {
    std::vector<Point> pts;
    Point p{};
    for (const auto& h : headings) {
        pts.push_back(p);
        p = p + unit(h);
    }
    Point c{};
    for (Point q : pts) c = c + q;
    c = (1.0 / static_cast<double>(pts.size())) * c;
    for (Point& q : pts) q = q - c;
    return pts;
}

}  // namespace

Patch build_hole_tiling(const HexagonSpec& hex, int m, int depth) {
    check_depth(depth);
    if (m < 3) throw DomainError(fmt::format("hole order m = {} is too small", m));

    std::optional<HexagonSpec> regular;
    if (m >= 5) {
        const HexagonSpec target = hexagon_for_hole(m);
        for (int s = 0; s < 3; ++s) {
            if (relabel(hex, s) == target) regular = target;
        }
    }

    if (regular) {
        const auto unit = build_unit(*regular, depth, false);
        const AngleDeg turn = turn_fraction(m);
        std::vector<AngleDeg> headings;
        for (int k = 0; k < m; ++k) headings.push_back(regular->A() + turn * k);
        const Point apex = centered_walk(headings)[0];

        Patch patch{*regular, std::nullopt, {}, PatchMeta{PatchKind::Hole, m, depth, HoleMode::Regular}};
        for (int k = 0; k < m; ++k) {
            const Isometry place = compose(Isometry::rotation_about_origin(turn * k), Isometry::translate(apex));
            for (const auto& t : unit) {
                patch.tiles.push_back(PlacedTile{0, ProtoKind::Hexagon, compose(place, t.placement), k});
            }
        }
        renumber(patch);
        return patch;
    }

    if (m % 2 == 1) {
        if (classify_hexagon(hex) == SymmetryClass::C2) {
            throw ParityError(fmt::format(
                "a {}-gon hole needs alternating plain and mirrored units; an odd count cannot close", m));
        }
        throw OrderError(fmt::format("hexagon does not match the regular {}-gon hole conditions", m));
    }

    const int n = m / 2;
    if (n < 3) throw OrderError(fmt::format("equilateral hole with {} edges is below the minimum of 6", m));
    const AngleDeg sector = turn_fraction(n);
    auto shift = relabel_shift_for(hex, sector);
    if (!shift) throw OrderError(fmt::format("no interior angle equals 360/{} = {}", n, sector.to_string()));
    const HexagonSpec proto = relabel(hex, *shift);
    const bool plain_only = proto.B() == proto.C();
    const auto plain_unit = build_unit(proto, depth, false);

    // Hole corners alternate B and C; turning by 180 - B then 180 - C.
    std::vector<AngleDeg> headings;
    AngleDeg h = proto.A();
    for (int k = 0; k < m; ++k) {
        headings.push_back(h);
        h += AngleDeg::half_turn() - (k % 2 == 0 ? proto.B() : proto.C());
    }
    const auto hole = centered_walk(headings);

    // The mirrored unit shares its A->F zigzag with the plain unit's F->E
    // zigzag: mirror in the bisector of headings 180 - B and A.
    const Isometry swap = Isometry::mirror((AngleDeg::half_turn() - proto.B() + proto.A()) / 2);
    const Isometry place_plain = Isometry::translate(hole[0]);
    const Isometry place_mirror = compose(Isometry::translate(hole[1]), swap);

    Patch patch{proto, std::nullopt, {}, PatchMeta{PatchKind::Hole, m, depth, HoleMode::Equilateral}};
    for (int k = 0; k < n; ++k) {
        const Isometry rot = Isometry::rotation_about_origin(sector * k);
        for (const auto& t : plain_unit) {
            patch.tiles.push_back(
                PlacedTile{0, ProtoKind::Hexagon, compose(rot, compose(place_plain, t.placement)), 2 * k});
        }
        for (const auto& t : plain_unit) {
            Isometry iso = compose(rot, compose(place_mirror, t.placement));
            if (plain_only) iso = plain_equivalent(iso, proto);
            patch.tiles.push_back(PlacedTile{0, ProtoKind::Hexagon, iso, 2 * k + 1});
        }
    }
    renumber(patch);
    return patch;
}

ReflectionChoices ReflectionChoices::none() {
    ReflectionChoices c;
    c.pick_ = [](std::size_t) { return false; };
    return c;
}

ReflectionChoices ReflectionChoices::seeded(std::uint64_t seed) {
    ReflectionChoices c;
    c.pick_ = [engine = std::mt19937_64(seed)](std::size_t) mutable { return (engine() >> 63) != 0; };
    return c;
}

ReflectionChoices ReflectionChoices::fixed(std::vector<bool> flips) {
    ReflectionChoices c;
    c.pick_ = [flips = std::move(flips)](std::size_t cell) { return cell < flips.size() && flips[cell]; };
    return c;
}

bool ReflectionChoices::next(std::size_t cell) { return pick_(cell); }

Patch bisect_patch(const Patch& patch, const BisectionSpec& spec, ReflectionChoices choices) {
    if (patch.bisection) throw DomainError("patch is already bisected");
    // validates t and convexity of the pieces
    const TilePair pair = bisect(patch.prototype, spec);
    const bool quad = pair.kind == PairKind::Quadrangles;
    const auto mirror = outline_mirror(patch.prototype);

    Patch out{patch.prototype, spec, {}, patch.meta};
    for (std::size_t cell = 0; cell < patch.tiles.size(); ++cell) {
        const auto& tile = patch.tiles[cell];
        if (tile.proto != ProtoKind::Hexagon) throw DomainError("bisect_patch needs a hexagon-only patch");
        Isometry g = tile.placement;
        if (choices.next(cell)) {
            if (!mirror) {
                throw ReflectError("the prototype has no mirror symmetry, so a flipped cell would change its outline");
            }
            g = compose(g, *mirror);
        }
        out.tiles.push_back(PlacedTile{0, quad ? ProtoKind::QuadLeft : ProtoKind::PentLeft, g, tile.wedge});
        out.tiles.push_back(PlacedTile{0, quad ? ProtoKind::QuadRight : ProtoKind::PentRight, g, tile.wedge});
    }
    renumber(out);
    return out;
}

}  // namespace parahex
