#pragma once

#include "parahex/bisect.hpp"
#include "parahex/geom.hpp"
#include "parahex/hexagon.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

namespace parahex {

enum class ProtoKind { Hexagon, PentLeft, PentRight, QuadLeft, QuadRight };

std::string_view to_string(ProtoKind k);
ProtoKind parse_proto_kind(std::string_view text);

struct PlacedTile {
    int id = 0;
    ProtoKind proto = ProtoKind::Hexagon;
    Isometry placement;
    int wedge = 0;  // unit index the tile was built in; used for rendering

    friend bool operator==(const PlacedTile&, const PlacedTile&) = default;
};

enum class PatchKind { Rotational, Hole };
enum class HoleMode { None, Regular, Equilateral };

std::string_view to_string(PatchKind k);
std::string_view to_string(HoleMode m);

struct PatchMeta {
    PatchKind kind = PatchKind::Rotational;
    int order = 0;  // n for rotational patches, hole edge count m for hole patches
    int depth = 1;
    HoleMode hole_mode = HoleMode::None;

    friend bool operator==(const PatchMeta&, const PatchMeta&) = default;
};

/// Finite set of congruent tiles. Every tile is the single prototype hexagon
/// (or one of its two bisection pieces) under an isometry.
struct Patch {
    HexagonSpec prototype;
    std::optional<BisectionSpec> bisection;
    std::vector<PlacedTile> tiles;
    PatchMeta meta;

    friend bool operator==(const Patch&, const Patch&) = default;
};

/// Prototile outline for a tile kind in canonical coordinates.
ConvexPolygon prototile(const Patch& patch, ProtoKind kind);
std::vector<ConvexPolygon> realize(const Patch& patch);

/// Triangular unit of the translation tiling with apex A at the origin:
/// rows of 1, 2, ..., depth hexagons, tile (i, j) translated by
/// i*C + j*(D - B). Inside, corners meet as B+D+F and A+C+E. The reflected
/// unit is the mirror image in the line through the apex at heading
/// (180 - B)/2.
std::vector<PlacedTile> build_unit(const HexagonSpec& hex, int depth, bool reflected);

/// n-fold rotationally symmetric edge-to-edge patch about the origin. The
/// angle tuple is relabeled so that A = 360/n. Each sector holds a plain unit
/// and a second unit hanging off edge AB of the apex tile: mirrored for C2
/// prototypes, plain for B = C prototypes.
/// Throws OrderError if no angle equals 360/n.
Patch build_rotational_tiling(const HexagonSpec& hex, int n, int depth);

/// Pattern of units around an uncovered central polygon centered on the
/// origin.
///   Regular mode: hex is (a relabeling of) hexagon_for_hole(m); m units,
///   each turned 360/m from the previous; regular m-gon hole.
///   Equilateral mode: some angle equals 360/n with m = 2n; plain and
///   mirrored units alternate; the hole is an equilateral 2n-gon.
/// Throws ParityError for odd m with a C2 prototype, OrderError when no
/// mode applies.
Patch build_hole_tiling(const HexagonSpec& hex, int m, int depth);

/// Per-cell choice of keeping or mirroring the pentagon arrangement inside
/// each hexagon.
class ReflectionChoices {
public:
    static ReflectionChoices none();
    static ReflectionChoices seeded(std::uint64_t seed);
    static ReflectionChoices fixed(std::vector<bool> flips);

    bool next(std::size_t cell);

private:
    std::function<bool(std::size_t)> pick_;
};

/// Replaces every hexagon by its two pieces. A flipped cell uses the
/// placement composed with the outline mirror of the prototype, so the
/// cell outline is unchanged. Throws ReflectError if a flip is requested on
/// a C2 prototype, DomainError if the patch is already bisected.
Patch bisect_patch(const Patch& patch, const BisectionSpec& spec, ReflectionChoices choices = ReflectionChoices::none());

}  // namespace parahex
