#pragma once

#include "parahex/assemble.hpp"
#include "parahex/geom.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace parahex {

enum class EdgeContact { EdgeToEdge, NonEdgeToEdge };
std::string_view to_string(EdgeContact c);

/// Interior vertex whose incident corners do not sum to a full turn.
struct BadVertex {
    Point at;
    double residual_deg = 0.0;
    std::optional<AngleDeg> exact_residual;  // set when every incident corner is exact
};

struct ValidationReport {
    std::vector<std::pair<int, int>> overlap_pairs;
    std::vector<BadVertex> bad_vertices;
    EdgeContact edge_contact = EdgeContact::EdgeToEdge;
    bool passed = false;

    int interior_vertices = 0;
    // interior vertices whose sum was checked in rational arithmetic
    int exact_interior_vertices = 0;
};

enum class SymmetryKind { C, D };

struct SymmetryReport {
    SymmetryKind kind = SymmetryKind::C;
    int order = 1;
    Point center;
    std::vector<AngleDeg> axes;  // mirror-line headings; empty for C

    /// "D5", "C7"
    std::string label() const;
};

struct HolePolygon {
    ConvexPolygon boundary;
    bool equilateral = false;
    bool regular = false;
    SymmetryReport symmetry;
    /// Sum of tile corners at each boundary vertex (360 minus the hole angle).
    std::vector<CornerAngle> outer_angles;
    /// The prototype hexagon itself would fill the hole.
    bool pluggable = false;
};

/// Overlaps, interior vertex sums and edge contact of the realized tiles.
/// Never throws on geometric failure; the report carries the findings.
ValidationReport validate_patch(const Patch& patch);
ValidationReport validate_tiles(std::span<const ConvexPolygon> tiles, std::span<const int> ids);

/// Largest rotation order (and mirrors) mapping the set of tile outlines
/// onto itself about the patch center. Throws DegenerateError for order 1.
SymmetryReport detect_symmetry(const Patch& patch);
/// Same test over arbitrary outlines about `center`.
SymmetryReport detect_symmetry(const std::vector<std::vector<Point>>& outlines, Point center);

/// Mean of tile centroids.
Point patch_center(std::span<const ConvexPolygon> tiles);

/// Traces the uncovered polygon around the patch center. Throws
/// NoHoleError when the center is covered or no closed boundary surrounds it.
HolePolygon extract_hole(const Patch& patch);

}  // namespace parahex
