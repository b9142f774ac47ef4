#pragma once

#include "parahex/assemble.hpp"
#include "parahex/hexagon.hpp"

#include <string>
#include <string_view>

namespace parahex {

inline constexpr std::string_view kFormatTag = "parahextile/1";

/// JSON patch document. Angles are "num/den" strings; coordinates use the
/// shortest decimal that reads back to the same double.
std::string to_json(const Patch& patch);
/// Throws ParseError (with line/column or field path) on malformed input and
/// SchemaError on a missing or mismatched format tag or prototype.
Patch from_json(std::string_view text);

/// Exact angles, 2-decimal rounding, symmetry class and rotation orders.
std::string hexagon_to_json(const HexagonSpec& hex);

enum class FillMode { ByChirality, ByWedge, None };
FillMode parse_fill_mode(std::string_view text);

struct RenderStyle {
    double stroke_width = 0.02;
    FillMode fill_mode = FillMode::ByChirality;
    double margin = 0.05;  // fraction of the larger bounding-box side
};

/// SVG 1.1 document with one <path> per tile. Byte-for-byte deterministic.
std::string to_svg(const Patch& patch, const RenderStyle& style = {});

}  // namespace parahex
