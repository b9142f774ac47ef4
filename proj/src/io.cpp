#include "parahex/io.hpp"

#include "parahex/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <fmt/format.h>
#include <json.hpp>

namespace parahex {

using nlohmann::json;

namespace {

json angle_json(const AngleDeg& a) { return a.to_string(); }

[[noreturn]] void field_error(std::string_view path, std::string_view what) {
    throw ParseError(fmt::format("{}: {}", path, what));
}

const json& require(const json& obj, const std::string& key, std::string_view path) {
    auto it = obj.find(key);
    if (it == obj.end()) field_error(path, fmt::format("missing field '{}'", key));
    return *it;
}

AngleDeg read_angle(const json& j, std::string_view path) {
    if (!j.is_string()) field_error(path, "expected an angle string such as \"360/7\"");
    try {
        return AngleDeg::parse(j.get<std::string>());
    } catch (const DomainError& e) {
        field_error(path, e.what());
    }
}

double read_number(const json& j, std::string_view path) {
    if (!j.is_number()) field_error(path, "expected a number");
    double v = j.get<double>();
    if (!std::isfinite(v)) field_error(path, "number is not finite");
    return v;
}

int read_int(const json& j, std::string_view path) {
    if (!j.is_number_integer()) field_error(path, "expected an integer");
    return j.get<int>();
}

std::string read_string(const json& j, std::string_view path) {
    if (!j.is_string()) field_error(path, "expected a string");
    return j.get<std::string>();
}

std::string num(double v) {
    if (std::abs(v) < 5e-7) v = 0.0;
    return fmt::format("{:.6f}", v);
}

}  // namespace

std::string to_json(const Patch& patch) {
    json doc;
    doc["format"] = kFormatTag;
    json proto;
    const char* names = "ABCDEF";
    for (std::size_t i = 0; i < 6; ++i) proto[std::string(1, names[i])] = angle_json(patch.prototype.angle(i));
    doc["prototype"] = proto;
    if (patch.bisection) {
        doc["bisection"] = {{"case", std::string(to_string(patch.bisection->kase))}, {"t", patch.bisection->t}};
    } else {
        doc["bisection"] = nullptr;
    }
    doc["meta"] = {{"kind", std::string(to_string(patch.meta.kind))},
                   {"order", patch.meta.order},
                   {"depth", patch.meta.depth},
                   {"hole_mode", std::string(to_string(patch.meta.hole_mode))}};
    json tiles = json::array();
    for (const auto& t : patch.tiles) {
        tiles.push_back({{"id", t.id},
                         {"proto", std::string(to_string(t.proto))},
                         {"reflect", t.placement.reflect},
                         {"rotation", angle_json(t.placement.rotation)},
                         {"translation", {t.placement.translation.x, t.placement.translation.y}},
                         {"wedge", t.wedge}});
    }
    doc["tiles"] = std::move(tiles);
    return doc.dump(1) + "\n";
}

Patch from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
        byte = std::min(byte, text.size());
        std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
        std::size_t last_nl = text.rfind('\n', byte == 0 ? 0 : byte - 1);
        std::size_t column = last_nl == std::string_view::npos ? byte + 1 : byte - last_nl;
        throw ParseError(fmt::format("line {}, column {}: malformed JSON ({})", line, column, e.what()));
    }
    if (!doc.is_object()) throw ParseError("document root must be an object");

    auto fmt_it = doc.find("format");
    if (fmt_it == doc.end()) throw SchemaError("missing \"format\" tag");
    if (!fmt_it->is_string() || fmt_it->get<std::string>() != kFormatTag) {
        throw SchemaError(fmt::format("unsupported format {} (expected \"{}\")", fmt_it->dump(), kFormatTag));
    }
    auto proto_it = doc.find("prototype");
    if (proto_it == doc.end() || !proto_it->is_object()) throw SchemaError("missing \"prototype\" object");

    const json& pj = *proto_it;
    const AngleDeg a = read_angle(require(pj, "A", "prototype"), "prototype.A");
    const AngleDeg b = read_angle(require(pj, "B", "prototype"), "prototype.B");
    HexagonSpec hex = [&] {
        try {
            return make_hexagon(a, b);
        } catch (const DomainError& e) {
            throw SchemaError(fmt::format("prototype: {}", e.what()));
        }
    }();
    const char* names = "ABCDEF";
    for (std::size_t i = 2; i < 6; ++i) {
        std::string key(1, names[i]);
        if (!pj.contains(key)) continue;
        if (read_angle(pj[key], "prototype." + key) != hex.angle(i)) {
            throw SchemaError(fmt::format("prototype.{} is inconsistent with a parallelohexagon", key));
        }
    }

    Patch patch{hex, std::nullopt, {}, {}};
    if (auto it = doc.find("bisection"); it != doc.end() && !it->is_null()) {
        if (!it->is_object()) field_error("bisection", "expected an object or null");
        BisectionSpec spec;
        try {
            spec.kase = parse_bisect_case(read_string(require(*it, "case", "bisection"), "bisection.case"));
        } catch (const DomainError& e) {
            field_error("bisection.case", e.what());
        }
        spec.t = read_number(require(*it, "t", "bisection"), "bisection.t");
        if (spec.t < 0.0 || spec.t > 1.0) field_error("bisection.t", "outside [0, 1]");
        patch.bisection = spec;
    }

    const json& mj = require(doc, "meta", "document");
    if (!mj.is_object()) field_error("meta", "expected an object");
    const std::string kind = read_string(require(mj, "kind", "meta"), "meta.kind");
    if (kind == "rotational") {
        patch.meta.kind = PatchKind::Rotational;
    } else if (kind == "hole") {
        patch.meta.kind = PatchKind::Hole;
    } else {
        field_error("meta.kind", fmt::format("unknown kind '{}'", kind));
    }
    patch.meta.order = read_int(require(mj, "order", "meta"), "meta.order");
    patch.meta.depth = read_int(require(mj, "depth", "meta"), "meta.depth");
    if (patch.meta.depth < 1) field_error("meta.depth", "must be at least 1");
    if (auto it = mj.find("hole_mode"); it != mj.end()) {
        const std::string mode = read_string(*it, "meta.hole_mode");
        if (mode == "none") {
            patch.meta.hole_mode = HoleMode::None;
        } else if (mode == "regular") {
            patch.meta.hole_mode = HoleMode::Regular;
        } else if (mode == "equilateral") {
            patch.meta.hole_mode = HoleMode::Equilateral;
        } else {
            field_error("meta.hole_mode", fmt::format("unknown mode '{}'", mode));
        }
    }

    const json& tj = require(doc, "tiles", "document");
    if (!tj.is_array()) field_error("tiles", "expected an array");
    for (std::size_t i = 0; i < tj.size(); ++i) {
        const std::string path = fmt::format("tiles[{}]", i);
        const json& t = tj[i];
        if (!t.is_object()) field_error(path, "expected an object");
        PlacedTile tile;
        tile.id = read_int(require(t, "id", path), path + ".id");
        try {
            tile.proto = parse_proto_kind(read_string(require(t, "proto", path), path + ".proto"));
        } catch (const DomainError& e) {
            field_error(path + ".proto", e.what());
        }
        const json& r = require(t, "reflect", path);
        if (!r.is_boolean()) field_error(path + ".reflect", "expected a boolean");
        tile.placement.reflect = r.get<bool>();
        tile.placement.rotation = read_angle(require(t, "rotation", path), path + ".rotation").normalized();
        const json& tr = require(t, "translation", path);
        if (!tr.is_array() || tr.size() != 2) field_error(path + ".translation", "expected [x, y]");
        tile.placement.translation = {read_number(tr[0], path + ".translation[0]"),
                                      read_number(tr[1], path + ".translation[1]")};
        if (auto w = t.find("wedge"); w != t.end()) tile.wedge = read_int(*w, path + ".wedge");
        if (tile.proto != ProtoKind::Hexagon && !patch.bisection) {
            field_error(path + ".proto", "piece tiles need a bisection");
        }
        patch.tiles.push_back(tile);
    }
    for (std::size_t i = 0; i < patch.tiles.size(); ++i) {
        for (std::size_t j = i + 1; j < patch.tiles.size(); ++j) {
            if (patch.tiles[i].id == patch.tiles[j].id) {
                field_error(fmt::format("tiles[{}].id", j), fmt::format("duplicate id {}", patch.tiles[j].id));
            }
        }
    }
    return patch;
}

std::string hexagon_to_json(const HexagonSpec& hex) {
    json doc;
    json exact, rounded;
    const char* names = "ABCDEF";
    for (std::size_t i = 0; i < 6; ++i) {
        exact[std::string(1, names[i])] = angle_json(hex.angle(i));
        rounded[std::string(1, names[i])] = hex.angle(i).to_fixed(2);
    }
    doc["angles"] = exact;
    doc["rounded"] = rounded;
    doc["edge"] = 1;
    doc["symmetry"] = std::string(to_string(classify_hexagon(hex)));
    const auto orders = rotation_orders(hex);
    doc["rotation_orders"] = json(std::vector<int>(orders.begin(), orders.end()));
    const auto fam = families(hex);
    json types = json::array();
    if (fam.type1) types.push_back(1);
    if (fam.type2) types.push_back(2);
    if (fam.type3) types.push_back(3);
    doc["types"] = types;
    return doc.dump(1) + "\n";
}

FillMode parse_fill_mode(std::string_view text) {
    if (text == "by-chirality") return FillMode::ByChirality;
    if (text == "by-wedge") return FillMode::ByWedge;
    if (text == "none") return FillMode::None;
    throw DomainError(fmt::format("unknown fill mode '{}'", text));
}

std::string to_svg(const Patch& patch, const RenderStyle& style) {
    if (!(style.stroke_width > 0.0)) throw DomainError("stroke width must be positive");
    if (!(style.margin >= 0.0)) throw DomainError("margin must be non-negative");

    const auto tiles = realize(patch);
    std::vector<Point> all;
    for (const auto& t : tiles) {
        for (Point p : t.vertices()) all.push_back({p.x, -p.y});
    }
    double min_x = 0, min_y = 0, w = 1, h = 1;
    if (!all.empty()) {
        BBox b = bbox(all);
        double pad = style.margin * std::max(b.max_x - b.min_x, b.max_y - b.min_y);
        min_x = b.min_x - pad;
        min_y = b.min_y - pad;
        w = b.max_x - b.min_x + 2 * pad;
        h = b.max_y - b.min_y + 2 * pad;
    }

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\" width=\"{}\" "
        "height=\"{}\">\n",
        num(min_x), num(min_y), num(w), num(h), num(w * 100.0), num(h * 100.0));
    out += fmt::format("<g stroke=\"#222222\" stroke-width=\"{}\" stroke-linejoin=\"round\">\n", num(style.stroke_width));
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        const auto& t = patch.tiles[i];
        std::string fill = "none";
        if (style.fill_mode == FillMode::ByChirality) {
            fill = t.placement.reflect ? "#8fb3d9" : "#f2d49b";
        } else if (style.fill_mode == FillMode::ByWedge) {
            fill = t.wedge % 2 == 0 ? "#eeeeee" : "#b0b0b0";
        }
        std::string d;
        for (std::size_t k = 0; k < tiles[i].size(); ++k) {
            Point p = tiles[i].vertex(k);
            d += fmt::format("{}{} {} ", k == 0 ? "M" : "L", num(p.x), num(-p.y));
        }
        d += "Z";
        out += fmt::format("<path id=\"t{}\" d=\"{}\" fill=\"{}\"/>\n", t.id, d, fill);
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace parahex
