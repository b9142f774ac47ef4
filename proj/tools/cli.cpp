#include "cli.hpp"

#include "parahex/assemble.hpp"
#include "parahex/bisect.hpp"
#include "parahex/errors.hpp"
#include "parahex/hexagon.hpp"
#include "parahex/io.hpp"
#include "parahex/validate.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace parahex::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(fmt::format("cannot open '{}' for reading", path));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(fmt::format("cannot open '{}' for writing", path));
    out << text;
    if (!out) throw Error(fmt::format("failed writing '{}'", path));
}

std::optional<AngleDeg> opt_angle(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return AngleDeg::parse(text);
}

void emit(const Patch& patch, const std::string& svg_path, const std::string& json_path, std::ostream& out) {
    write_file(svg_path, to_svg(patch));
    if (!json_path.empty()) write_file(json_path, to_json(patch));
    out << fmt::format("{} tiles -> {}", patch.tiles.size(), svg_path);
    if (!json_path.empty()) out << fmt::format(", {}", json_path);
    out << "\n";
}

std::string angle_row(const HexagonSpec& hex) {
    std::string row;
    for (std::size_t i = 0; i < 6; ++i) row += fmt::format(" {:>7}", hex.angle(i).to_fixed(2));
    return row;
}

void print_tables(int max_n, int max_m, std::ostream& out) {
    out << "Hexagons for n-fold rotational tilings\n";
    out << fmt::format("{:>3}{:>8}{:>8}{:>8}{:>8}{:>8}{:>8}\n", "n", "A", "B", "C", "D", "E", "F");
    for (int n = 3; n <= max_n; ++n) out << fmt::format("{:>3}{}\n", n, angle_row(hexagon_for_n(n)));
    out << "\nHexagons for regular m-gon holes (n: matching rotational row)\n";
    out << fmt::format("{:>3}{:>8}{:>8}{:>8}{:>8}{:>8}{:>8}{:>6}\n", "m", "A", "B", "C", "D", "E", "F", "n");
    for (int m = 5; m <= max_m; ++m) {
        std::string n_col = m % 2 == 0 && m / 2 >= 3 ? std::to_string(m / 2) : "";
        out << fmt::format("{:>3}{}{:>6}\n", m, angle_row(hexagon_for_hole(m)), n_col);
    }
}

void print_report(const ValidationReport& r, std::ostream& out) {
    out << fmt::format("passed: {}\n", r.passed ? "yes" : "no");
    out << fmt::format("edge contact: {}\n", to_string(r.edge_contact));
    out << fmt::format("interior vertices: {} ({} exact)\n", r.interior_vertices, r.exact_interior_vertices);
    out << fmt::format("overlapping pairs: {}\n", r.overlap_pairs.size());
    for (const auto& [i, j] : r.overlap_pairs) out << fmt::format("  tiles {} and {}\n", i, j);
    out << fmt::format("bad vertices: {}\n", r.bad_vertices.size());
    for (const auto& v : r.bad_vertices) {
        out << fmt::format("  ({:.6f}, {:.6f}) residual {:.9f} deg\n", v.at.x, v.at.y, v.residual_deg);
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parallelohexagon tilings: construction, bisection, rendering and checks", "parahex"};
    app.require_subcommand(1);

    // hexagon
    auto* hex_cmd = app.add_subcommand("hexagon", "Print the hexagon for an n-fold tiling or an m-gon hole");
    int hex_n = 0, hex_m = 0;
    std::string hex_b;
    auto* opt_n = hex_cmd->add_option("--n", hex_n, "rotation order (angle A = 360/n)")->check(CLI::Range(3, 1000000));
    auto* opt_m = hex_cmd->add_option("--hole-m", hex_m, "regular hole order m")->check(CLI::Range(5, 1000000));
    hex_cmd->add_option("--b", hex_b, "angle B (134, 134.5 or 360/7)")->needs(opt_n);
    opt_n->excludes(opt_m);
    hex_cmd->require_option(1, 2);

    // tile
    auto* tile_cmd = app.add_subcommand("tile", "Build an n-fold rotationally symmetric patch");
    int tile_n = 0, tile_depth = 0;
    std::string tile_b, tile_bisect, tile_out, tile_json;
    std::optional<std::uint64_t> tile_seed;
    tile_cmd->add_option("--n", tile_n, "rotation order")->required();
    tile_cmd->add_option("--b", tile_b, "angle B");
    tile_cmd->add_option("--depth", tile_depth, "hexagons along a unit edge")->required()->check(CLI::PositiveNumber);
    tile_cmd->add_option("--bisect", tile_bisect, "CASE:t, e.g. II:0.3");
    tile_cmd->add_option("--random-seed", tile_seed, "flip bisected cells at random");
    tile_cmd->add_option("--out", tile_out, "SVG output path")->required();
    tile_cmd->add_option("--json", tile_json, "JSON output path");

    // hole
    auto* hole_cmd = app.add_subcommand("hole", "Build a pattern around a central polygonal hole");
    int hole_m = 0, hole_depth = 0;
    std::string hole_a, hole_b, hole_out, hole_json;
    hole_cmd->add_option("--m", hole_m, "hole order")->required();
    auto* opt_a = hole_cmd->add_option("--a", hole_a, "angle A (equilateral-hole mode)");
    auto* opt_hb = hole_cmd->add_option("--b", hole_b, "angle B (equilateral-hole mode)");
    opt_a->needs(opt_hb);
    opt_hb->needs(opt_a);
    hole_cmd->add_option("--depth", hole_depth, "hexagons along a unit edge")->required()->check(CLI::PositiveNumber);
    hole_cmd->add_option("--out", hole_out, "SVG output path")->required();
    hole_cmd->add_option("--json", hole_json, "JSON output path");

    // validate / symmetry
    auto* val_cmd = app.add_subcommand("validate", "Check overlaps, vertex sums and edge contact");
    std::string val_in;
    val_cmd->add_option("--in", val_in, "JSON patch")->required();
    auto* sym_cmd = app.add_subcommand("symmetry", "Print the symmetry group of a patch");
    std::string sym_in;
    sym_cmd->add_option("--in", sym_in, "JSON patch")->required();

    // tables
    auto* tab_cmd = app.add_subcommand("tables", "Print the hexagon angle tables");
    int tab_max = 18, tab_max_m = 25;
    tab_cmd->add_option("--max", tab_max, "largest n of the first table")->check(CLI::Range(3, 1000));
    tab_cmd->add_option("--max-m", tab_max_m, "largest m of the second table")->check(CLI::Range(5, 1000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*hex_cmd) {
            HexagonSpec hex = hex_m != 0 ? hexagon_for_hole(hex_m) : hexagon_for_n(hex_n, opt_angle(hex_b));
            out << hexagon_to_json(hex);
            return kExitOk;
        }
        if (*tile_cmd) {
            Patch patch = build_rotational_tiling(hexagon_for_n(tile_n, opt_angle(tile_b)), tile_n, tile_depth);
            if (!tile_bisect.empty()) {
                auto choices = tile_seed ? ReflectionChoices::seeded(*tile_seed) : ReflectionChoices::none();
                patch = bisect_patch(patch, parse_bisection(tile_bisect), std::move(choices));
            } else if (tile_seed) {
                throw DomainError("--random-seed needs --bisect");
            }
            emit(patch, tile_out, tile_json, out);
            return kExitOk;
        }
        if (*hole_cmd) {
            HexagonSpec hex = hole_a.empty() ? hexagon_for_hole(hole_m)
                                             : make_hexagon(AngleDeg::parse(hole_a), AngleDeg::parse(hole_b));
            emit(build_hole_tiling(hex, hole_m, hole_depth), hole_out, hole_json, out);
            return kExitOk;
        }
        if (*val_cmd) {
            const ValidationReport report = validate_patch(from_json(read_file(val_in)));
            print_report(report, out);
            return report.passed ? kExitOk : kExitInvalid;
        }
        if (*sym_cmd) {
            const Patch patch = from_json(read_file(sym_in));
            try {
                out << detect_symmetry(patch).label() << "\n";
            } catch (const DegenerateError&) {
                out << "C1\n";
            }
            return kExitOk;
        }
        if (*tab_cmd) {
            print_tables(tab_max, tab_max_m, out);
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace parahex::cli
