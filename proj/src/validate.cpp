#include "parahex/validate.hpp"

#include "parahex/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

namespace parahex {

std::string_view to_string(EdgeContact c) {
    return c == EdgeContact::EdgeToEdge ? "edge-to-edge" : "non-edge-to-edge";
}

std::string SymmetryReport::label() const {
    return fmt::format("{}{}", kind == SymmetryKind::D ? 'D' : 'C', order);
}

namespace {

constexpr double kSectorTolDeg = 1e-6;
constexpr double kSumTolDeg = 1e-7;
constexpr double kMatchTol = 1e-6;

struct Sector {
    double start = 0.0;  // heading of the first bounding ray, degrees
    double width = 0.0;
    std::optional<AngleDeg> exact;
};

struct Edge {
    std::size_t tile = 0;
    Point a, b;
    BBox box;
};

std::vector<Edge> collect_edges(std::span<const ConvexPolygon> tiles) {
    std::vector<Edge> edges;
    for (std::size_t t = 0; t < tiles.size(); ++t) {
        const auto& poly = tiles[t];
        for (std::size_t i = 0; i < poly.size(); ++i) {
            Point a = poly.vertex(i);
            Point b = poly.vertex(i + 1);
            std::array<Point, 2> ab{a, b};
            edges.push_back(Edge{t, a, b, bbox(ab)});
        }
    }
    return edges;
}

// Position of p along edge e (length units) when p lies on e's line.
std::optional<double> along(const Edge& e, Point p) {
    Point d = e.b - e.a;
    double len = norm(d);
    if (std::abs(cross(d, p - e.a)) / len > kPointTol) return std::nullopt;
    return dot(p - e.a, d) / len;
}

// Interval of `f` on `e` when f runs along e in the opposite direction.
std::optional<std::pair<double, double>> opposite_overlap(const Edge& e, const Edge& f) {
    if (!e.box.intersects(f.box, kPointTol)) return std::nullopt;
    if (dot(e.b - e.a, f.b - f.a) >= 0.0) return std::nullopt;
    auto s1 = along(e, f.a);
    auto s2 = along(e, f.b);
    if (!s1 || !s2) return std::nullopt;
    double lo = std::max(0.0, std::min(*s1, *s2));
    double hi = std::min(distance(e.a, e.b), std::max(*s1, *s2));
    if (hi - lo <= kPointTol) return std::nullopt;
    return std::pair{lo, hi};
}

struct Incidence {
    PointIndex index{1e-7};
    std::vector<std::vector<Sector>> sectors;
};

Incidence build_incidence(std::span<const ConvexPolygon> tiles, const std::vector<Edge>& edges) {
    Incidence inc;
    for (const auto& poly : tiles) {
        for (std::size_t i = 0; i < poly.size(); ++i) {
            std::size_t id = inc.index.insert(poly.vertex(i));
            if (id >= inc.sectors.size()) inc.sectors.resize(id + 1);
            const auto& c = poly.corners()[i];
            inc.sectors[id].push_back(Sector{heading_deg(poly.vertex(i + 1) - poly.vertex(i)), c.deg, c.exact});
        }
    }
    // A vertex lying inside another tile's edge sees a straight angle there.
    for (std::size_t id = 0; id < inc.index.size(); ++id) {
        const Point p = inc.index.at(id);
        for (const auto& e : edges) {
            if (p.x < e.box.min_x - kPointTol || p.x > e.box.max_x + kPointTol || p.y < e.box.min_y - kPointTol ||
                p.y > e.box.max_y + kPointTol) {
                continue;
            }
            auto s = along(e, p);
            if (!s) continue;
            double len = distance(e.a, e.b);
            if (*s > kPointTol && *s < len - kPointTol) {
                inc.sectors[id].push_back(Sector{heading_deg(e.b - e.a), 180.0, AngleDeg(180)});
            }
        }
    }
    return inc;
}

bool covers_full_turn(const std::vector<Sector>& sectors) {
    if (sectors.empty()) return false;
    std::vector<std::pair<double, double>> iv;
    for (const auto& s : sectors) {
        iv.emplace_back(s.start, s.start + s.width);
        iv.emplace_back(s.start + 360.0, s.start + s.width + 360.0);
    }
    std::sort(iv.begin(), iv.end());
    const double origin = iv.front().first;
    double reach = origin;
    for (const auto& [lo, hi] : iv) {
        if (lo > reach + kSectorTolDeg) break;
        reach = std::max(reach, hi);
    }
    return reach >= origin + 360.0 - kSectorTolDeg;
}

struct SectorSum {
    double deg = 0.0;
    std::optional<AngleDeg> exact;
};

SectorSum sum_sectors(const std::vector<Sector>& sectors) {
    SectorSum s;
    AngleDeg exact;
    bool all_exact = true;
    for (const auto& sec : sectors) {
        s.deg += sec.width;
        if (sec.exact) {
            exact += *sec.exact;
        } else {
            all_exact = false;
        }
    }
    if (all_exact) s.exact = exact;
    return s;
}

std::vector<std::vector<Point>> outlines_of(std::span<const ConvexPolygon> tiles) {
    std::vector<std::vector<Point>> out;
    for (const auto& t : tiles) out.emplace_back(t.vertices().begin(), t.vertices().end());
    return out;
}

Point mean(std::span<const Point> pts) {
    Point c{};
    for (Point p : pts) c = c + p;
    return (1.0 / static_cast<double>(pts.size())) * c;
}

// Nearest small-denominator fraction to a heading in degrees.
AngleDeg rational_heading(double deg) {
    deg = std::fmod(deg, 180.0);
    if (deg < 0) deg += 180.0;
    for (std::int64_t den = 1; den <= 10000; ++den) {
        double num = std::round(deg * static_cast<double>(den));
        if (std::abs(num / static_cast<double>(den) - deg) < 1e-7) {
            return AngleDeg(static_cast<std::int64_t>(num), den).normalized();
        }
    }
    return AngleDeg(static_cast<std::int64_t>(std::round(deg * 1e9)), 1000000000).normalized();
}

class OutlineSet {
public:
    explicit OutlineSet(const std::vector<std::vector<Point>>& outlines) : outlines_(outlines) {
        for (std::size_t i = 0; i < outlines_.size(); ++i) {
            std::size_t id = index_.insert(mean(outlines_[i]));
            if (id >= buckets_.size()) buckets_.resize(id + 1);
            buckets_[id].push_back(i);
        }
    }

    bool maps_to_self(const Isometry& iso) const {
        std::vector<Point> moved;
        for (const auto& o : outlines_) {
            moved.clear();
            for (Point p : o) moved.push_back(iso(p));
            auto id = index_.find(mean(moved));
            if (!id) return false;
            bool hit = false;
            for (std::size_t j : buckets_[*id]) {
                if (same_vertex_set(moved, outlines_[j], kMatchTol)) {
                    hit = true;
                    break;
                }
            }
            if (!hit) return false;
        }
        return true;
    }

private:
    const std::vector<std::vector<Point>>& outlines_;
    PointIndex index_{kMatchTol};
    std::vector<std::vector<std::size_t>> buckets_;
};

}  // namespace

ValidationReport validate_tiles(std::span<const ConvexPolygon> tiles, std::span<const int> ids) {
    ValidationReport report;
    std::vector<BBox> boxes;
    for (const auto& t : tiles) boxes.push_back(bbox(t.vertices()));

    for (std::size_t i = 0; i < tiles.size(); ++i) {
        for (std::size_t j = i + 1; j < tiles.size(); ++j) {
            if (!boxes[i].intersects(boxes[j], kPointTol)) continue;
            if (interiors_overlap(tiles[i], tiles[j])) report.overlap_pairs.emplace_back(ids[i], ids[j]);
        }
    }

    const auto edges = collect_edges(tiles);
    const auto inc = build_incidence(tiles, edges);
    for (std::size_t id = 0; id < inc.sectors.size(); ++id) {
        const auto& sectors = inc.sectors[id];
        if (!covers_full_turn(sectors)) continue;
        ++report.interior_vertices;
        const SectorSum sum = sum_sectors(sectors);
        if (sum.exact) {
            ++report.exact_interior_vertices;
            if (*sum.exact != AngleDeg::full_turn()) {
                report.bad_vertices.push_back(
                    BadVertex{inc.index.at(id), sum.deg - 360.0, *sum.exact - AngleDeg::full_turn()});
            }
        } else if (std::abs(sum.deg - 360.0) > kSumTolDeg) {
            report.bad_vertices.push_back(BadVertex{inc.index.at(id), sum.deg - 360.0, std::nullopt});
        }
    }

    for (std::size_t i = 0; i < edges.size() && report.edge_contact == EdgeContact::EdgeToEdge; ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (edges[i].tile == edges[j].tile) continue;
            if (!opposite_overlap(edges[i], edges[j])) continue;
            const bool full = distance(edges[i].a, edges[j].b) <= kPointTol && distance(edges[i].b, edges[j].a) <= kPointTol;
            if (!full) {
                report.edge_contact = EdgeContact::NonEdgeToEdge;
                break;
            }
        }
    }

    report.passed = report.overlap_pairs.empty() && report.bad_vertices.empty();
    return report;
}

ValidationReport validate_patch(const Patch& patch) {
    const auto tiles = realize(patch);
    std::vector<int> ids;
    for (const auto& t : patch.tiles) ids.push_back(t.id);
    return validate_tiles(tiles, ids);
}

Point patch_center(std::span<const ConvexPolygon> tiles) {
    std::vector<Point> cs;
    for (const auto& t : tiles) cs.push_back(t.centroid());
    return cs.empty() ? Point{} : mean(cs);
}

SymmetryReport detect_symmetry(const std::vector<std::vector<Point>>& outlines, Point center) {
    if (outlines.empty()) throw DegenerateError("no outlines to test for symmetry");
    std::vector<std::vector<Point>> local;
    for (const auto& o : outlines) {
        std::vector<Point> v;
        for (Point p : o) v.push_back(p - center);
        local.push_back(std::move(v));
    }
    const OutlineSet set(local);

    // Rotation orbits off the center have exactly `order` members in every
    // distance shell, so the order divides every shell size.
    std::vector<std::pair<double, std::size_t>> radii;
    for (std::size_t i = 0; i < local.size(); ++i) {
        double r = norm(mean(local[i]));
        if (r > kMatchTol) radii.emplace_back(r, i);
    }
    std::sort(radii.begin(), radii.end());
    std::int64_t g = 0;
    std::size_t ref = local.size();
    std::vector<std::size_t> ref_shell;
    for (std::size_t i = 0; i < radii.size();) {
        std::size_t j = i;
        while (j < radii.size() && radii[j].first - radii[i].first <= kMatchTol) ++j;
        g = std::gcd(g, static_cast<std::int64_t>(j - i));
        if (ref == local.size()) {
            ref = radii[i].second;
            for (std::size_t k = i; k < j; ++k) ref_shell.push_back(radii[k].second);
        }
        i = j;
    }
    if (g == 0) g = 720720;  // every outline is centered; test small orders directly

    int order = 1;
    for (int k = static_cast<int>(std::min<std::int64_t>(g, 360)); k >= 2; --k) {
        if (g % k != 0) continue;
        if (set.maps_to_self(Isometry::rotation_about_origin(turn_fraction(k)))) {
            order = k;
            break;
        }
    }
    if (order == 1) throw DegenerateError("no rotational symmetry of order 2 or more");

    SymmetryReport report;
    report.order = order;
    report.center = center;

    std::vector<double> candidates;
    if (ref < local.size()) {
        const double base = heading_deg(mean(local[ref]));
        for (std::size_t j : ref_shell) candidates.push_back(0.5 * (base + heading_deg(mean(local[j]))));
    } else {
        for (int k = 0; k < 2 * order; ++k) candidates.push_back(90.0 * k / order);
    }
    for (double c : candidates) {
        AngleDeg axis = rational_heading(c);
        if (!set.maps_to_self(Isometry::mirror(axis))) continue;
        report.kind = SymmetryKind::D;
        const AngleDeg step = AngleDeg(180, order);
        for (int k = 0; k < order; ++k) {
            AngleDeg a = axis + step * k;
            a = a.normalized();
            if (a >= AngleDeg(180)) a -= AngleDeg(180);
            report.axes.push_back(a);
        }
        std::sort(report.axes.begin(), report.axes.end());
        break;
    }
    return report;
}

SymmetryReport detect_symmetry(const Patch& patch) {
    const auto tiles = realize(patch);
    return detect_symmetry(outlines_of(tiles), patch_center(tiles));
}

HolePolygon extract_hole(const Patch& patch) {
    if (patch.meta.kind != PatchKind::Hole) throw NoHoleError("patch was not built as a hole pattern");
    const auto tiles = realize(patch);
    if (tiles.empty()) throw NoHoleError("empty patch");
    const Point center = patch_center(tiles);
    for (const auto& t : tiles) {
        std::vector<Point> v(t.vertices().begin(), t.vertices().end());
        bool outside = false;
        for (std::size_t i = 0; i < v.size() && !outside; ++i) {
            outside = orient(v[i], v[(i + 1) % v.size()], center) < -kPointTol;
        }
        if (!outside) throw NoHoleError("the patch center is covered by a tile");
    }

    // Uncovered stretches of tile edges, directed with the tile on the left.
    const auto edges = collect_edges(tiles);
    struct Segment {
        Point a, b;
    };
    std::vector<Segment> boundary;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        std::vector<std::pair<double, double>> covered;
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (edges[j].tile == e.tile) continue;
            if (auto ov = opposite_overlap(e, edges[j])) covered.push_back(*ov);
        }
        std::sort(covered.begin(), covered.end());
        const double len = distance(e.a, e.b);
        const Point dir = (1.0 / len) * (e.b - e.a);
        double pos = 0.0;
        for (const auto& [lo, hi] : covered) {
            if (lo > pos + kPointTol) boundary.push_back({e.a + pos * dir, e.a + lo * dir});
            pos = std::max(pos, hi);
        }
        if (len > pos + kPointTol) boundary.push_back({e.a + pos * dir, e.b});
    }
    if (boundary.empty()) throw NoHoleError("patch has no free boundary");

    auto dist_to_segment = [&](const Segment& s) {
        Point d = s.b - s.a;
        double t = std::clamp(dot(center - s.a, d) / dot(d, d), 0.0, 1.0);
        return distance(center, s.a + t * d);
    };
    std::size_t start = 0;
    for (std::size_t i = 1; i < boundary.size(); ++i) {
        if (dist_to_segment(boundary[i]) < dist_to_segment(boundary[start])) start = i;
    }

    // Walk with the hole on the right, preferring the sharpest right turn.
    std::vector<Point> walk;
    std::size_t cur = start;
    for (std::size_t steps = 0;; ++steps) {
        if (steps > boundary.size()) throw NoHoleError("hole boundary does not close");
        walk.push_back(boundary[cur].a);
        const Point end = boundary[cur].b;
        if (distance(end, boundary[start].a) <= 1e-7) break;
        const Point in_dir = end - boundary[cur].a;
        std::optional<std::size_t> next;
        double best = 1e9;
        for (std::size_t i = 0; i < boundary.size(); ++i) {
            if (distance(boundary[i].a, end) > 1e-7) continue;
            Point out_dir = boundary[i].b - boundary[i].a;
            double turn = std::atan2(cross(in_dir, out_dir), dot(in_dir, out_dir));
            if (turn < best) {
                best = turn;
                next = i;
            }
        }
        if (!next) throw NoHoleError("hole boundary is open");
        cur = *next;
    }
    std::reverse(walk.begin(), walk.end());

    std::vector<Point> corners_at;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        Point prev = walk[(i + walk.size() - 1) % walk.size()];
        Point next = walk[(i + 1) % walk.size()];
        if (std::abs(orient(prev, walk[i], next)) > kPointTol) corners_at.push_back(walk[i]);
    }
    if (corners_at.size() < 3) throw NoHoleError("degenerate hole boundary");

    const auto inc = build_incidence(tiles, edges);
    const auto measured = measured_angles(corners_at);
    std::vector<CornerAngle> corners;
    std::vector<CornerAngle> outer;
    for (std::size_t i = 0; i < corners_at.size(); ++i) {
        auto id = inc.index.find(corners_at[i]);
        SectorSum s = id ? sum_sectors(inc.sectors[*id]) : SectorSum{};
        if (s.exact) {
            outer.push_back(CornerAngle::of(*s.exact));
            corners.push_back(CornerAngle::of(AngleDeg::full_turn() - *s.exact));
        } else {
            outer.push_back(CornerAngle::measured(s.deg));
            corners.push_back(CornerAngle::measured(measured[i]));
        }
    }

    HolePolygon hole;
    try {
        hole.boundary = ConvexPolygon::make(corners_at, corners);
    } catch (const DomainError& e) {
        throw NoHoleError(fmt::format("central region is not a convex hole: {}", e.what()));
    }
    if (!strictly_inside(hole.boundary, center)) throw NoHoleError("traced boundary does not surround the center");
    hole.outer_angles = std::move(outer);

    hole.equilateral = true;
    for (std::size_t i = 0; i < hole.boundary.size(); ++i) {
        if (std::abs(distance(hole.boundary.vertex(i), hole.boundary.vertex(i + 1)) - 1.0) > 1e-9) hole.equilateral = false;
    }
    bool equal_angles = true;
    const auto hc = hole.boundary.corners();
    for (std::size_t i = 1; i < hc.size(); ++i) {
        if (hc[i].exact && hc[0].exact) {
            equal_angles = equal_angles && *hc[i].exact == *hc[0].exact;
        } else {
            equal_angles = equal_angles && std::abs(hc[i].deg - hc[0].deg) <= 1e-9;
        }
    }
    hole.regular = hole.equilateral && equal_angles;

    std::vector<std::vector<Point>> pts;
    for (Point p : hole.boundary.vertices()) pts.push_back({p});
    hole.symmetry = detect_symmetry(pts, mean(hole.boundary.vertices()));

    if (hole.equilateral && hole.boundary.size() == 6) {
        const auto want = patch.prototype.angles();
        for (std::size_t s = 0; s < 6 && !hole.pluggable; ++s) {
            bool fwd = true, rev = true;
            for (std::size_t i = 0; i < 6; ++i) {
                const auto& c = hc[(s + i) % 6];
                const double w_f = want[i].degrees();
                const double w_r = want[(6 - i) % 6].degrees();
                fwd = fwd && std::abs(c.deg - w_f) <= 1e-9;
                rev = rev && std::abs(c.deg - w_r) <= 1e-9;
            }
            hole.pluggable = fwd || rev;
        }
    }
    return hole;
}

}  // namespace parahex
