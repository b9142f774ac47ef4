#include "parahex/geom.hpp"

#include "parahex/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace parahex {

double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point a) { return std::hypot(a.x, a.y); }
double distance(Point a, Point b) { return norm(a - b); }

Point unit(const AngleDeg& heading) { return {heading.cos(), heading.sin()}; }

double heading_deg(Point v) {
    double d = std::atan2(v.y, v.x) * 180.0 / std::numbers::pi;
    if (d < 0) d += 360.0;
    if (d >= 360.0) d -= 360.0;
    return d;
}

double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }

// ---------------------------------------------------------------------------
// Isometry

Isometry Isometry::rotation_about_origin(const AngleDeg& a) {
    return Isometry{false, a.normalized(), {}};
}

Isometry Isometry::translate(Point t) { return Isometry{false, AngleDeg(0), t}; }

Isometry Isometry::mirror(const AngleDeg& line_heading, Point through) {
    Isometry m{true, (line_heading * 2).normalized(), {}};
    m.translation = through - m(through);
    return m;
}

Point Isometry::operator()(Point p) const {
    if (reflect) p.y = -p.y;
    double c = rotation.cos();
    double s = rotation.sin();
    return {c * p.x - s * p.y + translation.x, s * p.x + c * p.y + translation.y};
}

Isometry Isometry::inverse() const {
    Isometry inv;
    inv.reflect = reflect;
    inv.rotation = reflect ? rotation.normalized() : (-rotation).normalized();
    // translation is still zero, so this applies the inverse linear part
    Point lt = inv(translation);
    inv.translation = {-lt.x, -lt.y};
    return inv;
}

Isometry compose(const Isometry& f, const Isometry& g) {
    Isometry h;
    h.reflect = f.reflect != g.reflect;
    h.rotation = (f.reflect ? f.rotation - g.rotation : f.rotation + g.rotation).normalized();
    Isometry f_linear{f.reflect, f.rotation, {}};
    h.translation = f_linear(g.translation) + f.translation;
    return h;
}

// ---------------------------------------------------------------------------
// Polygons

double signed_area(std::span<const Point> pts) {
    double s = 0.0;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        s += cross(pts[i], pts[(i + 1) % n]);
    }
    return 0.5 * s;
}

double area(const ConvexPolygon& poly) { return signed_area(poly.vertices()); }

std::vector<double> measured_angles(std::span<const Point> pts) {
    const std::size_t n = pts.size();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Point prev = pts[(i + n - 1) % n];
        Point next = pts[(i + 1) % n];
        Point to_next = next - pts[i];
        Point to_prev = prev - pts[i];
        double a = std::atan2(cross(to_next, to_prev), dot(to_next, to_prev)) * 180.0 / std::numbers::pi;
        if (a < 0) a += 360.0;
        out[i] = a;
    }
    return out;
}

ConvexPolygon ConvexPolygon::make(std::vector<Point> vertices, std::vector<CornerAngle> corners) {
    const std::size_t n = vertices.size();
    if (n < 3) throw DomainError("polygon needs at least 3 vertices");
    if (corners.size() != n) throw DomainError("corner count does not match vertex count");
    for (Point p : vertices) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw DomainError("non-finite vertex");
    }
    if (signed_area(vertices) <= 0.0) throw DomainError("polygon is not counterclockwise");
    for (std::size_t i = 0; i < n; ++i) {
        Point a = vertices[(i + n - 1) % n];
        Point b = vertices[i];
        Point c = vertices[(i + 1) % n];
        if (orient(a, b, c) <= 1e-12 * std::max(1.0, distance(a, b) * distance(b, c))) {
            throw DomainError(fmt::format("polygon is not strictly convex at vertex {}", i));
        }
    }
    ConvexPolygon poly(std::move(vertices), std::move(corners));
    const auto expected = AngleDeg(180) * static_cast<std::int64_t>(n - 2);
    if (auto exact = poly.exact_angle_sum()) {
        if (*exact != expected) {
            throw DomainError(fmt::format("angle sum {} differs from {}", exact->to_string(), expected.to_string()));
        }
    } else if (std::abs(poly.angle_sum_deg() - expected.degrees()) > 1e-7) {
        throw DomainError("measured angle sum differs from (k-2)*180");
    }
    return poly;
}

ConvexPolygon ConvexPolygon::from_points(std::vector<Point> vertices) {
    std::vector<CornerAngle> corners;
    for (double d : measured_angles(vertices)) corners.push_back(CornerAngle::measured(d));
    return make(std::move(vertices), std::move(corners));
}

Point ConvexPolygon::centroid() const {
    double a = 0.0, cx = 0.0, cy = 0.0;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        Point p = vertices_[i];
        Point q = vertices_[(i + 1) % n];
        double c = cross(p, q);
        a += c;
        cx += (p.x + q.x) * c;
        cy += (p.y + q.y) * c;
    }
    return {cx / (3.0 * a), cy / (3.0 * a)};
}

std::optional<AngleDeg> ConvexPolygon::exact_angle_sum() const {
    AngleDeg s;
    for (const auto& c : corners_) {
        if (!c.exact) return std::nullopt;
        s += *c.exact;
    }
    return s;
}

double ConvexPolygon::angle_sum_deg() const {
    double s = 0.0;
    for (const auto& c : corners_) s += c.deg;
    return s;
}

ConvexPolygon ConvexPolygon::transformed(const Isometry& iso) const {
    std::vector<Point> v;
    std::vector<CornerAngle> c;
    v.reserve(size());
    c.reserve(size());
    for (Point p : vertices_) v.push_back(iso(p));
    c.assign(corners_.begin(), corners_.end());
    if (iso.reflect && !v.empty()) {
        std::reverse(v.begin() + 1, v.end());
        std::reverse(c.begin() + 1, c.end());
    }
    return ConvexPolygon(std::move(v), std::move(c));
}

ConvexPolygon apply(const Isometry& iso, const ConvexPolygon& poly) { return poly.transformed(iso); }

std::vector<Point> clip_convex(std::span<const Point> subject, std::span<const Point> clip) {
    std::vector<Point> out(subject.begin(), subject.end());
    const std::size_t m = clip.size();
    for (std::size_t i = 0; i < m && !out.empty(); ++i) {
        Point a = clip[i];
        Point b = clip[(i + 1) % m];
        std::vector<Point> in = std::move(out);
        out.clear();
        const std::size_t k = in.size();
        for (std::size_t j = 0; j < k; ++j) {
            Point p = in[j];
            Point q = in[(j + 1) % k];
            double dp = orient(a, b, p);
            double dq = orient(a, b, q);
            if (dp >= 0) out.push_back(p);
            if ((dp >= 0) != (dq >= 0)) {
                double t = dp / (dp - dq);
                out.push_back(p + t * (q - p));
            }
        }
    }
    return out;
}

bool interiors_overlap(const ConvexPolygon& p, const ConvexPolygon& q) {
    if (!bbox(p.vertices()).intersects(bbox(q.vertices()), kPointTol)) return false;
    auto inter = clip_convex(p.vertices(), q.vertices());
    if (inter.size() < 3) return false;
    return signed_area(inter) > kOverlapArea;
}

bool strictly_inside(const ConvexPolygon& poly, Point p, double tol) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        Point a = poly.vertex(i);
        Point b = poly.vertex(i + 1);
        if (orient(a, b, p) / distance(a, b) <= tol) return false;
    }
    return true;
}

bool BBox::intersects(const BBox& o, double pad) const {
    return min_x <= o.max_x + pad && o.min_x <= max_x + pad && min_y <= o.max_y + pad && o.min_y <= max_y + pad;
}

BBox bbox(std::span<const Point> pts) {
    BBox b;
    if (pts.empty()) return b;
    b.min_x = b.max_x = pts[0].x;
    b.min_y = b.max_y = pts[0].y;
    for (Point p : pts) {
        b.min_x = std::min(b.min_x, p.x);
        b.max_x = std::max(b.max_x, p.x);
        b.min_y = std::min(b.min_y, p.y);
        b.max_y = std::max(b.max_y, p.y);
    }
    return b;
}

// ---------------------------------------------------------------------------
// PointIndex

std::int64_t PointIndex::cell(double v) { return static_cast<std::int64_t>(std::floor(v / kSnapGrid)); }

std::optional<std::size_t> PointIndex::find(Point p) const {
    const std::int64_t cx = cell(p.x);
    const std::int64_t cy = cell(p.y);
    std::optional<std::size_t> best;
    double best_d = tol_;
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
        for (std::int64_t dy = -1; dy <= 1; ++dy) {
            auto it = cells_.find(Key{cx + dx, cy + dy});
            if (it == cells_.end()) continue;
            for (std::size_t id : it->second) {
                double d = distance(points_[id], p);
                if (d <= best_d) {
                    best_d = d;
                    best = id;
                }
            }
        }
    }
    return best;
}

std::size_t PointIndex::insert(Point p) {
    if (auto id = find(p)) return *id;
    std::size_t id = points_.size();
    points_.push_back(p);
    cells_[Key{cell(p.x), cell(p.y)}].push_back(id);
    return id;
}

bool same_vertex_set(std::span<const Point> a, std::span<const Point> b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (Point p : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!used[j] && distance(p, b[j]) <= tol) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace parahex
