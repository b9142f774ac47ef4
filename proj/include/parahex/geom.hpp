#pragma once

#include "parahex/angle.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace parahex {

/// Point identity tolerance, in edge-length units.
inline constexpr double kPointTol = 1e-9;
/// Grid used to bucket vertices into incidence clusters.
inline constexpr double kSnapGrid = 1e-6;
/// Minimum intersection area that counts as an overlap.
inline constexpr double kOverlapArea = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double k, Point a) { return {k * a.x, k * a.y}; }
    friend Point operator*(Point a, double k) { return {k * a.x, k * a.y}; }
    friend bool operator==(const Point&, const Point&) = default;
};

double dot(Point a, Point b);
double cross(Point a, Point b);
double norm(Point a);
double distance(Point a, Point b);
/// Unit vector at an exact heading.
Point unit(const AngleDeg& heading);
/// Heading of a vector in degrees, in [0, 360).
double heading_deg(Point v);
/// Signed turn orientation of (a, b, c): > 0 for a left turn.
double orient(Point a, Point b, Point c);

/// Interior angle at a polygon corner. Exact when it is a rational number
/// of degrees known by construction; otherwise only the measured value.
struct CornerAngle {
    double deg = 0.0;
    std::optional<AngleDeg> exact;

    static CornerAngle of(const AngleDeg& a) { return {a.degrees(), a}; }
    static CornerAngle measured(double d) { return {d, std::nullopt}; }
    friend bool operator==(const CornerAngle&, const CornerAngle&) = default;
};

/// p -> R(rotation) * S^reflect * p + translation, S = mirror in the x-axis.
struct Isometry {
    bool reflect = false;
    AngleDeg rotation;
    Point translation;

    static Isometry identity() { return {}; }
    static Isometry rotation_about_origin(const AngleDeg& a);
    static Isometry translate(Point t);
    /// Mirror in the line through `through` with direction `line_heading`.
    static Isometry mirror(const AngleDeg& line_heading, Point through = {});

    Point operator()(Point p) const;
    Isometry inverse() const;

    friend bool operator==(const Isometry&, const Isometry&) = default;
};

/// apply(compose(f, g), p) == apply(f, apply(g, p)).
Isometry compose(const Isometry& f, const Isometry& g);

/// Strictly convex, counterclockwise polygon without a repeated closing
/// vertex, with the interior angle at each vertex.
class ConvexPolygon {
public:
    ConvexPolygon() = default;

    /// Checks orientation, strict convexity and the angle sum; throws
    /// DomainError otherwise.
    static ConvexPolygon make(std::vector<Point> vertices, std::vector<CornerAngle> corners);
    /// Corners are measured from the coordinates.
    static ConvexPolygon from_points(std::vector<Point> vertices);

    std::span<const Point> vertices() const { return vertices_; }
    std::span<const CornerAngle> corners() const { return corners_; }
    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }
    Point vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

    Point centroid() const;
    /// Sum of corner angles, exact when every corner is exact.
    std::optional<AngleDeg> exact_angle_sum() const;
    double angle_sum_deg() const;

    ConvexPolygon transformed(const Isometry& iso) const;

private:
    ConvexPolygon(std::vector<Point> v, std::vector<CornerAngle> c)
        : vertices_(std::move(v)), corners_(std::move(c)) {}

    std::vector<Point> vertices_;
    std::vector<CornerAngle> corners_;
};

ConvexPolygon apply(const Isometry& iso, const ConvexPolygon& poly);

double signed_area(std::span<const Point> pts);
double area(const ConvexPolygon& poly);

/// Measured interior angles of a counterclockwise vertex loop, in degrees.
std::vector<double> measured_angles(std::span<const Point> pts);

/// Intersection of two convex CCW polygons (Sutherland-Hodgman).
std::vector<Point> clip_convex(std::span<const Point> subject, std::span<const Point> clip);

/// True iff the open interiors share a region of area > kOverlapArea.
bool interiors_overlap(const ConvexPolygon& p, const ConvexPolygon& q);

/// Strictly inside (distance > tol from every edge).
bool strictly_inside(const ConvexPolygon& poly, Point p, double tol = kPointTol);

struct BBox {
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    bool intersects(const BBox& o, double pad = 0.0) const;
};
BBox bbox(std::span<const Point> pts);

/// Clusters points that lie within `tol` of each other, bucketing on a
/// kSnapGrid lattice.
class PointIndex {
public:
    explicit PointIndex(double tol = 1e-7) : tol_(tol) {}

    /// Id of an existing cluster within tol, or a new one.
    std::size_t insert(Point p);
    std::optional<std::size_t> find(Point p) const;
    Point at(std::size_t id) const { return points_[id]; }
    std::size_t size() const { return points_.size(); }

private:
    static std::int64_t cell(double v);
    struct Key {
        std::int64_t x, y;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            return std::hash<std::int64_t>{}(k.x * 73856093LL ^ k.y * 19349663LL);
        }
    };

    double tol_;
    std::vector<Point> points_;
    std::unordered_map<Key, std::vector<std::size_t>, KeyHash> cells_;
};

/// Vertex lists equal as sets within tol.
bool same_vertex_set(std::span<const Point> a, std::span<const Point> b, double tol = 1e-6);

}  // namespace parahex
