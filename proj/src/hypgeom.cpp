#include "graphvol/hypgeom.hpp"

#include <cmath>

#include "graphvol/numformat.hpp"

namespace graphvol {

namespace {
constexpr double kMembershipTol = 1e-10;
constexpr double kOrthogonalityTol = 1e-9;
} // namespace

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

double euclid_dist(const Vec3& p, const Vec3& q) { return norm(p - q); }

BallPoint::BallPoint(double x, double y, double z) : BallPoint(Vec3{x, y, z}) {}

BallPoint::BallPoint(const Vec3& v) : v_(v) {
    if (dot(v, v) > 1.0 + 1e-12)
        throw Error("membership", "point lies outside the closed unit ball");
}

GeodesicSurface GeodesicSurface::plane(const Vec3& normal, double offset) {
    const double n = norm(normal);
    if (!(n > 0.0)) throw Error("membership", "plane normal must be nonzero");
    Plane p{{normal.x / n, normal.y / n, normal.z / n}, offset / n};
    if (!(std::abs(p.offset) < 1.0))
        throw Error("membership", "plane must pass through the open unit ball");
    return GeodesicSurface(p);
}

GeodesicSurface GeodesicSurface::sphere(const Vec3& center, double radius) {
    if (!(radius > 0.0)) throw Error("membership", "sphere radius must be positive");
    // Orthogonality to the sphere at infinity is what makes the Euclidean
    // sphere a geodesic plane of the ball model.
    if (std::abs(dot(center, center) - radius * radius - 1.0) > kOrthogonalityTol)
        throw Error("membership",
                    "sphere does not meet the unit sphere orthogonally: |c|^2 - r^2 = " +
                        format_real(dot(center, center) - radius * radius));
    return GeodesicSurface(Sphere{center, radius});
}

bool on_surface(const Vec3& p, const GeodesicSurface& s) {
    if (s.is_plane()) {
        const Plane& pl = s.as_plane();
        return std::abs(dot(pl.unit_normal, p) - pl.offset) <= kMembershipTol;
    }
    const Sphere& sp = s.as_sphere();
    const Vec3 d = p - sp.center;
    return std::abs(dot(d, d) - sp.radius * sp.radius) <= kMembershipTol;
}

namespace {

double clamped_acos(double c) { return std::acos(std::min(1.0, std::max(-1.0, c))); }

double angle_plane_plane(const Plane& a, const Plane& b) {
    const double c = std::abs(dot(a.unit_normal, b.unit_normal));
    if (c >= 1.0 - 1e-14) {
        // Parallel planes: they intersect only if they coincide.
        if (std::abs(a.offset - b.offset * (dot(a.unit_normal, b.unit_normal) < 0 ? -1.0 : 1.0)) >
            1e-12)
            throw Error("non-intersecting", "parallel planes do not intersect");
        return 0.0;
    }
    return clamped_acos(c);
}

constexpr double kIntersectSlack = 1e-12; // tangency up to rounding still counts

double angle_plane_sphere(const Plane& p, const Sphere& s) {
    const double dist = std::abs(dot(p.unit_normal, s.center) - p.offset);
    if (dist > s.radius * (1.0 + kIntersectSlack))
        throw Error("non-intersecting", "plane misses the sphere: distance " +
                                            format_real(dist) + " exceeds radius " +
                                            format_real(s.radius));
    return clamped_acos(dist / s.radius);
}

double angle_sphere_sphere(const Sphere& a, const Sphere& b) {
    const double d = euclid_dist(a.center, b.center);
    if (d > (a.radius + b.radius) * (1.0 + kIntersectSlack) ||
        d < std::abs(a.radius - b.radius) * (1.0 - kIntersectSlack))
        throw Error("non-intersecting", "spheres do not intersect");
    const double c =
        std::abs(a.radius * a.radius + b.radius * b.radius - d * d) / (2.0 * a.radius * b.radius);
    return clamped_acos(c);
}

} // namespace

double surface_angle(const GeodesicSurface& s1, const GeodesicSurface& s2) {
    if (s1.is_plane() && s2.is_plane()) return angle_plane_plane(s1.as_plane(), s2.as_plane());
    if (s1.is_plane()) return angle_plane_sphere(s1.as_plane(), s2.as_sphere());
    if (s2.is_plane()) return angle_plane_sphere(s2.as_plane(), s1.as_sphere());
    return angle_sphere_sphere(s1.as_sphere(), s2.as_sphere());
}

namespace cuboct_derivation {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kSqrt2 = std::sqrt(2.0);
} // namespace

Vec3 v1() { return {0.0, kInvSqrt2, kInvSqrt2}; }
Vec3 v2() { return {kInvSqrt2, 0.0, kInvSqrt2}; }
Vec3 v3() { return {kInvSqrt2, kInvSqrt2, 0.0}; }
Vec3 v4() { return {kInvSqrt2, 0.0, -kInvSqrt2}; }

Vec3 u1() { return {1.0 / (3.0 * kSqrt2), kSqrt2 / 3.0, 1.0 / (3.0 * kSqrt2)}; }
Vec3 u2() { return {kInvSqrt2, kSqrt2, kInvSqrt2}; }

GeodesicSurface face_sphere() {
    return GeodesicSurface::sphere({kInvSqrt2, kInvSqrt2, kInvSqrt2}, kInvSqrt2);
}

GeodesicSurface face_plane() { return GeodesicSurface::plane({1.0, -1.0, 1.0}, 0.0); }

GeodesicSurface cutting_plane() { return GeodesicSurface::plane({1.0, 0.0, -1.0}, 0.0); }

} // namespace cuboct_derivation

double verify_theta() {
    using namespace cuboct_derivation;
    const GeodesicSurface sphere = face_sphere();
    const GeodesicSurface plane = face_plane();
    const GeodesicSurface cut = cutting_plane();

    for (const Vec3& p : {u1(), u2()}) {
        for (const GeodesicSurface* s : {&sphere, &plane, &cut}) {
            if (!on_surface(p, *s))
                throw Error("membership",
                            "derivation point does not lie on a face surface (transcription "
                            "error in coordinates)");
        }
    }
    return surface_angle(plane, sphere);
}

} // namespace graphvol
