#pragma once

#include <variant>

#include "graphvol/errors.hpp"

namespace graphvol {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator-(const Vec3& a, const Vec3& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend bool operator==(const Vec3&, const Vec3&) = default;
};

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
double euclid_dist(const Vec3& p, const Vec3& q);

// A point of the closed unit ball (the ball models of H^3). Construction
// enforces |p| <= 1 + 1e-12; raw Vec3 values are used for auxiliary
// Euclidean points outside the ball.
class BallPoint {
public:
    BallPoint(double x, double y, double z);
    explicit BallPoint(const Vec3& v);

    const Vec3& v() const { return v_; }

private:
    Vec3 v_;
};

// A Euclidean plane through the ball: n . p = d with |n| = 1 and |d| < 1.
struct Plane {
    Vec3 unit_normal;
    double offset;
};

// A Euclidean sphere meeting the unit sphere orthogonally
// (|c|^2 = r^2 + 1 within 1e-9), i.e. a geodesic plane of the Poincare
// ball model.
struct Sphere {
    Vec3 center;
    double radius;
};

// A totally geodesic surface of the Poincare ball model in Euclidean
// coordinates. Factories validate the respective invariants.
class GeodesicSurface {
public:
    static GeodesicSurface plane(const Vec3& normal, double offset);
    static GeodesicSurface sphere(const Vec3& center, double radius);

    bool is_plane() const { return std::holds_alternative<Plane>(rep_); }
    const Plane& as_plane() const { return std::get<Plane>(rep_); }
    const Sphere& as_sphere() const { return std::get<Sphere>(rep_); }

private:
    explicit GeodesicSurface(std::variant<Plane, Sphere> rep) : rep_(std::move(rep)) {}
    std::variant<Plane, Sphere> rep_;
};

// Raw surface membership: |equation residual| <= 1e-10. Points outside the
// unit ball are accepted; only BallPoint construction restricts to the ball.
bool on_surface(const Vec3& p, const GeodesicSurface& s);

// Acute dihedral angle along the intersection of two geodesic surfaces, in
// [0, pi/2]. Throws Error("non-intersecting") when they do not meet.
double surface_angle(const GeodesicSurface& s1, const GeodesicSurface& s2);

// Fixtures of the cuboctahedron dihedral-angle derivation: the corner
// tetrahedron v1 v2 v3 v4 in the ball, the two geodesic surfaces carrying
// its faces v1v2v3 (sphere) and v1v3v4 (plane), the auxiliary orthogonal
// cutting plane x = z, and the intersection points u1, u2.
namespace cuboct_derivation {
Vec3 v1();
Vec3 v2();
Vec3 v3();
Vec3 v4();
Vec3 u1();
Vec3 u2();
GeodesicSurface face_sphere();
GeodesicSurface face_plane();
GeodesicSurface cutting_plane();
} // namespace cuboct_derivation

// Reconstructs the dihedral angle of the cuboctahedron corner tetrahedron
// from the surface coordinates: checks u1 and u2 lie on both face surfaces
// (Error("membership") otherwise) and returns their intersection angle,
// which must equal arctan(sqrt 2).
double verify_theta();

} // namespace graphvol
