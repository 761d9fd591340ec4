#pragma once

#include <string>
#include <vector>

#include "graphvol/errors.hpp"

namespace graphvol {

inline constexpr double kDefaultTol = 1e-13;
inline constexpr double kMinTol = 1e-14;

// Lobachevsky function L(t) = -Integral_0^t ln|2 sin u| du. Odd, pi-periodic.
//
// Evaluated by two independent internal paths that must agree within
// 10*tol: a truncated Fourier series (L(t) = 1/2 sum sin(2nt)/n^2) whose
// tail is resummed by parts against the closed-form Dirichlet kernels, and
// adaptive Gauss-Kronrod quadrature of the log-sine integrand with a
// substitution taming the endpoint singularity. Returns the series value.
//
// Throws Error("tolerance") if tol < 1e-14 and Error("paths-disagree") if
// the two paths differ by more than 10*tol.
double lobachevsky(double theta, double tol = kDefaultTol);

namespace detail {
// The two paths, individually accessible for cross-validation.
double lobachevsky_series(double theta, double tol);
double lobachevsky_quadrature(double theta, double tol);
} // namespace detail

// Dihedral angles of an ideal tetrahedron. Angles must be positive and sum
// to pi within 1e-9; Error("angle-sum") otherwise.
struct TetAngles {
    TetAngles(double alpha, double beta, double gamma);

    double alpha;
    double beta;
    double gamma;
};

// Milnor's formula: vol = L(alpha) + L(beta) + L(gamma).
double ideal_tet_volume(const TetAngles& angles, double tol = kDefaultTol);

// A named volume constant with an audit trail. Reference values are stored
// as decimal strings and parsed at load so reports can cite their source
// digits verbatim.
struct VolumeConstant {
    std::string name;
    double value;
    std::string provenance;
};

// Digits of the reference constants.
inline constexpr const char* kCuboctDigits = "12.04609204009437764726837862923";
inline constexpr const char* kB4TruncDigits = "5.07470803204826812510601277";

// The dihedral angle arctan(sqrt 2) of the ideal right-angled cuboctahedron
// decomposition.
double cuboct_theta();

// Volume of the ideal right-angled cuboctahedron by the closed form
// 8 L(pi/2 - t) + 16 L(t) - 6 L(2t) + L(4t) at t = arctan(sqrt 2).
VolumeConstant cuboct_volume_closed_form(double tol = kDefaultTol);

// Same volume summed over the 13-ideal-tetrahedron decomposition: eight
// tetrahedra with angles (pi/2, pi/2 - t, t), four with (t, t, pi - 2t) and
// one with (pi - 2t, pi - 2t, 4t - pi).
double cuboct_volume_by_decomposition(double tol = kDefaultTol);

// Maximal volume of a truncated 4-bipyramid (the S^3 octahedron bound),
// stored digits; numerically it equals 10 L(pi/6).
VolumeConstant b4trunc_volume();

// Constant with the results of its defining cross-checks, for reporting.
struct ConstantReport {
    VolumeConstant constant;
    bool checks_pass;
    std::vector<std::string> notes;
};

std::vector<ConstantReport> constant_reports(double tol = kDefaultTol);

} // namespace graphvol
