#include <doctest.h>

#include <cmath>
#include <random>

#include "graphvol/lobachevsky.hpp"

using namespace graphvol;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Reference values computed ahead of time with 40-digit Clausen-function
// arithmetic (L(t) = Cl2(2t)/2) and checked against direct high-order
// quadrature of the defining integral.
constexpr double kLobPi6 = 0.5074708032048268125106012771372601429708;
constexpr double kLobPi4 = 0.4579827970886095075273017574661920553871;
constexpr double kLobPi3 = 0.3383138688032178750070675180915067619806;
constexpr double kCuboctRef = 12.046092040094377647268378629233594231;
} // namespace

TEST_CASE("lobachevsky at landmark angles") {
    CHECK(lobachevsky(0.0) == 0.0);
    CHECK(std::abs(lobachevsky(kPi / 2.0)) <= 1e-13); // odd + pi-periodic forces 0
    CHECK(std::abs(lobachevsky(kPi / 6.0) - kLobPi6) <= 1e-12);
    CHECK(std::abs(lobachevsky(kPi / 4.0) - kLobPi4) <= 1e-12);
    CHECK(std::abs(lobachevsky(kPi / 3.0) - kLobPi3) <= 1e-12);
}

TEST_CASE("tolerance must be achievable") {
    CHECK_THROWS_AS(lobachevsky(1.0, 1e-15), Error);
    CHECK_NOTHROW(lobachevsky(1.0, 1e-14));
}

TEST_CASE("the two evaluation paths agree independently of the combined entry point") {
    std::mt19937 rng(2026);
    std::uniform_real_distribution<double> angle(-2.0 * kPi, 2.0 * kPi);
    for (int i = 0; i < 60; ++i) {
        const double t = angle(rng);
        const double s = detail::lobachevsky_series(t, 1e-13);
        const double q = detail::lobachevsky_quadrature(t, 1e-13);
        CHECK(std::abs(s - q) <= 1e-12);
    }
}

TEST_CASE("oddness and periodicity") {
    for (int i = 1; i < 40; ++i) {
        const double t = -kPi + (2.0 * kPi * i) / 40.0;
        CHECK(std::abs(lobachevsky(t) + lobachevsky(-t)) <= 2e-13);
        CHECK(std::abs(lobachevsky(t + kPi) - lobachevsky(t)) <= 2e-13);
    }
}

TEST_CASE("distribution identity at n = 2") {
    for (int i = 1; i < 40; ++i) {
        const double t = (kPi * i) / 40.0;
        const double lhs = 0.5 * lobachevsky(2.0 * t);
        const double rhs = lobachevsky(t) + lobachevsky(t + kPi / 2.0);
        CHECK(std::abs(lhs - rhs) <= 4e-13);
    }
}

TEST_CASE("ideal tetrahedron volume") {
    const double reg = ideal_tet_volume(TetAngles(kPi / 3.0, kPi / 3.0, kPi / 3.0));
    CHECK(std::abs(reg - 3.0 * kLobPi3) <= 1e-10);
    CHECK(std::abs(reg - 1.014941606409653625) <= 1e-10);

    // half the regular ideal octahedron: the L(pi/2) term drops
    const double half_oct = ideal_tet_volume(TetAngles(kPi / 2.0, kPi / 4.0, kPi / 4.0));
    CHECK(std::abs(half_oct - 2.0 * kLobPi4) <= 1e-12);

    // symmetry in the three angles
    const double t = cuboct_theta();
    const double a = ideal_tet_volume(TetAngles(kPi / 2.0, kPi / 2.0 - t, t));
    const double b = ideal_tet_volume(TetAngles(t, kPi / 2.0, kPi / 2.0 - t));
    const double c = ideal_tet_volume(TetAngles(kPi / 2.0 - t, t, kPi / 2.0));
    CHECK(a == doctest::Approx(b).epsilon(1e-14));
    CHECK(a == doctest::Approx(c).epsilon(1e-14));
    CHECK(a > 0.0);
}

TEST_CASE("TetAngles validates positivity and the angle sum") {
    CHECK_THROWS_AS(TetAngles(kPi / 2.0, kPi / 2.0, kPi / 2.0), Error);
    CHECK_THROWS_AS(TetAngles(-0.1, kPi / 2.0, kPi / 2.0 + 0.1), Error);
    CHECK_NOTHROW(TetAngles(kPi / 2.0, kPi / 4.0, kPi / 4.0 + 1e-10));
}

TEST_CASE("cuboctahedron constants") {
    const double t = cuboct_theta();
    CHECK(std::abs(t - 0.9553166181245093) <= 1e-15);
    CHECK(std::abs(std::tan(t) - std::sqrt(2.0)) <= 1e-14);

    const VolumeConstant closed = cuboct_volume_closed_form();
    CHECK(std::abs(closed.value - kCuboctRef) <= 1e-12);
    CHECK(closed.name == "CUBOCT");
    CHECK(!closed.provenance.empty());

    const double decomposed = cuboct_volume_by_decomposition();
    CHECK(std::abs(decomposed - closed.value) <= 1e-12);

    // the three tetrahedron classes have exact angle sums
    CHECK(kPi / 2.0 + (kPi / 2.0 - t) + t == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(t + t + (kPi - 2.0 * t) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK((kPi - 2.0 * t) + (kPi - 2.0 * t) + (4.0 * t - kPi) ==
          doctest::Approx(kPi).epsilon(1e-15));
}

TEST_CASE("the closed form equals the rearranged decomposition sum") {
    // 6 L(pi - 2t) = -6 L(2t) and L(4t - pi) = L(4t) by oddness and
    // periodicity, so the two printed forms must agree.
    const double t = cuboct_theta();
    const double rearranged = 8.0 * lobachevsky(kPi / 2.0 - t) + 16.0 * lobachevsky(t) +
                              6.0 * lobachevsky(kPi - 2.0 * t) + lobachevsky(4.0 * t - kPi);
    CHECK(std::abs(rearranged - cuboct_volume_closed_form().value) <= 1e-12);
}

TEST_CASE("b4trunc constant and its cross-checks") {
    const VolumeConstant c = b4trunc_volume();
    CHECK(c.name == "B4TRUNC");
    CHECK(std::string(kB4TruncDigits) == "5.07470803204826812510601277");
    CHECK(std::abs(c.value - 10.0 * lobachevsky(kPi / 6.0)) <= 1e-12);
    // larger than the regular ideal octahedron 8 L(pi/4) ~ 3.6638623767
    CHECK(c.value > 8.0 * kLobPi4);
    CHECK(std::abs(8.0 * kLobPi4 - 3.6638623767) <= 1e-9);
}

TEST_CASE("constant reports carry passing checks") {
    for (const ConstantReport& r : constant_reports()) {
        CAPTURE(r.constant.name);
        CHECK(r.checks_pass);
        CHECK(!r.notes.empty());
        CHECK(r.constant.value > 0.0);
    }
}
