#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "core/csv.hpp"
#include "core/curve.hpp"
#include "core/shapes.hpp"
#include "oracles.hpp"

using namespace dewet;
using std::numbers::pi;

namespace {

OpenCurve rectangle_6x1() {
    return OpenCurve{{{-3.0, 0.0}, {-3.0, 1.0}, {3.0, 1.0}, {3.0, 0.0}}};
}

}  // namespace

TEST_CASE("segment frames on axis-aligned segments") {
    OpenCurve c{{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {2.0, 1.0}, {2.0, 0.0}}};
    const SegmentFrame f = segment_frames(c);
    CHECK(f.tangent[0] == Vec2{1.0, 0.0});
    CHECK(f.normal[0] == Vec2{0.0, 1.0});
    CHECK(f.tangent[1] == Vec2{0.0, 1.0});
    CHECK(f.normal[1] == Vec2{-1.0, 0.0});
    CHECK(f.length[1] == 1.0);
}

TEST_CASE("segment frames reject duplicate nodes") {
    OpenCurve c{{{0.0, 0.0}, {1.0, 1.0}, {1.0, 1.0}, {2.0, 0.0}}};
    CHECK_THROWS_AS(segment_frames(c), ZeroSegmentError);
}

TEST_CASE("segment frame invariants on random curves") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const OpenCurve c = oracles::random_open_curve(rng, 24);
        const SegmentFrame f = segment_frames(c);
        for (int k = 0; k < f.segment_count(); ++k) {
            CHECK(std::abs(norm(f.tangent[k]) - 1.0) <= 1e-12);
            CHECK(std::abs(norm(f.normal[k]) - 1.0) <= 1e-12);
            CHECK(std::abs(dot(f.tangent[k], f.normal[k])) <= 1e-12);
            const Vec2 minus_perp = -1.0 * perp_cw(f.tangent[k]);
            CHECK(f.normal[k].x == minus_perp.x);
            CHECK(f.normal[k].y == minus_perp.y);
        }
    }
}

TEST_CASE("polygon area of the 6x1 rectangle") {
    CHECK(polygon_area(rectangle_6x1()) == doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("polygon area of the default half ellipse") {
    const OpenCurve c = generate({ShapeKind::HalfEllipse, 512, 4.0, 1.0});
    CHECK(std::abs(polygon_area(c) - 2.0 * pi) <= 1e-3);
}

TEST_CASE("polygon area is antisymmetric under reflection") {
    std::mt19937 rng(5);
    OpenCurve c = oracles::random_open_curve(rng, 17);
    OpenCurve reflected = c;
    for (Vec2& p : reflected.nodes) p.y = -p.y;
    CHECK(polygon_area(reflected) == doctest::Approx(-polygon_area(c)).epsilon(1e-14));
}

TEST_CASE("polygon area matches the shoelace of the closed film region") {
    std::mt19937 rng(17);
    for (int rep = 0; rep < 50; ++rep) {
        const OpenCurve c = oracles::random_open_curve(rng, 12 + rep % 20);
        const double area = polygon_area(c);
        CHECK(std::abs(area - oracles::shoelace_film_area(c)) <= 1e-12 * (1.0 + std::abs(area)));
    }
}

TEST_CASE("discrete energy of the rectangle at sigma = cos(5 pi / 6)") {
    const double sigma = std::cos(5.0 * pi / 6.0);
    const double expected = 8.0 + 3.0 * std::sqrt(3.0);
    CHECK(discrete_energy(rectangle_6x1(), sigma) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("discrete energy at sigma = 0 is the polygon length") {
    std::mt19937 rng(23);
    const OpenCurve c = oracles::random_open_curve(rng, 15);
    double length = 0.0;
    for (int k = 0; k + 1 < c.node_count(); ++k) length += norm(c.nodes[k + 1] - c.nodes[k]);
    CHECK(discrete_energy(c, 0.0) == doctest::Approx(length).epsilon(1e-15));
}

TEST_CASE("discrete energy of a fine unit semicircle approaches pi") {
    const OpenCurve c = exact_equilibrium(pi / 2, pi / 2, 0.0, 1024);
    CHECK(std::abs(discrete_energy(c, 0.0) - pi) <= 1e-4);
}

TEST_CASE("lumped product of ones gives the total length") {
    std::mt19937 rng(31);
    const OpenCurve c = oracles::random_open_curve(rng, 19);
    const NodalScalarField ones(c.node_count(), 1.0);
    CHECK(mass_lumped_inner(ones, ones, c) ==
          doctest::Approx(discrete_energy(c, 0.0)).epsilon(1e-14));
}

TEST_CASE("lumped product against a single interior hat") {
    std::mt19937 rng(37);
    const OpenCurve c = oracles::random_open_curve(rng, 9);
    const int i = 4;
    NodalScalarField hat(c.node_count(), 0.0);
    hat[i] = 1.0;
    const NodalScalarField ones(c.node_count(), 1.0);
    const double len_left = norm(c.nodes[i] - c.nodes[i - 1]);
    const double len_right = norm(c.nodes[i + 1] - c.nodes[i]);
    CHECK(mass_lumped_inner(hat, ones, c) ==
          doctest::Approx(0.5 * (len_left + len_right)).epsilon(1e-14));
}

TEST_CASE("lumped product of nodal kappa against segment normal field") {
    // (kappa, n . omega) expands to
    // 1/2 sum_j |h_j| [kappa_j (n_j . w_j) + kappa_{j-1} (n_j . w_{j-1})].
    std::mt19937 rng(41);
    const OpenCurve c = oracles::random_open_curve(rng, 13);
    const SegmentFrame f = segment_frames(c);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    NodalScalarField kappa(c.node_count());
    NodalVectorField omega(c.node_count());
    for (int j = 0; j < c.node_count(); ++j) {
        kappa[j] = u(rng);
        omega[j] = {u(rng), u(rng)};
    }
    const auto lhs = mass_lumped_inner(BrokenScalarField::from_nodal(kappa),
                                       BrokenScalarField::dot_product(omega, f.normal), c);
    double expected = 0.0;
    for (int j = 1; j < c.node_count(); ++j) {
        expected += 0.5 * f.length[j - 1] *
                    (kappa[j] * dot(f.normal[j - 1], omega[j]) +
                     kappa[j - 1] * dot(f.normal[j - 1], omega[j - 1]));
    }
    CHECK(lhs == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("lumped product rejects mismatched fields") {
    std::mt19937 rng(43);
    const OpenCurve c = oracles::random_open_curve(rng, 8);
    const NodalScalarField ones(c.node_count(), 1.0);
    const NodalScalarField wrong(c.node_count() + 2, 1.0);
    CHECK_THROWS_AS(mass_lumped_inner(ones, wrong, c), FieldMismatchError);
}

TEST_CASE("stiffness product vanishes on constants") {
    std::mt19937 rng(47);
    const OpenCurve c = oracles::random_open_curve(rng, 21);
    const NodalScalarField constant(c.node_count(), 3.25);
    NodalScalarField v(c.node_count());
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (double& x : v) x = u(rng);
    CHECK(stiffness_inner(constant, v, c) == 0.0);
}

TEST_CASE("stiffness of x along a straight horizontal curve is its length") {
    OpenCurve c{{{0.0, 0.0}, {1.0, 0.5}, {2.5, 0.8}, {4.0, 0.0}}};
    // straighten: keep x, zero out y so the curve is the segment [0, 4]
    for (Vec2& p : c.nodes) p.y = 0.0;
    c.nodes.front().y = c.nodes.back().y = 0.0;
    NodalScalarField xs(c.node_count());
    for (int j = 0; j < c.node_count(); ++j) xs[j] = c.nodes[j].x;
    CHECK(stiffness_inner(xs, xs, c) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("stiffness product agrees with independent quadrature") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int rep = 0; rep < 25; ++rep) {
        const OpenCurve c = oracles::random_open_curve(rng, 10 + rep);
        NodalScalarField a(c.node_count()), b(c.node_count());
        for (int j = 0; j < c.node_count(); ++j) {
            a[j] = u(rng);
            b[j] = u(rng);
        }
        const double direct = stiffness_inner(a, b, c);
        const double quad = oracles::quadrature_stiffness(a, b, c);
        CHECK(std::abs(direct - quad) <= 1e-14 * (1.0 + std::abs(direct)));
    }
}

TEST_CASE("stiffness product is symmetric bilinear positive semidefinite") {
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const OpenCurve c = oracles::random_open_curve(rng, 16);
    const int n = c.node_count();
    NodalScalarField a(n), b(n), d(n);
    for (int j = 0; j < n; ++j) {
        a[j] = u(rng);
        b[j] = u(rng);
        d[j] = u(rng);
    }
    CHECK(stiffness_inner(a, b, c) == stiffness_inner(b, a, c));
    NodalScalarField combo(n);
    for (int j = 0; j < n; ++j) combo[j] = 2.0 * a[j] + 0.5 * d[j];
    CHECK(stiffness_inner(combo, b, c) ==
          doctest::Approx(2.0 * stiffness_inner(a, b, c) + 0.5 * stiffness_inner(d, b, c))
              .epsilon(1e-12));
    CHECK(stiffness_inner(a, a, c) >= 0.0);
}

TEST_CASE("contact angles of the rectangle are right angles") {
    const ContactAngles angles = contact_angles(rectangle_6x1());
    CHECK(angles.left == doctest::Approx(pi / 2).epsilon(1e-14));
    CHECK(angles.right == doctest::Approx(pi / 2).epsilon(1e-14));
}

TEST_CASE("contact angle matches the first-segment direction") {
    const double theta = 5.0 * pi / 6.0;
    OpenCurve c{{{0.0, 0.0},
                 {std::cos(theta), std::sin(theta)},
                 {1.0, 1.0},
                 {2.0, 0.0}}};
    CHECK(contact_angles(c).left == doctest::Approx(theta).epsilon(1e-12));
}

TEST_CASE("half-ellipse contact angles converge to a right angle") {
    const double err_coarse =
        std::abs(contact_angles(generate({ShapeKind::HalfEllipse, 512, 4.0, 1.0})).left - pi / 2);
    const double err_fine =
        std::abs(contact_angles(generate({ShapeKind::HalfEllipse, 1024, 4.0, 1.0})).left - pi / 2);
    CHECK(err_fine < err_coarse);
    CHECK(err_fine <= 0.75 * err_coarse);  // roughly first order
    CHECK(err_coarse <= 0.1);
}

TEST_CASE("mesh ratio basics") {
    const OpenCurve arc = exact_equilibrium(2.0, 1.0, 0.0, 64);
    CHECK(mesh_ratio(arc) == doctest::Approx(1.0).epsilon(1e-12));

    const OpenCurve spread{{{0.0, 0.0}, {1.0, 0.0}, {3.0, 0.0}, {4.0, 0.0}}};
    CHECK(mesh_ratio(spread) == doctest::Approx(2.0).epsilon(1e-14));

    const OpenCurve dup{{{0.0, 0.0}, {1.0, 1.0}, {1.0, 1.0}, {2.0, 0.0}}};
    CHECK_THROWS_AS(mesh_ratio(dup), ZeroSegmentError);
}

TEST_CASE("curvature variation vanishes for constant curvature values") {
    std::mt19937 rng(61);
    const OpenCurve c = oracles::random_open_curve(rng, 12);
    const NodalScalarField constant(c.node_count(), 0.7);
    CHECK(curvature_variation(constant, c) == 0.0);
}

TEST_CASE("curvature variation of a linear ramp on a uniform curve") {
    const int n = 16;
    const double ell = 0.5;
    OpenCurve c;
    c.nodes.resize(n + 1);
    for (int j = 0; j <= n; ++j) {
        c.nodes[j] = {ell * j, (j == 0 || j == n) ? 0.0 : 0.3};
    }
    // force all segment lengths to ell exactly: flatten interior to the line
    for (int j = 1; j < n; ++j) c.nodes[j].y = 0.0;
    NodalScalarField ramp(c.node_count());
    for (int j = 0; j <= n; ++j) ramp[j] = static_cast<double>(j);
    CHECK(curvature_variation(ramp, c) == doctest::Approx(n / ell).epsilon(1e-14));
}

TEST_CASE("arccos clamp events are counted") {
    reset_contact_angle_clamp_events();
    CHECK(detail::clamped_acos(1.0 + 1e-15) == 0.0);
    CHECK(detail::clamped_acos(-1.0 - 1e-15) == doctest::Approx(pi).epsilon(1e-15));
    CHECK(contact_angle_clamp_events() == 2);
    CHECK(detail::clamped_acos(0.5) == doctest::Approx(std::acos(0.5)));
    CHECK(contact_angle_clamp_events() == 2);
    reset_contact_angle_clamp_events();
    CHECK(contact_angle_clamp_events() == 0);
}

TEST_CASE("open curve validation") {
    const OpenCurve too_short{{{0.0, 0.0}, {1.0, 0.0}}};
    CHECK_THROWS_AS(too_short.validate(), InvalidCurveError);
    const OpenCurve off_substrate{{{0.0, 0.1}, {1.0, 1.0}, {2.0, 0.0}}};
    CHECK_THROWS_AS(off_substrate.validate(), InvalidCurveError);
    const OpenCurve reversed{{{3.0, 0.0}, {1.0, 1.0}, {0.0, 0.0}}};
    CHECK_THROWS_AS(reversed.validate(), InvalidCurveError);
    const OpenCurve dup{{{0.0, 0.0}, {1.0, 1.0}, {1.0, 1.0}, {2.0, 0.0}}};
    CHECK_THROWS_AS(dup.validate(), InvalidCurveError);
    CHECK(rectangle_6x1().is_valid());
}

TEST_CASE("curve CSV round-trips bit-losslessly") {
    std::mt19937 rng(67);
    const OpenCurve c = oracles::random_open_curve(rng, 33);
    const std::string path = "geometry_roundtrip.csv";
    write_curve_csv(c, path);
    const OpenCurve back = read_curve_csv(path);
    REQUIRE(back.node_count() == c.node_count());
    for (int j = 0; j < c.node_count(); ++j) {
        CHECK(back.nodes[j].x == c.nodes[j].x);
        CHECK(back.nodes[j].y == c.nodes[j].y);
    }
    CHECK_THROWS_AS(read_curve_csv("does_not_exist.csv"), IoError);
}
