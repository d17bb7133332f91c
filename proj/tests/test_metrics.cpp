#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "core/metrics.hpp"
#include "core/shapes.hpp"
#include "oracles.hpp"

using namespace dewet;
using std::numbers::pi;

namespace {

OpenCurve rectangle(double x0, double x1, double height) {
    return OpenCurve{{{x0, 0.0}, {x0, height}, {x1, height}, {x1, 0.0}}};
}

SimplePolygon star(std::mt19937& rng, Vec2 center, int n = 20, double r_min = 0.4,
                   double r_max = 1.6) {
    return SimplePolygon::create(oracles::random_star_polygon(rng, center, n, r_min, r_max));
}

}  // namespace

TEST_CASE("closing the rectangle on the substrate") {
    const SimplePolygon p = close_on_substrate(rectangle(-3.0, 3.0, 1.0));
    REQUIRE(p.vertices.size() == 4);
    CHECK(p.area() == doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("closing a self-crossing chain fails") {
    OpenCurve bowtie{{{0.0, 0.0}, {2.0, 1.0}, {2.0, -0.5}, {0.0, 0.5}, {3.0, 0.0}}};
    CHECK_THROWS_AS(close_on_substrate(bowtie), NotSimpleError);
}

TEST_CASE("closing the polar flower yields the quadrature area") {
    const SimplePolygon p = close_on_substrate(generate({ShapeKind::PolarFlower, 512}));
    CHECK(std::abs(p.area() - 2.25 * pi) <= 1e-3);
}

TEST_CASE("polygon creation validates and orients") {
    // clockwise square gets reversed to counterclockwise
    const SimplePolygon p =
        SimplePolygon::create({{0.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {1.0, 0.0}});
    CHECK(p.area() == doctest::Approx(1.0));
    CHECK_THROWS_AS(SimplePolygon::create({{0, 0}, {1, 0}}), InvalidArgumentError);
    CHECK_THROWS_AS(
        SimplePolygon::create({{0, 0}, {2, 0}, {0, 2}, {2, 2}}),  // bowtie
        NotSimpleError);
}

TEST_CASE("intersection of a polygon with itself is its area") {
    std::mt19937 rng(101);
    for (int rep = 0; rep < 20; ++rep) {
        const SimplePolygon p = star(rng, {0.0, 0.0});
        const double area = p.area();
        CHECK(std::abs(intersection_area(p, p) - area) <= 1e-12 * (1.0 + area));
    }
}

TEST_CASE("intersection of disjoint polygons is zero") {
    std::mt19937 rng(103);
    const SimplePolygon p = star(rng, {0.0, 0.0});
    const SimplePolygon q = star(rng, {10.0, 0.0});
    CHECK(intersection_area(p, q) == 0.0);
}

TEST_CASE("intersection of overlapping rectangles sharing the substrate") {
    const SimplePolygon p = close_on_substrate(rectangle(-1.0, 1.0, 1.0));
    const SimplePolygon q = close_on_substrate(rectangle(0.0, 2.0, 0.5));
    CHECK(intersection_area(p, q) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("intersection area agrees with Monte Carlo sampling") {
    std::mt19937 rng(107);
    const SimplePolygon p = star(rng, {0.0, 0.0});
    const SimplePolygon q = star(rng, {0.6, -0.3});
    const double exact = intersection_area(p, q);
    const double sampled =
        oracles::sampled_intersection_area(p.vertices, q.vertices, 10'000'000, 9001);
    CHECK(std::abs(exact - sampled) <= 1e-2 * exact);
}

TEST_CASE("manifold distance of identical curves is exactly zero") {
    const OpenCurve c = generate({ShapeKind::RoundedRect, 128});
    CHECK(manifold_distance(c, c) == 0.0);
    std::mt19937 rng(109);
    const SimplePolygon p = star(rng, {0.0, 0.0});
    CHECK(manifold_distance(p, p) == 0.0);
}

TEST_CASE("manifold distance of nested substrate rectangles") {
    CHECK(manifold_distance(rectangle(-1.0, 1.0, 1.0), rectangle(-1.0, 1.0, 2.0)) ==
          doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("nested regions reduce to the area difference") {
    std::mt19937 rng(113);
    for (int rep = 0; rep < 10; ++rep) {
        const SimplePolygon inner = star(rng, {0.0, 0.0}, 16, 0.3, 0.9);
        const SimplePolygon outer = star(rng, {0.0, 0.0}, 16, 2.0, 3.0);
        const double m = manifold_distance(inner, outer);
        CHECK(std::abs(m - (outer.area() - inner.area())) <= 1e-12 * outer.area());
    }
}

TEST_CASE("manifold distance is exactly symmetric") {
    std::mt19937 rng(127);
    for (int rep = 0; rep < 50; ++rep) {
        const SimplePolygon p = star(rng, {0.0, 0.0});
        const SimplePolygon q = star(rng, {0.4, 0.2});
        const double ab = manifold_distance(p, q);
        const double ba = manifold_distance(q, p);
        CHECK(ab == ba);
    }
}

TEST_CASE("manifold distance is consistent with its area decomposition") {
    std::mt19937 rng(131);
    for (int rep = 0; rep < 25; ++rep) {
        const SimplePolygon p = star(rng, {0.0, 0.0});
        const SimplePolygon q = star(rng, {0.5, -0.1});
        const double m = manifold_distance(p, q);
        const double decomposed = p.area() + q.area() - 2.0 * intersection_area(p, q);
        CHECK(std::abs(m - decomposed) <= 1e-12 * (1.0 + m));
        CHECK(m >= 0.0);
    }
}

TEST_CASE("triangle inequality on random star triples") {
    std::mt19937 rng(137);
    for (int rep = 0; rep < 200; ++rep) {
        const SimplePolygon a = star(rng, {0.0, 0.0});
        const SimplePolygon b = star(rng, {0.5, 0.1});
        const SimplePolygon c = star(rng, {-0.3, 0.4});
        const double ab = manifold_distance(a, b);
        const double ac = manifold_distance(a, c);
        const double bc = manifold_distance(b, c);
        CHECK(ab <= ac + bc + 1e-10);
    }
}

TEST_CASE("manifold distance is stable under vertex perturbation") {
    std::mt19937 rng(139);
    std::uniform_real_distribution<double> jitter(-1e-8, 1e-8);
    for (int rep = 0; rep < 10; ++rep) {
        const SimplePolygon a = star(rng, {0.0, 0.0});
        const SimplePolygon b = star(rng, {0.4, 0.0});
        std::vector<Vec2> moved = a.vertices;
        double max_shift = 0.0;
        for (Vec2& v : moved) {
            const Vec2 d{jitter(rng), jitter(rng)};
            v = v + d;
            max_shift = std::max(max_shift, norm(d));
        }
        const SimplePolygon a2 = SimplePolygon::create(moved);
        double perimeter = 0.0;
        for (std::size_t i = 0; i < a.vertices.size(); ++i) {
            perimeter += norm(a.vertices[(i + 1) % a.vertices.size()] - a.vertices[i]);
        }
        const double drift = std::abs(manifold_distance(a, b) - manifold_distance(a2, b));
        CHECK(drift <= 10.0 * max_shift * perimeter);
    }
}

TEST_CASE("distance between successive refinements of one shape shrinks") {
    const OpenCurve coarse = generate({ShapeKind::HalfEllipse, 64, 4.0, 1.0});
    const OpenCurve mid = generate({ShapeKind::HalfEllipse, 128, 4.0, 1.0});
    const OpenCurve fine = generate({ShapeKind::HalfEllipse, 1024, 4.0, 1.0});
    const double e_coarse = manifold_distance(coarse, fine);
    const double e_mid = manifold_distance(mid, fine);
    CHECK(e_mid < e_coarse);
    CHECK(e_coarse / e_mid > 3.0);  // second-order sampling error
    CHECK(e_coarse / e_mid < 5.0);
}

TEST_CASE("zero-area degenerate inputs still produce a distance") {
    // A sliver of nearly zero height against a real film.
    OpenCurve sliver{{{-1.0, 0.0}, {0.0, 1e-14}, {1.0, 0.0}}};
    const double m = manifold_distance(sliver, rectangle(-1.0, 1.0, 1.0));
    CHECK(m == doctest::Approx(2.0).epsilon(1e-9));
}
