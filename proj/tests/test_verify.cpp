#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "core/shapes.hpp"
#include "core/solver.hpp"
#include "core/verify.hpp"

using namespace dewet;
using std::numbers::pi;

TEST_CASE("circle fit recovers an exact circle") {
    std::vector<Vec2> pts;
    for (int i = 0; i < 40; ++i) {
        const double a = 0.3 + 2.1 * i / 40.0;
        pts.push_back({1.5 + 2.0 * std::cos(a), -0.7 + 2.0 * std::sin(a)});
    }
    const CircleFit fit = fit_circle(pts);
    CHECK(fit.cx == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(fit.cy == doctest::Approx(-0.7).epsilon(1e-10));
    CHECK(fit.radius == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(fit.rms <= 1e-10);
}

TEST_CASE("circle fit tolerates noise") {
    std::mt19937 rng(401);
    std::uniform_real_distribution<double> jitter(-1e-4, 1e-4);
    std::vector<Vec2> pts;
    for (int i = 0; i < 200; ++i) {
        const double a = 2.0 * pi * i / 200.0;
        pts.push_back({3.0 * std::cos(a) + jitter(rng), 3.0 * std::sin(a) + jitter(rng)});
    }
    const CircleFit fit = fit_circle(pts);
    CHECK(std::abs(fit.cx) <= 1e-4);
    CHECK(std::abs(fit.cy) <= 1e-4);
    CHECK(fit.radius == doctest::Approx(3.0).epsilon(1e-4));
    CHECK(fit.rms <= 2e-4);
}

TEST_CASE("circle fit rejects degenerate input") {
    CHECK_THROWS_AS(fit_circle({{0.0, 0.0}, {1.0, 0.0}}), InvalidArgumentError);
}

TEST_CASE("verifying the exact equilibrium arc") {
    const int n = 512;
    const OpenCurve arc = exact_equilibrium(pi / 2, pi / 2, 0.0, n);
    const VerifyReport report = verify_equilibrium(arc, pi / 2);
    CHECK(report.fit.rms <= 1e-10);
    CHECK(report.fit.radius == doctest::Approx(1.0).epsilon(1e-6));
    // contact angle error of the sampled arc is half the angular spacing
    const double half_spacing = (pi / 2) / n;
    CHECK(report.theta_err_l <= 1.5 * half_spacing);
    CHECK(report.theta_err_r <= 1.5 * half_spacing);
    CHECK(report.mesh_ratio == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(report.equidistribution_residual <= 1e-10);
    CHECK(report.manifold_distance_to_cap <= 2e-5);
}

TEST_CASE("verifying a relaxed film against its equilibrium cap") {
    const OpenCurve c = generate({ShapeKind::RoundedRect, 64});
    SimParams p;
    p.sigma = std::cos(5 * pi / 6);
    p.tau = 0.01;
    StopRule stop;
    stop.energy_rate_eps = 1e-8;
    stop.t_max = 1e4;
    const EvolveResult r = evolve(c, p, stop);
    REQUIRE(r.reason == StopReason::EnergyRate);
    const VerifyReport report = verify_equilibrium(r.curve, 5 * pi / 6);
    const double h = 1.0 / 64;
    CHECK(report.theta_err_l <= 10.0 * h);
    CHECK(report.theta_err_r <= 10.0 * h);
    CHECK(report.manifold_distance_to_cap <= 5e-3 * polygon_area(c));
    CHECK(report.fit.rms <= 1e-3);
    CHECK(std::abs(report.mesh_ratio - 1.0) <= 1e-2);
}

TEST_CASE("equilibrium angle error halves under mesh refinement") {
    auto run_theta_err = [](int n) {
        const OpenCurve c = generate({ShapeKind::RoundedRect, n});
        SimParams p;
        p.sigma = std::cos(5 * pi / 6);
        p.tau = (2048.0 / 25.0) / (n * double(n));
        StopRule stop;
        stop.energy_rate_eps = 1e-8;
        stop.t_max = 1e4;
        const EvolveResult r = evolve(c, p, stop);
        return verify_equilibrium(r.curve, 5 * pi / 6).theta_err_l;
    };
    const double coarse = run_theta_err(32);
    const double fine = run_theta_err(64);
    const double ratio = coarse / fine;
    CHECK(ratio > 1.4);
    CHECK(ratio < 3.0);
}
