#include "core/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace dewet {

namespace {

using std::numbers::pi;

// One smooth piece of a shape boundary: a parametric map on [0, 1].
struct Piece {
    std::function<Vec2(double)> at;
    double weight;  // rough length share, used only to budget sample counts
};

std::vector<Piece> boundary_pieces(const ShapeSpec& spec) {
    switch (spec.kind) {
        case ShapeKind::Rect6x1: {
            auto seg = [](Vec2 a, Vec2 b) {
                return [a, b](double u) { return a + u * (b - a); };
            };
            return {
                {seg({-3.0, 0.0}, {-3.0, 1.0}), 1.0},
                {seg({-3.0, 1.0}, {3.0, 1.0}), 6.0},
                {seg({3.0, 1.0}, {3.0, 0.0}), 1.0},
            };
        }
        case ShapeKind::RoundedRect: {
            // Quarter circles of radius 1 centered (-2, 0) and (2, 0),
            // flat top y = 1 between them.
            auto left = [](double u) {
                const double a = pi - u * (pi / 2);
                return Vec2{-2.0 + std::cos(a), std::sin(a)};
            };
            auto top = [](double u) { return Vec2{-2.0 + 4.0 * u, 1.0}; };
            auto right = [](double u) {
                const double a = pi / 2 - u * (pi / 2);
                return Vec2{2.0 + std::cos(a), std::sin(a)};
            };
            return {{left, pi / 2}, {top, 4.0}, {right, pi / 2}};
        }
        case ShapeKind::HalfEllipse: {
            const double ax = spec.ax, ay = spec.ay;
            auto arc = [ax, ay](double u) {
                const double a = pi * (1.0 - u);
                return Vec2{ax * std::cos(a), ay * std::sin(a)};
            };
            return {{arc, pi * (spec.ax + spec.ay) / 2}};
        }
        case ShapeKind::PolarFlower: {
            auto curve = [](double u) {
                const double th = pi * (1.0 - u);
                const double r = 2.0 + std::cos(6.0 * th);
                return Vec2{r * std::cos(th), r * std::sin(th)};
            };
            return {{curve, 14.0}};
        }
    }
    throw InvalidArgumentError("unknown shape kind");
}

}  // namespace

void ShapeSpec::validate() const {
    if (n_segments < 8) {
        throw InvalidArgumentError("shape needs N >= 8 segments");
    }
    if (kind == ShapeKind::HalfEllipse && (ax <= 0.0 || ay <= 0.0)) {
        throw InvalidArgumentError("half-ellipse semi-axes must be positive");
    }
}

const std::vector<std::pair<std::string, ShapeKind>>& shape_names() {
    static const std::vector<std::pair<std::string, ShapeKind>> names = {
        {"shape1", ShapeKind::Rect6x1},
        {"shape2", ShapeKind::RoundedRect},
        {"shape3", ShapeKind::HalfEllipse},
        {"shape4", ShapeKind::PolarFlower},
    };
    return names;
}

ShapeKind shape_kind_from_name(const std::string& name) {
    for (const auto& [n, k] : shape_names()) {
        if (n == name) return k;
    }
    throw InvalidArgumentError("unknown shape '" + name +
                               "' (expected shape1|shape2|shape3|shape4)");
}

GeneratedShape generate_detailed(const ShapeSpec& spec) {
    spec.validate();
    const int n = spec.n_segments;
    const auto pieces = boundary_pieces(spec);

    // Tabulate the boundary on a fine polyline, 64 samples per final node,
    // with piece endpoints (corners) hit exactly.
    double weight_sum = 0.0;
    for (const Piece& p : pieces) weight_sum += p.weight;
    std::vector<Vec2> fine;
    fine.reserve(64 * n + 8);
    for (std::size_t pi_ = 0; pi_ < pieces.size(); ++pi_) {
        const Piece& p = pieces[pi_];
        const int m = std::max(8, (int)std::lround(64.0 * n * p.weight / weight_sum));
        const int start = pi_ == 0 ? 0 : 1;  // piece start equals previous end
        for (int i = start; i <= m; ++i) {
            fine.push_back(p.at((double)i / m));
        }
    }

    std::vector<double> cum(fine.size(), 0.0);
    for (std::size_t i = 1; i < fine.size(); ++i) {
        cum[i] = cum[i - 1] + norm(fine[i] - fine[i - 1]);
    }
    const double total = cum.back();

    // Place node j at arclength j * total / n by monotone linear interpolation.
    GeneratedShape out;
    out.total_length = total;
    out.s.resize(n + 1);
    out.curve.nodes.resize(n + 1);
    std::size_t hint = 0;
    for (int j = 0; j <= n; ++j) {
        const double s = total * j / n;
        out.s[j] = s;
        while (hint + 2 < cum.size() && cum[hint + 1] < s) ++hint;
        const double seg = cum[hint + 1] - cum[hint];
        const double t = seg > 0.0 ? (s - cum[hint]) / seg : 0.0;
        out.curve.nodes[j] = fine[hint] + std::clamp(t, 0.0, 1.0) * (fine[hint + 1] - fine[hint]);
    }
    // Endpoints sit exactly on the analytic contact points.
    out.curve.nodes.front() = pieces.front().at(0.0);
    out.curve.nodes.back() = pieces.back().at(1.0);
    out.curve.nodes.front().y = 0.0;
    out.curve.nodes.back().y = 0.0;
    return out;
}

OpenCurve generate(const ShapeSpec& spec) {
    return generate_detailed(spec).curve;
}

double equilibrium_radius(double theta, double area) {
    return std::sqrt(area / (theta - std::sin(theta) * std::cos(theta)));
}

OpenCurve exact_equilibrium(double theta, double area, double center_x, int n_segments) {
    if (!(theta > 0.0 && theta < pi)) {
        throw InvalidArgumentError("contact angle must lie in (0, pi)");
    }
    if (!(area > 0.0)) {
        throw InvalidArgumentError("area must be positive");
    }
    if (n_segments < 2) {
        throw InvalidArgumentError("need at least 2 segments");
    }
    const double r = equilibrium_radius(theta, area);
    const double cy = -r * std::cos(theta);
    OpenCurve curve;
    curve.nodes.resize(n_segments + 1);
    // Sweep the arc angle from pi/2 + theta (left contact) down to
    // pi/2 - theta (right contact).
    for (int j = 0; j <= n_segments; ++j) {
        const double phi = pi / 2 + theta - 2.0 * theta * j / n_segments;
        curve.nodes[j] = {center_x + r * std::cos(phi), cy + r * std::sin(phi)};
    }
    curve.nodes.front().y = 0.0;
    curve.nodes.back().y = 0.0;
    return curve;
}

}  // namespace dewet
