#pragma once

#include <string>
#include <vector>

#include "core/curve.hpp"

namespace dewet {

enum class ShapeKind {
    Rect6x1,      // 6 x 1 rectangle, x in [-3, 3]
    RoundedRect,  // 4 x 1 flat top joined to two radius-1 quarter circles
    HalfEllipse,  // upper half of an ellipse with semi-axes (ax, ay)
    PolarFlower,  // r(theta) = 2 + cos(6 theta), theta in [0, pi]
};

struct ShapeSpec {
    ShapeKind kind = ShapeKind::Rect6x1;
    int n_segments = 128;  // N; the curve gets N+1 nodes
    double ax = 4.0;       // HalfEllipse only
    double ay = 1.0;       // HalfEllipse only

    void validate() const;
};

// Built-in shape names for the CLI: shape1..shape4.
const std::vector<std::pair<std::string, ShapeKind>>& shape_names();
ShapeKind shape_kind_from_name(const std::string& name);

// Samples the analytic shape boundary at N+1 nodes equally spaced in
// arclength, traversed left to right, endpoints exactly on y = 0.
OpenCurve generate(const ShapeSpec& spec);

// Same, additionally exposing the arclength table the placement used:
// s[j] is node j's position along the finely tabulated boundary and
// total_length the tabulated length. Used by tests.
struct GeneratedShape {
    OpenCurve curve;
    std::vector<double> s;
    double total_length = 0.0;
};
GeneratedShape generate_detailed(const ShapeSpec& spec);

// Circular arc meeting the substrate at contact angle theta on both sides,
// with the given enclosed area and center abscissa, sampled uniformly in
// arc angle. This is the exact equilibrium profile.
OpenCurve exact_equilibrium(double theta, double area, double center_x, int n_segments);

// Radius of the circular arc of contact angle theta enclosing the given
// area: sqrt(area / (theta - sin(theta) cos(theta))).
double equilibrium_radius(double theta, double area);

}  // namespace dewet
