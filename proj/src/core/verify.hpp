#pragma once

#include "core/curve.hpp"

namespace dewet {

struct CircleFit {
    double cx = 0.0;
    double cy = 0.0;
    double radius = 0.0;
    double rms = 0.0;  // root-mean-square radial residual of the nodes
};

// Least-squares circle through the curve nodes (algebraic fit refined by a
// few Gauss-Newton sweeps on the geometric residual).
CircleFit fit_circle(const std::vector<Vec2>& points);

// Equilibrium quality report for a relaxed curve against the ideal circular
// cap with contact angle theta_young and the same enclosed area.
struct VerifyReport {
    CircleFit fit;
    double area = 0.0;
    double manifold_distance_to_cap = 0.0;
    double theta_l = 0.0;
    double theta_r = 0.0;
    double theta_err_l = 0.0;
    double theta_err_r = 0.0;
    double mesh_ratio = 1.0;
    // Worst violation of the equilibrium segment condition: per node, the
    // smaller of the relative length imbalance of its two segments and
    // their relative non-collinearity.
    double equidistribution_residual = 0.0;
};

VerifyReport verify_equilibrium(const OpenCurve& curve, double theta_young);

}  // namespace dewet
