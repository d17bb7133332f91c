#include "core/verify.hpp"

#include <cmath>

#include "core/metrics.hpp"
#include "core/shapes.hpp"

namespace dewet {

CircleFit fit_circle(const std::vector<Vec2>& points) {
    if (points.size() < 3) {
        throw InvalidArgumentError("circle fit needs at least 3 points");
    }
    const double n = static_cast<double>(points.size());

    // Algebraic (Kasa) fit: minimize sum (|p|^2 - 2 a x - 2 b y - c)^2.
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0, sxz = 0, syz = 0, sz = 0;
    for (const Vec2& p : points) {
        const double z = p.x * p.x + p.y * p.y;
        sx += p.x;
        sy += p.y;
        sxx += p.x * p.x;
        syy += p.y * p.y;
        sxy += p.x * p.y;
        sxz += p.x * z;
        syz += p.y * z;
        sz += z;
    }
    // Normal equations for (2a, 2b, c).
    double m[3][4] = {
        {sxx, sxy, sx, sxz},
        {sxy, syy, sy, syz},
        {sx, sy, n, sz},
    };
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        }
        std::swap(m[piv], m[col]);
        if (m[col][col] == 0.0) {
            throw InvalidArgumentError("circle fit is degenerate (collinear points)");
        }
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = m[r][col] / m[col][col];
            for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
        }
    }
    double cx = 0.5 * m[0][3] / m[0][0];
    double cy = 0.5 * m[1][3] / m[1][1];
    double r = std::sqrt(std::max(0.0, m[2][3] / m[2][2] + cx * cx + cy * cy));

    // Gauss-Newton refinement of the geometric distance residuals.
    for (int iter = 0; iter < 12; ++iter) {
        double jtj[3][3] = {};
        double jtr[3] = {};
        for (const Vec2& p : points) {
            const double dx = p.x - cx;
            const double dy = p.y - cy;
            const double d = std::hypot(dx, dy);
            if (d == 0.0) continue;
            const double res = d - r;
            const double j[3] = {-dx / d, -dy / d, -1.0};
            for (int a = 0; a < 3; ++a) {
                for (int bcol = 0; bcol < 3; ++bcol) jtj[a][bcol] += j[a] * j[bcol];
                jtr[a] += j[a] * res;
            }
        }
        // Solve the 3x3 system jtj * delta = -jtr.
        double a3[3][4] = {
            {jtj[0][0], jtj[0][1], jtj[0][2], -jtr[0]},
            {jtj[1][0], jtj[1][1], jtj[1][2], -jtr[1]},
            {jtj[2][0], jtj[2][1], jtj[2][2], -jtr[2]},
        };
        bool singular = false;
        for (int col = 0; col < 3; ++col) {
            int piv = col;
            for (int rr = col + 1; rr < 3; ++rr) {
                if (std::abs(a3[rr][col]) > std::abs(a3[piv][col])) piv = rr;
            }
            std::swap(a3[piv], a3[col]);
            if (a3[col][col] == 0.0) {
                singular = true;
                break;
            }
            for (int rr = 0; rr < 3; ++rr) {
                if (rr == col) continue;
                const double f = a3[rr][col] / a3[col][col];
                for (int c = col; c < 4; ++c) a3[rr][c] -= f * a3[col][c];
            }
        }
        if (singular) break;
        const double d0 = a3[0][3] / a3[0][0];
        const double d1 = a3[1][3] / a3[1][1];
        const double d2 = a3[2][3] / a3[2][2];
        cx += d0;
        cy += d1;
        r += d2;
        if (std::abs(d0) + std::abs(d1) + std::abs(d2) < 1e-14 * (1.0 + r)) break;
    }

    CircleFit fit{cx, cy, r, 0.0};
    double ss = 0.0;
    for (const Vec2& p : points) {
        const double res = std::hypot(p.x - cx, p.y - cy) - r;
        ss += res * res;
    }
    fit.rms = std::sqrt(ss / n);
    return fit;
}

VerifyReport verify_equilibrium(const OpenCurve& curve, double theta_young) {
    VerifyReport report;
    report.fit = fit_circle(curve.nodes);
    report.area = polygon_area(curve);
    report.mesh_ratio = mesh_ratio(curve);

    const ContactAngles angles = contact_angles(curve);
    report.theta_l = angles.left;
    report.theta_r = angles.right;
    report.theta_err_l = std::abs(angles.left - theta_young);
    report.theta_err_r = std::abs(angles.right - theta_young);

    const OpenCurve cap = exact_equilibrium(theta_young, report.area, report.fit.cx,
                                            curve.segment_count());
    report.manifold_distance_to_cap = manifold_distance(curve, cap);

    double worst = 0.0;
    for (int k = 0; k + 2 < curve.node_count(); ++k) {
        const Vec2 h0 = curve.nodes[k + 1] - curve.nodes[k];
        const Vec2 h1 = curve.nodes[k + 2] - curve.nodes[k + 1];
        const double l0 = norm(h0);
        const double l1 = norm(h1);
        const double len_imbalance = std::abs(l1 - l0) / std::max(l0, l1);
        const double non_collinear = (l0 * l1 - dot(h0, h1)) / (l0 * l1);
        worst = std::max(worst, std::min(len_imbalance, non_collinear));
    }
    report.equidistribution_residual = worst;
    return report;
}

}  // namespace dewet
