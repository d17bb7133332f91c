#include "core/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dewet {

namespace {

std::atomic<std::uint64_t> g_clamp_events{0};

void require_same_size(std::size_t field, std::size_t expected, const char* what) {
    if (field != expected) {
        throw FieldMismatchError(std::string(what) + ": field size " +
                                 std::to_string(field) + " does not match curve (" +
                                 std::to_string(expected) + ")");
    }
}

}  // namespace

namespace detail {

double clamped_acos(double c) {
    if (c > 1.0) {
        g_clamp_events.fetch_add(1, std::memory_order_relaxed);
        c = 1.0;
    } else if (c < -1.0) {
        g_clamp_events.fetch_add(1, std::memory_order_relaxed);
        c = -1.0;
    }
    return std::acos(c);
}

}  // namespace detail

void OpenCurve::validate() const {
    if (node_count() < 3) {
        throw InvalidCurveError("curve needs at least 3 nodes (N >= 2)");
    }
    if (nodes.front().y != 0.0 || nodes.back().y != 0.0) {
        throw InvalidCurveError("curve endpoints must lie exactly on the substrate y=0");
    }
    if (nodes.front().x > nodes.back().x) {
        throw InvalidCurveError("curve must run left to right (x_left <= x_right)");
    }
    for (int k = 0; k + 1 < node_count(); ++k) {
        if (nodes[k] == nodes[k + 1]) {
            throw InvalidCurveError("curve has a zero-length segment at node " +
                                    std::to_string(k));
        }
    }
}

bool OpenCurve::is_valid() const {
    try {
        validate();
        return true;
    } catch (const InvalidCurveError&) {
        return false;
    }
}

SegmentFrame segment_frames(const OpenCurve& curve) {
    const int ns = curve.segment_count();
    SegmentFrame f;
    f.length.resize(ns);
    f.tangent.resize(ns);
    f.normal.resize(ns);
    for (int k = 0; k < ns; ++k) {
        const Vec2 h = curve.nodes[k + 1] - curve.nodes[k];
        const double len = norm(h);
        if (len == 0.0) {
            throw ZeroSegmentError("zero-length segment at node " + std::to_string(k));
        }
        f.length[k] = len;
        f.tangent[k] = h / len;
        f.normal[k] = -1.0 * perp_cw(f.tangent[k]);
    }
    return f;
}

double polygon_area(const OpenCurve& curve) {
    double area = 0.0;
    for (int k = 0; k + 1 < curve.node_count(); ++k) {
        area += (curve.nodes[k + 1].x - curve.nodes[k].x) *
                (curve.nodes[k + 1].y + curve.nodes[k].y);
    }
    return 0.5 * area;
}

double discrete_energy(const OpenCurve& curve, double sigma) {
    double length = 0.0;
    for (int k = 0; k + 1 < curve.node_count(); ++k) {
        length += norm(curve.nodes[k + 1] - curve.nodes[k]);
    }
    return length - sigma * (curve.x_right() - curve.x_left());
}

BrokenScalarField BrokenScalarField::from_nodal(const NodalScalarField& v) {
    return {v, v};
}

BrokenScalarField BrokenScalarField::from_segment(const SegmentScalarField& v) {
    const std::size_t n = v.size() + 1;
    BrokenScalarField b;
    b.left.assign(n, 0.0);
    b.right.assign(n, 0.0);
    for (std::size_t j = 1; j < n; ++j) b.left[j] = v[j - 1];
    for (std::size_t j = 0; j + 1 < n; ++j) b.right[j] = v[j];
    return b;
}

BrokenScalarField BrokenScalarField::dot_product(const NodalVectorField& nodal,
                                                 const SegmentVectorField& segment) {
    if (nodal.size() != segment.size() + 1) {
        throw FieldMismatchError("dot_product: nodal/segment field sizes incompatible");
    }
    const std::size_t n = nodal.size();
    BrokenScalarField b;
    b.left.assign(n, 0.0);
    b.right.assign(n, 0.0);
    for (std::size_t j = 1; j < n; ++j) b.left[j] = dot(nodal[j], segment[j - 1]);
    for (std::size_t j = 0; j + 1 < n; ++j) b.right[j] = dot(nodal[j], segment[j]);
    return b;
}

double mass_lumped_inner(const BrokenScalarField& u, const BrokenScalarField& v,
                         const OpenCurve& curve) {
    const std::size_t n = curve.nodes.size();
    require_same_size(u.left.size(), n, "mass_lumped_inner");
    require_same_size(v.left.size(), n, "mass_lumped_inner");
    double sum = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
        const double len = norm(curve.nodes[j] - curve.nodes[j - 1]);
        sum += len * (u.left[j] * v.left[j] + u.right[j - 1] * v.right[j - 1]);
    }
    return 0.5 * sum;
}

double mass_lumped_inner(const NodalScalarField& u, const NodalScalarField& v,
                         const OpenCurve& curve) {
    const std::size_t n = curve.nodes.size();
    require_same_size(u.size(), n, "mass_lumped_inner");
    require_same_size(v.size(), n, "mass_lumped_inner");
    double sum = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
        const double len = norm(curve.nodes[j] - curve.nodes[j - 1]);
        sum += len * (u[j] * v[j] + u[j - 1] * v[j - 1]);
    }
    return 0.5 * sum;
}

double stiffness_inner(const NodalScalarField& u, const NodalScalarField& v,
                       const OpenCurve& curve) {
    const std::size_t n = curve.nodes.size();
    require_same_size(u.size(), n, "stiffness_inner");
    require_same_size(v.size(), n, "stiffness_inner");
    double sum = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
        const double len = norm(curve.nodes[j] - curve.nodes[j - 1]);
        if (len == 0.0) {
            throw ZeroSegmentError("stiffness_inner: zero-length segment at node " +
                                   std::to_string(j - 1));
        }
        sum += (u[j] - u[j - 1]) * (v[j] - v[j - 1]) / len;
    }
    return sum;
}

double stiffness_inner(const NodalVectorField& u, const NodalVectorField& v,
                       const OpenCurve& curve) {
    const std::size_t n = curve.nodes.size();
    require_same_size(u.size(), n, "stiffness_inner");
    require_same_size(v.size(), n, "stiffness_inner");
    double sum = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
        const double len = norm(curve.nodes[j] - curve.nodes[j - 1]);
        if (len == 0.0) {
            throw ZeroSegmentError("stiffness_inner: zero-length segment at node " +
                                   std::to_string(j - 1));
        }
        sum += dot(u[j] - u[j - 1], v[j] - v[j - 1]) / len;
    }
    return sum;
}

ContactAngles contact_angles(const OpenCurve& curve) {
    const Vec2 h_first = curve.nodes[1] - curve.nodes[0];
    const Vec2 h_last = curve.nodes[curve.node_count() - 1] -
                        curve.nodes[curve.node_count() - 2];
    const double cl = h_first.x / norm(h_first);
    const double cr = h_last.x / norm(h_last);
    return {detail::clamped_acos(cl), detail::clamped_acos(cr)};
}

std::uint64_t contact_angle_clamp_events() {
    return g_clamp_events.load(std::memory_order_relaxed);
}

void reset_contact_angle_clamp_events() {
    g_clamp_events.store(0, std::memory_order_relaxed);
}

double mesh_ratio(const OpenCurve& curve) {
    double shortest = std::numeric_limits<double>::infinity();
    double longest = 0.0;
    for (int k = 0; k + 1 < curve.node_count(); ++k) {
        const double len = norm(curve.nodes[k + 1] - curve.nodes[k]);
        shortest = std::min(shortest, len);
        longest = std::max(longest, len);
    }
    if (shortest == 0.0) {
        throw ZeroSegmentError("mesh_ratio: curve has a zero-length segment");
    }
    return longest / shortest;
}

double curvature_variation(const NodalScalarField& kappa, const OpenCurve& curve) {
    return stiffness_inner(kappa, kappa, curve);
}

}  // namespace dewet
