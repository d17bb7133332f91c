#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "core/errors.hpp"
#include "core/vec2.hpp"

namespace dewet {

// Open polygonal curve with both endpoints on the substrate line y = 0,
// stored left to right (x of the first node <= x of the last node).
// Nodes are indexed 0..N; segment k joins node k to node k+1 (k = 0..N-1).
struct OpenCurve {
    std::vector<Vec2> nodes;

    int node_count() const { return static_cast<int>(nodes.size()); }
    int segment_count() const { return static_cast<int>(nodes.size()) - 1; }

    double x_left() const { return nodes.front().x; }
    double x_right() const { return nodes.back().x; }

    // Checks all structural invariants; throws InvalidCurveError on violation.
    void validate() const;
    bool is_valid() const;
};

// Per-segment length, unit tangent and unit outward normal. The normal is
// the tangent rotated 90 degrees counterclockwise (n = -tau^perp with perp
// the clockwise rotation), so it points away from the film for a curve
// traversed left to right.
struct SegmentFrame {
    std::vector<double> length;
    std::vector<Vec2> tangent;
    std::vector<Vec2> normal;

    int segment_count() const { return static_cast<int>(length.size()); }
};

// Piecewise-linear nodal field (one value per node).
using NodalScalarField = std::vector<double>;
using NodalVectorField = std::vector<Vec2>;
// Piecewise-constant per-segment field (one value per segment).
using SegmentScalarField = std::vector<double>;
using SegmentVectorField = std::vector<Vec2>;

// A piecewise field reduced to its one-sided limits at the nodes, which is
// all the lumped (trapezoidal) product ever looks at. left[j] is the limit
// at node j from segment j-1..j, right[j] the limit from segment j..j+1.
struct BrokenScalarField {
    std::vector<double> left;
    std::vector<double> right;

    static BrokenScalarField from_nodal(const NodalScalarField& v);
    static BrokenScalarField from_segment(const SegmentScalarField& v);
    // Dot product of a nodal vector field with a per-segment vector field.
    static BrokenScalarField dot_product(const NodalVectorField& nodal,
                                         const SegmentVectorField& segment);

    int node_count() const { return static_cast<int>(left.size()); }
};

SegmentFrame segment_frames(const OpenCurve& curve);

// Signed trapezoidal area between the curve and the substrate,
// 1/2 * sum_k (x_{k+1} - x_k) (y_{k+1} + y_k); positive for a film above
// the substrate traversed left to right.
double polygon_area(const OpenCurve& curve);

// Total free energy: curve length minus sigma times the substrate span.
double discrete_energy(const OpenCurve& curve, double sigma);

// Lumped (composite trapezoidal) inner product over the curve:
// 1/2 * sum_j |h_j| [ (u v)(rho_j^-) + (u v)(rho_{j-1}^+) ].
double mass_lumped_inner(const BrokenScalarField& u, const BrokenScalarField& v,
                         const OpenCurve& curve);
double mass_lumped_inner(const NodalScalarField& u, const NodalScalarField& v,
                         const OpenCurve& curve);

// Arclength-derivative inner product, exact for piecewise linears:
// sum over segments of (delta u)(delta v) / |h|.
double stiffness_inner(const NodalScalarField& u, const NodalScalarField& v,
                       const OpenCurve& curve);
double stiffness_inner(const NodalVectorField& u, const NodalVectorField& v,
                       const OpenCurve& curve);

// Dynamic contact angles at the left and right endpoints, in (0, pi).
struct ContactAngles {
    double left;
    double right;
};
ContactAngles contact_angles(const OpenCurve& curve);

// Number of times contact_angles had to clamp an arccos argument into
// [-1, 1]; queryable so silent clamping never goes unnoticed.
std::uint64_t contact_angle_clamp_events();
void reset_contact_angle_clamp_events();

namespace detail {
// acos with the argument clamped into [-1, 1]; every clamp bumps the
// event counter above.
double clamped_acos(double c);
}  // namespace detail

// Longest over shortest segment length; >= 1, and 1 exactly for an
// equidistributed mesh.
double mesh_ratio(const OpenCurve& curve);

// Dirichlet energy of the nodal curvature along the curve; 0 for constant
// curvature.
double curvature_variation(const NodalScalarField& kappa, const OpenCurve& curve);

}  // namespace dewet
