#pragma once

#include <vector>

#include "core/curve.hpp"

namespace dewet {

// Simple (non-self-intersecting) polygon, counterclockwise, closed
// implicitly from the last vertex back to the first.
struct SimplePolygon {
    std::vector<Vec2> vertices;

    // Validates (>= 3 distinct vertices, simple chain) and orients
    // counterclockwise; throws NotSimpleError / InvalidArgumentError.
    static SimplePolygon create(std::vector<Vec2> vertices);

    double area() const;  // shoelace, > 0 for a valid polygon
};

// True if the chain (closed or open) has no two non-adjacent edges that
// touch or cross, and no edge backtracking onto its neighbour.
bool chain_is_simple(const std::vector<Vec2>& points, bool closed);

// Closes the film region: the curve plus the substrate segment from its
// right contact back to its left contact, oriented counterclockwise.
SimplePolygon close_on_substrate(const OpenCurve& curve);

// Area of the intersection of the two polygonal regions, exact up to
// floating point; overlapping collinear boundary pieces count as inside
// both regions.
double intersection_area(const SimplePolygon& p, const SimplePolygon& q);

// Area of the symmetric difference of the two regions:
// |P| + |Q| - 2 |P inter Q|. Symmetric, nonnegative, zero iff equal.
double manifold_distance(const SimplePolygon& p, const SimplePolygon& q);

// Convenience overload for two film profiles on the substrate.
double manifold_distance(const OpenCurve& a, const OpenCurve& b);

}  // namespace dewet
