#include "core/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace dewet {

namespace {

double shoelace(const std::vector<Vec2>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % v.size()];
        s += cross(a, b);
    }
    return 0.5 * s;
}

double orient(Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - a); }

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
    // p assumed collinear with a-b
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Any contact between the closed segments a-b and c-d.
bool segments_touch(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    if (std::max(a.x, b.x) < std::min(c.x, d.x) ||
        std::max(c.x, d.x) < std::min(a.x, b.x) ||
        std::max(a.y, b.y) < std::min(c.y, d.y) ||
        std::max(c.y, d.y) < std::min(a.y, b.y)) {
        return false;
    }
    const double o1 = orient(a, b, c);
    const double o2 = orient(a, b, d);
    const double o3 = orient(c, d, a);
    const double o4 = orient(c, d, b);
    if (((o1 > 0) != (o2 > 0)) && o1 != 0 && o2 != 0 &&
        ((o3 > 0) != (o4 > 0)) && o3 != 0 && o4 != 0) {
        return true;
    }
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

// --- slab decomposition ----------------------------------------------------
//
// Intersection and symmetric-difference areas are computed on vertical slabs
// whose boundaries are every vertex abscissa of both polygons plus every
// crossing abscissa between the two boundaries. Inside a slab no two relevant
// edges cross, so each region is a stack of trapezoids and the overlap of two
// stacks is again a stack of trapezoids; integration is then exact.

struct SlabEdge {
    Vec2 a, b;  // a.x < b.x
};

double edge_y(const SlabEdge& e, double x) {
    if (x == e.a.x) return e.a.y;
    if (x == e.b.x) return e.b.y;
    const double t = (x - e.a.x) / (e.b.x - e.a.x);
    return e.a.y + t * (e.b.y - e.a.y);
}

std::vector<SlabEdge> non_vertical_edges(const SimplePolygon& p) {
    std::vector<SlabEdge> edges;
    edges.reserve(p.vertices.size());
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        Vec2 a = p.vertices[i];
        Vec2 b = p.vertices[(i + 1) % p.vertices.size()];
        if (a.x == b.x) continue;  // vertical edges bound no slab
        if (a.x > b.x) std::swap(a, b);
        edges.push_back({a, b});
    }
    std::sort(edges.begin(), edges.end(),
              [](const SlabEdge& l, const SlabEdge& r) { return l.a.x < r.a.x; });
    return edges;
}

// Proper interior crossing abscissa of two segments, computed in a canonical
// argument order so both (p,q) and (q,p) sweeps see bit-identical values.
void append_crossing_x(Vec2 a, Vec2 b, Vec2 c, Vec2 d, std::vector<double>& xs) {
    auto less = [](Vec2 u, Vec2 v) { return u.x < v.x || (u.x == v.x && u.y < v.y); };
    if (less(c, a) || (c == a && less(d, b))) {
        std::swap(a, c);
        std::swap(b, d);
    }
    const Vec2 r = b - a;
    const Vec2 s = d - c;
    const double denom = cross(r, s);
    if (denom == 0.0) return;  // parallel or collinear; endpoints already cut slabs
    const double t = cross(c - a, s) / denom;
    const double u = cross(c - a, r) / denom;
    if (t <= 0.0 || t >= 1.0 || u <= 0.0 || u >= 1.0) return;
    xs.push_back(a.x + t * r.x);
}

// Interval stack of one polygon inside one slab: pairs of (lower, upper)
// bounding edges ordered bottom to top.
struct Interval {
    const SlabEdge* lo;
    const SlabEdge* hi;
    double lo_mid, hi_mid;
};

class SlabSweep {
  public:
    explicit SlabSweep(std::vector<SlabEdge> edges) : edges_(std::move(edges)) {}

    // Collects the intervals spanning [x0, x1]; returns false if the
    // spanning edges cannot be paired (malformed polygon).
    bool intervals(double x0, double x1, std::vector<Interval>& out) {
        while (next_ < edges_.size() && edges_[next_].a.x <= x0) {
            active_.push_back(&edges_[next_]);
            ++next_;
        }
        std::erase_if(active_, [x1](const SlabEdge* e) { return e->b.x < x1; });

        const double xm = 0.5 * (x0 + x1);
        span_.clear();
        for (const SlabEdge* e : active_) {
            if (e->a.x <= x0 && e->b.x >= x1) {
                span_.push_back({edge_y(*e, xm), e});
            }
        }
        if (span_.size() % 2 != 0) return false;
        std::sort(span_.begin(), span_.end());
        out.clear();
        for (std::size_t k = 0; k + 1 < span_.size(); k += 2) {
            out.push_back({span_[k].second, span_[k + 1].second,
                           span_[k].first, span_[k + 1].first});
        }
        return true;
    }

  private:
    std::vector<SlabEdge> edges_;
    std::vector<const SlabEdge*> active_;
    std::vector<std::pair<double, const SlabEdge*>> span_;
    std::size_t next_ = 0;
};

struct SlabAreas {
    double p = 0.0;
    double q = 0.0;
    double common = 0.0;
};

double trapezoid(const SlabEdge* lo, const SlabEdge* hi, double x0, double x1) {
    const double d0 = edge_y(*hi, x0) - edge_y(*lo, x0);
    const double d1 = edge_y(*hi, x1) - edge_y(*lo, x1);
    return 0.5 * (x1 - x0) * (std::max(0.0, d0) + std::max(0.0, d1));
}

SlabAreas slab_areas(const SimplePolygon& p, const SimplePolygon& q) {
    std::vector<double> xs;
    xs.reserve(2 * (p.vertices.size() + q.vertices.size()));
    for (const Vec2& v : p.vertices) xs.push_back(v.x);
    for (const Vec2& v : q.vertices) xs.push_back(v.x);
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        const Vec2 a = p.vertices[i];
        const Vec2 b = p.vertices[(i + 1) % p.vertices.size()];
        for (std::size_t j = 0; j < q.vertices.size(); ++j) {
            const Vec2 c = q.vertices[j];
            const Vec2 d = q.vertices[(j + 1) % q.vertices.size()];
            if (std::max(a.x, b.x) < std::min(c.x, d.x) ||
                std::max(c.x, d.x) < std::min(a.x, b.x)) {
                continue;
            }
            append_crossing_x(a, b, c, d, xs);
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    SlabSweep sweep_p(non_vertical_edges(p));
    SlabSweep sweep_q(non_vertical_edges(q));
    std::vector<Interval> ip, iq;
    SlabAreas areas;
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        const double x0 = xs[k];
        const double x1 = xs[k + 1];
        if (!(x1 > x0)) continue;
        if (!sweep_p.intervals(x0, x1, ip) || !sweep_q.intervals(x0, x1, iq)) {
            throw NotSimpleError("polygon boundary could not be paired into trapezoids");
        }
        for (const Interval& iv : ip) areas.p += trapezoid(iv.lo, iv.hi, x0, x1);
        for (const Interval& iv : iq) areas.q += trapezoid(iv.lo, iv.hi, x0, x1);

        std::size_t i = 0, j = 0;
        while (i < ip.size() && j < iq.size()) {
            const Interval& a = ip[i];
            const Interval& b = iq[j];
            const double lo_mid = std::max(a.lo_mid, b.lo_mid);
            const double hi_mid = std::min(a.hi_mid, b.hi_mid);
            if (hi_mid >= lo_mid) {
                const SlabEdge* lo = a.lo_mid >= b.lo_mid ? a.lo : b.lo;
                const SlabEdge* hi = a.hi_mid <= b.hi_mid ? a.hi : b.hi;
                areas.common += trapezoid(lo, hi, x0, x1);
            }
            if (a.hi_mid < b.hi_mid) {
                ++i;
            } else if (b.hi_mid < a.hi_mid) {
                ++j;
            } else {
                ++i;
                ++j;
            }
        }
    }
    return areas;
}

bool lex_less(const SimplePolygon& p, const SimplePolygon& q) {
    return std::lexicographical_compare(
        p.vertices.begin(), p.vertices.end(), q.vertices.begin(), q.vertices.end(),
        [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
}

}  // namespace

SimplePolygon SimplePolygon::create(std::vector<Vec2> vertices) {
    if (vertices.size() >= 2 && vertices.front() == vertices.back()) {
        vertices.pop_back();  // tolerate an explicitly closed ring
    }
    if (vertices.size() < 3) {
        throw InvalidArgumentError("polygon needs at least 3 vertices");
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] == vertices[(i + 1) % vertices.size()]) {
            throw InvalidArgumentError("polygon has repeated consecutive vertices");
        }
    }
    if (!chain_is_simple(vertices, /*closed=*/true)) {
        throw NotSimpleError("polygon boundary self-intersects");
    }
    SimplePolygon p{std::move(vertices)};
    if (shoelace(p.vertices) < 0.0) {
        std::reverse(p.vertices.begin(), p.vertices.end());
    }
    return p;
}

double SimplePolygon::area() const { return shoelace(vertices); }

bool chain_is_simple(const std::vector<Vec2>& points, bool closed) {
    const std::size_t n = points.size();
    const std::size_t n_edges = closed ? n : n - 1;
    auto edge = [&](std::size_t i) {
        return std::pair<Vec2, Vec2>{points[i], points[(i + 1) % n]};
    };
    for (std::size_t i = 0; i < n_edges; ++i) {
        const auto [a, b] = edge(i);
        for (std::size_t j = i + 1; j < n_edges; ++j) {
            const auto [c, d] = edge(j);
            const bool adj_fwd = j == i + 1;
            const bool adj_wrap = closed && i == 0 && j == n_edges - 1;
            if (adj_fwd || adj_wrap) {
                // Neighbours share one endpoint; reject only backtracking
                // onto each other.
                const Vec2 shared = adj_fwd ? b : a;
                const Vec2 tip_ij = adj_fwd ? a : b;
                const Vec2 tip_jk = adj_fwd ? d : c;
                if (orient(tip_ij, shared, tip_jk) == 0.0 &&
                    dot(tip_ij - shared, tip_jk - shared) > 0.0) {
                    return false;
                }
                continue;
            }
            if (segments_touch(a, b, c, d)) return false;
        }
    }
    return true;
}

SimplePolygon close_on_substrate(const OpenCurve& curve) {
    std::vector<Vec2> ring = curve.nodes;
    if (ring.size() >= 2 && ring.front() == ring.back()) {
        ring.pop_back();  // fully collapsed span; the ring closes by itself
    }
    try {
        return SimplePolygon::create(std::move(ring));
    } catch (const InvalidArgumentError& e) {
        throw NotSimpleError(std::string("cannot close curve on substrate: ") + e.what());
    }
}

double intersection_area(const SimplePolygon& p, const SimplePolygon& q) {
    const bool swap = lex_less(q, p);
    const SlabAreas areas = swap ? slab_areas(q, p) : slab_areas(p, q);
    return std::max(0.0, areas.common);
}

double manifold_distance(const SimplePolygon& p, const SimplePolygon& q) {
    const bool swap = lex_less(q, p);
    const SlabAreas areas = swap ? slab_areas(q, p) : slab_areas(p, q);
    return std::max(0.0, areas.p + areas.q - 2.0 * areas.common);
}

double manifold_distance(const OpenCurve& a, const OpenCurve& b) {
    return manifold_distance(close_on_substrate(a), close_on_substrate(b));
}

}  // namespace dewet
