#ifndef KNOTOID_GEOMETRY_HPP
#define KNOTOID_GEOMETRY_HPP

#include "knotoid/diagram.hpp"
#include "knotoid/resolution.hpp"

#include <utility>
#include <vector>

namespace knotoid::geometry {

struct Point {
    double x = 0;
    double y = 0;
};

/// One strand of a polyline diagram. An open strand runs leg (first vertex) to head (last vertex).
struct GeoComponent {
    bool open = false;
    std::vector<Point> vertices;
};

/// Over/under choice for the intersection of two segments. Segments are numbered
/// globally in component order (a closed component with v vertices has v segments).
struct OverSpec {
    int seg_a = -1;           // crossing_hint[0]
    int seg_b = -1;           // crossing_hint[1]
    int over_component = -1;
    int over_segment = -1;    // index within over_component
};

struct GeometricDiagram {
    std::vector<GeoComponent> components;
    std::vector<OverSpec> over;
    double tolerance = 1e-9;
};

/// Closed polyline; orientation follows vertex order.
using ClosedCurve = std::vector<Point>;
using Polyline = std::vector<Point>;

/// Combinatorial diagram together with the embedding it came from.
struct EmbeddedPD {
    KnotoidPD pd;
    std::vector<Point> crossing_points;
    /// Untrimmed path of every edge, indexed by label - 1, from its start to its end.
    std::vector<Polyline> edge_paths;
    /// Over/under directions at each crossing (unit vectors along the orientation).
    std::vector<std::pair<Point, Point>> crossing_dirs; // (under, over)
    Polyline open_polyline; // leg to head, empty for closed diagrams
    std::vector<std::pair<Point, Point>> pieces; // every straight segment of the input
    double scale = 1.0;
    double tolerance = 1e-9;
};

EmbeddedPD embed(const GeometricDiagram& geom);
KnotoidPD pd_from_geometric(const GeometricDiagram& geom);

/// Winding potential, doubled (so half-integers are exact). Snaps to the nearest
/// half-integer within 1e-6 of a turn.
int winding_potential2(const ClosedCurve& curve, Point p, double tolerance = 1e-9);

/// True iff the winding number of `circle` around p is nonzero (p off the circle).
bool surrounds(const ClosedCurve& circle, Point p, double tolerance = 1e-9);

/// Straight segment leg -> head, perturbed deterministically until generic.
Polyline default_shortcut(const EmbeddedPD& e);

/// Throws DegeneracyError unless `shortcut` runs leg -> head in generic position.
void check_shortcut(const EmbeddedPD& e, const Polyline& shortcut);

/// Radius of the disks in which smoothings are realized.
double smoothing_radius(const EmbeddedPD& e, const Polyline& shortcut);

/// Polylines of the resolved components of state s (segment first, then circles
/// in the resolution's canonical order).
struct ResolvedCurves {
    Polyline segment;
    std::vector<ClosedCurve> circles;
};
ResolvedCurves resolve_geometric(const EmbeddedPD& e, State s, const Resolution& res, double radius);

/// (w_{gamma_s}(L) - w_gamma(L), w_{gamma_s}(H) - w_gamma(H)).
std::pair<int, int> state_winding_pair(const EmbeddedPD& e, const Polyline& shortcut, State s);
std::pair<int, int> state_winding_pair(const EmbeddedPD& e, const Polyline& shortcut, State s,
                                       const Resolution& res, double radius);

/// Signed intersections of the shortcut with every component, as combinatorial trace data.
ShortcutTrace trace_from_geometry(const EmbeddedPD& e, const Polyline& shortcut);

/// alpha . K: signed count of shortcut crossings over the open component.
int shortcut_intersection_number(const EmbeddedPD& e, const Polyline& shortcut);

/// w_gamma(H) - w_gamma(L) == alpha . K.
bool winding_identity_check(const EmbeddedPD& e, const Polyline& shortcut);

} // namespace knotoid::geometry

#endif
