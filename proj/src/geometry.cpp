#include "knotoid/geometry.hpp"

#include "knotoid/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <optional>

namespace knotoid::geometry {

namespace {

constexpr double kTurnTolerance = 1e-6; // of a full turn, before snapping

Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator*(double k, Point a) { return {k * a.x, k * a.y}; }
double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double norm(Point a) { return std::hypot(a.x, a.y); }
double dist(Point a, Point b) { return norm(a - b); }

Point unit(Point a)
{
    double l = norm(a);
    return {a.x / l, a.y / l};
}

double point_segment_distance(Point p, Point a, Point b)
{
    Point ab = b - a;
    double l2 = dot(ab, ab);
    if (l2 == 0)
        return dist(p, a);
    double t = std::clamp(dot(p - a, ab) / l2, 0.0, 1.0);
    return dist(p, a + t * ab);
}

// Angle from a to b, in (-pi, pi].
double turn(Point a, Point b)
{
    return std::atan2(cross(a, b), dot(a, b));
}

// Sum of angle increments of (pts[k] - p) along the open list.
double sweep(const std::vector<Point>& pts, Point p)
{
    double total = 0;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k)
        total += turn(pts[k] - p, pts[k + 1] - p);
    return total;
}

int snap_integer(double turns, const char* what)
{
    double r = std::round(turns);
    if (std::abs(turns - r) > kTurnTolerance)
        throw DegeneracyError(std::string("winding computation not near an integer (") + what + ")");
    return static_cast<int>(r);
}

int off_curve2(const ClosedCurve& curve, Point p)
{
    std::vector<Point> pts(curve);
    pts.push_back(curve.front());
    return 2 * snap_integer(sweep(pts, p) / (2 * std::numbers::pi), "off-curve point");
}

// p lies on the curve at vertex k (vertex = true) or inside segment (k, k+1).
int on_curve2(const ClosedCurve& curve, std::size_t k, bool vertex, Point p)
{
    const std::size_t n = curve.size();
    std::vector<Point> pts;
    std::size_t first = (k + 1) % n;
    std::size_t count = vertex ? n - 1 : n;
    for (std::size_t j = 0; j < count; ++j)
        pts.push_back(curve[(first + j) % n]);
    double turns = sweep(pts, p) / (2 * std::numbers::pi);
    double f = std::floor(turns);
    if (turns - f < kTurnTolerance || f + 1 - turns < kTurnTolerance)
        throw DegeneracyError("curve has a cusp at the query point");
    return 2 * static_cast<int>(f) + 1;
}

struct SegHit {
    double t;
    double u;
};

enum class Meet { none, proper, degenerate };

// Intersection of segments ab and cd. `proper` means transversal with both
// parameters away from the endpoints by more than tol (in length units).
Meet meet(Point a, Point b, Point c, Point d, double tol, SegHit& hit)
{
    Point r = b - a, s = d - c;
    double lr = norm(r), ls = norm(s);
    double den = cross(r, s);
    if (std::abs(den) <= tol * std::max(lr, ls)) {
        // Parallel: degenerate only if collinear and overlapping.
        if (point_segment_distance(c, a, b) > tol && point_segment_distance(d, a, b) > tol &&
            point_segment_distance(a, c, d) > tol && point_segment_distance(b, c, d) > tol)
            return Meet::none;
        if (std::abs(cross(r, c - a)) / lr > tol)
            return Meet::none;
        double t0 = dot(c - a, r) / (lr * lr), t1 = dot(d - a, r) / (lr * lr);
        double lo = std::max(0.0, std::min(t0, t1)), hi = std::min(1.0, std::max(t0, t1));
        if ((hi - lo) * lr > tol)
            return Meet::degenerate;
        return Meet::degenerate; // collinear touch at an endpoint
    }
    double t = cross(c - a, s) / den;
    double u = cross(c - a, r) / den;
    double et = tol / lr, eu = tol / ls;
    if (t < -et || t > 1 + et || u < -eu || u > 1 + eu)
        return Meet::none;
    hit = {t, u};
    if (t < et || t > 1 - et || u < eu || u > 1 - eu)
        return Meet::degenerate;
    return Meet::proper;
}

struct GlobalSeg {
    int comp;
    int local;
    Point a, b;
};

} // namespace

// ---------------------------------------------------------------------------

int winding_potential2(const ClosedCurve& curve, Point p, double tolerance)
{
    if (curve.size() < 2)
        throw ValidationError("curve needs at least two vertices");
    const std::size_t n = curve.size();
    // Locate p on the curve.
    std::vector<std::pair<std::size_t, bool>> on; // (index, is_vertex)
    for (std::size_t k = 0; k < n; ++k) {
        if (dist(curve[k], p) <= tolerance) {
            on.emplace_back(k, true);
            continue;
        }
        const Point a = curve[k], b = curve[(k + 1) % n];
        if (dist(b, p) > tolerance && point_segment_distance(p, a, b) <= tolerance)
            on.emplace_back(k, false);
    }
    if (on.empty())
        return off_curve2(curve, p);
    if (on.size() == 1)
        return on_curve2(curve, on.front().first, on.front().second, p);
    if (on.size() == 2 && !on[0].second && !on[1].second) {
        // Double point: average of the four adjacent regions.
        Point u = unit(curve[(on[0].first + 1) % n] - curve[on[0].first]);
        Point v = unit(curve[(on[1].first + 1) % n] - curve[on[1].first]);
        double eps = std::numeric_limits<double>::max();
        for (std::size_t k = 0; k < n; ++k) {
            eps = std::min(eps, dist(curve[k], p));
            if (k != on[0].first && k != on[1].first)
                eps = std::min(eps, point_segment_distance(p, curve[k], curve[(k + 1) % n]));
        }
        eps *= 0.1;
        int sum = 0;
        for (int su : {-1, 1})
            for (int sv : {-1, 1})
                sum += off_curve2(curve, p + eps * (double(su) * u + double(sv) * v));
        // sum holds four doubled values, so sum / 4 is the doubled average.
        if (sum % 4 != 0)
            throw DegeneracyError("double point average is not a half-integer");
        return sum / 4;
    }
    throw DegeneracyError("query point is a non-generic point of the curve");
}

bool surrounds(const ClosedCurve& circle, Point p, double tolerance)
{
    for (std::size_t k = 0; k < circle.size(); ++k)
        if (point_segment_distance(p, circle[k], circle[(k + 1) % circle.size()]) <= tolerance)
            throw DegeneracyError("point lies on the circle");
    return off_curve2(circle, p) != 0;
}

EmbeddedPD embed(const GeometricDiagram& geom)
{
    const double tol = geom.tolerance;
    if (!(tol > 0))
        throw ValidationError("tolerance must be positive");
    std::vector<int> order; // open component first
    int opens = 0;
    for (std::size_t c = 0; c < geom.components.size(); ++c) {
        const auto& comp = geom.components[c];
        if (comp.open) {
            ++opens;
            order.insert(order.begin(), static_cast<int>(c));
        } else {
            order.push_back(static_cast<int>(c));
        }
        if (comp.vertices.size() < (comp.open ? 2u : 3u))
            throw ValidationError("component " + std::to_string(c) + " has too few vertices");
    }
    if (opens > 1)
        throw ValidationError("at most one open component is allowed");
    if (geom.components.empty())
        throw ValidationError("geometric diagram has no components");

    // Global segments in file component order.
    std::vector<GlobalSeg> segs;
    std::vector<int> first_seg(geom.components.size());
    for (std::size_t c = 0; c < geom.components.size(); ++c) {
        const auto& v = geom.components[c].vertices;
        first_seg[c] = static_cast<int>(segs.size());
        std::size_t count = geom.components[c].open ? v.size() - 1 : v.size();
        for (std::size_t k = 0; k < count; ++k) {
            GlobalSeg g{static_cast<int>(c), static_cast<int>(k), v[k], v[(k + 1) % v.size()]};
            if (dist(g.a, g.b) <= tol)
                throw DegeneracyError("zero-length segment " + std::to_string(segs.size()));
            segs.push_back(g);
        }
    }
    auto adjacent = [&](const GlobalSeg& s1, const GlobalSeg& s2) {
        if (s1.comp != s2.comp)
            return false;
        const auto& comp = geom.components[s1.comp];
        int count = comp.open ? static_cast<int>(comp.vertices.size()) - 1 : static_cast<int>(comp.vertices.size());
        int d = std::abs(s1.local - s2.local);
        return d == 1 || (!comp.open && d == count - 1);
    };

    // Vertex on a foreign segment.
    for (std::size_t c = 0; c < geom.components.size(); ++c) {
        const auto& v = geom.components[c].vertices;
        for (std::size_t k = 0; k < v.size(); ++k)
            for (std::size_t g = 0; g < segs.size(); ++g) {
                const GlobalSeg& s = segs[g];
                if (s.comp == static_cast<int>(c)) {
                    const auto& comp = geom.components[c];
                    int nv = static_cast<int>(v.size());
                    int prev = comp.open ? static_cast<int>(k) - 1 : (static_cast<int>(k) + nv - 1) % nv;
                    if (s.local == static_cast<int>(k) || s.local == prev)
                        continue;
                }
                if (point_segment_distance(v[k], s.a, s.b) <= tol)
                    throw DegeneracyError("vertex " + std::to_string(k) + " of component " + std::to_string(c) +
                                          " touches segment " + std::to_string(g));
            }
    }

    struct RawCrossing {
        int g1, g2;
        double t1, t2;
        Point p;
    };
    std::vector<RawCrossing> raw;
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            SegHit h{};
            Meet m = meet(segs[i].a, segs[i].b, segs[j].a, segs[j].b, tol, h);
            if (adjacent(segs[i], segs[j])) {
                // Consecutive segments share a vertex; only overlap is a problem.
                Point r = segs[i].b - segs[i].a, s = segs[j].b - segs[j].a;
                if (std::abs(cross(r, s)) <= tol * std::max(norm(r), norm(s)) && dot(r, s) < 0)
                    throw DegeneracyError("segments " + std::to_string(i) + " and " + std::to_string(j) + " fold back");
                continue;
            }
            if (m == Meet::degenerate)
                throw DegeneracyError("segments " + std::to_string(i) + " and " + std::to_string(j) +
                                      " meet non-transversally or at a vertex");
            if (m == Meet::proper)
                raw.push_back({static_cast<int>(i), static_cast<int>(j), h.t, h.u,
                               segs[i].a + h.t * (segs[i].b - segs[i].a)});
        }
    for (std::size_t i = 0; i < raw.size(); ++i)
        for (std::size_t j = i + 1; j < raw.size(); ++j)
            if (dist(raw[i].p, raw[j].p) <= tol)
                throw DegeneracyError("triple point near (" + std::to_string(raw[i].p.x) + ", " +
                                      std::to_string(raw[i].p.y) + ")");

    // Over choices.
    std::map<std::pair<int, int>, int> over_seg_of; // (g1,g2) -> global over segment
    for (const OverSpec& o : geom.over) {
        std::pair<int, int> key{std::min(o.seg_a, o.seg_b), std::max(o.seg_a, o.seg_b)};
        if (o.over_component < 0 || o.over_component >= static_cast<int>(geom.components.size()))
            throw ValidationError("over entry names unknown component " + std::to_string(o.over_component));
        int g = first_seg[o.over_component] + o.over_segment;
        if (o.over_segment < 0 || g >= static_cast<int>(segs.size()) || segs[g].comp != o.over_component)
            throw ValidationError("over entry names unknown segment " + std::to_string(o.over_segment));
        if (g != key.first && g != key.second)
            throw ValidationError("over segment is not one of the hinted segments [" + std::to_string(o.seg_a) + ", " +
                                  std::to_string(o.seg_b) + "]");
        if (!over_seg_of.emplace(key, g).second)
            throw ValidationError("duplicate over entry for segments [" + std::to_string(o.seg_a) + ", " +
                                  std::to_string(o.seg_b) + "]");
    }
    std::vector<int> raw_over(raw.size());
    for (std::size_t r = 0; r < raw.size(); ++r) {
        auto it = over_seg_of.find({raw[r].g1, raw[r].g2});
        if (it == over_seg_of.end())
            throw ValidationError("no over/under choice for the crossing of segments " + std::to_string(raw[r].g1) +
                                  " and " + std::to_string(raw[r].g2));
        raw_over[r] = it->second;
        over_seg_of.erase(it);
    }
    if (!over_seg_of.empty())
        throw ValidationError("over entry for segments [" + std::to_string(over_seg_of.begin()->first.first) + ", " +
                              std::to_string(over_seg_of.begin()->first.second) + "] matches no crossing");

    // Hits along each segment.
    std::vector<std::vector<std::pair<double, int>>> along(segs.size()); // (t, raw id)
    for (std::size_t r = 0; r < raw.size(); ++r) {
        along[raw[r].g1].emplace_back(raw[r].t1, static_cast<int>(r));
        along[raw[r].g2].emplace_back(raw[r].t2, static_cast<int>(r));
    }
    for (auto& a : along)
        std::sort(a.begin(), a.end());

    EmbeddedPD out;
    out.tolerance = tol;
    std::vector<int> crossing_id(raw.size(), -1);
    PassDiagram passes;
    std::vector<Polyline> paths;
    for (int c : order) {
        const auto& comp = geom.components[c];
        const auto& v = comp.vertices;
        int count = comp.open ? static_cast<int>(v.size()) - 1 : static_cast<int>(v.size());
        PassComponent pc;
        pc.open = comp.open;
        // Events: vertices and crossings in traversal order.
        std::vector<Polyline> pieces_between; // paths between consecutive crossings
        Polyline current{v[0]};
        for (int k = 0; k < count; ++k) {
            int g = first_seg[c] + k;
            for (const auto& [t, r] : along[g]) {
                if (crossing_id[r] < 0) {
                    crossing_id[r] = static_cast<int>(out.crossing_points.size());
                    out.crossing_points.push_back(raw[r].p);
                    Point d1 = unit(segs[raw[r].g1].b - segs[raw[r].g1].a);
                    Point d2 = unit(segs[raw[r].g2].b - segs[raw[r].g2].a);
                    bool first_over = raw_over[r] == raw[r].g1;
                    Point under = first_over ? d2 : d1, over = first_over ? d1 : d2;
                    out.crossing_dirs.emplace_back(under, over);
                    passes.signs.push_back(cross(under, over) < 0 ? 1 : -1);
                }
                pc.passes.push_back(Pass{crossing_id[r], raw_over[r] == g});
                current.push_back(raw[r].p);
                pieces_between.push_back(current);
                current = Polyline{raw[r].p};
            }
            current.push_back(v[(k + 1) % v.size()]);
        }
        if (comp.open) {
            pieces_between.push_back(current);
            out.open_polyline = v;
        } else if (pieces_between.empty()) {
            pieces_between.push_back(current); // free loop, closed path
        } else {
            // Edge 0 runs from the last crossing around through vertex 0 to the first crossing.
            Polyline wrap = current;
            wrap.insert(wrap.end(), pieces_between.front().begin() + 1, pieces_between.front().end());
            pieces_between.front() = wrap;
        }
        paths.insert(paths.end(), pieces_between.begin(), pieces_between.end());
        passes.components.push_back(std::move(pc));
    }
    out.pd = from_passes(passes);
    out.edge_paths = std::move(paths);
    if (out.edge_paths.size() != out.pd.edges().size())
        throw std::logic_error("edge path bookkeeping mismatch");
    for (const auto& s : segs)
        out.pieces.emplace_back(s.a, s.b);
    double minx = segs[0].a.x, maxx = minx, miny = segs[0].a.y, maxy = miny;
    for (const auto& s : segs)
        for (Point p : {s.a, s.b}) {
            minx = std::min(minx, p.x);
            maxx = std::max(maxx, p.x);
            miny = std::min(miny, p.y);
            maxy = std::max(maxy, p.y);
        }
    out.scale = std::max(std::hypot(maxx - minx, maxy - miny), tol);
    return out;
}

KnotoidPD pd_from_geometric(const GeometricDiagram& geom)
{
    return embed(geom).pd;
}

// ---------------------------------------------------------------------------
// Shortcuts

namespace {

double shortcut_margin(const EmbeddedPD& e)
{
    return std::max(1e3 * e.tolerance, 1e-7 * e.scale);
}

struct ShortcutHit {
    int seg;   // shortcut segment
    double u;  // parameter along it
    int edge;  // diagram edge label
    int sign;  // sign(cross(k_dir, a_dir))
};

std::vector<ShortcutHit> shortcut_hits(const EmbeddedPD& e, const Polyline& sc, bool open_only)
{
    std::vector<ShortcutHit> hits;
    const double tol = e.tolerance;
    const Point leg = e.open_polyline.front(), head = e.open_polyline.back();
    const auto edges = e.pd.edges();
    std::vector<int> sorted_labels(edges);
    std::sort(sorted_labels.begin(), sorted_labels.end());
    for (std::size_t idx = 0; idx < sorted_labels.size(); ++idx) {
        int label = sorted_labels[idx];
        bool on_open = !e.pd.is_closed() && e.pd.component_of(label) == 0;
        if (open_only && !on_open)
            continue;
        const Polyline& path = e.edge_paths[label - 1];
        for (std::size_t k = 0; k + 1 < path.size(); ++k)
            for (std::size_t j = 0; j + 1 < sc.size(); ++j) {
                Point a = path[k], b = path[k + 1], c = sc[j], d = sc[j + 1];
                bool shares_leg = on_open && j == 0 && dist(a, leg) <= tol && dist(c, leg) <= tol;
                bool shares_head = on_open && j + 2 == sc.size() && dist(b, head) <= tol && dist(d, head) <= tol;
                if (shares_leg || shares_head) {
                    Point r = b - a, s = d - c;
                    if (std::abs(cross(unit(r), unit(s))) < 1e-9)
                        throw DegeneracyError("shortcut leaves an endpoint tangentially");
                    continue;
                }
                SegHit h{};
                Meet m = meet(a, b, c, d, tol, h);
                if (m == Meet::none)
                    continue;
                if (m == Meet::degenerate) {
                    // Passing through a subdivision point of an edge path that is a crossing is fatal;
                    // through an ordinary vertex it is counted once on the later piece.
                    throw DegeneracyError("shortcut meets the diagram non-generically");
                }
                hits.push_back({static_cast<int>(j), h.u, label, cross(b - a, d - c) > 0 ? 1 : -1});
            }
    }
    std::sort(hits.begin(), hits.end(), [](const ShortcutHit& x, const ShortcutHit& y) {
        return x.seg != y.seg ? x.seg < y.seg : x.u < y.u;
    });
    return hits;
}

} // namespace

void check_shortcut(const EmbeddedPD& e, const Polyline& sc)
{
    if (e.pd.is_closed())
        throw ValidationError("shortcut needs an open component");
    if (sc.size() < 2)
        throw ValidationError("shortcut needs at least two vertices");
    const Point leg = e.open_polyline.front(), head = e.open_polyline.back();
    if (dist(sc.front(), leg) > e.tolerance || dist(sc.back(), head) > e.tolerance)
        throw ValidationError("shortcut must run from the leg to the head");
    const double margin = shortcut_margin(e);
    for (std::size_t j = 0; j + 1 < sc.size(); ++j)
        if (dist(sc[j], sc[j + 1]) <= margin)
            throw DegeneracyError("shortcut has a zero-length segment");
    for (std::size_t j = 1; j + 1 < sc.size(); ++j)
        for (const auto& [a, b] : e.pieces)
            if (point_segment_distance(sc[j], a, b) <= margin)
                throw DegeneracyError("shortcut vertex lies on the diagram");
    for (const Point& p : e.crossing_points)
        for (std::size_t j = 0; j + 1 < sc.size(); ++j)
            if (point_segment_distance(p, sc[j], sc[j + 1]) <= margin)
                throw DegeneracyError("shortcut passes through a crossing");
    for (const auto& [a, b] : e.pieces)
        for (Point p : {a, b}) {
            if (dist(p, leg) <= e.tolerance || dist(p, head) <= e.tolerance)
                continue;
            for (std::size_t j = 0; j + 1 < sc.size(); ++j)
                if (point_segment_distance(p, sc[j], sc[j + 1]) <= margin)
                    throw DegeneracyError("shortcut passes through a diagram vertex");
        }
    for (std::size_t j = 0; j + 1 < sc.size(); ++j)
        for (std::size_t k = j + 2; k + 1 < sc.size(); ++k) {
            SegHit h{};
            if (meet(sc[j], sc[j + 1], sc[k], sc[k + 1], e.tolerance, h) != Meet::none)
                throw DegeneracyError("shortcut intersects itself");
        }
    // Endpoints must not be revisited.
    for (std::size_t j = 1; j + 2 < sc.size(); ++j)
        if (point_segment_distance(leg, sc[j], sc[j + 1]) <= margin ||
            point_segment_distance(head, sc[j], sc[j + 1]) <= margin)
            throw DegeneracyError("shortcut passes through an endpoint");
    shortcut_hits(e, sc, false);
}

Polyline default_shortcut(const EmbeddedPD& e)
{
    if (e.pd.is_closed())
        throw ValidationError("shortcut needs an open component");
    const Point leg = e.open_polyline.front(), head = e.open_polyline.back();
    Polyline straight{leg, head};
    try {
        check_shortcut(e, straight);
        return straight;
    } catch (const DegeneracyError&) {
    }
    // Deterministic jitter: bend through a point near the midpoint.
    Point mid = 0.5 * (leg + head);
    Point dir = head - leg;
    Point perp = unit(Point{-dir.y, dir.x});
    double base = std::max(norm(dir), e.scale) * 1e-3;
    for (int k = 1; k <= 200; ++k) {
        double off = base * (1 + 0.37 * k) * ((k % 2) ? 1 : -1);
        Point along = (0.013 * k) * dir;
        Polyline bent{leg, mid + along + off * perp, head};
        try {
            check_shortcut(e, bent);
            return bent;
        } catch (const DegeneracyError&) {
        }
    }
    throw DegeneracyError("could not find a generic straight-ish shortcut");
}

double smoothing_radius(const EmbeddedPD& e, const Polyline& sc)
{
    const auto& cp = e.crossing_points;
    if (cp.empty())
        return 0;
    double r = std::numeric_limits<double>::max();
    for (std::size_t i = 0; i < cp.size(); ++i)
        for (std::size_t j = i + 1; j < cp.size(); ++j)
            r = std::min(r, 0.25 * dist(cp[i], cp[j]));
    const double incident = 10 * e.tolerance;
    for (const Point& p : cp) {
        for (const auto& [a, b] : e.pieces) {
            r = std::min(r, 0.5 * dist(p, a));
            r = std::min(r, 0.5 * dist(p, b));
            double d = point_segment_distance(p, a, b);
            if (d > incident)
                r = std::min(r, 0.5 * d);
        }
        for (std::size_t j = 0; j + 1 < sc.size(); ++j)
            r = std::min(r, 0.5 * point_segment_distance(p, sc[j], sc[j + 1]));
    }
    if (!(r > 10 * e.tolerance))
        throw DegeneracyError("crossings too close together to realize smoothings");
    return r;
}

// ---------------------------------------------------------------------------
// Geometric resolution

namespace {

Polyline trimmed_path(const EmbeddedPD& e, int label, double r)
{
    Polyline p = e.edge_paths[label - 1];
    if (e.pd.out_slot(label).crossing >= 0)
        p.front() = p.front() + r * unit(p[1] - p[0]);
    if (e.pd.in_slot(label).crossing >= 0) {
        std::size_t n = p.size();
        p.back() = p.back() + r * unit(p[n - 2] - p[n - 1]);
    }
    return p;
}

Polyline arcs_polyline(const EmbeddedPD& e, const std::vector<Arc>& arcs, double r)
{
    Polyline out;
    for (const Arc& a : arcs) {
        Polyline p = trimmed_path(e, a.edge, r);
        if (!a.forward)
            std::reverse(p.begin(), p.end());
        out.insert(out.end(), p.begin(), p.end());
    }
    // Drop repeated points (free loops repeat their start).
    Polyline clean;
    for (const Point& p : out)
        if (clean.empty() || dist(clean.back(), p) > e.tolerance)
            clean.push_back(p);
    return clean;
}

ClosedCurve close_with_shortcut(const Polyline& open, const Polyline& sc)
{
    ClosedCurve c(open);
    for (std::size_t j = sc.size() - 2; j >= 1; --j)
        c.push_back(sc[j]);
    return c;
}

} // namespace

ResolvedCurves resolve_geometric(const EmbeddedPD& e, State, const Resolution& res, double radius)
{
    ResolvedCurves out;
    if (!res.segment.empty())
        out.segment = arcs_polyline(e, res.segment, radius);
    for (const auto& c : res.circles) {
        Polyline p = arcs_polyline(e, c, radius);
        if (p.size() > 1 && dist(p.front(), p.back()) <= e.tolerance)
            p.pop_back();
        out.circles.push_back(std::move(p));
    }
    return out;
}

std::pair<int, int> state_winding_pair(const EmbeddedPD& e, const Polyline& sc, State s)
{
    check_shortcut(e, sc);
    return state_winding_pair(e, sc, s, resolve(e.pd, s), smoothing_radius(e, sc));
}

std::pair<int, int> state_winding_pair(const EmbeddedPD& e, const Polyline& sc, State s, const Resolution& res,
                                       double radius)
{
    ResolvedCurves rc = resolve_geometric(e, s, res, radius);
    ClosedCurve gamma = close_with_shortcut(e.open_polyline, sc);
    ClosedCurve gamma_s = close_with_shortcut(rc.segment, sc);
    const std::size_t hk = e.open_polyline.size() - 1, hs = rc.segment.size() - 1;
    int wl = on_curve2(gamma, 0, true, gamma[0]);
    int wh = on_curve2(gamma, hk, true, gamma[hk]);
    int wls = on_curve2(gamma_s, 0, true, gamma_s[0]);
    int whs = on_curve2(gamma_s, hs, true, gamma_s[hs]);
    if ((wls - wl) % 2 != 0 || (whs - wh) % 2 != 0)
        throw std::logic_error("winding potential differences are not integral");
    return {(wls - wl) / 2, (whs - wh) / 2};
}

ShortcutTrace trace_from_geometry(const EmbeddedPD& e, const Polyline& sc)
{
    check_shortcut(e, sc);
    ShortcutTrace t;
    for (const ShortcutHit& h : shortcut_hits(e, sc, false))
        t.hits.push_back({h.edge, -h.sign});
    return t;
}

int shortcut_intersection_number(const EmbeddedPD& e, const Polyline& sc)
{
    check_shortcut(e, sc);
    int total = 0;
    for (const ShortcutHit& h : shortcut_hits(e, sc, true))
        total += h.sign;
    return total;
}

bool winding_identity_check(const EmbeddedPD& e, const Polyline& sc)
{
    ClosedCurve gamma = close_with_shortcut(e.open_polyline, sc);
    const std::size_t hk = e.open_polyline.size() - 1;
    int wl = on_curve2(gamma, 0, true, gamma[0]);
    int wh = on_curve2(gamma, hk, true, gamma[hk]);
    if ((wh - wl) % 2 != 0)
        return false;
    return (wh - wl) / 2 == shortcut_intersection_number(e, sc);
}

} // namespace knotoid::geometry
