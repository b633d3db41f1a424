#include "random_diagrams.hpp"

#include "knotoid/errors.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace testsupport {

using knotoid::geometry::GeometricDiagram;
using knotoid::geometry::GeoComponent;
using knotoid::geometry::OverSpec;
using knotoid::geometry::Point;

namespace {

double orient(Point a, Point b, Point c)
{
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool proper_intersection(Point a, Point b, Point c, Point d)
{
    double d1 = orient(a, b, c), d2 = orient(a, b, d), d3 = orient(c, d, a), d4 = orient(c, d, b);
    return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

struct Seg {
    int component;
    int local;
    Point a, b;
};

std::vector<Seg> segments_of(const GeometricDiagram& g)
{
    std::vector<Seg> out;
    for (int c = 0; c < static_cast<int>(g.components.size()); ++c) {
        const GeoComponent& comp = g.components[c];
        const int v = static_cast<int>(comp.vertices.size());
        const int ns = comp.open ? v - 1 : v;
        for (int k = 0; k < ns; ++k)
            out.push_back({c, k, comp.vertices[k], comp.vertices[(k + 1) % v]});
    }
    return out;
}

} // namespace

GeometricDiagram random_geometric(std::mt19937& rng, const RandomOptions& opt)
{
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    std::bernoulli_distribution coin(0.5);
    for (;;) {
        GeometricDiagram g;
        GeoComponent open;
        open.open = true;
        for (int k = 0; k < opt.open_vertices; ++k)
            open.vertices.push_back({coord(rng), coord(rng)});
        g.components.push_back(open);
        for (int c = 0; c < opt.closed_components; ++c) {
            GeoComponent cl;
            for (int k = 0; k < opt.closed_vertices; ++k)
                cl.vertices.push_back({coord(rng), coord(rng)});
            g.components.push_back(cl);
        }
        std::vector<Seg> segs = segments_of(g);
        std::vector<std::pair<int, int>> hits;
        for (std::size_t i = 0; i < segs.size(); ++i)
            for (std::size_t j = i + 1; j < segs.size(); ++j)
                if (proper_intersection(segs[i].a, segs[i].b, segs[j].a, segs[j].b))
                    hits.emplace_back(static_cast<int>(i), static_cast<int>(j));
        const int n = static_cast<int>(hits.size());
        if (n < opt.min_crossings || n > opt.max_crossings)
            continue;
        for (auto [i, j] : hits) {
            const Seg& over = coin(rng) ? segs[i] : segs[j];
            g.over.push_back(OverSpec{i, j, over.component, over.local});
        }
        try {
            knotoid::geometry::embed(g);
        } catch (const knotoid::ValidationError&) {
            continue;
        }
        return g;
    }
}

GeometricDiagram random_sized(std::mt19937& rng, int max_crossings)
{
    const int n = std::uniform_int_distribution<int>(0, max_crossings)(rng);
    RandomOptions opt;
    opt.min_crossings = n;
    opt.max_crossings = n;
    // Vertex counts where n crossings are reasonably common.
    static constexpr int vertices[] = {3, 5, 6, 6, 8, 8, 9, 9, 9, 10, 10, 11, 11};
    opt.open_vertices = vertices[std::min(n, 12)];
    return random_geometric(rng, opt);
}

knotoid::geometry::Polyline random_shortcut(std::mt19937& rng, const knotoid::geometry::EmbeddedPD& e, int bends)
{
    double x0 = e.open_polyline.front().x, x1 = x0, y0 = e.open_polyline.front().y, y1 = y0;
    for (const auto& [a, b] : e.pieces)
        for (Point p : {a, b}) {
            x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
        }
    const double mx = 0.2 * (x1 - x0) + 1e-3, my = 0.2 * (y1 - y0) + 1e-3;
    std::uniform_real_distribution<double> cx(x0 - mx, x1 + mx), cy(y0 - my, y1 + my);
    for (;;) {
        knotoid::geometry::Polyline sc{e.open_polyline.front()};
        for (int k = 0; k < bends; ++k)
            sc.push_back({cx(rng), cy(rng)});
        sc.push_back(e.open_polyline.back());
        try {
            knotoid::geometry::check_shortcut(e, sc);
        } catch (const knotoid::ValidationError&) {
            continue;
        }
        return sc;
    }
}

} // namespace testsupport
