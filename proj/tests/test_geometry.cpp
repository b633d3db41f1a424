#include "knotoid/errors.hpp"
#include "knotoid/fixtures.hpp"
#include "knotoid/geometry.hpp"
#include "knotoid/io.hpp"
#include "oracles.hpp"
#include "random_diagrams.hpp"

#include <cmath>
#include <doctest.h>
#include <random>

using namespace knotoid;
using namespace knotoid::geometry;

namespace {

GeometricDiagram gfx(const char* rel) { return fixtures::load_geometric(rel, KNOTOID_TEST_FIXTURES); }

const char* const GEOMETRIC[] = {"geometric/trivial.json", "geometric/kink_a.json", "geometric/kink_b.json",
                                 "geometric/bifoil1.json", "geometric/bifoil2.json", "geometric/multi_ring.json"};

ClosedCurve random_polygon(std::mt19937& rng, int n)
{
    std::uniform_real_distribution<double> u(-1, 1);
    ClosedCurve c;
    for (int k = 0; k < n; ++k)
        c.push_back({u(rng), u(rng)});
    return c;
}

Point rotate(Point p, double angle, Point shift)
{
    return {std::cos(angle) * p.x - std::sin(angle) * p.y + shift.x,
            std::sin(angle) * p.x + std::cos(angle) * p.y + shift.y};
}

double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
Point sub(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

// Signed count of proper crossings between the shortcut and the open strand,
// +1 when the shortcut passes from the right of the strand to its left.
int crossing_count_oracle(const EmbeddedPD& e, const Polyline& shortcut)
{
    int total = 0;
    for (std::size_t i = 0; i + 1 < shortcut.size(); ++i)
        for (std::size_t j = 0; j + 1 < e.open_polyline.size(); ++j) {
            Point p = shortcut[i], r = sub(shortcut[i + 1], p);
            Point q = e.open_polyline[j], s = sub(e.open_polyline[j + 1], q);
            double den = cross(r, s);
            if (den == 0)
                continue;
            double t = cross(sub(q, p), s) / den, v = cross(sub(q, p), r) / den;
            if (t > 1e-12 && t < 1 - 1e-12 && v > 1e-12 && v < 1 - 1e-12)
                total += den < 0 ? 1 : -1;
        }
    return total;
}

} // namespace

TEST_CASE("winding potential of a square")
{
    ClosedCurve sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(winding_potential2(sq, {0.5, 0.5}) == 2);
    CHECK(winding_potential2(sq, {2, 0.5}) == 0);
    ClosedCurve rev(sq.rbegin(), sq.rend());
    CHECK(winding_potential2(rev, {0.5, 0.5}) == -2);
    // On the curve the potential is the average of both sides.
    CHECK(winding_potential2(sq, {0.5, 0}) == 1);
    CHECK(surrounds(sq, {0.5, 0.5}));
    CHECK(!surrounds(sq, {1.5, 0.5}));
    CHECK_THROWS_AS(surrounds(sq, {0.5, 0}), DegeneracyError);
}

TEST_CASE("winding potential matches the ray-crossing oracle")
{
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    for (int trial = 0; trial < 300; ++trial) {
        ClosedCurve c = random_polygon(rng, 3 + trial % 7);
        Point p{u(rng), u(rng)};
        const int w2 = winding_potential2(c, p);
        CHECK(w2 == 2 * testsupport::winding_oracle(c, p));

        // Extra vertices along an edge and rigid motions change nothing.
        ClosedCurve refined;
        for (std::size_t k = 0; k < c.size(); ++k) {
            Point a = c[k], b = c[(k + 1) % c.size()];
            refined.push_back(a);
            refined.push_back({0.7 * a.x + 0.3 * b.x, 0.7 * a.y + 0.3 * b.y});
        }
        CHECK(winding_potential2(refined, p) == w2);
        const double angle = 0.1 + trial * 0.37;
        const Point shift{3.5, -2.25};
        ClosedCurve moved;
        for (Point q : c)
            moved.push_back(rotate(q, angle, shift));
        CHECK(winding_potential2(moved, rotate(p, angle, shift)) == w2);
    }
}

TEST_CASE("embedding recovers the diagram")
{
    CHECK(pd_from_geometric(gfx("geometric/trivial.json")).crossing_count() == 0);
    KnotoidPD a = pd_from_geometric(gfx("geometric/kink_a.json"));
    KnotoidPD b = pd_from_geometric(gfx("geometric/kink_b.json"));
    REQUIRE(a.crossing_count() == 1);
    REQUIRE(b.crossing_count() == 1);
    CHECK(a.sign(0) == -b.sign(0));
    CHECK(pd_from_geometric(gfx("geometric/bifoil1.json")).crossing_count() == 2);
    CHECK(pd_from_geometric(gfx("geometric/bifoil2.json")).crossing_count() == 2);
    KnotoidPD ring = pd_from_geometric(gfx("geometric/multi_ring.json"));
    CHECK(ring.crossing_count() == 2);
    CHECK(ring.closed_components().size() == 1);
}

TEST_CASE("geometric input errors")
{
    auto g = [](const char* json) { return pd_from_geometric(io::parse_geometric(json)); };
    // Missing over/under choice.
    CHECK_THROWS_AS(g(R"({"components":[{"open":true,"vertices":[[0,0],[2,0],[2,1],[1,1],[1,-1]]}],"over":[]})"),
                    ValidationError);
    // Vertex on another segment.
    CHECK_THROWS_AS(g(R"({"components":[{"open":true,"vertices":[[0,0],[2,0],[2,1],[1,1],[1,0],[1,-1]]}],"over":[]})"),
                    DegeneracyError);
    // Zero-length segment.
    CHECK_THROWS_AS(g(R"({"components":[{"open":true,"vertices":[[0,0],[0,0],[1,0]]}],"over":[]})"),
                    DegeneracyError);
    // Over segment not among the hinted pair.
    CHECK_THROWS_AS(g(R"({"components":[{"open":true,"vertices":[[0,0],[2,0],[2,1],[1,1],[1,-1]]}],
                         "over":[{"crossing_hint":[0,3],"over_component":0,"over_segment":1}]})"),
                    ValidationError);
    // Two open components.
    CHECK_THROWS_AS(g(R"({"components":[{"open":true,"vertices":[[0,0],[1,0]]},
                                        {"open":true,"vertices":[[0,1],[1,1]]}],"over":[]})"),
                    ValidationError);
}

TEST_CASE("shortcut validation")
{
    EmbeddedPD e = embed(gfx("geometric/kink_a.json"));
    Polyline straight = default_shortcut(e);
    CHECK_NOTHROW(check_shortcut(e, straight));
    CHECK_THROWS_AS(check_shortcut(e, Polyline{{0, 0}, {5, 5}}), ValidationError);
    // Through the crossing at (1, 0).
    CHECK_THROWS_AS(check_shortcut(e, Polyline{{0, 0}, {1, 0}, {1, -1}}), DegeneracyError);
}

TEST_CASE("intersection number and the head/leg winding identity")
{
    std::mt19937 rng(59);
    for (const char* f : GEOMETRIC) {
        EmbeddedPD e = embed(gfx(f));
        for (int bends = 0; bends < 4; ++bends) {
            Polyline a = bends ? testsupport::random_shortcut(rng, e, bends) : default_shortcut(e);
            CHECK(winding_identity_check(e, a));
            CHECK(shortcut_intersection_number(e, a) == crossing_count_oracle(e, a));
        }
    }
    for (int trial = 0; trial < 60; ++trial) {
        testsupport::RandomOptions opt{0, 6};
        opt.closed_components = trial % 2;
        EmbeddedPD e = embed(testsupport::random_geometric(rng, opt));
        Polyline a = testsupport::random_shortcut(rng, e, 1 + trial % 3);
        CHECK(winding_identity_check(e, a));
        CHECK(shortcut_intersection_number(e, a) == crossing_count_oracle(e, a));
    }
}

TEST_CASE("state winding pairs: shortcut independence and the u-grading")
{
    std::mt19937 rng(61);
    std::vector<GeometricDiagram> diagrams;
    for (const char* f : GEOMETRIC)
        diagrams.push_back(gfx(f));
    for (int trial = 0; trial < 40; ++trial) {
        testsupport::RandomOptions opt{1, 6};
        opt.closed_components = trial % 4 == 0 ? 1 : 0;
        diagrams.push_back(testsupport::random_geometric(rng, opt));
    }
    for (const GeometricDiagram& g : diagrams) {
        EmbeddedPD e = embed(g);
        std::vector<Polyline> shortcuts{default_shortcut(e)};
        for (int bends = 1; bends <= 3; ++bends)
            shortcuts.push_back(testsupport::random_shortcut(rng, e, bends));
        const bool single = !e.pd.has_closed_components();
        for (State s = 0; s < (State(1) << e.pd.crossing_count()); ++s) {
            auto first = state_winding_pair(e, shortcuts[0], s);
            for (std::size_t k = 1; k < shortcuts.size(); ++k)
                CHECK(state_winding_pair(e, shortcuts[k], s) == first);
            if (single)
                CHECK(first.first - first.second == mu_combinatorial(e.pd, s));
            // The pair only sees the open strand; the trace also counts closed components.
            ShortcutTrace tr = trace_from_geometry(e, shortcuts[1]);
            int closed_dot = 0;
            for (const auto& h : tr.hits)
                if (e.pd.component_of(h.edge) != 0)
                    closed_dot += h.sign;
            const int mu = mu_from_shortcut(e.pd, tr, s, resolve(e.pd, s));
            CHECK(mu % 2 == 0);
            CHECK(first.first - first.second == mu + closed_dot);
        }
    }
}

TEST_CASE("resolved curves close up and avoid the endpoints")
{
    EmbeddedPD e = embed(gfx("geometric/bifoil1.json"));
    Polyline a = default_shortcut(e);
    const double r = smoothing_radius(e, a);
    CHECK(r > 0);
    for (State s = 0; s < 4; ++s) {
        Resolution res = resolve(e.pd, s);
        ResolvedCurves rc = resolve_geometric(e, s, res, r);
        CHECK(rc.circles.size() == res.circles.size());
        CHECK(rc.segment.front().x == doctest::Approx(e.open_polyline.front().x));
        CHECK(rc.segment.back().y == doctest::Approx(e.open_polyline.back().y));
        for (const ClosedCurve& c : rc.circles) {
            CHECK_NOTHROW(surrounds(c, e.open_polyline.front()));
            CHECK_NOTHROW(surrounds(c, e.open_polyline.back()));
        }
    }
}
