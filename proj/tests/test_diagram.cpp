#include "knotoid/diagram.hpp"
#include "knotoid/errors.hpp"
#include "knotoid/fixtures.hpp"
#include "knotoid/io.hpp"
#include "random_diagrams.hpp"

#include <algorithm>
#include <doctest.h>
#include <random>

using namespace knotoid;

namespace {

KnotoidPD pd_of(const char* json) { return io::parse_pd(json); }

KnotoidPD kink() { return fixtures::load_pd("pd/kink_a.json", KNOTOID_TEST_FIXTURES); }

std::vector<KnotoidPD> small_fixtures()
{
    std::vector<KnotoidPD> out;
    for (const char* f : {"pd/trivial.json", "pd/kink_a.json", "pd/kink_b.json", "pd/trefoil_knotoid.json",
                          "pd/figure8_knotoid.json", "knotoids/K1.json", "knotoids/K7.json"})
        out.push_back(fixtures::load_pd(f, KNOTOID_TEST_FIXTURES));
    return out;
}

} // namespace

TEST_CASE("trivial diagram")
{
    KnotoidPD pd;
    CHECK(pd.crossing_count() == 0);
    CHECK(pd.open_component() == std::vector<int>{1});
    CHECK(pd.leg_edge() == 1);
    CHECK(pd.head_edge() == 1);
    CHECK(pd.writhe() == 0);
    CHECK(pd.faces().size() == 1);
}

TEST_CASE("signs are inferred from the successor relation")
{
    // Over-strand enters at b: negative.
    KnotoidPD a = pd_of(R"({"crossings":[[1,2,2,3]],"open":[1,2,3]})");
    // Over-strand enters at d: positive.
    KnotoidPD b = pd_of(R"({"crossings":[[1,3,2,2]],"open":[1,2,3]})");
    CHECK(a.sign(0) == -1);
    CHECK(a.sign(0) == (a.in_slot(2).slot == 3 ? 1 : -1));
    CHECK(b.sign(0) == -a.sign(0));
    CHECK(a.in_slot(1).slot == 0);
    CHECK(a.out_slot(2).slot == 2);
    CHECK(!a.successor(3));
    CHECK(*a.successor(1) == 2);
}

TEST_CASE("validation errors")
{
    SUBCASE("labels must increase along a component")
    {
        CHECK_THROWS_AS(pd_of(R"({"crossings":[],"open":[2,1]})"), ValidationError);
    }
    SUBCASE("every interior label appears twice")
    {
        CHECK_THROWS_AS(pd_of(R"({"crossings":[[1,2,2,4]],"open":[1,2,3]})"), ValidationError);
    }
    SUBCASE("unknown edge in a crossing")
    {
        CHECK_THROWS_AS(pd_of(R"({"crossings":[[1,2,2,7]],"open":[1,2,3]})"), ValidationError);
    }
    SUBCASE("under-strand must run a -> c")
    {
        CHECK_THROWS_AS(pd_of(R"({"crossings":[[1,2,3,2]],"open":[1,2,3]})"), ValidationError);
    }
    SUBCASE("a short loop's sign follows from slot uniqueness")
    {
        KnotoidPD loop = pd_of(R"({"crossings":[[1,2,2,1]],"open":[],"closed":[[1,2]]})");
        CHECK(loop.sign(0) == -1);
        CHECK_THROWS_AS(pd_of(R"({"crossings":[[1,2,2,1]],"closed":[[1,2]],"signs":[1]})"), ValidationError);
    }
    SUBCASE("a two-edge ring passing over twice is ambiguous")
    {
        const char* ring = R"({"crossings":[[1,4,2,5],[2,4,3,5]],"open":[1,2,3],"closed":[[4,5]]})";
        CHECK_THROWS_AS(pd_of(ring), AmbiguityError);
        KnotoidPD a = pd_of(R"({"crossings":[[1,4,2,5],[2,4,3,5]],"open":[1,2,3],"closed":[[4,5]],"signs":[1,-1]})");
        KnotoidPD b = pd_of(R"({"crossings":[[1,4,2,5],[2,4,3,5]],"open":[1,2,3],"closed":[[4,5]],"signs":[-1,1]})");
        CHECK(a.writhe() == 0);
        CHECK(b.writhe() == 0);
    }
    SUBCASE("non-planar gluing is rejected")
    {
        // Two crossings glued like a virtual crossing pair.
        CHECK_THROWS_AS(pd_of(R"({"crossings":[[1,4,2,5],[3,1,4,2]],"open":[],"closed":[[1,2,3,4,5]]})"),
                        ValidationError);
    }
}

TEST_CASE("involutions")
{
    for (const KnotoidPD& pd : small_fixtures()) {
        CHECK(mirror(mirror(pd)) == normalize(pd));
        CHECK(sym(sym(pd)) == normalize(pd));
        CHECK(reverse(reverse(pd)) == normalize(pd));
        CHECK(mirror(pd).writhe() == -pd.writhe());
        CHECK(sym(pd).writhe() == -pd.writhe());
        CHECK(reverse(pd).writhe() == pd.writhe());
        CHECK(mirror(pd).crossing_count() == pd.crossing_count());
    }
}

TEST_CASE("product and disjoint union")
{
    KnotoidPD k1 = fixtures::load_pd("knotoids/K1.json", KNOTOID_TEST_FIXTURES);
    KnotoidPD k3 = fixtures::load_pd("knotoids/K3.json", KNOTOID_TEST_FIXTURES);
    KnotoidPD p = product(k1, k3);
    CHECK(p.crossing_count() == 20);
    CHECK(p.writhe() == k1.writhe() + k3.writhe());
    CHECK(!p.has_closed_components());

    KnotoidPD trefoil = fixtures::load_pd("knots/3_1.json", KNOTOID_TEST_FIXTURES);
    KnotoidPD u = disjoint_union(kink(), trefoil);
    CHECK(u.crossing_count() == 4);
    CHECK(u.closed_components().size() == 1);
    CHECK_THROWS_AS(disjoint_union(kink(), kink()), ValidationError);
}

TEST_CASE("cutting a knot")
{
    KnotoidPD knot = fixtures::load_pd("knots/11a_138.json", KNOTOID_TEST_FIXTURES);
    KnotoidPD k1 = cut_knot_to_knotoid(knot, 1, CutMode::over);
    CHECK(k1 == fixtures::load_pd("knotoids/K1.json", KNOTOID_TEST_FIXTURES));
    CHECK(k1.crossing_count() == 10);
    KnotoidPD opened = cut_knot_to_knotoid(knot, 0, CutMode::over);
    CHECK(opened.crossing_count() == 11);
    CHECK(opened.open_component().size() == 23);
    // The retracted end of 11a_138 passes under at its last crossing, so an
    // overpass retraction is impossible.
    CHECK_THROWS_AS(cut_knot_to_knotoid(knot, 1, CutMode::under), ValidationError);
    CHECK_NOTHROW(cut_knot_to_knotoid(knot, 1, CutMode::any));
    CHECK_THROWS_AS(cut_knot_to_knotoid(k1, 1, CutMode::any), ValidationError);
}

TEST_CASE("label rotation")
{
    KnotoidPD knot = fixtures::load_pd("knots/3_1.json", KNOTOID_TEST_FIXTURES);
    CHECK(rotate_knot_labels(knot, 0) == knot);
    CHECK(rotate_knot_labels(rotate_knot_labels(knot, 2), 4) == knot);
    CHECK(rotate_knot_labels(knot, 1).writhe() == knot.writhe());
    CHECK_THROWS_AS(rotate_knot_labels(kink(), 1), ValidationError);
}

TEST_CASE("Reidemeister insertions stay planar")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        KnotoidPD pd = geometry::pd_from_geometric(testsupport::random_geometric(rng, {0, 5}));
        for (int e : pd.edges()) {
            for (int chir : {1, -1}) {
                KnotoidPD r1 = insert_r1(pd, e, chir);
                CHECK(r1.crossing_count() == pd.crossing_count() + 1);
                CHECK(r1.sign(r1.crossing_count() - 1) == chir);
            }
        }
        for (const Face& f : pd.faces()) {
            auto other = std::find_if(f.begin(), f.end(), [&](const auto& x) { return x.edge != f[0].edge; });
            if (other == f.end())
                continue;
            KnotoidPD r2 = insert_r2(pd, f[0].edge, other->edge);
            CHECK(r2.crossing_count() == pd.crossing_count() + 2);
            CHECK(r2.writhe() == pd.writhe());
        }
    }
}

TEST_CASE("reorder keeps labels, normalize relabels")
{
    KnotoidPD k = fixtures::load_pd("knotoids/K3.json", KNOTOID_TEST_FIXTURES);
    std::vector<int> perm(k.crossing_count());
    for (int i = 0; i < k.crossing_count(); ++i)
        perm[i] = k.crossing_count() - 1 - i;
    KnotoidPD r = reorder(k, perm);
    CHECK(r.crossings().front() == k.crossings().back());
    CHECK(r.writhe() == k.writhe());
    CHECK(normalize(r) == r);
    CHECK_THROWS_AS(reorder(k, {0, 0}), ValidationError);
}

TEST_CASE("pass form round trip")
{
    for (const KnotoidPD& pd : small_fixtures()) {
        PassDiagram p = to_passes(pd);
        CHECK(from_passes(p) == normalize(pd));
        int passes = 0;
        for (const auto& c : p.components)
            passes += static_cast<int>(c.passes.size());
        CHECK(passes == 2 * pd.crossing_count());
    }
}

TEST_CASE("faces satisfy the Euler relation")
{
    for (const KnotoidPD& pd : small_fixtures()) {
        const int v = pd.crossing_count() + (pd.is_closed() ? 0 : 2);
        const int e = static_cast<int>(pd.edges().size());
        CHECK(v - e + static_cast<int>(pd.faces().size()) == 2);
    }
}
