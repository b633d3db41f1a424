#include "knotoid/complex.hpp"
#include "knotoid/errors.hpp"
#include "knotoid/fixtures.hpp"
#include "knotoid/geometry.hpp"
#include "oracles.hpp"
#include "random_diagrams.hpp"

#include <doctest.h>
#include <random>

using namespace knotoid;

namespace {

KnotoidPD fx(const char* rel) { return fixtures::load_pd(rel, KNOTOID_TEST_FIXTURES); }

// Checks shape, homogeneity and entry values of every differential block.
void check_blocks(const TriGradedComplex& cx)
{
    for (const auto& [key, cc] : cx.classes) {
        for (const auto& [i, gens] : cc.generators)
            for (int g : gens) {
                CHECK(cx.generators[g].i == i);
                CHECK(cx.generators[g].q == key.q);
                CHECK(cx.generators[g].u == key.u);
                CHECK(key.u % 2 == 0);
            }
        for (const auto& [i, m] : cc.d) {
            CHECK(m.rows() == cc.dim(i + 1));
            CHECK(m.cols() == cc.dim(i));
            for (const auto& e : m.entries()) {
                CHECK((e.value == 1 || e.value == -1));
                const Generator& src = cx.generators[cc.generators.at(i)[e.col]];
                const Generator& dst = cx.generators[cc.generators.at(i + 1)[e.row]];
                CHECK(dst.i == src.i + 1);
                // Edge maps only ever change a single smoothing from 0 to 1.
                CHECK(std::popcount(dst.state ^ src.state) == 1);
                CHECK((dst.state & src.state) == src.state);
            }
        }
    }
}

std::size_t expected_generators(const KnotoidPD& pd)
{
    std::size_t total = 0;
    for (State s = 0; s < (State(1) << pd.crossing_count()); ++s)
        total += std::size_t(1) << (testsupport::oracle_component_count(pd, s) - (pd.is_closed() ? 0 : 1));
    return total;
}

} // namespace

TEST_CASE("trivial knotoid: one generator at (0,0,0)")
{
    TriGradedComplex cx = build_complex(KnotoidPD{});
    REQUIRE(cx.generators.size() == 1);
    CHECK(cx.generators[0].i == 0);
    CHECK(cx.generators[0].q == 0);
    CHECK(cx.generators[0].u == 0);
    CHECK(cx.classes.size() == 1);
}

TEST_CASE("positive kink complex by hand")
{
    // s=0: segment and a circle, labels 1 (q=2) and X (q=0), i=0.
    // s=1: segment only, q=2, i=1. The merge into the segment sends 1 to the
    // segment generator and X to zero.
    TriGradedComplex cx = build_complex(fx("pd/kink_a.json"));
    CHECK(cx.generators.size() == 3);
    REQUIRE(cx.classes.size() == 2);
    const ClassComplex& q0 = cx.classes.at({0, 0});
    CHECK(q0.dim(0) == 1);
    CHECK(q0.dim(1) == 0);
    const ClassComplex& q2 = cx.classes.at({2, 0});
    CHECK(q2.dim(0) == 1);
    CHECK(q2.dim(1) == 1);
    REQUIRE(q2.d.count(0) == 1);
    CHECK(q2.d.at(0).entries().size() == 1);
}

TEST_CASE("generator gradings follow the state data")
{
    for (const char* f : {"pd/kink_b.json", "pd/trefoil_knotoid.json", "knotoids/K1.json"}) {
        KnotoidPD pd = fx(f);
        TriGradedComplex cx = build_complex(pd);
        CHECK(cx.generator_count() == cx.generators.size());
        CHECK(cx.generators.size() == expected_generators(pd));
        for (const Generator& g : cx.generators) {
            const int circles = testsupport::oracle_component_count(pd, g.state) - 1;
            const int xs = std::popcount(g.labels);
            CHECK(g.labels < (1u << circles));
            CHECK(g.i == state_norm(g.state) - pd.n_minus());
            CHECK(g.q == (circles - xs) - xs - 1 + g.i + pd.n_plus() - pd.n_minus() + 1);
            CHECK(g.u == mu_combinatorial(pd, g.state));
        }
    }
}

TEST_CASE("d squared vanishes and blocks are homogeneous")
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        KnotoidPD pd = geometry::pd_from_geometric(testsupport::random_geometric(rng, {0, 7}));
        TriGradedComplex cx = build_complex(pd);
        CHECK(cx.generators.size() == expected_generators(pd));
        CHECK(!verify_d_squared(cx));
        check_blocks(cx);
    }
    TriGradedComplex k7 = build_complex(fx("knotoids/K7.json"));
    CHECK(!verify_d_squared(k7));
}

TEST_CASE("verify_d_squared reports a corrupted differential")
{
    TriGradedComplex cx = build_complex(fx("knotoids/K1.json"));
    bool corrupted = false;
    for (auto& [key, cc] : cx.classes) {
        for (auto& [i, m] : cc.d) {
            auto next = cc.d.find(i + 1);
            if (next == cc.d.end() || m.entries().empty() || next->second.entries().empty())
                continue;
            // Add an arrow from a generator already hit by d_i to something d_{i+1} reaches.
            const auto& e = m.entries().front();
            const auto& f = next->second.entries().front();
            algebra::SparseMatrix broken(m.rows(), m.cols());
            for (const auto& x : m.entries())
                broken.add(x.row, x.col, x.value);
            broken.add(f.col, e.col, 7);
            broken.finalize();
            m = broken;
            corrupted = true;
            break;
        }
        if (corrupted)
            break;
    }
    REQUIRE(corrupted);
    auto failure = verify_d_squared(cx);
    REQUIRE(failure);
    CHECK(failure->describe(cx).find("d^2 != 0") != std::string::npos);
}

TEST_CASE("trace source matches the canonical formula")
{
    KnotoidPD pd = fx("knotoids/K3.json");
    ShortcutTrace t = testsupport::canonical_trace(pd);
    TriGradedComplex a = build_complex(pd);
    TriGradedComplex b = build_complex(pd, MuSource::trace, &t);
    REQUIRE(a.generators.size() == b.generators.size());
    for (std::size_t g = 0; g < a.generators.size(); ++g)
        CHECK(a.generators[g].u == b.generators[g].u);
    CHECK(a.classes.size() == b.classes.size());
}

TEST_CASE("complex construction errors")
{
    KnotoidPD multi = geometry::pd_from_geometric(
        fixtures::load_geometric("geometric/multi_ring.json", KNOTOID_TEST_FIXTURES));
    CHECK_THROWS_AS(build_complex(multi), ComputationError);
    CHECK_THROWS_AS(build_complex(multi, MuSource::trace, nullptr), ComputationError);
    CHECK_THROWS_AS(build_complex(fx("knots/3_1.json")), ComputationError);
    CHECK_THROWS_AS(build_unreduced_complex(fx("pd/kink_a.json")), ComputationError);
}

TEST_CASE("unreduced complex of closed diagrams")
{
    for (const char* f : {"knots/3_1.json", "knots/4_1.json"}) {
        KnotoidPD knot = fx(f);
        TriGradedComplex cx = build_unreduced_complex(knot);
        CHECK(!cx.reduced_khovanov);
        CHECK(cx.generators.size() == expected_generators(knot));
        CHECK(!verify_d_squared(cx));
        check_blocks(cx);
    }
}
