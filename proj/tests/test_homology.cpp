#include "knotoid/fixtures.hpp"
#include "knotoid/geometry.hpp"
#include "knotoid/homology.hpp"
#include "knotoid/statesum.hpp"
#include "oracles.hpp"
#include "random_diagrams.hpp"

#include <doctest.h>
#include <random>

using namespace knotoid;
using algebra::LaurentPoly;
using algebra::Substitution;
using algebra::Var;

namespace {

KnotoidPD fx(const char* rel) { return fixtures::load_pd(rel, KNOTOID_TEST_FIXTURES); }

LaurentPoly W(const KnotoidPD& pd) { return poincare(homology_ranks(build_complex(pd))); }

// Ranks recomputed with dense rational elimination.
std::map<std::array<int, 3>, int> dense_ranks(const TriGradedComplex& cx)
{
    std::map<std::array<int, 3>, int> out;
    for (const auto& [key, cc] : cx.classes)
        for (const auto& [i, gens] : cc.generators) {
            int r = static_cast<int>(gens.size());
            if (auto d = cc.d.find(i); d != cc.d.end())
                r -= testsupport::rational_rank(d->second);
            if (auto d = cc.d.find(i - 1); d != cc.d.end())
                r -= testsupport::rational_rank(d->second);
            if (r)
                out[{i, key.q, key.u}] = r;
        }
    return out;
}

} // namespace

TEST_CASE("trivial and kink diagrams have W = 1")
{
    const std::map<std::array<int, 3>, int> one{{{0, 0, 0}, 1}};
    CHECK(homology_ranks(build_complex(KnotoidPD{})).ranks == one);
    CHECK(homology_ranks(build_complex(fx("pd/kink_a.json"))).ranks == one);
    CHECK(homology_ranks(build_complex(fx("pd/kink_b.json"))).ranks == one);
    CHECK(W(KnotoidPD{}) == LaurentPoly::constant({Var::t, Var::q, Var::u}, 1));
}

TEST_CASE("ranks agree with dense rational elimination")
{
    std::mt19937 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        KnotoidPD pd = geometry::pd_from_geometric(testsupport::random_geometric(rng, {0, 7}));
        TriGradedComplex cx = build_complex(pd);
        HomologyTable h = homology_ranks(cx);
        CHECK(h.ranks == dense_ranks(cx));
        CHECK(homology_ranks(cx, 4) == h);
        CHECK(homology_ranks(cx, 0) == h);
        for (const auto& [key, r] : h.ranks) {
            CHECK(r > 0);
            CHECK(key[2] % 2 == 0);
        }
    }
}

TEST_CASE("graded Euler characteristic is the Turaev polynomial")
{
    std::mt19937 rng(43);
    std::vector<KnotoidPD> diagrams{fx("pd/trefoil_knotoid.json"), fx("knotoids/K1.json"), fx("knotoids/K5.json")};
    for (int trial = 0; trial < 20; ++trial)
        diagrams.push_back(geometry::pd_from_geometric(testsupport::random_geometric(rng, {1, 7})));
    for (const KnotoidPD& pd : diagrams) {
        TriGradedComplex cx = build_complex(pd);
        LaurentPoly chi = euler_characteristic(cx);
        CHECK(chi == algebra::substitute(poincare(homology_ranks(cx)), Substitution::TMinusOne));
        CHECK(chi == turaev_qu(pd));
    }
}

TEST_CASE("specializations")
{
    KnotoidPD k1 = fx("knotoids/K1.json"), k2 = fx("knotoids/K2.json");
    Specializations s1 = specialize(W(k1)), s2 = specialize(W(k2));
    CHECK(s1.kh == s2.kh);
    CHECK(s1.turaev != s2.turaev);
    CHECK(s1.jones == s2.jones);
    CHECK(s1.jones == algebra::substitute(s1.kh, Substitution::TMinusOne));
    CHECK(s1.turaev == turaev_qu(k1));

    // Without u there is nothing to substitute: both closures give the Jones polynomial.
    Specializations t = specialize(W(fx("pd/trefoil_knotoid.json")));
    CHECK(t.jones_minus == t.jones);
    CHECK(t.jones_plus == t.jones);
}

TEST_CASE("knot-type knotoids restrict to reduced Khovanov homology")
{
    struct Case {
        const char* knotoid;
        const char* knot;
    };
    for (const Case& c : {Case{"pd/trefoil_knotoid.json", "knots/3_1.json"},
                          Case{"pd/figure8_knotoid.json", "knots/4_1.json"}}) {
        LaurentPoly w = W(fx(c.knotoid));
        CHECK(w.max_stored_degree(Var::u) == 0);
        CHECK(w.min_stored_degree(Var::u) == 0);
        CHECK(algebra::substitute(w, Substitution::UOne) == testsupport::reduced_khovanov_oracle(fx(c.knot)));
    }
}

TEST_CASE("unreduced complex gives Khovanov homology")
{
    for (const char* f : {"knots/3_1.json", "knots/4_1.json"}) {
        KnotoidPD knot = fx(f);
        LaurentPoly kh = poincare(homology_ranks(build_unreduced_complex(knot)));
        CHECK(algebra::substitute(kh, Substitution::UOne) == testsupport::khovanov_oracle(knot));
    }
}

TEST_CASE("cancellation keeps homology")
{
    SUBCASE("a single unit arrow cancels completely")
    {
        TriGradedComplex cx;
        cx.generators = {Generator{0, 0, 0, 0, 0}, Generator{1, 0, 1, 0, 0}};
        ClassComplex& cc = cx.classes[{0, 0}];
        cc.generators[0] = {0};
        cc.generators[1] = {1};
        algebra::SparseMatrix d(1, 1);
        d.set(0, 0, -1);
        d.finalize();
        cc.d.emplace(0, d);
        CHECK(reduce_complex(cx).generator_count() == 0);
    }
    SUBCASE("random diagrams and fixtures")
    {
        std::mt19937 rng(47);
        for (int trial = 0; trial < 30; ++trial) {
            KnotoidPD pd = geometry::pd_from_geometric(testsupport::random_geometric(rng, {0, 7}));
            TriGradedComplex cx = build_complex(pd);
            TriGradedComplex r = reduce_complex(cx);
            CHECK(r.generator_count() <= cx.generator_count());
            CHECK(homology_ranks(r) == homology_ranks(cx));
            CHECK(!verify_d_squared(r));
        }
        TriGradedComplex k7 = build_complex(fx("knotoids/K7.json"));
        TriGradedComplex r7 = reduce_complex(k7);
        CHECK(r7.generator_count() < k7.generator_count());
        CHECK(homology_ranks(r7) == homology_ranks(k7));
    }
}
