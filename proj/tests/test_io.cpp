#include "knotoid/errors.hpp"
#include "knotoid/fixtures.hpp"
#include "knotoid/geometry.hpp"
#include "knotoid/io.hpp"
#include "random_diagrams.hpp"

#include <doctest.h>
#include <filesystem>
#include <random>

using namespace knotoid;
using algebra::LaurentPoly;
using algebra::Var;

TEST_CASE("PD round trip")
{
    for (const char* f : {"pd/trivial.json", "pd/kink_a.json", "knotoids/K1.json", "knotoids/K9.json", "knots/3_1.json"}) {
        KnotoidPD pd = fixtures::load_pd(f, KNOTOID_TEST_FIXTURES);
        CHECK(io::parse_pd(io::serialize_pd(pd)) == pd);
    }
    KnotoidPD multi = geometry::pd_from_geometric(
        fixtures::load_geometric("geometric/multi_ring.json", KNOTOID_TEST_FIXTURES));
    CHECK(io::parse_pd(io::serialize_pd(multi)) == multi);
}

TEST_CASE("PD parse errors")
{
    CHECK_THROWS_AS(io::parse_pd("{\"crossings\": [}"), ParseError);
    CHECK_THROWS_AS(io::parse_pd("[]"), ValidationError);
    CHECK_THROWS_AS(io::parse_pd(R"({"open":[1]})"), ValidationError);
    CHECK_THROWS_AS(io::parse_pd(R"({"crossings":[[1,2,3]],"open":[1,2,3]})"), ValidationError);
    CHECK_THROWS_AS(io::parse_pd(R"({"crossings":[],"open":[1],"extra":0})"), ValidationError);
    CHECK_THROWS_AS(io::parse_pd(R"({"crossings":[["a",2,2,3]],"open":[1,2,3]})"), ValidationError);
    CHECK_THROWS_AS(io::parse_pd(R"({"crossings":[]})"), ValidationError);
}

TEST_CASE("geometric round trip")
{
    std::mt19937 rng(73);
    for (int trial = 0; trial < 20; ++trial) {
        testsupport::RandomOptions opt{0, 5};
        opt.closed_components = trial % 2;
        geometry::GeometricDiagram g = testsupport::random_geometric(rng, opt);
        std::string text = io::serialize_geometric(g);
        CHECK(io::is_geometric(text));
        geometry::GeometricDiagram back = io::parse_geometric(text);
        CHECK(geometry::pd_from_geometric(back) == geometry::pd_from_geometric(g));
        CHECK(io::serialize_geometric(back) == text);
    }
    CHECK(!io::is_geometric(io::serialize_pd(KnotoidPD{})));
    CHECK_THROWS_AS(io::parse_geometric(R"({"components":[{"vertices":[[0,0],[1,0]]}]})"), ValidationError);
    CHECK_THROWS_AS(io::parse_geometric(R"({"components":[{"open":true,"vertices":[[0,0,1],[1,0]]}]})"),
                    ValidationError);
}

TEST_CASE("trace and polynomial documents")
{
    ShortcutTrace t{{{3, 1}, {5, -1}}};
    ShortcutTrace back = io::parse_trace(io::serialize_trace(t));
    REQUIRE(back.hits.size() == 2);
    CHECK(back.hits[1].edge == 5);
    CHECK(back.hits[1].sign == -1);
    CHECK_THROWS_AS(io::parse_trace(R"({"trace":[[3,2]]})"), ValidationError);
    CHECK_THROWS_AS(io::parse_trace(R"({"hits":[]})"), ValidationError);

    LaurentPoly p = LaurentPoly::parse({Var::A, Var::l, Var::h}, "A^(3/2)*l^-1 - 2*h^2 + 5");
    CHECK(io::parse_poly_json(io::serialize_poly(p)) == p);
    LaurentPoly w = LaurentPoly::parse({Var::t, Var::q, Var::u}, "t^-2*q^-5 + q^-1*u^2");
    CHECK(io::parse_poly_json(io::serialize_poly(w)) == w);
    CHECK_THROWS_AS(io::parse_poly_json(R"({"vars":["q"],"terms":[{"exp":[1,2],"coef":1}]})"), ValidationError);
}

TEST_CASE("rank tables serialize in sorted order")
{
    HomologyTable t;
    t.ranks[{1, -3, 2}] = 2;
    t.ranks[{0, 1, 0}] = 1;
    CHECK(io::serialize_ranks(t) == R"({"ranks":[[0,1,0,1],[1,-3,2,2]]})");
}

TEST_CASE("files")
{
    const std::string path = (std::filesystem::temp_directory_path() / "knotoid_test_io.json").string();
    io::write_file(path, "{\"x\":1}");
    CHECK(io::read_file(path) == "{\"x\":1}");
    std::filesystem::remove(path);
    CHECK_THROWS_AS(io::read_file(path), ValidationError);
    CHECK_THROWS_AS(fixtures::load_pd("pd/none.json", KNOTOID_TEST_FIXTURES), ValidationError);
}
