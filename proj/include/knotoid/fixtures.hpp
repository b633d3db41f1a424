#ifndef KNOTOID_FIXTURES_HPP
#define KNOTOID_FIXTURES_HPP

#include "knotoid/algebra.hpp"
#include "knotoid/diagram.hpp"
#include "knotoid/geometry.hpp"

#include <string>
#include <vector>

namespace knotoid::fixtures {

/// $KNOTOID_FIXTURES if set, otherwise the directory compiled into the library.
std::string fixture_dir();

/// `rel` resolved against `dir` (or fixture_dir() when `dir` is empty).
std::string resolve(const std::string& rel, const std::string& dir = {});

/// Knotoid obtained from a closed knot: mirror/reverse, rotate labels, then cut.
struct CutRecipe {
    std::string name;
    std::string knot; // path relative to the fixture directory
    bool mirror = false;
    bool reverse = false;
    int rotate = 0;
    std::vector<CutMode> modes;
    std::string w_text; // expected Poincare polynomial in (t, q, u)
};

std::vector<CutRecipe> golden_knotoids(const std::string& dir = {});
KnotoidPD apply_recipe(const CutRecipe& r, const std::string& dir = {});
algebra::LaurentPoly expected_w(const CutRecipe& r);

struct RefinedGolden {
    std::string name;
    std::string geometric;
    std::string refined_text; // (A, l, h)
    std::string turaev_text;  // (A, u)
};

std::vector<RefinedGolden> golden_refined(const std::string& dir = {});

KnotoidPD load_pd(const std::string& rel, const std::string& dir = {});
geometry::GeometricDiagram load_geometric(const std::string& rel, const std::string& dir = {});

} // namespace knotoid::fixtures

#endif
