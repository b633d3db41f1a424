#ifndef KNOTOID_TEST_RANDOM_DIAGRAMS_HPP
#define KNOTOID_TEST_RANDOM_DIAGRAMS_HPP

#include "knotoid/geometry.hpp"

#include <random>

namespace testsupport {

struct RandomOptions {
    int min_crossings = 0;
    int max_crossings = 8;
    int open_vertices = 7;
    int closed_components = 0; // each a random closed polygon
    int closed_vertices = 4;
};

/// Random polylines in the unit square with random over/under choices. Retries
/// until the crossing count is within bounds and the diagram is generic.
knotoid::geometry::GeometricDiagram random_geometric(std::mt19937& rng, const RandomOptions& opt = {});

/// Single-segment diagram whose crossing count is uniform in [0, max_crossings].
knotoid::geometry::GeometricDiagram random_sized(std::mt19937& rng, int max_crossings);

/// Polyline from leg to head through `bends` random interior points.
knotoid::geometry::Polyline random_shortcut(std::mt19937& rng, const knotoid::geometry::EmbeddedPD& e, int bends);

} // namespace testsupport

#endif
