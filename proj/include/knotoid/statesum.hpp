#ifndef KNOTOID_STATESUM_HPP
#define KNOTOID_STATESUM_HPP

#include "knotoid/algebra.hpp"
#include "knotoid/diagram.hpp"
#include "knotoid/geometry.hpp"
#include "knotoid/resolution.hpp"

#include <optional>

namespace knotoid {

/// Number of resolved components |s|, by union-find over crossing slots.
int state_component_count(const KnotoidPD& pd, State s);

/// Sum over states of A^sigma (-A^2 - A^-2)^(|s|-1). Variables (A).
algebra::LaurentPoly kauffman_bracket(const KnotoidPD& pd);

/// (-A^3)^(-wr) times the bracket. Variables (A).
algebra::LaurentPoly jones_A(const KnotoidPD& pd);

/// Variables (A, u). Multi-knotoids need a shortcut trace.
algebra::LaurentPoly turaev_Au(const KnotoidPD& pd, const ShortcutTrace* trace = nullptr);

/// Variables (q, u).
algebra::LaurentPoly turaev_qu(const KnotoidPD& pd, const ShortcutTrace* trace = nullptr);

/// Refined polynomial with separate leg/head winding exponents. Variables (A, l, h).
/// Uses the default shortcut when none is given.
algebra::LaurentPoly refined_turaev(const geometry::GeometricDiagram& geom,
                                    const std::optional<geometry::Polyline>& shortcut = std::nullopt);

/// As refined_turaev, with circles surrounding the segment weighted by B. Variables (A, B, l, h).
algebra::LaurentPoly refined_bullet(const geometry::GeometricDiagram& geom,
                                    const std::optional<geometry::Polyline>& shortcut = std::nullopt);

} // namespace knotoid

#endif
