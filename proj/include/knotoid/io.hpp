#ifndef KNOTOID_IO_HPP
#define KNOTOID_IO_HPP

#include "knotoid/algebra.hpp"
#include "knotoid/diagram.hpp"
#include "knotoid/geometry.hpp"
#include "knotoid/homology.hpp"
#include "knotoid/resolution.hpp"

#include <string>
#include <string_view>

namespace knotoid::io {

/// {"crossings":[[a,b,c,d],...], "open":[...], "closed":[[...],...], "signs":[...]}
KnotoidPD parse_pd(std::string_view text);
std::string serialize_pd(const KnotoidPD& pd);

/// {"components":[{"open":bool,"vertices":[[x,y],...]}],
///  "over":[{"crossing_hint":[i,j],"over_component":c,"over_segment":k}], "tolerance":eps}
geometry::GeometricDiagram parse_geometric(std::string_view text);
std::string serialize_geometric(const geometry::GeometricDiagram& g);

/// True when the JSON document looks like a geometric diagram.
bool is_geometric(std::string_view text);

/// {"trace":[[edge,sign],...]}
ShortcutTrace parse_trace(std::string_view text);
std::string serialize_trace(const ShortcutTrace& t);

/// {"vars":[...],"terms":[{"exp":[...],"coef":n},...]}; exponents in ordinary units.
std::string serialize_poly(const algebra::LaurentPoly& p);
algebra::LaurentPoly parse_poly_json(std::string_view text);

/// {"ranks":[[i,j,k,r],...]}
std::string serialize_ranks(const HomologyTable& t);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace knotoid::io

#endif
