#ifndef KNOTOID_HOMOLOGY_HPP
#define KNOTOID_HOMOLOGY_HPP

#include "knotoid/algebra.hpp"
#include "knotoid/complex.hpp"

#include <array>
#include <map>

namespace knotoid {

/// (i, j, k) -> rank of H_{i,j}^k over Q. Only nonzero ranks are stored.
struct HomologyTable {
    std::map<std::array<int, 3>, int> ranks;
    int n_plus = 0;
    int n_minus = 0;

    friend bool operator==(const HomologyTable& a, const HomologyTable& b) { return a.ranks == b.ranks; }
};

/// Ranks per (q,u) class; classes are spread over `jobs` threads (0 = hardware concurrency).
HomologyTable homology_ranks(const TriGradedComplex& cx, int jobs = 1);

/// Sum of rank * t^i q^j u^k, over variables (t, q, u).
algebra::LaurentPoly poincare(const HomologyTable& table);

/// Sum of (-1)^i q^j u^k over generators, over variables (q, u).
algebra::LaurentPoly euler_characteristic(const TriGradedComplex& cx);

struct Specializations {
    algebra::LaurentPoly kh;          // W(u:=1), in (t, q)
    algebra::LaurentPoly turaev;      // W(t:=-1), in (q, u)
    algebra::LaurentPoly jones;       // Kh(t:=-1), in q
    algebra::LaurentPoly jones_minus; // T with u^2 := -q^-3
    algebra::LaurentPoly jones_plus;  // T with u^2 := -q^3
};

Specializations specialize(const algebra::LaurentPoly& w);

/// Cancels unit differential entries class by class; homology is unchanged.
TriGradedComplex reduce_complex(const TriGradedComplex& cx);

} // namespace knotoid

#endif
