#ifndef KNOTOID_COMPLEX_HPP
#define KNOTOID_COMPLEX_HPP

#include "knotoid/algebra.hpp"
#include "knotoid/diagram.hpp"
#include "knotoid/resolution.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace knotoid {

/// (q, u) grading class. The differential never leaves a class.
struct GradingKey {
    int q = 0;
    int u = 0;
    auto operator<=>(const GradingKey&) const = default;
};

/// Enhanced state: circle labels as bits in canonical circle order, bit set = X.
struct Generator {
    State state = 0;
    std::uint32_t labels = 0;
    int i = 0;
    int q = 0;
    int u = 0;
};

/// One (q, u) class: generators per homological degree and d_i : C_i -> C_{i+1}.
struct ClassComplex {
    std::map<int, std::vector<int>> generators; // i -> global generator ids
    std::map<int, algebra::SparseMatrix> d;     // i -> rows dim(i+1), cols dim(i)

    int dim(int i) const;
};

struct TriGradedComplex {
    int n_plus = 0;
    int n_minus = 0;
    bool reduced_khovanov = true; // false for the unreduced (closed) complex
    std::vector<Generator> generators;
    std::map<GradingKey, ClassComplex> classes;

    std::size_t generator_count() const;
};

enum class MuSource { combinatorial, trace };

/// Full cube of resolutions. With MuSource::trace the shortcut data must be supplied.
TriGradedComplex build_complex(const KnotoidPD& pd, MuSource source = MuSource::combinatorial,
                               const ShortcutTrace* trace = nullptr);

/// Standard Khovanov cube of a closed diagram; every circle carries the 2-dim algebra.
TriGradedComplex build_unreduced_complex(const KnotoidPD& closed_pd);

struct DSquaredFailure {
    GradingKey key;
    int i = 0;          // d_{i+1} d_i fails
    int source = -1;    // global generator id in degree i
    int target = -1;    // global generator id in degree i+2
    std::int64_t value = 0;

    std::string describe(const TriGradedComplex& cx) const;
};

std::optional<DSquaredFailure> verify_d_squared(const TriGradedComplex& cx);

} // namespace knotoid

#endif
