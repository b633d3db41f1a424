#ifndef KNOTOID_RESOLUTION_HPP
#define KNOTOID_RESOLUTION_HPP

#include "knotoid/diagram.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace knotoid {

/// Bit c is the smoothing (0 or 1) at crossing c.
using State = std::uint64_t;

inline int state_norm(State s)
{
    return __builtin_popcountll(s);
}

inline int state_bit(State s, int c)
{
    return static_cast<int>((s >> c) & 1u);
}

/// 0-smoothing joins slots (0,1) and (2,3); 1-smoothing joins (0,3) and (1,2).
inline int smoothing_partner(int slot, int bit)
{
    static constexpr int p0[4] = {1, 0, 3, 2};
    static constexpr int p1[4] = {3, 2, 1, 0};
    return bit ? p1[slot] : p0[slot];
}

/// A diagram edge as traversed by a resolved component.
struct Arc {
    int edge;
    bool forward; // same direction as the diagram orientation
    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Passage of the segment through a smoothing site.
struct SegmentVisit {
    int crossing;
    int approach_slot; // slot through which the segment enters the site
};

struct Resolution {
    std::vector<Arc> segment;              // leg to head (empty for closed diagrams)
    std::vector<std::vector<Arc>> circles; // sorted by smallest edge label
    std::vector<SegmentVisit> visits;      // in segment order
    /// Component of every edge (indexed like KnotoidPD::edges() sorted): 0 = segment, k = circle k-1.
    std::vector<int> edge_component;
    std::vector<int> edge_labels; // sorted labels, parallel to edge_component
    /// Per crossing: components of the smoothing arc through slot 0 and through slot 2.
    std::vector<std::array<int, 2>> site_components;

    int component_count() const { return static_cast<int>(circles.size()) + 1; }
    int component_of_edge(int label) const;
    bool edge_forward_on_segment(int label) const;
};

Resolution resolve(const KnotoidPD& pd, State s);

/// Ordered intersections of a shortcut with the diagram, leg to head.
struct ShortcutTrace {
    struct Hit {
        int edge;
        int sign; // +1 / -1
    };
    std::vector<Hit> hits;
};

/// u-grading from the canonical shortcut. Rejects multi-knotoids.
int mu_combinatorial(const KnotoidPD& pd, State s);
int mu_combinatorial(const KnotoidPD& pd, State s, const Resolution& res);

/// u-grading from explicit shortcut data.
int mu_from_shortcut(const KnotoidPD& pd, const ShortcutTrace& trace, State s, const Resolution& res);

} // namespace knotoid

#endif
