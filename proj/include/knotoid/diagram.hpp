#ifndef KNOTOID_DIAGRAM_HPP
#define KNOTOID_DIAGRAM_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace knotoid {

/// Four edge labels listed counterclockwise starting at the incoming under-edge.
/// a, c lie on the under-strand; b, d on the over-strand.
struct CrossingRecord {
    std::array<int, 4> e{};

    int a() const { return e[0]; }
    int b() const { return e[1]; }
    int c() const { return e[2]; }
    int d() const { return e[3]; }
    friend bool operator==(const CrossingRecord&, const CrossingRecord&) = default;
};

/// Where an edge end meets a crossing.
struct SlotRef {
    int crossing = -1;
    int slot = -1; // 0..3, index into CrossingRecord::e
    friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

/// One face of the diagram graph, as the cyclic list of (edge, forward) sides.
struct FaceSide {
    int edge;
    bool forward;
};
using Face = std::vector<FaceSide>;

/// Validated planar diagram of a (multi-)knotoid.
///
/// Exactly one open component, or none for a closed knot diagram (input to the
/// cut operation and to the unreduced Khovanov complex). Values are immutable.
class KnotoidPD {
public:
    KnotoidPD();

    /// Validates and builds. `signs` is empty or one entry (+1/-1, 0 = infer) per crossing.
    static KnotoidPD create(std::vector<CrossingRecord> crossings, std::vector<int> open,
                            std::vector<std::vector<int>> closed = {}, std::vector<int> signs = {});

    const std::vector<CrossingRecord>& crossings() const { return crossings_; }
    const std::vector<int>& open_component() const { return open_; }
    const std::vector<std::vector<int>>& closed_components() const { return closed_; }
    const std::vector<int>& explicit_signs() const { return explicit_signs_; }

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    bool is_closed() const { return open_.empty(); }
    bool has_closed_components() const { return !closed_.empty(); }
    int leg_edge() const;
    int head_edge() const;

    int sign(int c) const;
    const std::vector<int>& signs() const { return signs_; }
    int n_plus() const;
    int n_minus() const;
    int writhe() const { return n_plus() - n_minus(); }

    /// All edge labels in component order (open first, then closed in order).
    std::vector<int> edges() const;
    bool has_edge(int label) const;
    /// Next edge along the orientation; nullopt after the head edge.
    std::optional<int> successor(int label) const;
    /// Component index of an edge: 0 for the open component (if any), closed ones after.
    int component_of(int label) const;

    /// Slot where the edge ends (enters a crossing); crossing = -1 for the head / free edges.
    SlotRef in_slot(int label) const;
    /// Slot where the edge starts (leaves a crossing); crossing = -1 for the leg / free edges.
    SlotRef out_slot(int label) const;
    /// True when slot k of crossing c is where its edge enters c.
    bool slot_is_incoming(int c, int k) const;

    /// Faces of the underlying 4-valent graph (leg and head are degree-1 vertices).
    std::vector<Face> faces() const;

    friend bool operator==(const KnotoidPD&, const KnotoidPD&) = default;

private:
    void validate();
    int edge_index(int label) const;

    std::vector<CrossingRecord> crossings_;
    std::vector<int> open_;
    std::vector<std::vector<int>> closed_;
    std::vector<int> explicit_signs_;

    // Derived.
    std::vector<int> signs_;
    std::vector<int> labels_;        // sorted labels
    std::vector<int> succ_;          // by edge index, -1 = none
    std::vector<int> comp_;          // by edge index
    std::vector<SlotRef> in_slot_;   // by edge index
    std::vector<SlotRef> out_slot_;  // by edge index
};

// ---------------------------------------------------------------------------
// Diagram operations. All return freshly labelled diagrams (edges 1..N in
// component order) unless stated otherwise.

KnotoidPD reverse(const KnotoidPD& pd);
KnotoidPD mirror(const KnotoidPD& pd);
KnotoidPD sym(const KnotoidPD& pd);

/// Head of pd1 fused with leg of pd2; crossings of pd1 first.
KnotoidPD product(const KnotoidPD& pd1, const KnotoidPD& pd2);

/// Adds the closed components of `closed_pd` as a split sublink.
KnotoidPD disjoint_union(const KnotoidPD& pd, const KnotoidPD& closed_pd);

enum class CutMode {
    over,  ///< delete crossings where the retracted end passes under (the end slides under)
    under, ///< delete crossings where the retracted end passes over
    any,   ///< delete the last crossings regardless of level
};

/// Opens a one-component knot diagram on the edge with the smallest label, then
/// retracts the head end through `moves` crossings.
KnotoidPD cut_knot_to_knotoid(const KnotoidPD& knot, int moves, CutMode mode);

/// Same as above with one mode per retracted crossing, applied in order.
KnotoidPD cut_knot_to_knotoid(const KnotoidPD& knot, const std::vector<CutMode>& modes);

/// Adds a kink of sign `chirality` on `edge`. The new crossing is last in order.
KnotoidPD insert_r1(const KnotoidPD& pd, int edge, int chirality, bool first_pass_over = false);

/// Pushes a finger of `edge_a` over `edge_b` (two new crossings, last in order).
/// The edges must co-bound a face.
KnotoidPD insert_r2(const KnotoidPD& pd, int edge_a, int edge_b);

/// Reorders crossings: new crossing k is old crossing perm[k]. Labels are kept.
KnotoidPD reorder(const KnotoidPD& pd, const std::vector<int>& perm);

/// One-component knot with labels 1..m: label l becomes ((l - 1 + r) mod m) + 1.
KnotoidPD rotate_knot_labels(const KnotoidPD& knot, int r);

/// Relabels edges 1..N in component order, preserving crossing order.
KnotoidPD normalize(const KnotoidPD& pd);

/// Crossings as a sequence of passes along each component.
struct Pass {
    int crossing;
    bool over;
    friend bool operator==(const Pass&, const Pass&) = default;
};

struct PassComponent {
    bool open = false;
    std::vector<Pass> passes;
};

struct PassDiagram {
    std::vector<PassComponent> components; // open component first when present
    std::vector<int> signs;                // per crossing
};

PassDiagram to_passes(const KnotoidPD& pd);
KnotoidPD from_passes(const PassDiagram& pd);

} // namespace knotoid

#endif
